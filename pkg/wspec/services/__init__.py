"""Eigensolvers, transforms, enumeration, sampling and experiments."""
