"""
Unit tests package for wspec.

One module per library module, plus the CLI and HTTP resources.
"""
