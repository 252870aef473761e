"""Graphs, weight functions, matrices and reports."""
