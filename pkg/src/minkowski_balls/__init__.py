"""Invariants of two-dimensional Minkowski balls."""
__version__ = "0.1.0"
