"""Finite-field linear algebra for rank-metric codes and linear sets."""

__version__ = "0.1.0"
