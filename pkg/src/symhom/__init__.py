"""Exact computations around symmetric homology of algebras."""

__version__ = "0.1.0"
