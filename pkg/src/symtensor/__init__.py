"""Exact computation of graded symmetric-tensor algebras and their Hilbert series."""

__version__ = "0.1.0"
