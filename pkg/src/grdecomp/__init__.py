"""Graded decomposition matrices of Z-graded algebras under specialization."""

__version__ = "0.1.0"
