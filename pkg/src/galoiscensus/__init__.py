"""Exact-arithmetic tools for Galois groups of small-degree integer polynomials."""

__version__ = "0.1.0"
