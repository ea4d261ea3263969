"""Exact univariate integer polynomial arithmetic."""

from .intpoly import IntPoly
from .disc import disc_resultant, disc_quintic_explicit, resultant, disc_dense
from .factor import factor_over_Q, is_irreducible, factor_dense
from .roots import integer_roots, integer_roots_dense, distinct_integer_roots_dense
from .cycles import CycleTypeSample, cycle_type_samples, is_perfect_square

__all__ = [
    "IntPoly",
    "disc_resultant",
    "disc_quintic_explicit",
    "resultant",
    "disc_dense",
    "factor_over_Q",
    "factor_dense",
    "is_irreducible",
    "integer_roots",
    "integer_roots_dense",
    "distinct_integer_roots_dense",
    "CycleTypeSample",
    "cycle_type_samples",
    "is_perfect_square",
]
