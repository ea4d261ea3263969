"""Cycle types of Frobenius elements (Dedekind reduction) and squares."""

import itertools
from collections import namedtuple
from math import isqrt

from .disc import disc_resultant
from .intpoly import IntPoly
from .modp import odd_primes, degree_pattern


class CycleTypeSample(namedtuple("CycleTypeSample", "prime degrees")):
    """Factor-degree multiset of f modulo a prime not dividing disc(f).

    By Dedekind's theorem the pattern is the cycle type of a Frobenius
    element of the Galois group.
    """

    __slots__ = ()

    @property
    def parity(self):
        """+1 for an even permutation, -1 for an odd one."""
        odd = sum(d - 1 for d in self.degrees) % 2
        return -1 if odd else 1


def iter_cycle_types(f, disc=None):
    """Endless stream of samples over the odd primes not dividing disc(f)."""
    if not isinstance(f, IntPoly):
        f = IntPoly(f)
    if disc is None:
        disc = disc_resultant(f) if f.degree >= 2 else 1
    if disc == 0:
        raise ValueError("cycle_type_samples requires a squarefree polynomial (disc = 0)")
    asc = f.ascending()
    for p in odd_primes():
        if disc % p:
            yield CycleTypeSample(p, degree_pattern(asc, p))


def cycle_type_samples(f, count, disc=None):
    """Factor f modulo the first `count` odd primes not dividing disc(f)."""
    if count < 1:
        raise ValueError("count must be positive")
    return list(itertools.islice(iter_cycle_types(f, disc), count))


def is_perfect_square(z):
    """True iff z is the square of an integer."""
    if z < 0:
        return False
    r = isqrt(z)
    return r * r == z
