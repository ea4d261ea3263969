"""The de Moivre family and power-law fits of census counts."""

import math
from collections import namedtuple

import numpy as np

from ..polycore import IntPoly, is_irreducible


def demoivre_poly(s, t):
    """X^5 + 5s X^3 + 5s^2 X + t."""
    return IntPoly([0, 5 * s, 0, 5 * s * s, t])


def _strips(lo, hi, shards):
    """Split the integer range [lo, hi] into `shards` contiguous pieces."""
    size = hi - lo + 1
    return [(lo + k * size // shards, lo + (k + 1) * size // shards - 1) for k in range(shards)]


def demoivre_census(H, shards=1):
    """Irreducible de Moivre quintics with every coefficient in [-H, H].

    Returns (count, pairs) where pairs lists the (s, t) giving the distinct
    irreducible polynomials, in increasing order.  Irreducibility is the
    full factorisation test, not Eisenstein's criterion.  The t range is
    cut into `shards` strips; the result does not depend on the split.
    """
    if H < 0:
        raise ValueError("height must be non-negative")
    if shards < 1:
        raise ValueError("shards must be positive")
    smax = math.isqrt(H // 5) if H >= 5 else 0
    seen = set()
    pairs = []
    for s in range(-smax, smax + 1):
        if abs(5 * s) > H or 5 * s * s > H:
            continue
        for lo, hi in _strips(-H, H, shards):
            for t in range(lo, hi + 1):
                f = demoivre_poly(s, t)
                if f.coeffs in seen:
                    continue
                seen.add(f.coeffs)
                if is_irreducible(f):
                    pairs.append((s, t))
    return len(pairs), pairs


ExponentFit = namedtuple("ExponentFit", "series slope intercept residuals")


def fit_exponent(series):
    """Least-squares line through (log H, log count).

    `series` is a sequence of (H, count) pairs; at least three distinct H
    values with positive counts are required.
    """
    pts = [(int(h), int(c)) for h, c in series]
    if len({h for h, _ in pts}) < 3:
        raise ValueError("fit_exponent needs at least three distinct heights")
    if any(h <= 0 or c <= 0 for h, c in pts):
        raise ValueError("fit_exponent needs positive heights and counts")
    x = np.log([h for h, _ in pts])
    y = np.log([c for _, c in pts])
    A = np.vstack([x, np.ones_like(x)]).T
    (slope, intercept), *_ = np.linalg.lstsq(A, y, rcond=None)
    residuals = tuple(float(v) for v in y - (slope * x + intercept))
    return ExponentFit(tuple(pts), float(slope), float(intercept), residuals)
