"""Resultants and discriminants.

The general discriminant goes through the subresultant pseudo-remainder
sequence (Cohen, *A Course in Computational Algebraic Number Theory*,
Algorithm 3.3.7), which stays inside Z and keeps coefficient growth
polynomial.  The quintic has its own closed formula as well; the two are
cross-checked in the test-suite.
"""

from . import dense
from .intpoly import IntPoly


def resultant(a, b):
    """Resultant of two dense ascending integer polynomials."""
    a = dense.trim(list(a))
    b = dense.trim(list(b))
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    if db == 0:
        return b[0] ** da
    if da == 0:
        return a[0] ** db
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            s = -s
    ca, cb = dense.content(a), dense.content(b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    t = ca ** db * cb ** da
    g = 1
    h = 1
    # h is always an integer in this recurrence, but the update h^(1-delta)
    # needs care: we keep it as an exact integer quotient.
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = dense.pseudo_rem(a, b)
        a = b
        if not r:
            return 0
        div = g * h ** delta
        b = [x // div for x in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g ** delta // h ** (delta - 1)
        if len(b) - 1 == 0:
            break
    da = len(a) - 1
    lb = b[-1]
    if da == 0:
        h_final = h
    elif da == 1:
        h_final = lb
    else:
        h_final = lb ** da // h ** (da - 1)
    return s * t * h_final


def disc_dense(asc):
    """Discriminant of a dense ascending integer polynomial of degree >= 1."""
    n = len(asc) - 1
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    res = resultant(asc, dense.derivative(asc))
    lc = asc[-1]
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res // lc


def disc_resultant(f):
    """Discriminant of a monic IntPoly, (-1)^(n(n-1)/2) Res(f, f')."""
    if not isinstance(f, IntPoly):
        f = IntPoly(f)
    if f.degree < 2:
        raise ValueError("disc_resultant requires degree >= 2")
    return disc_dense(f.ascending())


# The printed octic, one monomial per entry: (coefficient, a, b, c, d, e).
_QUINTIC_DISC_TEXT = """
256 a^5 e^3 - 192 a^4 b d e^2 - 128 a^4 c^2 e^2 + 144 a^4 c d^2 e - 27 a^4 d^4
+ 144 a^3 b^2 c e^2 - 6 a^3 b^2 d^2 e - 80 a^3 b c^2 d e + 18 a^3 b c d^3
- 1600 a^3 b e^3 + 16 a^3 c^4 e - 4 a^3 c^3 d^2 + 160 a^3 c d e^2 - 36 a^3 d^3 e
- 27 a^2 b^4 e^2 + 18 a^2 b^3 c d e - 4 a^2 b^3 d^3 - 4 a^2 b^2 c^3 e
+ a^2 b^2 c^2 d^2 + 1020 a^2 b^2 d e^2 + 560 a^2 b c^2 e^2 - 746 a^2 b c d^2 e
+ 144 a^2 b d^4 + 24 a^2 c^3 d e - 6 a^2 c^2 d^3 + 2000 a^2 c e^3 - 50 a^2 d^2 e^2
- 630 a b^3 c e^2 + 24 a b^3 d^2 e + 356 a b^2 c^2 d e - 80 a b^2 c d^3
+ 2250 a b^2 e^3 - 72 a b c^4 e + 18 a b c^3 d^2 - 2050 a b c d e^2 + 160 a b d^3 e
- 900 a c^3 e^2 + 1020 a c^2 d^2 e - 192 a c d^4 - 2500 a d e^3 + 108 b^5 e^2
- 72 b^4 c d e + 16 b^4 d^3 + 16 b^3 c^3 e - 4 b^3 c^2 d^2 - 900 b^3 d e^2
+ 825 b^2 c^2 e^2 + 560 b^2 c d^2 e - 128 b^2 d^4 - 630 b c^3 d e + 144 b c^2 d^3
- 3750 b c e^3 + 2000 b d^2 e^2 + 108 c^5 e - 27 c^4 d^2
+ 2250 c^2 d e^2 - 1600 c d^3 e + 256 d^5 + 3125 e^4
"""


def parse_monomial_sum(text, names):
    """Parse a sum of monomials written as ``coeff v^k w ...`` separated by
    ``+``/``-`` into a list of (coeff, exponent-tuple) pairs."""
    index = {v: i for i, v in enumerate(names)}
    out = []
    for chunk in text.replace("-", " + -").split("+"):
        toks = chunk.split()
        if not toks:
            continue
        sign = 1
        if toks[0] == "-":
            sign = -1
            toks = toks[1:]
        elif toks[0].startswith("-"):
            sign = -1
            toks[0] = toks[0][1:]
        coeff = 1
        exps = [0] * len(names)
        for tok in toks:
            if tok.isdigit():
                coeff *= int(tok)
                continue
            var, _, power = tok.partition("^")
            exps[index[var]] += int(power) if power else 1
        out.append((sign * coeff, tuple(exps)))
    return out


QUINTIC_DISC_TERMS = tuple(parse_monomial_sum(_QUINTIC_DISC_TEXT, "abcde"))


def disc_quintic_explicit(a, b, c, d, e):
    """Discriminant of X^5 + aX^4 + bX^3 + cX^2 + dX + e from the closed
    59-term formula."""
    vals = (a, b, c, d, e)
    total = 0
    for coeff, exps in QUINTIC_DISC_TERMS:
        t = coeff
        for v, k in zip(vals, exps):
            if k:
                t *= v ** k
        total += t
    return total
