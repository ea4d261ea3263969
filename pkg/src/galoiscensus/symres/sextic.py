"""The sextic resolvent of a quintic, from its closed form.

For f = X^5 + aX^4 + bX^3 + cX^2 + dX + e,
    theta(y) = (y^3 + B2 y^2 + B4 y + B6)^2 - 1024 * disc(f) * y
with the auxiliary polynomials below.  The same polynomial is produced by
the orbit construction on the AGL(1, F5) invariant (spec "theta"), which
the test-suite uses as an independent check of the closed form.
"""

from ..polycore import IntPoly
from ..polycore.disc import QUINTIC_DISC_TERMS, parse_monomial_sum, disc_quintic_explicit
from .mpoly import MPoly

B2_TEXT = "8 a c - 3 b^2 - 20 d"
B4_TEXT = ("3 b^4 - 16 a b^2 c + 16 a^2 c^2 + 16 b c^2 + 16 a^2 b d - 8 b^2 d"
           " - 112 a c d + 240 d^2 - 64 a^3 e + 240 a b e - 400 c e")
B6_TEXT = ("8 a b^4 c - b^6 - 16 a^2 b^2 c^2 - 16 b^3 c^2 + 64 a b c^3 - 64 c^4"
           " - 16 a^2 b^3 d + 28 b^4 d + 64 a^3 b c d"
           " - 112 a b^2 c d - 128 a^2 c^2 d + 224 b c^2 d - 64 a^4 d^2 + 224 a^2 b d^2"
           " - 176 b^2 d^2 - 64 a c d^2 + 320 d^3"
           " + 48 a b^3 e - 192 a^2 b c e - 80 b^2 c e + 640 a c^2 e + 384 a^3 d e"
           " - 640 a b d e - 1600 c d e - 1600 a^2 e^2 + 4000 b e^2")

QUINTIC_VARS = ("a", "b", "c", "d", "e")
B2_TERMS = tuple(parse_monomial_sum(B2_TEXT, "abcde"))
B4_TERMS = tuple(parse_monomial_sum(B4_TEXT, "abcde"))
B6_TERMS = tuple(parse_monomial_sum(B6_TEXT, "abcde"))


def _eval_terms(terms, vals):
    total = 0
    for coeff, exps in terms:
        t = coeff
        for v, k in zip(vals, exps):
            if k:
                t *= v ** k
        total += t
    return total


def sextic_coefficients(a, b, c, d, e):
    """The seven coefficients of theta, leading coefficient first."""
    vals = (a, b, c, d, e)
    B2 = _eval_terms(B2_TERMS, vals)
    B4 = _eval_terms(B4_TERMS, vals)
    B6 = _eval_terms(B6_TERMS, vals)
    D = disc_quintic_explicit(a, b, c, d, e)
    return (1,
            2 * B2,
            B2 * B2 + 2 * B4,
            2 * B6 + 2 * B2 * B4,
            B4 * B4 + 2 * B2 * B6,
            2 * B4 * B6 - 1024 * D,
            B6 * B6)


def sextic_resolvent(a, b, c, d, e):
    """theta(y) for X^5 + aX^4 + bX^3 + cX^2 + dX + e, as a monic IntPoly in y."""
    return IntPoly(sextic_coefficients(a, b, c, d, e)[1:])


def sextic_resolvent_of(f):
    if f.degree != 5:
        raise ValueError("the sextic resolvent is defined for quintics")
    return sextic_resolvent(*f.coeffs)


def _terms_mpoly(terms, variables):
    k = len(variables)
    out = {}
    for coeff, exps in terms:
        e = tuple(exps) + (0,) * (k - len(exps))
        out[e] = out.get(e, 0) + coeff
    return MPoly(variables, out)


def symbolic_theta():
    """theta as an MPoly in a, b, c, d, e, y expanded from the closed form."""
    V = QUINTIC_VARS + ("y",)
    y = MPoly.var(V, "y")
    B2 = _terms_mpoly(B2_TERMS, V)
    B4 = _terms_mpoly(B4_TERMS, V)
    B6 = _terms_mpoly(B6_TERMS, V)
    D = _terms_mpoly(QUINTIC_DISC_TERMS, V)
    cubic = y ** 3 + B2 * y ** 2 + B4 * y + B6
    return cubic * cubic - 1024 * D * y
