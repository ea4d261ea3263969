"""The named resolvent specifications used by the classifier."""

import itertools

from .mpoly import MPoly, parse_mpoly
from . import perm
from .resolvent import ResolventSpec, ALTERNATING, PLUS


def xnames(n):
    return tuple("x%d" % i for i in range(1, n + 1))


def _reps(cycle_strings, n):
    return [perm.parse_cycles(c, n) for c in cycle_strings]


def f10_spec():
    """Decic resolvent for G72 = stabiliser of the split {123 | 456}."""
    n = 6
    X = xnames(n)
    inv = parse_mpoly("(x1 + x2 + x3)*(x4 + x5 + x6)", X)
    gens = _reps(["(12)", "(123)", "(45)", "(456)", "(14)(25)(36)"], n)
    # one representative per 3-subset {1, i, j} sent to the first block,
    # in the order r1..r10 of the classical listing
    reps = []
    for i, j in itertools.combinations(range(1, 6), 2):
        block = [0, i, j]
        rest = [k for k in range(6) if k not in block]
        img = block + rest
        # s must send positions 0,1,2 to the block and 3,4,5 to the rest
        reps.append(tuple(img))
    return ResolventSpec("f10", n, inv, reps, 72, gens, ALTERNATING,
                         "G72 = S3 wr C2; invariant (x1+x2+x3)(x4+x5+x6)")


def f15_spec():
    """Degree-15 resolvent for G48 = stabiliser of the matching {12|34|56}."""
    n = 6
    X = xnames(n)
    inv = parse_mpoly("x1*x2 + x3*x4 + x5*x6", X)
    gens = _reps(["(12)", "(34)", "(56)", "(13)(24)", "(35)(46)"], n)
    reps = []
    # the 15 perfect matchings in the classical order r1..r15
    for pairing in _matchings(list(range(6))):
        img = [v for pair in pairing for v in pair]
        reps.append(tuple(img))
    return ResolventSpec("f15", n, inv, reps, 48, gens, ALTERNATING,
                         "G48 = C2 wr S3; invariant x1x2 + x3x4 + x5x6")


def _matchings(points):
    if not points:
        yield []
        return
    a = points[0]
    for k in range(1, len(points)):
        b = points[k]
        rest = points[1:k] + points[k + 1:]
        for m in _matchings(rest):
            yield [(a, b)] + m


PSI_INVARIANT = ("(x1*x2 + x3*x5 + x4*x6)*(x1*x3 + x4*x5 + x2*x6)*(x3*x4 + x1*x6 + x2*x5)"
                 "*(x1*x5 + x2*x4 + x3*x6)*(x1*x4 + x2*x3 + x5*x6)")


def psi_spec():
    """Stauduhar's sextic resolvent for H120 (= PGL(2,5), 6T14)."""
    n = 6
    inv = parse_mpoly(PSI_INVARIANT, xnames(n))
    gens = _reps(["(126)(354)", "(12345)", "(2354)"], n)
    reps = _reps(["(1)", "(12)", "(13)", "(14)", "(15)", "(16)"], n)
    return ResolventSpec("psi", n, inv, reps, 120, gens, ALTERNATING,
                         "H120; product of five matching sums")


THETA_INVARIANT = "(x1*x2 + x2*x3 + x3*x4 + x4*x5 + x5*x1 - x1*x3 - x3*x5 - x5*x2 - x2*x4 - x4*x1)^2"


def theta_orbit_spec():
    """The F20 = AGL(1, F5) invariant whose orbit gives the quintic sextic
    resolvent (plus-sign convention for the quintic's coefficients)."""
    n = 5
    inv = parse_mpoly(THETA_INVARIANT, xnames(n))
    gens = _reps(["(12345)", "(2354)"], n)
    group = perm.closure(gens, n)
    reps = perm.left_coset_reps(group, n)
    return ResolventSpec("theta", n, inv, reps, 20, gens, PLUS,
                         "AGL(1,F5); squared difference of pentagon and pentagram sums")


def alternating_spec(n):
    """A_n with the Vandermonde product as invariant: resolvent y^2 - disc."""
    X = xnames(n)
    inv = MPoly.constant(X, 1)
    for i in range(n):
        for j in range(i + 1, n):
            inv = inv * (MPoly.var(X, X[i]) - MPoly.var(X, X[j]))
    gens = [perm.parse_cycles("(123)", n)] if n >= 3 else []
    if n >= 4:
        gens.append(perm.parse_cycles("(" + "".join(str(k) for k in range(2, n + 1)) + ")", n)
                    if n % 2 == 0 else perm.parse_cycles("(" + "".join(str(k) for k in range(1, n + 1)) + ")", n))
    order = 1
    for k in range(3, n + 1):
        order *= k
    reps = [perm.identity(n), perm.parse_cycles("(12)", n)]
    return ResolventSpec("alt%d" % n, n, inv, reps, order, gens, PLUS,
                         "A_%d; Vandermonde product" % n)


def phidef_invariant(group, n, weights=None, exps=None):
    """sum_k w_k sum_{t in G} prod_i x_{t(i)}^(k e_i); with the defaults
    (w = (1), e = (1, 2, ..., n)) this is sum_t prod_i x_{t(i)}^i."""
    X = xnames(n)
    if exps is None:
        exps = list(range(1, n + 1))
    if weights is None:
        weights = [1]
    terms = {}
    for k, w in enumerate(weights, start=1):
        for t in group:
            e = [0] * n
            for i in range(n):
                e[t[i]] += k * exps[i]
            e = tuple(e)
            terms[e] = terms.get(e, 0) + w
    return MPoly(X, terms)


def phidef_alternating_spec(n=4):
    """The general resolvent for A_n built from sum_t prod x_{t(i)}^i."""
    spec = alternating_spec(n)
    group = perm.alternating_group(n)
    inv = phidef_invariant(group, n)
    return ResolventSpec("phi", n, inv, spec.coset_reps, spec.group_order, spec.generators,
                         PLUS, "A_%d; sum over the group of x_t(1) x_t(2)^2 ... x_t(n)^n" % n)


NAMED_SPECS = {
    "f10": f10_spec,
    "f15": f15_spec,
    "psi": psi_spec,
    "theta": theta_orbit_spec,
    "phi": phidef_alternating_spec,
}
