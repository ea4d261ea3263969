"""Galois groups of irreducible monic integer polynomials of degree 3 to 6.

Every verdict is a GaloisClass (the group, as a common name plus its
transitive-group number nTk) together with a Certificate saying how much
of the verdict is proved:

* ``proved``: a deterministic chain of resolvent and discriminant tests,
  or a Frobenius cycle-type witness, pins the group down.
* ``resolvent_conditional``: the verdict relies on a converse (a rational
  root of a resolvent implies containment) that needs a separable
  specialization, or on the absence of a witness.
* ``probabilistic``: only the absence of a cycle pattern over the prime
  schedule supports the verdict (C5 against D5).

Sign handling lives here: callers always pass the literal coefficients.
"""

import itertools
from collections import namedtuple
from functools import lru_cache

from .polycore import (IntPoly, disc_resultant, is_irreducible, integer_roots,
                       cycle_type_samples, is_perfect_square)
from .polycore.cycles import iter_cycle_types
from .polycore.disc import disc_dense
from .symres import perm
from .symres.sextic import sextic_resolvent_of

SCHEMA = "galoiscensus.verdict/1"
PROVED = "proved"
CONDITIONAL = "resolvent_conditional"
PROBABILISTIC = "probabilistic"
DEFAULT_SAMPLES = 50

# name -> (nTk, order)
GROUPS = {
    3: {"C3": ("3T1", 3), "S3": ("3T2", 6)},
    4: {"C4": ("4T1", 4), "V4": ("4T2", 4), "D4": ("4T3", 8), "A4": ("4T4", 12),
        "S4": ("4T5", 24)},
    5: {"C5": ("5T1", 5), "D5": ("5T2", 10), "AGL(1,F5)": ("5T3", 20), "A5": ("5T4", 60),
        "S5": ("5T5", 120)},
    6: {"G48": ("6T11", 48), "G72": ("6T13", 72), "H120": ("6T14", 120),
        "A6": ("6T15", 360), "S6": ("6T16", 720)},
}
FULL = {3: "S3", 4: "S4", 5: "S5", 6: "S6"}
ALT = {3: "C3", 4: "A4", 5: "A5", 6: "A6"}

# generators (cycle notation) of one representative of each group above
GENERATORS = {
    3: {"C3": ["(123)"], "S3": ["(12)", "(123)"]},
    4: {"C4": ["(1234)"], "V4": ["(12)(34)", "(13)(24)"], "D4": ["(1234)", "(13)"],
        "A4": ["(123)", "(234)"], "S4": ["(12)", "(1234)"]},
    5: {"C5": ["(12345)"], "D5": ["(12345)", "(25)(34)"], "AGL(1,F5)": ["(12345)", "(2354)"],
        "A5": ["(123)", "(12345)"], "S5": ["(12)", "(12345)"]},
    6: {"G48": ["(12)", "(34)", "(56)", "(13)(24)", "(35)(46)"],
        "G72": ["(12)", "(123)", "(45)", "(456)", "(14)(25)(36)"],
        "H120": ["(126)(354)", "(12345)", "(2354)"],
        "A6": ["(123)", "(23456)"], "S6": ["(12)", "(123456)"]},
}
SOLVABLE_QUINTIC = ("C5", "D5", "AGL(1,F5)")


class GaloisClass(namedtuple("GaloisClass", "degree label flags")):
    """A group label with its containment flags (a dict of booleans)."""

    __slots__ = ()

    @property
    def ntk(self):
        return GROUPS[self.degree][self.label][0]

    @property
    def order(self):
        return GROUPS[self.degree][self.label][1]

    @property
    def is_full(self):
        return self.label == FULL[self.degree]


class Certificate(namedtuple("Certificate", "level evidence")):
    """Certainty level plus an ordered tuple of (test, outcome) pairs."""

    __slots__ = ()


@lru_cache(maxsize=None)
def group_cycle_types(degree, label):
    """The set of cycle types (sorted tuples) occurring in the named group."""
    gens = [perm.parse_cycles(g, degree) for g in GENERATORS[degree][label]]
    group = perm.closure(gens, degree)
    if len(group) != GROUPS[degree][label][1]:
        raise AssertionError("generators of %s give order %d" % (label, len(group)))
    return frozenset(perm.cycle_types_of(group))


def _as_poly(f):
    return f if isinstance(f, IntPoly) else IntPoly(f)


def _require_irreducible(f, degrees):
    if f.degree not in degrees:
        raise ValueError("expected degree in %s, got %d" % (sorted(degrees), f.degree))
    disc = disc_resultant(f)
    if disc == 0:
        raise ValueError("polynomial is inseparable (disc = 0)")
    if not is_irreducible(f):
        raise ValueError("polynomial is reducible over Q; classification needs an "
                         "irreducible input")
    return disc


def _pattern_text(sample):
    return "p=%d: %s" % (sample.prime, ",".join(str(d) for d in sample.degrees))


def _first_with(samples, pattern):
    pattern = tuple(sorted(pattern))
    for s in samples:
        if tuple(s.degrees) == pattern:
            return s
    return None


def _search_witness(f, disc, pattern, samples):
    """First of the first `samples` cycle-type samples with the given
    pattern (stops early), or None."""
    return _first_with(itertools.islice(iter_cycle_types(f, disc), samples), pattern)


def alternating_test(f):
    """True iff disc(f) is a perfect square, i.e. the group lies in A_n."""
    f = _as_poly(f)
    disc = _require_irreducible(f, range(2, 7))
    return is_perfect_square(disc)


# ------------------------------------------------------------- degree 3, 4

def resolvent_cubic(f):
    """y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2) for X^4+aX^3+bX^2+cX+d."""
    a, b, c, d = f.coeffs
    return IntPoly([-b, a * c - 4 * d, -(a * a * d - 4 * b * d + c * c)])


def _splits_over(delta, disc):
    """Does a rational quadratic with discriminant delta split over Q(sqrt disc)?"""
    return delta == 0 or is_perfect_square(delta) or is_perfect_square(delta * disc)


def classify_cubic_quartic(f):
    f = _as_poly(f)
    disc = _require_irreducible(f, (3, 4))
    return _classify_cubic_quartic_known(f, disc)


def _classify_cubic_quartic_known(f, disc):
    square = is_perfect_square(disc)
    ev = [("disc", str(disc)), ("disc_square", square)]
    if f.degree == 3:
        label = "C3" if square else "S3"
        return GaloisClass(3, label, {"in_A_n": square}), Certificate(PROVED, tuple(ev))
    R = resolvent_cubic(f)
    roots = sorted(set(integer_roots(R)))
    ev.append(("resolvent_cubic", str(R)))
    ev.append(("resolvent_cubic_roots", roots))
    if not roots:
        label = "A4" if square else "S4"
    elif len(roots) == 3:
        label = "V4"
    else:
        r = roots[0]
        a, b, c, d = f.coeffs
        d1 = r * r - 4 * d
        d2 = a * a - 4 * (b - r)
        c4 = _splits_over(d1, disc) and _splits_over(d2, disc)
        ev.append(("auxiliary_discriminants", [str(d1), str(d2)]))
        ev.append(("splits_over_quadratic_field", c4))
        label = "C4" if c4 else "D4"
    return GaloisClass(4, label, {"in_A_n": square}), Certificate(PROVED, tuple(ev))


# ---------------------------------------------------------------- degree 5

Solvability = namedtuple("Solvability", "solvable witness")


def quintic_is_solvable(f):
    """Solvable by radicals iff the sextic resolvent theta has an integer
    root; the root found (the smallest) is returned as the witness."""
    f = _as_poly(f)
    _require_irreducible(f, (5,))
    return _theta_test(f)


def _theta_test(f):
    roots = integer_roots(sextic_resolvent_of(f))
    if roots:
        return Solvability(True, roots[0])
    return Solvability(False, None)


def classify_quintic(f, samples=DEFAULT_SAMPLES):
    f = _as_poly(f)
    disc = _require_irreducible(f, (5,))
    return _classify_quintic_known(f, disc, samples)


def _classify_quintic_known(f, disc, samples=DEFAULT_SAMPLES, theta=None):
    """Quintic decision tree for an f already known to be irreducible."""
    square = is_perfect_square(disc)
    if theta is None:
        theta = _theta_test(f)
    ev = [("disc", str(disc)), ("disc_square", square),
          ("theta_integer_root", theta.witness)]
    flags = {"in_A_n": square, "solvable": theta.solvable}
    if not theta.solvable:
        witness = _search_witness(f, disc, (1, 1, 3) if square else (1, 1, 1, 2), samples)
        label = "A5" if square else "S5"
        if witness is not None:
            ev.append(("cycle_type_witness", _pattern_text(witness)))
            level = PROVED
        else:
            ev.append(("cycle_type_witness", None))
            level = CONDITIONAL
    elif not square:
        label, level = "AGL(1,F5)", PROVED
    else:
        witness = _search_witness(f, disc, (1, 2, 2), samples)
        ev.append(("cycle_type_samples", samples))
        if witness is not None:
            ev.append(("cycle_type_witness", _pattern_text(witness)))
            label, level = "D5", PROVED
        else:
            ev.append(("cycle_type_witness", None))
            label, level = "C5", PROBABILISTIC
    return GaloisClass(5, label, flags), Certificate(level, tuple(ev))


# ---------------------------------------------------------------- degree 6

SEXTIC_TESTS = (("f10", "in_G72"), ("f15", "in_G48"), ("psi", "in_H120"))


def sextic_resolvent_tests(f):
    """For each of f10, f15 and psi: (name, integer roots, separable?)."""
    from .symres.store import load_resolvent
    out = []
    for name, _ in SEXTIC_TESTS:
        R = load_resolvent(name)
        spec = R.specialize(f)
        roots = sorted(set(integer_roots(spec)))
        separable = disc_dense(spec.ascending()) != 0
        out.append((name, roots, separable))
    return out


def classify_sextic(f, samples=DEFAULT_SAMPLES):
    f = _as_poly(f)
    disc = _require_irreducible(f, (6,))
    return _classify_sextic_known(f, disc, samples)


def _classify_sextic_known(f, disc, samples=DEFAULT_SAMPLES):
    square = is_perfect_square(disc)
    ev = [("disc", str(disc)), ("disc_square", square)]
    flags = {"in_A_n": square, "in_G72": False, "in_G48": False, "in_H120": False}
    inseparable = []
    for (name, roots, separable), (_, flag) in zip(sextic_resolvent_tests(f), SEXTIC_TESTS):
        ev.append((name + "_integer_roots", roots))
        ev.append((name + "_separable", separable))
        if roots:
            flags[flag] = True
            if not separable:
                inseparable.append(name)
    # A root coming from an inseparable specialization proves nothing.  If
    # a Frobenius cycle type lies outside the container, the flag is wrong.
    if inseparable:
        cyc = cycle_type_samples(f, samples, disc=disc)
        for name, flag in SEXTIC_TESTS:
            if name not in inseparable:
                continue
            allowed = group_cycle_types(6, flag[3:])
            bad = next((c for c in cyc if tuple(c.degrees) not in allowed), None)
            if bad is not None:
                flags[flag] = False
                inseparable.remove(name)
                ev.append((name + "_refuted_by_cycle_type", _pattern_text(bad)))
    hits = [flag for _, flag in SEXTIC_TESTS if flags[flag]]
    if not hits:
        label = "A6" if square else "S6"
        return GaloisClass(6, label, flags), Certificate(PROVED, tuple(ev))
    if inseparable:
        ev.append(("inseparable_specializations", inseparable))
    by_order = sorted(hits, key=lambda fl: GROUPS[6][fl[3:]][1])
    label = by_order[0][3:]
    return GaloisClass(6, label, flags), Certificate(CONDITIONAL, tuple(ev))


# ------------------------------------------------------------- dispatching

def classify(f, samples=DEFAULT_SAMPLES):
    """Classify an irreducible monic polynomial of degree 3 to 6."""
    f = _as_poly(f)
    if f.degree in (3, 4):
        return classify_cubic_quartic(f)
    if f.degree == 5:
        return classify_quintic(f, samples)
    if f.degree == 6:
        return classify_sextic(f, samples)
    raise ValueError("classification supports degrees 3 to 6, got %d" % f.degree)


def classify_irreducible(f, disc=None, samples=DEFAULT_SAMPLES):
    """Like classify() for an f the caller already knows to be irreducible
    (the census); skips the irreducibility test."""
    f = _as_poly(f)
    if disc is None:
        disc = disc_resultant(f)
    if f.degree in (3, 4):
        return _classify_cubic_quartic_known(f, disc)
    if f.degree == 5:
        return _classify_quintic_known(f, disc, samples)
    if f.degree == 6:
        return _classify_sextic_known(f, disc, samples)
    raise ValueError("classification supports degrees 3 to 6, got %d" % f.degree)


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, int) and not isinstance(v, bool) and abs(v) >= 2 ** 53:
        return str(v)
    return v


def verdict_document(f, gclass, cert):
    """The JSON verdict: {schema, degree, coeffs, label, ntk, level, flags, evidence}."""
    f = _as_poly(f)
    return {
        "schema": SCHEMA,
        "degree": f.degree,
        "coeffs": f.to_json(),
        "label": gclass.label,
        "ntk": gclass.ntk,
        "level": cert.level,
        "flags": dict(sorted(gclass.flags.items())),
        "evidence": [[name, _jsonable(v)] for name, v in cert.evidence],
    }
