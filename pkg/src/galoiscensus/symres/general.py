"""The weighted general resolvent and the search for a separable one.

For a subgroup G of S_n with left coset representatives s, weights
w_1..w_|G|, exponents e_1..e_n and a shift g, the resolvent has roots

    r(s) = sum_k w_k sum_{t in G} prod_i (alpha_{s t(i)} + g)^(k e_i).

Shifting the roots by g is the same as working with f(X - g), so we build
the unshifted invariant symbolically, reduce its orbit power sums with the
elementary symmetric functions of the shifted roots substituted on the fly,
and finish with Newton's identities.  Everything is exact.
"""

import itertools
from dataclasses import dataclass
from math import comb

from ..polycore import IntPoly
from ..polycore import dense
from ..polycore.disc import disc_dense
from .resolvent import orbit_power_sums_numeric, newton_elementary_numeric
from .specs import phidef_invariant

MAX_INDEX = 30
# the symbolic power r^d may not have more monomials than this
MAX_POWER_TERMS = 3_000_000


class CostCapError(ValueError):
    pass


class SearchCapError(RuntimeError):
    pass


@dataclass(frozen=True)
class GeneralResolventParams:
    w: tuple
    e: tuple
    g_shift: int

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(self.w))
        object.__setattr__(self, "e", tuple(self.e))
        if not self.w or not self.e:
            raise ValueError("weights and exponents must be nonempty")
        if any(v < 1 for v in self.w) or any(v < 1 for v in self.e):
            raise ValueError("weights and exponents must be positive integers")

    def within(self, cap):
        return max(self.w) <= cap and max(self.e) <= cap


def shifted(f, g):
    """Literal coefficients of f(X - g) as an IntPoly (roots alpha + g)."""
    asc = f.ascending()
    # Horner in the shifted variable
    out = []
    for c in reversed(asc):
        out = dense.add(dense.mul(out, [-g, 1]), [c])
    return IntPoly.from_ascending(out)


def _power_term_estimate(inv, d):
    n = len(inv.variables)
    deg = inv.total_degree() * d
    by_count = len(inv.terms) ** d
    by_degree = comb(deg + n, n)
    return min(by_count, by_degree)


def general_phi(f, spec, params):
    """Phi_{w,e,g}(y) for f, as a monic IntPoly of degree [S_n : G]."""
    if not isinstance(f, IntPoly):
        f = IntPoly(f)
    n = f.degree
    if n > 6:
        raise CostCapError("general_phi supports n <= 6")
    if spec.n != n:
        raise ValueError("spec is for degree %d but f has degree %d" % (spec.n, n))
    d = spec.index
    if d > MAX_INDEX:
        raise CostCapError("index %d exceeds the cap %d" % (d, MAX_INDEX))
    group = spec.group_elements() if spec.generators else [tuple(range(n))]
    if len(params.w) != len(group):
        raise ValueError("need %d weights (one per group element), got %d"
                         % (len(group), len(params.w)))
    if len(params.e) != n:
        raise ValueError("need %d exponents, got %d" % (n, len(params.e)))
    inv = phidef_invariant(group, n, params.w, params.e)
    est = _power_term_estimate(inv, d)
    if est > MAX_POWER_TERMS:
        raise CostCapError("symbolic cost estimate %d terms exceeds the cap %d"
                           % (est, MAX_POWER_TERMS))
    fg = shifted(f, params.g_shift)
    svals = [c if k % 2 == 0 else -c for k, c in enumerate(fg.coeffs, start=1)]
    psums = orbit_power_sums_numeric(inv, spec.coset_reps, svals, d)
    E = newton_elementary_numeric(psums)
    return IntPoly([(-1) ** k * E[k] for k in range(1, d + 1)])


def _bounded_compositions(total, length, cap):
    """Vectors of `length` entries in [1, cap] summing to `total`, in
    lexicographic order."""
    if length == 0:
        if total == 0:
            yield ()
        return
    lo = max(1, total - cap * (length - 1))
    hi = min(cap, total - (length - 1))
    for first in range(lo, hi + 1):
        for rest in _bounded_compositions(total - first, length - 1, cap):
            yield (first,) + rest


def _graded(length, cap):
    for total in range(length, cap * length + 1):
        yield from _bounded_compositions(total, length, cap)


def _search_order(group_size, n, cap, usable=None):
    """(w, e) candidates.  Weights form the outer loop and exponents the
    inner one, each graded by entry sum and lexicographic within a grade."""
    exps = [e for e in _graded(n, cap) if usable is None or usable(e)]
    if not exps:
        return
    for w in _graded(group_size, cap):
        for e in exps:
            yield w, e


def separates_cosets(spec, group, e):
    """True when the monomial orbit sums for exponent vector e take distinct
    formal values on the cosets.  Scaling e by k does not change which
    cosets collide, so for inseparable e every weight vector fails for
    every f and the candidate can be skipped outright."""
    base = phidef_invariant(group, spec.n, (1,), e)
    seen = set()
    for s in spec.coset_reps:
        key = frozenset(base.permute(s).terms.items())
        if key in seen:
            return False
        seen.add(key)
    return True


def separability_search(f, spec, cap, max_candidates=None):
    """First parameters (w, e, g) in the deterministic search order whose
    resolvent has nonzero discriminant, with g = cap^3 * max(1, max|a_i|)."""
    if not isinstance(f, IntPoly):
        f = IntPoly(f)
    if cap < 1:
        raise ValueError("cap must be positive")
    if f.degree >= 2 and disc_dense(f.ascending()) == 0:
        raise ValueError("separability_search requires a separable f (disc = 0)")
    P = max([1] + [abs(c) for c in f.coeffs])
    g = cap ** 3 * P
    group = spec.group_elements() if spec.generators else [tuple(range(f.degree))]
    tried = 0
    order = _search_order(len(group), f.degree, cap,
                          usable=lambda e: separates_cosets(spec, group, e))
    for w, e in order:
        params = GeneralResolventParams(w, e, g)
        phi = general_phi(f, spec, params)
        tried += 1
        if phi.degree < 2 or disc_dense(phi.ascending()) != 0:
            return params
        if max_candidates is not None and tried >= max_candidates:
            break
    if tried == 0:
        raise SearchCapError("no exponent vector with entries <= %d separates the cosets "
                             "formally; the cap is too small" % cap)
    raise SearchCapError("no separable resolvent with entries <= %d after %d candidates; "
                         "the cap may be too small (this does not prove none exists)"
                         % (cap, tried))
