"""Coset-orbit resolvents.

Given an invariant r of a subgroup G <= S_n and left coset representatives
s_1..s_d of G, the resolvent is prod_i (y - s_i(r)).  Its coefficients are
symmetric in x_1..x_n; we obtain them through the power sums
p_j = sum_i s_i(r)^j (reduced to polynomials in s_1..s_n) and Newton's
identities.  Power sums are far cheaper to build than elementary symmetric
functions of the orbit, because only the partition-shaped monomials of
r^j need to be collected.
"""

import hashlib
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from ..polycore import IntPoly
from .mpoly import MPoly
from . import perm
from .reduce import reduce_monomial_basis

# sign conventions for the base polynomial
ALTERNATING = "alternating"   # X^n - a_1 X^(n-1) + a_2 X^(n-2) - ...  (a_k = e_k)
PLUS = "plus"                 # X^n + a_1 X^(n-1) + a_2 X^(n-2) + ...  (a_k = (-1)^k e_k)

DENSE_CELL_LIMIT = 40_000_000


class OrbitCollisionError(ValueError):
    pass


@dataclass
class ResolventSpec:
    """A named resolvent: invariant, coset representatives and subgroup."""

    name: str
    n: int
    invariant: MPoly
    coset_reps: list
    group_order: int
    generators: list = field(default_factory=list)
    convention: str = ALTERNATING
    description: str = ""

    def __post_init__(self):
        self.coset_reps = [tuple(s) for s in self.coset_reps]
        self.generators = [tuple(g) for g in self.generators]
        if len(self.invariant.variables) != self.n:
            raise ValueError("invariant must live in exactly n variables")
        if self.convention not in (ALTERNATING, PLUS):
            raise ValueError("unknown sign convention %r" % self.convention)

    @property
    def index(self):
        return len(self.coset_reps)

    def group_elements(self):
        return perm.closure(self.generators, self.n)

    def check(self):
        """Verify the structural invariants: generators fix the invariant,
        the subgroup has the stated order, and |reps| * |G| = n!."""
        for g in self.generators:
            if self.invariant.permute(g) != self.invariant:
                raise ValueError("%s: invariant is moved by generator %s"
                                 % (self.name, perm.format_cycles(g)))
        if self.generators:
            order = len(self.group_elements())
            if order != self.group_order:
                raise ValueError("%s: generators give a group of order %d, not %d"
                                 % (self.name, order, self.group_order))
        fact = 1
        for k in range(2, self.n + 1):
            fact *= k
        if self.index * self.group_order != fact:
            raise ValueError("%s: %d cosets of a group of order %d do not cover S_%d"
                             % (self.name, self.index, self.group_order, self.n))
        return True

    def orbit(self):
        vals = [self.invariant.permute(s) for s in self.coset_reps]
        seen = {}
        for s, v in zip(self.coset_reps, vals):
            key = frozenset(v.terms.items())
            if key in seen:
                raise OrbitCollisionError(
                    "%s: orbit values for %s and %s coincide; the invariant does not "
                    "separate these cosets" % (self.name, perm.format_cycles(seen[key]),
                                                perm.format_cycles(s)))
            seen[key] = s
        return vals

    def invariant_hash(self):
        text = "%s|%s" % (",".join(self.invariant.variables), canonical_text(self.invariant))
        return hashlib.sha256(text.encode()).hexdigest()[:16]


def canonical_text(P):
    return ";".join("%d:%s" % (c, ",".join(map(str, e))) for e, c in P.sorted_terms())


# ------------------------------------------------------------ power sums

def _partitions(weight, parts, largest):
    """Partitions of `weight` into at most `parts` parts, each <= largest,
    padded with zeros to length `parts`, in decreasing lexicographic order."""
    if parts == 0:
        if weight == 0:
            yield ()
        return
    top = min(weight, largest)
    for first in range(top, -1, -1):
        if first * parts < weight:
            break
        for rest in _partitions(weight - first, parts - 1, first):
            yield (first,) + rest


def _dense_ok(P, j):
    if not P.is_homogeneous() or not P.terms:
        return False
    n = len(P.variables)
    if n < 2:
        return False
    maxdeg = max(max(e) for e in P.terms)
    cells = (maxdeg * j + 1) ** (n - 1)
    if cells > DENSE_CELL_LIMIT:
        return False
    norm = sum(abs(c) for c in P.terms.values())
    return norm ** j < 2 ** 62


class _PowerTower:
    """Successive powers r, r^2, ... of a polynomial, dense when possible."""

    def __init__(self, r, jmax):
        self.r = r
        self.n = len(r.variables)
        self.dense = all(_dense_ok(r, j) for j in (jmax,))
        self.j = 0
        self.current = None
        if self.dense:
            self.maxdeg = max(max(e) for e in r.terms)
            self.deg = sum(next(iter(r.terms)))

    def advance(self):
        self.j += 1
        if self.dense:
            n = self.n
            if self.current is None:
                arr = np.zeros((self.maxdeg + 1,) * (n - 1), dtype=np.int64)
                for e, c in self.r.terms.items():
                    arr[e[:-1]] += c
                self.current = arr
            else:
                prev = self.current
                size = prev.shape[0]
                new = np.zeros((size + self.maxdeg,) * (n - 1), dtype=np.int64)
                for e, c in self.r.terms.items():
                    new[tuple(slice(e[i], e[i] + size) for i in range(n - 1))] += c * prev
                self.current = new
        else:
            self.current = self.r if self.current is None else self.current * self.r
        return self.current

    def coefficient_lookup(self):
        """Function exponent-tuple -> coefficient of the current power."""
        if self.dense:
            arr = self.current
            total = self.deg * self.j
            size = arr.shape[0]

            def look(nu):
                if sum(nu) != total or any(v >= size for v in nu[:-1]):
                    return 0
                return int(arr[nu[:-1]])
            return look
        terms = self.current.terms
        return lambda nu: terms.get(nu, 0)


def power_sum_mcoeffs(r, reps, j, tower=None):
    """m-basis coordinates of sum_{s in reps} s(r)^j."""
    n = len(r.variables)
    if tower is None:
        tower = _PowerTower(r, j)
        while tower.j < j:
            tower.advance()
    out = {}
    if tower.dense:
        look = tower.coefficient_lookup()
        weight = tower.deg * j
        largest = tower.maxdeg * j
        for mu in _partitions(weight, n, largest):
            tot = 0
            for s in reps:
                tot += look(tuple(mu[s[k]] for k in range(n)))
            if tot:
                out[mu] = tot
        return out
    acc = defaultdict(int)
    for nu, c in tower.current.terms.items():
        for s in reps:
            img = [0] * n
            for k in range(n):
                img[s[k]] = nu[k]
            if all(img[i] >= img[i + 1] for i in range(n - 1)):
                acc[tuple(img)] += c
    return {mu: c for mu, c in acc.items() if c}


def _smul(a, b):
    out = defaultdict(int)
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
    return out


def newton_elementary(power_sums, n_vars):
    """Elementary symmetric functions E_1..E_d of the orbit from its power
    sums Q_1..Q_d (dicts over s-exponents):  k E_k = sum (-1)^(j-1) E_(k-j) Q_j."""
    d = len(power_sums)
    E = [{(0,) * n_vars: 1}]
    for k in range(1, d + 1):
        acc = defaultdict(int)
        for j in range(1, k + 1):
            sign = 1 if j % 2 else -1
            for e, c in _smul(E[k - j], power_sums[j - 1]).items():
                acc[e] += sign * c
        nxt = {}
        for e, c in acc.items():
            if c:
                if c % k:
                    raise AssertionError("Newton identity produced a non-integral coefficient")
                nxt[e] = c // k
        E.append(nxt)
    return E


def newton_elementary_numeric(power_sums):
    E = [1]
    for k in range(1, len(power_sums) + 1):
        acc = 0
        for j in range(1, k + 1):
            acc += (1 if j % 2 else -1) * E[k - j] * power_sums[j - 1]
        if acc % k:
            raise AssertionError("Newton identity produced a non-integral value")
        E.append(acc // k)
    return E


# ------------------------------------------------------------ resolvents

class Resolvent:
    """A generated resolvent y^d + h_1 y^(d-1) + ... + h_d with each h_k an
    integer polynomial in a_1..a_n (stored as dicts over exponent tuples).

    `convention` records how a_1..a_n relate to the literal coefficients
    of the base polynomial, see ALTERNATING and PLUS.
    """

    def __init__(self, name, n, coeffs, convention, invariant_hash="-", variables=None):
        self.name = name
        self.n = n
        self.coeffs = [dict(h) for h in coeffs]
        self.convention = convention
        self.invariant_hash = invariant_hash
        self.variables = tuple(variables or ["a%d" % k for k in range(1, n + 1)])
        self._compiled = None

    @property
    def index(self):
        return len(self.coeffs) - 1

    def as_mpoly(self, yname="y"):
        d = self.index
        terms = {}
        for k, h in enumerate(self.coeffs):
            for e, c in h.items():
                terms[e + (d - k,)] = c
        return MPoly(self.variables + (yname,), terms)

    def coefficient_mpoly(self, k):
        return MPoly(self.variables, self.coeffs[k])

    def a_values(self, f):
        """Map the literal coefficients of f to a_1..a_n."""
        if f.degree != self.n:
            raise ValueError("%s needs a degree-%d polynomial" % (self.name, self.n))
        if self.convention == PLUS:
            return list(f.coeffs)
        return [c if k % 2 == 0 else -c for k, c in enumerate(f.coeffs, start=1)]

    def specialize_values(self, a):
        """IntPoly in y at given a_1..a_n values (already in convention)."""
        a = list(a)
        maxexp = [0] * self.n
        for h in self.coeffs:
            for e in h:
                for i, k in enumerate(e):
                    if k > maxexp[i]:
                        maxexp[i] = k
        pw = []
        for v, m in zip(a, maxexp):
            row = [1]
            for _ in range(m):
                row.append(row[-1] * v)
            pw.append(row)
        out = []
        for h in self.coeffs[1:]:
            tot = 0
            for e, c in h.items():
                t = c
                for i, k in enumerate(e):
                    if k:
                        t *= pw[i][k]
                tot += t
            out.append(tot)
        return IntPoly(out)

    def specialize(self, f):
        return self.specialize_values(self.a_values(f))

    def specialize_partial(self, assignment):
        """Substitute some of a_1..a_n (name -> int); returns an MPoly in the
        remaining variables and y."""
        return self.as_mpoly().partial_evaluate(assignment)

    # -- cache text ------------------------------------------------------
    def to_text(self):
        P = self.as_mpoly()
        lines = [
            "# galoiscensus resolvent cache, format 1",
            "# convention: %s" % _convention_doc(self.convention, self.n),
            "# variables: %s" % " ".join(P.variables),
            "%s %d %d %s" % (self.name, self.n, self.index, self.invariant_hash),
        ]
        for e, c in P.sorted_terms():
            lines.append("%d %s" % (c, " ".join(map(str, e))))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        convention = None
        variables = None
        header = None
        terms = {}
        for line in text.split("\n"):
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("convention:"):
                    convention = body.split(":", 1)[1].split()[0]
                elif body.startswith("variables:"):
                    variables = body.split(":", 1)[1].split()
                continue
            if header is None:
                header = line.split()
                continue
            parts = line.split()
            terms[tuple(int(v) for v in parts[1:])] = int(parts[0])
        if header is None or len(header) != 4:
            raise ValueError("resolvent cache is missing its header line")
        name, n, d, ihash = header[0], int(header[1]), int(header[2]), header[3]
        coeffs = [dict() for _ in range(d + 1)]
        for e, c in terms.items():
            coeffs[d - e[-1]][e[:-1]] = c
        return cls(name, n, coeffs, convention or ALTERNATING, ihash,
                   variables[:-1] if variables else None)


def _convention_doc(convention, n):
    if convention == ALTERNATING:
        return "alternating (base polynomial X^%d - a1 X^%d + a2 X^%d - ..., so a_k = e_k of the roots)" % (n, n - 1, n - 2)
    return "plus (base polynomial X^%d + a1 X^%d + a2 X^%d + ..., so a_k = (-1)^k e_k of the roots)" % (n, n - 1, n - 2)


def _to_a_variables(E, convention):
    """Rewrite a polynomial in s_1..s_n in terms of a_1..a_n."""
    if convention == ALTERNATING:
        return dict(E)
    out = {}
    for e, c in E.items():
        odd = sum(k * v for k, v in enumerate(e, start=1)) % 2
        out[e] = -c if odd else c
    return out


def orbit_resolvent(spec, progress=None):
    """Generate the resolvent of `spec` symbolically (see module docstring)."""
    if not spec.coset_reps:
        raise ValueError("spec has no coset representatives")
    spec.orbit()  # raises on formal collisions
    n = spec.n
    d = spec.index
    r = spec.invariant
    tower = _PowerTower(r, d)
    power_sums = []
    for j in range(1, d + 1):
        tower.advance()
        m = power_sum_mcoeffs(r, spec.coset_reps, j, tower)
        power_sums.append(reduce_monomial_basis(m, n))
        if progress:
            progress("%s: power sum %d/%d reduced (%d terms)" % (spec.name, j, d, len(power_sums[-1])))
    E = newton_elementary(power_sums, n)
    coeffs = [{(0,) * n: 1}]
    for k in range(1, d + 1):
        h = _to_a_variables(E[k], spec.convention)
        if k % 2:
            h = {e: -c for e, c in h.items()}
        coeffs.append(h)
    return Resolvent(spec.name, n, coeffs, spec.convention, spec.invariant_hash())


def orbit_power_sums_numeric(invariant, reps, svalues, d):
    """Numeric power sums p_1..p_d of the orbit at given s_k values."""
    n = len(invariant.variables)
    tower = _PowerTower(invariant, d)
    out = []
    for j in range(1, d + 1):
        tower.advance()
        m = power_sum_mcoeffs(invariant, reps, j, tower)
        out.append(reduce_monomial_basis(m, n, values=svalues))
    return out
