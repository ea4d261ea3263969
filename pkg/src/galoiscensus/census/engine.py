"""Vectorised evaluation of one block of coefficient tuples.

A block fixes the outer coefficients a_1..a_k and runs the inner ones over
the whole box, with a_n innermost.  Everything that can be decided with
int64 arithmetic on the whole block is decided here.

* A linear factor shows up as an integer root r with |r| <= H.
* The factor patterns modulo the table primes bound the degrees of
  possible factors: a factor of degree d must be a sum of pattern parts at
  every prime.  Once linear factors are ruled out, no remaining degree
  means irreducible.
* For irreducible f the patterns at odd primes are Frobenius cycle types
  of the Galois group.  A group that lacks one of them is excluded.  When
  only S_n survives, the verdict is S_n.  When A_n also survives, the
  discriminant decides.

Whatever is left over goes through the exact Python code paths
(factorisation, resolvents, the classifier), one tuple at a time.
"""

import itertools
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..classify import (ALT, FULL, GROUPS, SOLVABLE_QUINTIC, Solvability,
                        classify_irreducible, group_cycle_types, _classify_quintic_known)
from ..polycore import IntPoly, integer_roots, is_irreducible, disc_resultant, is_perfect_square
from ..polycore import dense
from ..polycore.disc import QUINTIC_DISC_TERMS
from ..polycore.modp import small_primes
from ..symres.sextic import sextic_resolvent_of
from .tables import partitions, pattern_table, subset_sum_mask

BLOCK_LIMIT = 1 << 18
TABLE_LIMIT = 30_000_000
MAX_TABLE_PRIMES = 12
INT64_SAFE = 1 << 62

MODES = ("full", "solvable_only", "reducible_only")
# decision codes for irreducible tuples
DECIDED, NEED_DISC, NEED_PYTHON = 0, 1, 2


def table_primes(n):
    """Primes (starting at 2) whose degree-n tables stay under TABLE_LIMIT."""
    out = []
    for p in small_primes(MAX_TABLE_PRIMES, start=2):
        if p ** n > TABLE_LIMIT:
            break
        out.append(p)
    return out


def outer_count(n, H):
    """How many leading coefficients are fixed per block."""
    side = 2 * H + 1
    k = 0
    while k < n and side ** (n - k) > BLOCK_LIMIT:
        k += 1
    return k


def labels_for(n, mode):
    if mode == "reducible_only":
        return []
    if mode == "solvable_only":
        return list(SOLVABLE_QUINTIC) + ["insolvable"]
    return sorted(GROUPS[n])


class Tally:
    """Additive partial result for a run of blocks."""

    def __init__(self, labels):
        self.reducible = 0
        self.irreducible = 0
        self.per_class = {lab: 0 for lab in labels}
        self.max_root = None          # largest |theta root| seen (integer)
        self.witnesses = []           # [coeffs, theta roots] per solvable quintic
        self.fallbacks = {"irreducibility": 0, "classification": 0, "discriminant": 0}

    def add(self, other):
        self.reducible += other.reducible
        self.irreducible += other.irreducible
        for k, v in other.per_class.items():
            self.per_class[k] = self.per_class.get(k, 0) + v
        if other.max_root is not None and (self.max_root is None or other.max_root > self.max_root):
            self.max_root = other.max_root
        self.witnesses.extend(other.witnesses)
        for k, v in other.fallbacks.items():
            self.fallbacks[k] = self.fallbacks.get(k, 0) + v
        return self

    def to_state(self):
        return {"reducible": self.reducible, "irreducible": self.irreducible,
                "per_class": dict(self.per_class), "max_root": self.max_root,
                "witnesses": self.witnesses, "fallbacks": dict(self.fallbacks)}

    @classmethod
    def from_state(cls, state):
        t = cls([])
        t.reducible = state["reducible"]
        t.irreducible = state["irreducible"]
        t.per_class = dict(state["per_class"])
        t.max_root = state["max_root"]
        t.witnesses = [list(w) for w in state["witnesses"]]
        t.fallbacks = dict(state["fallbacks"])
        return t


class BlockContext:
    """Everything that is the same for every block of an (n, H, mode) run."""

    def __init__(self, n, H, mode="full"):
        if mode not in MODES:
            raise ValueError("unknown mode %r (choose from %s)" % (mode, ", ".join(MODES)))
        if mode == "solvable_only" and n != 5:
            raise ValueError("mode solvable_only is only defined for quintics")
        self.n, self.H, self.mode = n, H, mode
        self.labels = labels_for(n, mode)
        self.k = outer_count(n, H)
        side = 2 * H + 1
        m = side ** (n - self.k)
        grid = np.indices((side,) * (n - self.k), dtype=np.int64).reshape(n - self.k, m) - H
        self.inner = [grid[j] for j in range(n - self.k)]   # coefficient arrays a_{k+1}..a_n
        self.m = m
        # integer roots of a monic f with |a_i| <= H satisfy |r| <= H
        self.roots = np.arange(-H, H + 1, dtype=np.int64)
        inner_vals = np.zeros((len(self.roots), m), dtype=np.int64)
        for j, arr in enumerate(self.inner):
            power = n - 1 - (self.k + j)
            inner_vals += np.outer(self.roots ** power, np.ones(1, dtype=np.int64)) * arr
        self.inner_root_vals = inner_vals
        self.primes = table_primes(n)
        self.tables = [pattern_table(n, p) for p in self.primes]
        self.inner_index = []
        for p in self.primes:
            idx = np.zeros(m, dtype=np.int64)
            for j, arr in enumerate(self.inner):
                idx += (arr % p) * p ** (n - 1 - (self.k + j))
            self.inner_index.append(idx)
        pats = partitions(n)
        self.all_bits = (1 << n) - 2
        self.mask_lut = np.array([self.all_bits] + [subset_sum_mask(pt) for pt in pats],
                                 dtype=np.int64)
        self.seen_lut = np.array([0] + [1 << i for i in range(len(pats))], dtype=np.int64)
        self.linear_bits = (1 << 1) | (1 << (n - 1))
        # allowed-pattern bitsets of the groups used to exclude containers
        def allowed(label):
            ct = group_cycle_types(n, label)
            return sum(1 << i for i, pt in enumerate(pats) if pt in ct)
        self.proper = [allowed(lab) for lab in GROUPS[n] if lab not in (ALT[n], FULL[n])]
        self.alt_allowed = allowed(ALT[n])
        self.disc_vectorised = n == 5 and _quintic_disc_bound(H) < INT64_SAFE

    def outer_tuples(self):
        return itertools.product(range(-self.H, self.H + 1), repeat=self.k)

    def block_count(self):
        return (2 * self.H + 1) ** self.k


@lru_cache(maxsize=None)
def _quintic_disc_bound(H):
    return sum(abs(c) * H ** sum(e) for c, e in QUINTIC_DISC_TERMS)


def _vector_quintic_disc(cols):
    total = np.zeros(cols[0].shape[0], dtype=np.int64)
    for c, exps in QUINTIC_DISC_TERMS:
        t = np.full(cols[0].shape[0], c, dtype=np.int64)
        for col, e in zip(cols, exps):
            if e:
                t = t * col ** e
        total += t
    return total


def _vector_is_square(D):
    out = np.zeros(D.shape[0], dtype=bool)
    pos = D >= 0
    r = np.floor(np.sqrt(D[pos].astype(np.float64))).astype(np.int64)
    Dp = D[pos]
    ok = np.zeros(Dp.shape[0], dtype=bool)
    for delta in (-1, 0, 1):
        rr = r + delta
        ok |= (rr >= 0) & (rr * rr == Dp)
    out[pos] = ok
    return out


EXTRA_PRIMES = tuple(p for p in small_primes(60, start=37))


@lru_cache(maxsize=None)
def _power_matrix(p, n):
    x = np.arange(p, dtype=np.int64)
    return np.stack([pow_mod_vec(x, n - i, p) for i in range(n + 1)]).astype(np.float64)


def pow_mod_vec(x, k, p):
    out = np.ones_like(x)
    for _ in range(k):
        out = out * x % p
    return out


def insolvable_by_root_counts(rows, D):
    """Quintics proved insolvable by a Frobenius element with exactly two
    or three fixed points (cycle type 1+1+3 or 1+1+1+2).  Such a type never
    occurs in AGL(1, F5) or its subgroups.  Only primes not dividing the
    discriminant count, so the root count mod p is a genuine cycle type."""
    s, n = rows.shape
    out = np.zeros(s, dtype=bool)
    for p in EXTRA_PRIMES:
        if out.all():
            break
        live = ~out & (D % p != 0)
        if not live.any():
            continue
        co = np.concatenate([np.ones((s, 1), dtype=np.int64), rows % p], axis=1)[live]
        # values < (n+1) p^2, exact in float64
        vals = np.rint(co.astype(np.float64) @ _power_matrix(p, n)).astype(np.int64) % p
        r = (vals == 0).sum(axis=1)
        hit = (r == 2) | (r == 3)
        out[np.nonzero(live)[0][hit]] = True
    return out


def run_block(ctx, outer):
    """Process the block with leading coefficients `outer`; returns a Tally."""
    n, H, k, m = ctx.n, ctx.H, ctx.k, ctx.m
    tally = Tally(ctx.labels)
    outer = tuple(outer)

    # linear factors
    outer_vals = ctx.roots ** n
    for i, a in enumerate(outer):
        outer_vals = outer_vals + a * ctx.roots ** (n - 1 - i)
    has_root = (ctx.inner_root_vals == -outer_vals[:, None]).any(axis=0)

    # factor-degree masks and Frobenius patterns
    mask = np.full(m, ctx.all_bits, dtype=np.int64)
    seen = np.zeros(m, dtype=np.int64)
    for p, table, inner_idx in zip(ctx.primes, ctx.tables, ctx.inner_index):
        base = 0
        for i, a in enumerate(outer):
            base += (a % p) * p ** (n - 1 - i)
        pid = table[inner_idx + base].astype(np.int64) + 1
        mask &= ctx.mask_lut[pid]
        if p != 2:
            seen |= ctx.seen_lut[pid]
    mask &= ~ctx.linear_bits

    sure_irr = ~has_root & (mask == 0)
    undecided = np.nonzero(~has_root & (mask != 0))[0]
    irreducible = sure_irr
    if undecided.size:
        rows = _rows(ctx, outer, undecided)
        split = find_factors(rows, mask[undecided])
        rest = undecided[~split]
        tally.fallbacks["irreducibility"] += int(rest.size)
        for j in rest:
            if is_irreducible(IntPoly(_coeffs(ctx, outer, j))):
                irreducible[j] = True
    n_irr = int(irreducible.sum())
    tally.irreducible = n_irr
    tally.reducible = m - n_irr
    if ctx.mode == "reducible_only" or n_irr == 0:
        return tally

    # classification of irreducible tuples
    idx = np.nonzero(irreducible)[0]
    s = seen[idx]
    proper_possible = np.zeros(idx.shape[0], dtype=bool)
    for allowed in ctx.proper:
        proper_possible |= (s & ~allowed) == 0
    alt_possible = (s & ~ctx.alt_allowed) == 0
    code = np.where(proper_possible, NEED_PYTHON, np.where(alt_possible, NEED_DISC, DECIDED))

    full_label = FULL[n] if ctx.mode == "full" else "insolvable"
    alt_label = ALT[n] if ctx.mode == "full" else "insolvable"
    counts = tally.per_class
    counts[full_label] += int((code == DECIDED).sum())

    disc_idx = idx[code == NEED_DISC]
    if disc_idx.size:
        if ctx.disc_vectorised:
            cols = [np.full(disc_idx.size, a, dtype=np.int64) for a in outer]
            cols += [arr[disc_idx] for arr in ctx.inner]
            sq = _vector_is_square(_vector_quintic_disc(cols))
            counts[alt_label] += int(sq.sum())
            counts[full_label] += int((~sq).sum())
        else:
            tally.fallbacks["discriminant"] += int(disc_idx.size)
            for j in disc_idx:
                d = disc_resultant(IntPoly(_coeffs(ctx, outer, j)))
                counts[alt_label if is_perfect_square(d) else full_label] += 1

    py_idx = idx[code == NEED_PYTHON]
    if py_idx.size and ctx.n == 5 and ctx.disc_vectorised:
        rows = _rows(ctx, outer, py_idx)
        D = _vector_quintic_disc([rows[:, i] for i in range(5)])
        insolvable = insolvable_by_root_counts(rows, D)
        if insolvable.any():
            sq = _vector_is_square(D[insolvable])
            counts[alt_label] += int(sq.sum())
            counts[full_label] += int((~sq).sum())
        py_idx = py_idx[~insolvable]

    for j in py_idx:
        tally.fallbacks["classification"] += 1
        coeffs = _coeffs(ctx, outer, j)
        label = _python_label(ctx, tally, coeffs, int(seen[j]))
        counts[label] += 1
    return tally


def _rows(ctx, outer, idx):
    rows = np.empty((idx.size, ctx.n), dtype=np.int64)
    rows[:, :ctx.k] = outer
    for j, arr in enumerate(ctx.inner):
        rows[:, ctx.k + j] = arr[idx]
    return rows


def find_factors(rows, masks):
    """Exact proof of reducibility for some rows of coefficients.

    Floating-point roots (eigenvalues of companion matrices) suggest the
    coefficients of each possible factor of an allowed degree; a candidate
    whose coefficients are all near integers is checked by exact division.
    Rows that get a verified factor are flagged True.  Nothing is ever
    concluded from the floating-point values alone.
    """
    s, n = rows.shape
    found = np.zeros(s, dtype=bool)
    if s == 0:
        return found
    comp = np.zeros((s, n, n), dtype=np.float64)
    comp[:, 0, :] = -rows
    for i in range(1, n):
        comp[:, i, i - 1] = 1.0
    roots = np.linalg.eigvals(comp)
    for d in range(2, n // 2 + 1):
        want = (masks >> d) & 1 == 1
        for subset in itertools.combinations(range(n), d):
            todo = want & ~found
            if not todo.any():
                break
            poly = np.ones((s, 1), dtype=np.complex128)
            for i in subset:
                r = roots[:, i][:, None]
                poly = np.concatenate([poly, np.zeros((s, 1))], axis=1) - \
                    np.concatenate([np.zeros((s, 1)), poly * r], axis=1)
            near = (np.abs(poly.imag) < 1e-6).all(axis=1)
            rounded = np.round(poly.real)
            near &= (np.abs(poly.real - rounded) < 1e-6).all(axis=1)
            for j in np.nonzero(near & todo)[0]:
                g = [int(v) for v in rounded[j][::-1]]
                f = [1] + [int(v) for v in rows[j]]
                if dense.exact_div(f[::-1], g) is not None:
                    found[j] = True
    return found


def _coeffs(ctx, outer, j):
    return list(outer) + [int(arr[j]) for arr in ctx.inner]


_INSOLVABLE_PATTERNS = {(1, 1, 1, 2), (1, 1, 3), (2, 3)}


def _python_label(ctx, tally, coeffs, seen_bits):
    f = IntPoly(coeffs)
    disc = disc_resultant(f)
    if ctx.n != 5:
        return classify_irreducible(f, disc)[0].label
    roots = integer_roots(sextic_resolvent_of(f))
    if not roots:
        if ctx.mode == "solvable_only":
            return "insolvable"
        return ALT[5] if is_perfect_square(disc) else FULL[5]
    pats = partitions(5)
    seen = {pats[i] for i in range(len(pats)) if seen_bits >> i & 1}
    if seen & _INSOLVABLE_PATTERNS:
        raise AssertionError("theta root for %s contradicts an insolvable cycle type" % coeffs)
    gclass, _ = _classify_quintic_known(f, disc, theta=Solvability(True, roots[0]))
    distinct = sorted(set(roots))
    tally.witnesses.append([coeffs, distinct])
    top = max(abs(r) for r in distinct)
    if tally.max_root is None or top > tally.max_root:
        tally.max_root = top
    return gclass.label


def max_ratio(tally, H):
    """Largest |theta root| / H^2 as an exact fraction string (None if no
    solvable quintic was found)."""
    if tally.max_root is None or H == 0:
        return None
    return str(Fraction(tally.max_root, H * H))
