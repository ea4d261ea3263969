"""Lookup tables of factor-degree patterns modulo small primes.

For a prime p and degree n the table has one entry per monic polynomial
X^n + c_1 X^(n-1) + ... + c_n over F_p, addressed by the base-p number
c_1 c_2 ... c_n.  The entry is the index of the polynomial's factor-degree
pattern in ``partitions(n)``, or -1 when the polynomial is not squarefree
mod p.

Tables are built bottom-up.  Every squarefree polynomial of a given
pattern is a product of distinct irreducibles of the right degrees, so we
enumerate those products with numpy, pattern by pattern.  Then every
polynomial divisible by the square of an irreducible is marked -1.  What
is left over is irreducible.  Irreducibles of lower degree come from the
lower-degree tables.
"""

import itertools
from functools import lru_cache

import numpy as np

CHUNK = 1 << 20


def partitions(n):
    """Partitions of n as ascending tuples, in a fixed order."""
    out = []

    def rec(rest, smallest, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for k in range(smallest, rest + 1):
            rec(rest - k, k, acc + [k])

    rec(n, 1, [])
    return out


def subset_sum_mask(pattern):
    """Bit d (1 <= d < n) set when some sub-multiset of the pattern sums to d."""
    n = sum(pattern)
    sums = {0}
    for d in pattern:
        sums |= {s + d for s in sums}
    mask = 0
    for s in sums:
        if 0 < s < n:
            mask |= 1 << s
    return mask


def _encode(coeffs, p):
    """Table index of monic polynomials given as coefficient rows
    (c_1 .. c_d, highest first, each in [0, p))."""
    idx = np.zeros(coeffs.shape[0], dtype=np.int64)
    for j in range(coeffs.shape[1]):
        idx = idx * p + coeffs[:, j]
    return idx


def _decode(idx, d, p):
    out = np.empty((idx.shape[0], d), dtype=np.int64)
    rest = idx.copy()
    for j in range(d - 1, -1, -1):
        out[:, j] = rest % p
        rest //= p
    return out


def _poly_mul(f, g, p):
    """Products of monic polynomials row by row.  Rows hold c_1..c_d with
    the leading 1 implicit."""
    m = f.shape[0]
    df, dg = f.shape[1], g.shape[1]
    F = np.concatenate([np.ones((m, 1), dtype=np.int64), f], axis=1)
    G = np.concatenate([np.ones((m, 1), dtype=np.int64), g], axis=1)
    out = np.zeros((m, df + dg + 1), dtype=np.int64)
    for i in range(df + 1):
        out[:, i:i + dg + 1] += F[:, i:i + 1] * G
    return out[:, 1:] % p


def _combination_rows(items, k):
    """All k-subsets (as stacked row blocks) of the rows of `items`."""
    m = items.shape[0]
    if k == 1:
        return [items]
    idx = np.array(list(itertools.combinations(range(m), k)), dtype=np.int64)
    if idx.size == 0:
        return None
    return [items[idx[:, j]] for j in range(k)]


@lru_cache(maxsize=None)
def pattern_table(n, p):
    """The degree-n table for prime p (numpy int8 array of length p^n)."""
    pats = partitions(n)
    table = np.full(p ** n, -2, dtype=np.int8)
    irreducibles = {d: irreducible_rows(d, p) for d in range(1, n)}
    for pid, pat in enumerate(pats):
        if pat == (n,):
            continue
        counts = {}
        for d in pat:
            counts[d] = counts.get(d, 0) + 1
        blocks = []
        for d, k in sorted(counts.items()):
            rows = _combination_rows(irreducibles[d], k)
            if rows is None:
                blocks = None
                break
            blocks.append(rows)
        if blocks is None:
            continue
        _fill_products(table, blocks, p, pid)
    # squares of irreducibles times anything
    for d in range(1, n // 2 + 1):
        sq = _poly_mul(irreducibles[d], irreducibles[d], p) if d < n else None
        rest = n - 2 * d
        if rest == 0:
            table[_encode(sq, p)] = -1
            continue
        others = _decode(np.arange(p ** rest, dtype=np.int64), rest, p)
        for start in range(0, sq.shape[0], max(1, CHUNK // others.shape[0])):
            part = sq[start:start + max(1, CHUNK // others.shape[0])]
            a = np.repeat(part, others.shape[0], axis=0)
            b = np.tile(others, (part.shape[0], 1))
            table[_encode(_poly_mul(a, b, p), p)] = -1
    table[table == -2] = pats.index((n,))
    return table


def _fill_products(table, blocks, p, pid):
    """Multiply out one representative choice from each block of factor
    rows (Cartesian product across blocks) and record the pattern id."""
    # each block is a list of k aligned row arrays (k distinct factors)
    combos = []
    for rows in blocks:
        prod = rows[0]
        for r in rows[1:]:
            prod = _poly_mul(prod, r, p)
        combos.append(prod)
    acc = combos[0]
    for i, nxt in enumerate(combos[1:], start=2):
        last = i == len(combos)
        step = max(1, CHUNK // max(1, nxt.shape[0]))
        pieces = []
        for start in range(0, acc.shape[0], step):
            part = acc[start:start + step]
            a = np.repeat(part, nxt.shape[0], axis=0)
            b = np.tile(nxt, (part.shape[0], 1))
            prod = _poly_mul(a, b, p)
            if last:
                table[_encode(prod, p)] = pid
            else:
                pieces.append(prod)
        if last:
            return
        acc = np.concatenate(pieces)
    table[_encode(acc, p)] = pid


@lru_cache(maxsize=None)
def irreducible_rows(d, p):
    """Monic irreducible polynomials of degree d over F_p as rows c_1..c_d."""
    if d == 1:
        return np.arange(p, dtype=np.int64).reshape(p, 1)
    table = pattern_table(d, p)
    idx = np.nonzero(table == partitions(d).index((d,)))[0]
    return _decode(idx, d, p)


def pattern_index(n):
    return {pat: i for i, pat in enumerate(partitions(n))}
