"""Integer roots via Sturm-sequence isolation.

We isolate the real roots of the squarefree part with a Sturm chain, bisect
down to half-open intervals (lo, lo + 1] and then only need to evaluate the
polynomial at the right endpoint.  Constant-term divisor enumeration is
never used: resolvent constant terms are far too large to factor.
"""

import math

from . import dense
from .intpoly import IntPoly


def sturm_chain(asc):
    """Sturm chain of a squarefree integer polynomial, kept over Z with
    sign-preserving remainders (positive scalings only)."""
    chain = [dense.primitive(asc), dense.primitive(dense.derivative(asc))]
    while len(chain[-1]) > 1:
        r = dense.sign_preserving_rem(chain[-2], chain[-1])
        if not r:
            break
        g = dense.content(r)
        chain.append([-c // g for c in r])
    return chain


def _sign_changes(chain, x):
    changes = 0
    last = 0
    for p in chain:
        v = dense.evaluate(p, x)
        if v:
            s = 1 if v > 0 else -1
            if last and s != last:
                changes += 1
            last = s
    return changes


def _root_bound(asc):
    """Integer B with every real root in [-B, B] (Fujiwara-style, rounded up)."""
    n = len(asc) - 1
    lc = abs(asc[-1])
    best = 1
    for k in range(1, n + 1):
        c = abs(asc[n - k])
        if c == 0:
            continue
        # smallest integer t with t^k >= c / lc
        t = _ceil_root(-(-c // lc), k)
        best = max(best, t)
    return 2 * best + 1


def _floor_root(c, k):
    """Largest integer t >= 0 with t^k <= c (exact Newton iteration)."""
    if c < 2:
        return c
    if k == 1:
        return c
    if k == 2:
        return math.isqrt(c)
    t = 1 << (c.bit_length() // k + 1)    # t^k > c
    while True:
        u = ((k - 1) * t + c // t ** (k - 1)) // k
        if u >= t:
            return t
        t = u


def _ceil_root(c, k):
    if c <= 1:
        return 1
    t = _floor_root(c, k)
    return t if t ** k >= c else t + 1


def squarefree_part(asc):
    g = dense.gcd_q(asc, dense.derivative(asc))
    if len(g) <= 1:
        return dense.primitive(asc)
    return dense.primitive(dense.exact_div(dense.primitive(asc), g))


def distinct_integer_roots_dense(asc):
    """Sorted distinct integer roots of a nonzero integer polynomial."""
    asc = dense.trim(list(asc))
    if len(asc) <= 1:
        return []
    out = []
    if asc[0] == 0:
        out.append(0)
        k = 0
        while asc[k] == 0:
            k += 1
        asc = asc[k:]
        if len(asc) <= 1:
            return out
    sq = squarefree_part(asc)
    if len(sq) == 2:
        # linear: a0 + a1 X
        if sq[0] % sq[1] == 0:
            out.append(-sq[0] // sq[1])
        return sorted(out)
    chain = sturm_chain(sq)
    B = _root_bound(sq)
    stack = [(-B - 1, B, _sign_changes(chain, -B - 1), _sign_changes(chain, B))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        count = vlo - vhi
        if count <= 0:
            continue
        if hi - lo == 1:
            if dense.evaluate(sq, hi) == 0:
                out.append(hi)
            continue
        mid = (lo + hi) // 2
        vmid = _sign_changes(chain, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    return sorted(out)


def integer_roots_dense(asc):
    """Integer roots with multiplicity of a monic dense integer polynomial."""
    out = []
    for r in distinct_integer_roots_dense(asc):
        p = list(asc)
        while len(p) > 1:
            q = dense.exact_div(p, [-r, 1])
            if q is None:
                break
            out.append(r)
            p = q
    return sorted(out)


def integer_roots(f):
    """Sorted integer roots of the monic IntPoly f, repeated by multiplicity."""
    if not isinstance(f, IntPoly):
        f = IntPoly(f)
    if f.degree < 1:
        raise ValueError("integer_roots requires degree >= 1")
    return integer_roots_dense(f.ascending())
