"""Factorisation of monic integer polynomials over Q (Zassenhaus).

Pipeline: squarefree decomposition (Yun), choice of a good odd prime from a
fixed ascending schedule, Cantor--Zassenhaus factorisation modulo that
prime, linear Hensel lifting to a power p^k above twice the Mignotte bound,
and exhaustive subset recombination.  For the degrees this package cares
about (at most fifteen or so) recombination is cheap.
"""

import itertools
from math import comb, isqrt

from . import dense
from .intpoly import IntPoly
from .modp import odd_primes, is_squarefree_mod, factor_squarefree_mod, degree_pattern

# how many usable primes to try before settling on the one with the fewest
# modular factors
PRIMES_TO_COMPARE = 5


def squarefree_decomposition(asc):
    """Yun's algorithm over Q for a monic integer polynomial.

    Returns [(g_1, 1), (g_2, 2), ...] with f = prod g_i^i, each g_i monic
    squarefree over Z (trivial factors omitted).
    """
    f = list(asc)
    out = []
    fp = dense.derivative(f)
    a = dense.gcd_q(f, fp)
    b = dense.exact_div(f, a)
    c = dense.exact_div(fp, a)
    d = dense.sub(c, dense.derivative(b))
    i = 1
    while len(b) > 1:
        g = dense.gcd_q(b, d)
        if len(g) > 1:
            out.append((g, i))
        b = dense.exact_div(b, g)
        c = dense.exact_div(d, g)
        d = dense.sub(c, dense.derivative(b))
        i += 1
    return out


def mignotte_bound(asc):
    """A bound on the coefficients of any monic factor of asc."""
    n = len(asc) - 1
    norm = isqrt(sum(c * c for c in asc)) + 1
    return max(comb(n, k) for k in range(n + 1)) * norm


def _hensel_pair(f, a, b, p, k):
    """Lift f = a*b (mod p) to mod p^k, a and b monic.  f monic over Z."""
    _, s, t = dense.xgcd_mod(a, b, p)
    m = p
    for _ in range(1, k):
        e = dense.sub(f, dense.mul(a, b))
        e = [c // m for c in e]
        e = dense.trim_mod(e, p)
        # solve alpha*b + beta*a = e (mod p), deg alpha < deg a
        te = dense.mul_mod(t, e, p)
        alpha = dense.rem_mod(te, a, p)
        beta = dense.divmod_mod(dense.sub_mod(e, dense.mul_mod(alpha, b, p), p), a, p)[0]
        a = dense.add(a, [m * c for c in alpha])
        b = dense.add(b, [m * c for c in beta])
        m *= p
    mod = p ** k
    return [c % mod for c in a], [c % mod for c in b]


def hensel_lift(f, factors, p, k):
    """Lift a complete modular factorisation of monic f to mod p^k."""
    mod = p ** k
    lifted = []
    rest = list(f)
    todo = list(factors)
    while len(todo) > 1:
        u = todo.pop(0)
        v = [1]
        for w in todo:
            v = dense.mul_mod(v, w, p)
        u_l, v_l = _hensel_pair(rest, u, v, p, k)
        lifted.append(u_l)
        rest = dense.symmetric_mod(v_l, mod)
    lifted.append([c % mod for c in rest])
    return lifted


def _choose_prime(asc):
    """Pick the prime with the fewest modular factors among the first few
    good primes.  Returns (p, factors) or (None, None) when some prime
    already proves irreducibility."""
    best = None
    tried = 0
    lead_ok = asc[-1]
    for p in odd_primes():
        if lead_ok % p == 0:
            continue
        if not is_squarefree_mod(asc, p):
            continue
        pattern = degree_pattern(asc, p)
        if len(pattern) == 1:
            return None, None
        if best is None or len(pattern) < len(best[1]):
            best = (p, pattern)
        tried += 1
        if tried >= PRIMES_TO_COMPARE:
            break
    p = best[0]
    return p, factor_squarefree_mod(asc, p)


def _zassenhaus(asc):
    """Irreducible factors of a monic squarefree integer polynomial."""
    n = len(asc) - 1
    if n <= 1:
        return [asc]
    p, modfacs = _choose_prime(asc)
    if p is None:
        return [asc]
    bound = 2 * mignotte_bound(asc) + 1
    k = 1
    while p ** k < bound:
        k += 1
    mod = p ** k
    lifted = hensel_lift(asc, modfacs, p, k)
    found = []
    f = list(asc)
    remaining = lifted
    size = 1
    while 2 * size <= len(remaining):
        hit = None
        for combo in itertools.combinations(range(len(remaining)), size):
            g = [1]
            for i in combo:
                g = dense.mul_mod(g, remaining[i], mod)
            g = dense.symmetric_mod(g, mod)
            if g[0] == 0 and f[0] != 0:
                continue
            if g[0] and f[0] % g[0]:
                continue
            q = dense.exact_div(f, g)
            if q is not None:
                hit = (combo, g, q)
                break
        if hit is None:
            size += 1
            continue
        combo, g, q = hit
        found.append(g)
        f = q
        remaining = [u for i, u in enumerate(remaining) if i not in combo]
    found.append(f)
    return found


def factor_dense(asc):
    """Irreducible monic factors (with multiplicity) of a monic dense
    integer polynomial, sorted by (degree, coefficients)."""
    if not asc or asc[-1] != 1:
        raise ValueError("factor_dense expects a monic polynomial")
    out = []
    # pull out powers of X first; they are common and cheap
    zeros = 0
    while zeros < len(asc) - 1 and asc[zeros] == 0:
        zeros += 1
    out.extend([[0, 1]] * zeros)
    rest = asc[zeros:]
    if len(rest) > 1:
        for g, mult in squarefree_decomposition(rest):
            for h in _zassenhaus(g):
                out.extend([h] * mult)
    return out


def factor_over_Q(f):
    """Multiset of monic irreducible factors of f over Q.

    The returned list is ordered by degree, then by the coefficient tuple
    (a_1, ..., a_k), so repeated runs produce identical output.
    """
    if not isinstance(f, IntPoly):
        f = IntPoly(f)
    if f.degree < 1:
        raise ValueError("factor_over_Q requires degree >= 1")
    facs = [IntPoly.from_ascending(g) for g in factor_dense(f.ascending())]
    facs.sort(key=IntPoly.sort_key)
    return facs


def is_irreducible(f):
    """Irreducibility over Q, with a cheap modular pre-screen.

    A single good prime where f stays irreducible settles the question; a
    set of degree patterns whose possible subset sums never agree rules out
    every proper factor degree.  Otherwise we fall back on factor_over_Q.
    """
    if not isinstance(f, IntPoly):
        f = IntPoly(f)
    n = f.degree
    if n < 1:
        raise ValueError("is_irreducible requires degree >= 1")
    if n == 1:
        return True
    asc = f.ascending()
    possible = set(range(1, n))
    checked = 0
    for p in odd_primes():
        if checked >= 6 or not possible:
            break
        if not is_squarefree_mod(asc, p):
            if p > 60:
                break
            continue
        checked += 1
        sums = {0}
        for d in degree_pattern(asc, p):
            sums |= {s + d for s in sums}
        possible &= sums
    if not possible:
        return True
    return len(factor_over_Q(f)) == 1
