"""Factorisation of squarefree polynomials over prime fields.

Distinct-degree factorisation gives the factor-degree pattern directly
(that is all Dedekind's theorem needs); equal-degree splitting uses the
Cantor--Zassenhaus random-splitting method with a seeded generator so every
run is reproducible.
"""

import random

from . import dense


def odd_primes():
    """Endless ascending stream of odd primes."""
    yield 3
    found = [3]
    k = 5
    while True:
        lim = int(k ** 0.5)
        for q in found:
            if q > lim:
                yield k
                found.append(k)
                break
            if k % q == 0:
                break
        k += 2


def small_primes(count, start=3):
    """The first `count` primes that are >= start (start may be 2)."""
    out = []
    if start <= 2 and count:
        out.append(2)
    for q in odd_primes():
        if len(out) >= count:
            break
        if q >= start:
            out.append(q)
    return out


def is_squarefree_mod(asc, p):
    f = dense.trim_mod(asc, p)
    if len(f) < 2:
        return bool(f)
    d = dense.trim_mod(dense.derivative(f), p)
    if not d:
        return False
    return len(dense.gcd_mod(f, d, p)) == 1


def distinct_degree(asc, p):
    """Distinct-degree factorisation of a squarefree monic polynomial mod p.

    Returns a list of (d, g_d) where g_d is the product of all irreducible
    factors of degree d.
    """
    f = dense.monic_mod(dense.trim_mod(asc, p), p)
    out = []
    x = [0, 1]
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = dense.powmod_mod(h, p, f, p)
        g = dense.gcd_mod(f, dense.sub_mod(h, x, p), p)
        if len(g) > 1:
            out.append((d, g))
            f = dense.divmod_mod(f, g, p)[0]
            h = dense.rem_mod(h, f, p)
    if len(f) > 1:
        out.append((len(f) - 1, f))
    return out


def degree_pattern(asc, p):
    """Sorted factor degrees of a polynomial that is squarefree mod p."""
    degs = []
    for d, g in distinct_degree(asc, p):
        degs.extend([d] * ((len(g) - 1) // d))
    return tuple(sorted(degs))


def equal_degree(g, d, p, rng):
    """Split a monic squarefree g whose irreducible factors all have degree d."""
    n = len(g) - 1
    if n == d:
        return [g]
    exp = (p ** d - 1) // 2
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        dense.trim(a)
        if len(a) < 2:
            continue
        b = dense.powmod_mod(a, exp, g, p)
        b = dense.sub_mod(b, [1], p)
        h = dense.gcd_mod(g, b, p)
        if 1 < len(h) < len(g):
            other = dense.divmod_mod(g, h, p)[0]
            return (equal_degree(h, d, p, rng)
                    + equal_degree(dense.monic_mod(other, p), d, p, rng))


def factor_squarefree_mod(asc, p, seed=0):
    """Full list of monic irreducible factors mod an odd prime p, sorted."""
    if p == 2:
        raise ValueError("equal-degree splitting is implemented for odd p only")
    rng = random.Random(seed * 1000003 + p)
    factors = []
    for d, g in distinct_degree(asc, p):
        factors.extend(equal_degree(g, d, p, rng))
    factors.sort(key=lambda q: (len(q), q[::-1]))
    return factors
