"""The fundamental theorem of symmetric polynomials, made effective.

A symmetric polynomial is first rewritten in the monomial-symmetric basis
m_mu (one coefficient per partition mu).  We then peel off leading terms:
the leading partition nu, with exactly l nonzero parts, is the leading
term of e_l * m_(nu - 1^l), so we move the coefficient of m_nu onto that
product and subtract the product's remaining m-terms.  Every correction
lands on a partition that is strictly smaller in dominance order (so also
lexicographically), and eliminating weights from the top down and parts
counts from one upward visits each partition after everything that can
feed into it.  This is plain leading-term elimination; the order of visits
is what keeps it fast enough for the weight-60 resolvent coefficients.

The coefficients carried along (W in the code) are either polynomials in
s_1..s_n (symbolic mode) or plain integers when the caller supplies values
for the s_k (numeric mode).
"""

import itertools
import random
from collections import defaultdict
from functools import lru_cache

from .mpoly import MPoly


class NotSymmetricError(ValueError):
    pass


def elementary_symmetric(k, n, names=None):
    """e_k(x_1, ..., x_n) as an MPoly."""
    if not (0 <= k <= n):
        raise ValueError("elementary_symmetric needs 0 <= k <= n (got k=%d, n=%d)" % (k, n))
    names = tuple(names or ["x%d" % i for i in range(1, n + 1)])
    terms = {}
    for S in itertools.combinations(range(n), k):
        e = [0] * n
        for i in S:
            e[i] = 1
        terms[tuple(e)] = 1
    return MPoly(names, terms)


@lru_cache(maxsize=None)
def _spill(base, ell, n):
    """m-expansion of e_ell * m_base minus nothing: list of (mu, count)
    where count is the coefficient of m_mu.  `base` is a sorted partition
    padded to length n."""
    out = {}
    subsets = list(itertools.combinations(range(n), ell))
    for S in subsets:
        v = list(base)
        for i in S:
            v[i] += 1
        mu = tuple(sorted(v, reverse=True))
        if mu in out:
            continue
        cnt = 0
        for T in subsets:
            u = list(mu)
            ok = True
            for i in T:
                u[i] -= 1
                if u[i] < 0:
                    ok = False
                    break
            if ok and tuple(sorted(u, reverse=True)) == base:
                cnt += 1
        out[mu] = cnt
    return tuple(out.items())


def _sym_add(target, poly, factor):
    for e, c in poly.items():
        v = target.get(e, 0) + factor * c
        if v:
            target[e] = v
        else:
            target.pop(e, None)


def _sym_shift(target, poly, ell):
    """target += s_ell * poly (poly keyed by s-exponent tuples)."""
    for e, c in poly.items():
        e2 = e[:ell - 1] + (e[ell - 1] + 1,) + e[ell:]
        v = target.get(e2, 0) + c
        if v:
            target[e2] = v
        else:
            target.pop(e2, None)


def reduce_monomial_basis(mcoef, n, values=None):
    """Express sum_mu mcoef[mu] * m_mu in terms of e_1..e_n.

    mcoef maps partitions (tuples of length n, non-increasing) to integers.
    In symbolic mode (values is None) the answer is a dict from
    s-exponent tuples to integers.  With values = (v_1, ..., v_n) the
    polynomial is evaluated at s_k = v_k on the fly and an integer is
    returned.
    """
    numeric = values is not None
    if numeric:
        values = tuple(values)
    zero = (0,) * n
    layers = defaultdict(dict)
    result = 0 if numeric else {}
    for mu, c in mcoef.items():
        if not c:
            continue
        mu = tuple(mu)
        if len(mu) != n or any(mu[i] < mu[i + 1] for i in range(n - 1)):
            raise ValueError("not a padded partition: %r" % (mu,))
        w = sum(mu)
        if w == 0:
            if numeric:
                result += c
            else:
                _sym_add(result, {zero: c}, 1)
            continue
        if numeric:
            layers[w][mu] = layers[w].get(mu, 0) + c
        else:
            layers[w].setdefault(mu, {})
            _sym_add(layers[w][mu], {zero: c}, 1)
    top = max(layers, default=0)
    for w in range(top, 0, -1):
        layer = layers.pop(w, None)
        if not layer:
            continue
        for ell in range(1, n + 1):
            items = [nu for nu in layer if nu[ell - 1] and (ell == n or not nu[ell])]
            items.sort(reverse=True)
            for nu in items:
                coef = layer.pop(nu)
                if not coef:
                    continue
                base = tuple(v - 1 if i < ell else 0 for i, v in enumerate(nu))
                lower = w - ell
                if numeric:
                    moved = coef * values[ell - 1]
                    if lower == 0:
                        result += moved
                    else:
                        tgt = layers[lower]
                        tgt[base] = tgt.get(base, 0) + moved
                else:
                    tgt = result if lower == 0 else layers[lower].setdefault(base, {})
                    _sym_shift(tgt, coef, ell)
                if ell == n:
                    continue
                for mu, cnt in _spill(base, ell, n):
                    if mu == nu:
                        continue
                    if numeric:
                        layer[mu] = layer.get(mu, 0) - cnt * coef
                    else:
                        _sym_add(layer.setdefault(mu, {}), coef, -cnt)
        if any(layer.values()):
            raise AssertionError("symmetric elimination left terms behind")
    return result


def monomial_coefficients(P):
    """m-basis coordinates of a symmetric MPoly: coefficient of x^mu for
    every partition-shaped exponent mu."""
    n = len(P.variables)
    out = {}
    for e, c in P.terms.items():
        if all(e[i] >= e[i + 1] for i in range(n - 1)):
            out[e] = c
    return out


def check_symmetric(P):
    """Raise NotSymmetricError naming an adjacent transposition that moves P."""
    n = len(P.variables)
    for i in range(n - 1):
        s = list(range(n))
        s[i], s[i + 1] = s[i + 1], s[i]
        if P.permute(s) != P:
            raise NotSymmetricError(
                "polynomial is not symmetric: the transposition (%s %s) changes it"
                % (P.variables[i], P.variables[i + 1]))


def expand_in_x(Q, n, names):
    """Substitute s_k = e_k(x) into an MPoly Q over s_1..s_n."""
    es = {Q.variables[k - 1]: elementary_symmetric(k, n, names) for k in range(1, n + 1)}
    return Q.substitute(es, names)


FULL_CHECK_LIMIT = 4000


def symmetric_reduce(P, names=None, check=True, rng_seed=0):
    """Write the symmetric MPoly P as a polynomial Q in s_1..s_n with
    Q(e_1, ..., e_n) = P.

    Symmetry is verified first.  After reduction the identity is checked:
    by full re-expansion when Q is small, and otherwise by exact evaluation
    at several pseudo-random integer points.
    """
    n = len(P.variables)
    names = tuple(names or ["s%d" % k for k in range(1, n + 1)])
    check_symmetric(P)
    raw = reduce_monomial_basis(monomial_coefficients(P), n)
    Q = MPoly(names, raw)
    if check:
        verify_reduction(P, Q, rng_seed=rng_seed)
    return Q


def verify_reduction(P, Q, rng_seed=0, points=4):
    n = len(P.variables)
    if len(Q) <= FULL_CHECK_LIMIT and len(P) <= 4 * FULL_CHECK_LIMIT:
        back = expand_in_x(Q, n, P.variables)
        if back != P:
            raise AssertionError("symmetric reduction failed the substitution check")
        return "expansion"
    rng = random.Random(rng_seed)
    for _ in range(points):
        x = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(n)]
        svals = [elementary_symmetric(k, n).evaluate(x) for k in range(1, n + 1)]
        if Q.evaluate(svals) != P.evaluate(x):
            raise AssertionError("symmetric reduction failed the evaluation check")
    return "evaluation"
