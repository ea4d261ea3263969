"""Dense univariate polynomial helpers over Z and Z/pZ.

Polynomials here are plain Python lists of integers in *ascending* order
(index = power of X).  The zero polynomial is the empty list.  These helpers
are the workhorses behind IntPoly; they never round and never allocate
anything fancier than lists.
"""

from math import gcd


def trim(p):
    """Drop trailing zero coefficients in place and return p."""
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p):
    return len(p) - 1


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    r = list(p)
    for i, c in enumerate(q):
        r[i] += c
    return trim(r)


def sub(p, q):
    r = list(p) + [0] * (len(q) - len(p))
    for i, c in enumerate(q):
        r[i] -= c
    return trim(r)


def mul(p, q):
    if not p or not q:
        return []
    r = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                r[i + j] += a * b
    return trim(r)


def scale(p, c):
    if c == 0:
        return []
    return [c * a for a in p]


def derivative(p):
    return trim([i * p[i] for i in range(1, len(p))])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def content(p):
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def primitive(p):
    """Primitive part with positive leading coefficient."""
    if not p:
        return []
    g = content(p)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def divmod_monic(p, m):
    """Divide p by a monic m over Z; returns (q, r)."""
    if m[-1] != 1:
        raise ValueError("divisor must be monic")
    r = list(p)
    dm = len(m) - 1
    if len(r) <= dm:
        return [], trim(r)
    q = [0] * (len(r) - dm)
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i]
        if c:
            q[i - dm] = c
            for j in range(dm + 1):
                r[i - dm + j] -= c * m[j]
    return trim(q), trim(r[:dm])


def exact_div(p, m):
    """Exact division over Z (m need not be monic).  Returns None if m
    does not divide p with an integer quotient."""
    if not m:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(p)
    dm = len(m) - 1
    lc = m[-1]
    if len(r) <= dm:
        return [] if not trim(r) else None
    q = [0] * (len(r) - dm)
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i]
        if c:
            if c % lc:
                return None
            c //= lc
            q[i - dm] = c
            for j in range(dm + 1):
                r[i - dm + j] -= c * m[j]
    if any(r[:dm]):
        return None
    return trim(q)


def pseudo_rem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    delta = len(a) - len(b)
    if delta < 0:
        return trim(r)
    e = delta + 1
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lc * x for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        r.pop()
        trim(r)
        e -= 1
    if e:
        f = lc ** e
        r = [f * x for x in r]
    return r


def sign_preserving_rem(a, b):
    """Remainder of a by b scaled by |lc(b)|^k, so signs match the true
    rational remainder.  Used for Sturm chains over Z."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    alc = abs(lc)
    sgn = 1 if lc > 0 else -1
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        # alc*r - sgn*c*x^shift*b kills the leading term and scales by alc > 0
        r = [alc * x for x in r]
        k = sgn * c
        for j in range(db + 1):
            r[shift + j] -= k * b[j]
        r.pop()
        trim(r)
    return r


def gcd_q(a, b):
    """Monic-normalised gcd over Q, returned as a primitive integer
    polynomial with positive leading coefficient."""
    a = primitive(trim(list(a)))
    b = primitive(trim(list(b)))
    while b:
        r = pseudo_rem(a, b)
        a, b = b, primitive(r)
    return primitive(a)


# ---------------------------------------------------------------- mod p

def trim_mod(p, m):
    r = [c % m for c in p]
    return trim(r)


def mul_mod(p, q, m):
    if not p or not q:
        return []
    r = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                r[i + j] += a * b
    return trim([c % m for c in r])


def sub_mod(p, q, m):
    n = max(len(p), len(q))
    r = [((p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0)) % m
         for i in range(n)]
    return trim(r)


def add_mod(p, q, m):
    n = max(len(p), len(q))
    r = [((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)) % m
         for i in range(n)]
    return trim(r)


def divmod_mod(a, b, p):
    """Division with remainder in (Z/pZ)[X], p prime."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [c % p for c in a]
    trim(r)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(r) <= db:
        return [], r
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return trim(q), trim(r[:db])


def rem_mod(a, b, p):
    return divmod_mod(a, b, p)[1]


def monic_mod(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd_mod(a, b, p):
    a = trim([c % p for c in a])
    b = trim([c % p for c in b])
    while b:
        a, b = b, rem_mod(a, b, p)
    return monic_mod(a, p)


def xgcd_mod(a, b, p):
    """Return (g, s, t) with s*a + t*b = g monic in (Z/pZ)[X]."""
    r0, r1 = trim([c % p for c in a]), trim([c % p for c in b])
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_mod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub_mod(s0, mul_mod(q, s1, p), p)
        t0, t1 = t1, sub_mod(t0, mul_mod(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return ([c * inv % p for c in r0], [c * inv % p for c in s0],
            [c * inv % p for c in t0])


def powmod_mod(base, e, modulus, p):
    """base^e mod (modulus, p) by square and multiply."""
    result = [1]
    b = rem_mod(base, modulus, p)
    while e:
        if e & 1:
            result = rem_mod(mul_mod(result, b, p), modulus, p)
        e >>= 1
        if e:
            b = rem_mod(mul_mod(b, b, p), modulus, p)
    return result


def symmetric_mod(p, m):
    """Coefficients reduced into the symmetric range (-m/2, m/2]."""
    half = m // 2
    out = []
    for c in p:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    return trim(out)
