"""Permutations of {0, ..., n-1} as image tuples.

A permutation ``s`` sends i to ``s[i]``.  Composition follows the usual
right-to-left convention, ``compose(s, t)[i] == s[t[i]]``, which makes the
substitution action on polynomials (x_i -> x_{s(i)}) a left action.
Cycle notation in strings is 1-based, e.g. ``"(126)(354)"``.
"""

import itertools
import re


def identity(n):
    return tuple(range(n))


def compose(s, t):
    return tuple(s[i] for i in t)


def inverse(s):
    out = [0] * len(s)
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def parse_cycles(text, n):
    """Parse 1-based cycle notation such as ``"(126)(354)"`` or ``"(1)"``.

    Multi-digit points can be written with separators: ``"(1,10,3)"``.
    """
    img = list(range(n))
    text = text.strip()
    if not re.fullmatch(r"(\([0-9 ,]*\))+", text):
        raise ValueError("malformed cycle notation: %r" % text)
    for body in re.findall(r"\(([^)]*)\)", text):
        if "," in body or " " in body.strip():
            pts = [int(v) for v in re.split(r"[ ,]+", body.strip()) if v]
        else:
            pts = [int(ch) for ch in body]
        if not pts:
            continue
        if any(p < 1 or p > n for p in pts) or len(set(pts)) != len(pts):
            raise ValueError("bad cycle %r for degree %d" % (body, n))
        cyc = [p - 1 for p in pts]
        # cycles are multiplied right to left, like permutations
        c = list(range(n))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            c[a] = b
        img = [img[c[v]] for v in range(n)]
    return tuple(img)


def format_cycles(s):
    seen = set()
    parts = []
    for start in range(len(s)):
        if start in seen or s[start] == start:
            seen.add(start)
            continue
        cyc = []
        i = start
        while i not in seen:
            seen.add(i)
            cyc.append(i + 1)
            i = s[i]
        parts.append("(" + "".join(str(v) for v in cyc) + ")" if len(s) < 10
                     else "(" + ",".join(str(v) for v in cyc) + ")")
    return "".join(parts) or "(1)"


def cycle_type(s):
    seen = [False] * len(s)
    out = []
    for i in range(len(s)):
        if not seen[i]:
            k = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = s[j]
                k += 1
            out.append(k)
    return tuple(sorted(out))


def is_even(s):
    return sum(k - 1 for k in cycle_type(s)) % 2 == 0


def closure(generators, n):
    """All elements of the group generated by `generators`, sorted."""
    group = {identity(n)}
    frontier = [identity(n)]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                k = compose(h, g)
                if k not in group:
                    group.add(k)
                    nxt.append(k)
        frontier = nxt
    return sorted(group)


def symmetric_group(n):
    return list(itertools.permutations(range(n)))


def alternating_group(n):
    return [s for s in itertools.permutations(range(n)) if is_even(s)]


def left_coset_reps(group, n):
    """Lexicographically first representative of each left coset sG."""
    group = list(group)
    seen = set()
    reps = []
    for s in itertools.permutations(range(n)):
        if s in seen:
            continue
        reps.append(s)
        for g in group:
            seen.add(compose(s, g))
    return reps


def cycle_types_of(group):
    return sorted(set(cycle_type(g) for g in group))
