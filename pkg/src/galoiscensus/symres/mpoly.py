"""Sparse multivariate polynomials over Z."""

import re
from collections import defaultdict


def _clean(terms):
    return {e: c for e, c in terms.items() if c}


class MPoly:
    """A polynomial in named variables with arbitrary-precision integer
    coefficients, stored as ``{exponent tuple: coefficient}``.

    Zero coefficients are never stored.  Arithmetic requires both operands
    to share the same variable tuple; integers are accepted as constants.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        k = len(self.variables)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != k:
                raise ValueError("exponent %r does not match %d variables" % (e, k))
            if any(x < 0 for x in e):
                raise ValueError("negative exponent %r" % (e,))
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = _clean(clean)

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, variables, c):
        return cls(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def var(cls, variables, name):
        variables = tuple(variables)
        i = variables.index(name)
        e = [0] * len(variables)
        e[i] = 1
        return cls(variables, {tuple(e): 1})

    @classmethod
    def _raw(cls, variables, terms):
        obj = cls.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        return obj

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.variables != self.variables:
                raise ValueError("variable mismatch: %r vs %r" % (self.variables, other.variables))
            return other
        if isinstance(other, int):
            return MPoly.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MPoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MPoly._raw(self.variables, {})
            return MPoly._raw(self.variables, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return MPoly._raw(self.variables, _clean(out))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = MPoly.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPoly.constant(self.variables, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- inspection ---------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name):
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self):
        """Terms in graded lexicographic order: higher total degree first,
        ties broken by the exponent tuple, larger first."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))

    # -- evaluation and substitution -----------------------------------
    def evaluate(self, values):
        """Evaluate at integer values (sequence or name->value mapping)."""
        if isinstance(values, dict):
            values = [values[v] for v in self.variables]
        values = list(values)
        cache = [dict() for _ in values]
        total = 0
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    p = cache[i].get(k)
                    if p is None:
                        p = values[i] ** k
                        cache[i][k] = p
                    t *= p
            total += t
        return total

    def partial_evaluate(self, assignment):
        """Substitute integers for some variables; the result keeps only the
        remaining variables, in their original order."""
        keep = [i for i, v in enumerate(self.variables) if v not in assignment]
        newvars = tuple(self.variables[i] for i in keep)
        out = defaultdict(int)
        for e, c in self.terms.items():
            t = c
            for i, v in enumerate(self.variables):
                if v in assignment and e[i]:
                    t *= assignment[v] ** e[i]
            if t:
                out[tuple(e[i] for i in keep)] += t
        return MPoly._raw(newvars, _clean(out))

    def substitute(self, mapping, variables):
        """Replace each variable by an MPoly over `variables` (or int)."""
        variables = tuple(variables)
        images = []
        for v in self.variables:
            img = mapping.get(v, None)
            if img is None:
                img = MPoly.var(variables, v)
            elif isinstance(img, int):
                img = MPoly.constant(variables, img)
            images.append(img)
        powers = [dict() for _ in images]
        total = MPoly._raw(variables, {})
        for e, c in self.terms.items():
            t = MPoly.constant(variables, c)
            for i, k in enumerate(e):
                if k:
                    p = powers[i].get(k)
                    if p is None:
                        p = images[i] ** k
                        powers[i][k] = p
                    t = t * p
            total = total + t
        return total

    def rename(self, variables):
        variables = tuple(variables)
        if len(variables) != len(self.variables):
            raise ValueError("rename needs the same number of variables")
        return MPoly._raw(variables, dict(self.terms))

    def permute(self, s):
        """Apply x_i -> x_{s(i)}: the exponent at position i moves to s(i)."""
        out = {}
        for e, c in self.terms.items():
            img = [0] * len(e)
            for i, k in enumerate(e):
                img[s[i]] = k
            out[tuple(img)] = c
        return MPoly._raw(self.variables, out)

    def univariate_in(self, name):
        """Dense ascending list of coefficients (as MPolys in the other
        variables) viewing self as a polynomial in `name`."""
        i = self.variables.index(name)
        rest = tuple(v for v in self.variables if v != name)
        buckets = defaultdict(dict)
        for e, c in self.terms.items():
            buckets[e[i]][e[:i] + e[i + 1:]] = c
        d = max(buckets, default=-1)
        return [MPoly._raw(rest, buckets.get(k, {})) for k in range(d + 1)]

    # -- text -----------------------------------------------------------
    def __repr__(self):
        return "MPoly(%r, %s)" % (self.variables, str(self))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if k == 1 else "%s^%d" % (v, k)
                            for v, k in zip(self.variables, e) if k)
            a = abs(c)
            if mono:
                body = mono if a == 1 else "%d*%s" % (a, mono)
            else:
                body = str(a)
            out.append(("-" if c < 0 else "+", body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += " %s %s" % (sign, body)
        return text


# ------------------------------------------------------------ parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()]))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError("cannot parse polynomial near %r" % text[pos:pos + 20])
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def _collect_names(tokens):
    names = []
    for kind, v in tokens:
        if kind == "name" and v not in names:
            names.append(v)
    return names


def parse_mpoly(text, variables=None):
    """Parse an integer polynomial expression.

    Supports ``+ - * ^ **``, parentheses and implicit multiplication by
    juxtaposition (``3 a^2 b``).  Variables default to the sorted list of
    names that occur.
    """
    tokens = _tokenize(text)
    if variables is None:
        variables = sorted(_collect_names(tokens))
    variables = tuple(variables)
    for name in _collect_names(tokens):
        if name not in variables:
            raise ValueError("unknown variable %r" % name)
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else (None, None)

    def take():
        t = peek()
        pos[0] += 1
        return t

    def expr():
        sign = 1
        kind, v = peek()
        if (kind, v) == ("op", "-"):
            take()
            sign = -1
        elif (kind, v) == ("op", "+"):
            take()
        acc = term() * sign
        while True:
            kind, v = peek()
            if (kind, v) == ("op", "+"):
                take()
                acc = acc + term()
            elif (kind, v) == ("op", "-"):
                take()
                acc = acc - term()
            else:
                return acc

    def term():
        acc = power()
        while True:
            kind, v = peek()
            if (kind, v) == ("op", "*"):
                take()
                acc = acc * power()
            elif kind in ("num", "name") or (kind, v) == ("op", "("):
                acc = acc * power()
            else:
                return acc

    def power():
        base = atom()
        kind, v = peek()
        if (kind, v) == ("op", "^"):
            take()
            k, e = take()
            if k != "num":
                raise ValueError("exponent must be a non-negative integer")
            return base ** e
        return base

    def atom():
        kind, v = take()
        if kind == "num":
            return MPoly.constant(variables, v)
        if kind == "name":
            return MPoly.var(variables, v)
        if (kind, v) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        if (kind, v) == ("op", "-"):
            return -atom()
        raise ValueError("unexpected token %r" % (v,))

    result = expr()
    if pos[0] != len(tokens):
        raise ValueError("trailing input in polynomial: %r" % (tokens[pos[0]][1],))
    return result
