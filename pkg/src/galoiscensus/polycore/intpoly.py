"""The IntPoly value type: a monic polynomial with exact integer coefficients."""

from . import dense


class IntPoly:
    """Monic polynomial X^n + a_1 X^(n-1) + ... + a_n over Z.

    Only the non-leading coefficients are stored, in the same order as they
    are written: ``IntPoly([a1, ..., an])``.  Instances are immutable and
    hashable so they can be used as dictionary keys and shipped between
    worker processes.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError("IntPoly coefficients must be integers, got %r" % (c,))
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def from_ascending(cls, asc):
        """Build from an ascending dense list whose top coefficient is 1."""
        asc = dense.trim(list(asc))
        if not asc or asc[-1] != 1:
            raise ValueError("polynomial is not monic")
        return cls(reversed(asc[:-1]))

    @classmethod
    def from_roots(cls, roots):
        asc = [1]
        for r in roots:
            asc = dense.mul(asc, [-r, 1])
        return cls.from_ascending(asc)

    @classmethod
    def from_json(cls, items):
        return cls(int(s) for s in items)

    # -- views --------------------------------------------------------
    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs)

    def ascending(self):
        """Dense ascending coefficient list including the leading 1."""
        return list(reversed(self._coeffs)) + [1]

    def to_json(self):
        return [str(c) for c in self._coeffs]

    def __call__(self, x):
        acc = 1
        for c in self._coeffs:
            acc = acc * x + c
        return acc

    def derivative(self):
        return dense.derivative(self.ascending())

    def __mul__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly.from_ascending(dense.mul(self.ascending(), other.ascending()))

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(("IntPoly", self._coeffs))

    def sort_key(self):
        return (self.degree, self._coeffs)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return "IntPoly(%r)" % (list(self._coeffs),)

    def __str__(self):
        n = self.degree
        parts = []
        for k, c in enumerate((1,) + self._coeffs):
            p = n - k
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if p == 0:
                body = str(a)
            else:
                mono = "X" if p == 1 else "X^%d" % p
                body = mono if a == 1 else "%d*%s" % (a, mono)
            parts.append((sign, body))
        if not parts:
            return "0"
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text
