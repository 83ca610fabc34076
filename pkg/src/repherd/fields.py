"""Exact scalar arithmetic over the rationals and prime fields.

Rational scalars are `fractions.Fraction`; prime-field scalars are plain
ints normalized to the range 0..p-1.  No floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Rationals:
    """The field of rational numbers."""

    kind = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def from_int(self, n: int):
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise ParseError("cannot coerce %r into Q" % (x,))

    def parse(self, text):
        if isinstance(text, int):
            return Fraction(text)
        if isinstance(text, float):
            raise ParseError("floating point coefficients are not allowed")
        try:
            return Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError("bad rational coefficient %r" % (text,)) from exc

    def fmt(self, a) -> str:
        return str(a)

    def to_spec(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The prime field GF(p) for a prime p >= 2."""

    kind = "GFp"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ParseError("GF(p) needs a prime p, got %r" % (p,))
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n: int):
        return n % self.p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            den = self.from_int(x.denominator)
            return self.mul(self.from_int(x.numerator), self.inv(den))
        raise ParseError("cannot coerce %r into GF(%d)" % (x, self.p))

    def parse(self, text):
        if isinstance(text, int):
            return text % self.p
        if isinstance(text, float):
            raise ParseError("floating point coefficients are not allowed")
        s = str(text).strip()
        if "/" in s:
            num, _, den = s.partition("/")
            try:
                return self.mul(int(num) % self.p, self.inv(int(den) % self.p))
            except ValueError as exc:
                raise ParseError("bad coefficient %r" % (text,)) from exc
        try:
            return int(s) % self.p
        except ValueError as exc:
            raise ParseError("bad coefficient %r" % (text,)) from exc

    def fmt(self, a) -> str:
        return str(a % self.p)

    def to_spec(self):
        return {"GFp": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GFp", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = Rationals()


def field_from_spec(spec):
    """Build a field from its file form: "Q" or {"GFp": p}."""
    if spec == "Q":
        return QQ
    if isinstance(spec, dict) and set(spec) == {"GFp"}:
        return PrimeField(int(spec["GFp"]))
    raise ParseError("unknown field spec %r" % (spec,))
