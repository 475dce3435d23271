"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars are plain Python values in canonical form: ``Fraction`` instances
for characteristic 0, integers in ``range(p)`` for F_p.  Equality of
scalars is therefore representation equality.
"""

from fractions import Fraction


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (``p == 0``) or the prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p=0):
        if p != 0:
            if p >= 2 ** 31 or not _is_prime(p):
                raise ValueError(f"characteristic must be 0 or a prime < 2^31, got {p}")
        self.p = p

    @property
    def characteristic(self):
        return self.p

    @property
    def is_rational(self):
        return self.p == 0

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def of(self, x):
        """Coerce an int, Fraction or text like ``"-3"`` / ``"2/5"``."""
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise TypeError(f"cannot coerce {x!r} into {self}")
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        return x % self.p

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p == 0 else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, a):
        return str(a)

    def elements(self):
        """All field elements; only available for prime fields."""
        if self.p == 0:
            raise ValueError("cannot enumerate the rationals")
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"


QQ = Field(0)
