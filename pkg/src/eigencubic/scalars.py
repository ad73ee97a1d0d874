"""Exact scalar arithmetic: rationals and the quadratic extension Q(sqrt(3)).

Most of the workbench runs on plain ``fractions.Fraction``.  A handful of
constructions (the larger Hermitian-matrix cubics) need a square root of 3
in their coordinates; ``QSqrt3`` carries a + b*sqrt(3) with exact rational
components so those paths stay exact as well.  Mixed arithmetic with int
and Fraction works through the reflected operators.
"""

from __future__ import annotations

from fractions import Fraction

SQRT3_FLOAT = 3.0 ** 0.5

_RAT = (int, Fraction)


class QSqrt3:
    """a + b*sqrt(3) with exact rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, *_):
        raise AttributeError("QSqrt3 is immutable")

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if isinstance(other, QSqrt3):
            return QSqrt3(self.a + other.a, self.b + other.b)
        if isinstance(other, _RAT):
            return QSqrt3(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QSqrt3(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, QSqrt3):
            return QSqrt3(self.a - other.a, self.b - other.b)
        if isinstance(other, _RAT):
            return QSqrt3(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _RAT):
            return QSqrt3(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QSqrt3):
            return QSqrt3(self.a * other.a + 3 * self.b * other.b,
                          self.a * other.b + self.b * other.a)
        if isinstance(other, _RAT):
            return QSqrt3(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        d = self.a * self.a - 3 * self.b * self.b
        if d == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt3)")
        return QSqrt3(self.a / d, -self.b / d)

    def __truediv__(self, other):
        if isinstance(other, QSqrt3):
            return self * other.inverse()
        if isinstance(other, _RAT):
            if other == 0:
                raise ZeroDivisionError
            return QSqrt3(self.a / other, self.b / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _RAT):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = QSqrt3(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparisons / hashing ----------------------------------------
    def __eq__(self, other):
        if isinstance(other, QSqrt3):
            return self.a == other.a and self.b == other.b
        if isinstance(other, _RAT):
            return self.b == 0 and self.a == other
        if isinstance(other, float):
            return float(self) == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def sign(self):
        """Exact sign of a + b*sqrt(3)."""
        if self.b == 0:
            return -1 if self.a < 0 else (1 if self.a > 0 else 0)
        if self.a == 0:
            return -1 if self.b < 0 else 1
        # sign(a + b*sqrt3): compare a^2 with 3 b^2 keeping track of signs
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        lhs = self.a * self.a
        rhs = 3 * self.b * self.b
        if self.a > 0:  # b < 0
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return -1 if lhs > rhs else (1 if lhs < rhs else 0)

    def __lt__(self, other):
        return (self - _coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - _coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - _coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - _coerce(other)).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return float(self.a) + float(self.b) * SQRT3_FLOAT

    def __repr__(self):
        if self.b == 0:
            return f"QSqrt3({self.a})"
        return f"QSqrt3({self.a}, {self.b})"


def _coerce(x):
    if isinstance(x, QSqrt3):
        return x
    return QSqrt3(x)


SQRT3 = QSqrt3(0, 1)


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, QSqrt3))


def to_float(x) -> float:
    return float(x)


def format_rational(x) -> str:
    """Canonical string for a rational scalar: '-8', '3/4', ..."""
    return str(Fraction(x))


def parse_rational(s: str) -> Fraction:
    return Fraction(s)
