"""Exact arithmetic in Q(sqrt(disc)).

Binet-style closed forms are evaluated here so that integer results come out
bit-exact; floats appear only through ``float()`` for presentation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction]


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(f, r)`` with ``n == f*f*r`` and ``r`` squarefree (``n > 0``)."""
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    f, r = 1, n
    p = 2
    while p * p <= r:
        while r % (p * p) == 0:
            r //= p * p
            f *= p
        p += 1
    return f, r


def _fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class QuadraticNumber:
    """The number ``rational + surd * sqrt(disc)`` with rational parts.

    Two operands must share ``disc``; mixing fields raises ``ValueError``.
    Plain ints and Fractions are promoted automatically.
    """

    rational: Fraction
    surd: Fraction
    disc: int

    def __post_init__(self):
        object.__setattr__(self, "rational", Fraction(self.rational))
        object.__setattr__(self, "surd", Fraction(self.surd))
        if self.disc <= 0:
            raise ValueError("disc must be positive")
        root = math.isqrt(self.disc)
        if root * root == self.disc:
            raise ValueError(f"disc={self.disc} is a perfect square; use Fraction instead")

    @classmethod
    def sqrt(cls, disc: int) -> "QuadraticNumber":
        return cls(Fraction(0), Fraction(1), disc)

    def _coerce(self, other) -> "QuadraticNumber":
        if isinstance(other, QuadraticNumber):
            if other.disc != self.disc:
                raise ValueError(f"field mismatch: sqrt({self.disc}) vs sqrt({other.disc})")
            return other
        if isinstance(other, (int, Rational)):
            return QuadraticNumber(Fraction(other), Fraction(0), self.disc)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.rational + o.rational, self.surd + o.surd, self.disc)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.rational, -self.surd, self.disc)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        x1, y1, x2, y2 = self.rational, self.surd, o.rational, o.surd
        return QuadraticNumber(x1 * x2 + y1 * y2 * self.disc, x1 * y2 + x2 * y1, self.disc)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.rational, -self.surd, self.disc)

    def norm(self) -> Fraction:
        """Field norm ``x**2 - disc*y**2`` (product with the conjugate)."""
        return self.rational**2 - self.disc * self.surd**2

    def inverse(self) -> "QuadraticNumber":
        n = self.norm()
        if n == 0:
            # only zero has norm zero since disc is not a square
            raise ZeroDivisionError("inverse of zero")
        c = self.conjugate()
        return QuadraticNumber(c.rational / n, c.surd / n, self.disc)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadraticNumber(Fraction(1), Fraction(0), self.disc)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return (self.disc, self.rational, self.surd) == (other.disc, other.rational, other.surd)
        if isinstance(other, (int, Rational)):
            return self.surd == 0 and self.rational == other
        return NotImplemented

    def __hash__(self):
        if self.surd == 0:
            return hash(self.rational)
        return hash((self.rational, self.surd, self.disc))

    def is_rational(self) -> bool:
        return self.surd == 0

    def is_integer(self) -> bool:
        return self.surd == 0 and self.rational.denominator == 1

    def to_int(self) -> int:
        """Exact integer value; raises ``ValueError`` if the surd part survives."""
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self.rational.numerator

    def __float__(self) -> float:
        return float(self.rational) + float(self.surd) * math.sqrt(self.disc)

    def sign(self) -> int:
        """Exact sign of the real number, without floating point."""
        x, y = self.rational, self.surd
        sx = (x > 0) - (x < 0)
        sy = (y > 0) - (y < 0)
        if sy == 0:
            return sx
        if sx == 0 or sx == sy:
            return sy
        # opposite signs: compare x**2 with disc*y**2
        diff = x * x - self.disc * y * y
        return sx if diff > 0 else (-sx if diff < 0 else 0)

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).sign() < 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).sign() > 0

    def __str__(self) -> str:
        f, r = squarefree_split(self.disc)
        coef = self.surd * f
        if coef == 0:
            return _fmt_fraction(self.rational)
        mag = abs(coef)
        term = f"sqrt({r})" if mag == 1 else f"{_fmt_fraction(mag)}*sqrt({r})"
        if self.rational == 0:
            return term if coef > 0 else f"-{term}"
        op = "+" if coef > 0 else "-"
        return f"{_fmt_fraction(self.rational)} {op} {term}"
