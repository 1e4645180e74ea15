"""Exact integers, rationals and the combinatorial primitives built on them.

``Rational`` is :class:`fractions.Fraction`; quadratic extensions
``a + b*sqrt(d)`` are provided by :class:`QuadExtNum`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction


class PoleError(ZeroDivisionError):
    """A rising factorial with negative length hit a zero factor."""


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial undefined for negative n={n}")
    return math.factorial(n)


def double_factorial(n: int) -> int:
    """n!! with the conventions (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial undefined for n={n} < -1")
    out = 1
    for i in range(n, 1, -2):
        out *= i
    return out


def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient: falling product n(n-1)...(n-k+1)/k!.

    Zero for k < 0 and for 0 <= n < k; negative ``n`` is allowed.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    # binom(-a, k) = (-1)^k binom(a+k-1, k)
    return (-1) ** k * math.comb(-n + k - 1, k)


def rising_factorial(x, n: int):
    """(x)^(n): x(x+1)...(x+n-1) for n >= 0, 1/((x-1)(x-2)...(x+n)) for n < 0.

    Works for ints, Fractions and :class:`QuadExtNum`.
    """
    if isinstance(x, int):
        x = Fraction(x)
    if n >= 0:
        out = x * 0 + 1
        for i in range(n):
            out = out * (x + i)
        return out
    den = x * 0 + 1
    for i in range(1, -n + 1):
        factor = x - i
        if factor == 0:
            raise PoleError(f"rising factorial ({x})^({n}) has a pole")
        den = den * factor
    return 1 / den


def reciprocal_factorial(n: int) -> Fraction:
    """1/n! extended by 1/Gamma(n+1) = 0 at negative integers."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, math.factorial(n))


def _squarefree(d: int) -> bool:
    d = abs(d)
    if d == 0:
        return False
    p = 2
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class QuadExtNum:
    """The number a + b*sqrt(d) of Q(sqrt(d)); d = -1 gives the Gaussian rationals."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        if not _squarefree(self.d) or self.d == 1:
            raise ValueError(f"d={self.d} does not define a quadratic extension")
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))

    @classmethod
    def i(cls) -> QuadExtNum:
        return cls(Fraction(0), Fraction(1), -1)

    @classmethod
    def sqrt(cls, d: int) -> QuadExtNum:
        return cls(Fraction(0), Fraction(1), d)

    def _coerce(self, other) -> QuadExtNum:
        if isinstance(other, QuadExtNum):
            if other.d != self.d:
                raise ValueError(f"cannot mix Q(sqrt({self.d})) and Q(sqrt({other.d}))")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExtNum(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExtNum(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtNum(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExtNum(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExtNum(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadExtNum:
        return QuadExtNum(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> QuadExtNum:
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero in quadratic extension")
        return QuadExtNum(self.a / nrm, -self.b / nrm, self.d)

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

    def __pow__(self, e: int) -> QuadExtNum:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = QuadExtNum(Fraction(1), Fraction(0), self.d)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExtNum):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __str__(self):
        root = "i" if self.d == -1 else f"sqrt({self.d})"
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}*{root}"
