"""Fibonacci and Lucas numbers and the golden-ratio element of Q(sqrt 5)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..exactnum import QuadExtNum


@lru_cache(maxsize=None)
def _pair(n: int) -> tuple[int, int]:
    f0, f1 = 0, 1
    l0, l1 = 2, 1
    for _ in range(n):
        f0, f1 = f1, f0 + f1
        l0, l1 = l1, l0 + l1
    return f0, l0


def fibonacci(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _pair(n)[0]


def lucas(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _pair(n)[1]


@dataclass(frozen=True)
class FibLucas:
    n: int
    F: int
    L: int

    @classmethod
    def at(cls, n: int) -> FibLucas:
        return cls(n, fibonacci(n), lucas(n))


SQRT5 = QuadExtNum.sqrt(5)
# (sqrt 5 - 1)/2, which satisfies phi = 1/(1 + phi)
PHI = QuadExtNum(Fraction(-1, 2), Fraction(1, 2), 5)


def half_lucas_plus(n: int) -> QuadExtNum:
    """L_n/2 + F_n sqrt(5)/2."""
    return QuadExtNum(Fraction(lucas(n), 2), Fraction(fibonacci(n), 2), 5)
