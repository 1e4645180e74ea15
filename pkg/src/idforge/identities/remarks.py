"""Specialised identities, each side written out term by term.

Every function returns ``(lhs, rhs)``.  Integer-valued families return ints
or Fractions; families that keep a free variable return polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ..exactnum import QuadExtNum, binomial, double_factorial as dfact, reciprocal_factorial
from ..polyalg import MultiPoly, rising, var
from .fiblucas import PHI, fibonacci as F, lucas as L


def _g1_weight(k: int, j: int) -> int:
    return comb(2 * k, 2 * j) * dfact(2 * j - 1) * dfact(2 * k - 2 * j - 1)


# -- (G1) at rational rho ---------------------------------------------------

def g1_rho_two_thirds(k: int):
    lhs = sum(_g1_weight(k, j) * 5**j for j in range(k + 1))
    return lhs, factorial(2 * k) * 3**k // factorial(k)


def g1_rho_one_third(k: int):
    lhs = sum(_g1_weight(k, j) * 2**j for j in range(k + 1))
    return lhs, Fraction(factorial(2 * k) * 3**k, factorial(k) * 2**k)


def g1_rho_four_thirds(k: int):
    lhs = sum(_g1_weight(k, j) * (-7) ** j for j in range(k + 1))
    return lhs, (-1) ** k * factorial(2 * k) * 3**k // factorial(k)


# -- (G1) at rho = sqrt 5 ---------------------------------------------------

def g1_lucas(k: int):
    lhs = factorial(2 * k) // factorial(k) * L(k)
    rhs = 2**k * sum((-1) ** j * comb(2 * k, 2 * j) * L(2 * k - 2 * j)
                     * dfact(2 * j - 1) * dfact(2 * k - 2 * j - 1) for j in range(k + 1))
    return lhs, rhs


def g1_fibonacci(k: int):
    lhs = factorial(2 * k) // factorial(k) * F(k)
    rhs = 2**k * sum((-1) ** j * comb(2 * k, 2 * j) * F(2 * k - 2 * j)
                     * dfact(2 * j - 1) * dfact(2 * k - 2 * j - 1) for j in range(k + 1))
    return lhs, rhs


# -- (G1) at rho = i ---------------------------------------------------------

def g1_i_4n(n: int):
    lhs = factorial(8 * n) // factorial(4 * n)
    rhs = sum(comb(8 * n, 2 * j) * dfact(2 * j - 1) * dfact(8 * n - 2 * j - 1)
              for j in range(4 * n + 1))
    return lhs, rhs


def g1_i_4n1_a(n: int):
    lhs = factorial(8 * n + 2) // factorial(4 * n + 1) * (-4) ** n
    rhs = 2 ** (4 * n + 1) * sum(
        (-1) ** m * comb(8 * n + 2, 4 * m + 2) * dfact(4 * m + 1) * dfact(8 * n - 4 * m - 1)
        for m in range(2 * n + 1)
    )
    return lhs, rhs


def g1_i_4n1_b(n: int):
    lhs = factorial(8 * n + 2) // factorial(4 * n + 1) * (-4) ** n
    rhs = 2 ** (4 * n + 1) * sum(
        (-1) ** m * comb(8 * n + 2, 4 * m) * dfact(4 * m - 1) * dfact(8 * n - 4 * m + 1)
        for m in range(2 * n + 1)
    )
    return lhs, rhs


# -- (G2) specialisations ----------------------------------------------------

def g2_alternating(k: int):
    rhs = sum(
        (-1) ** j * sum(binomial(k, j - 2 * m) * binomial(k - j + 2 * m, m) for m in range(j // 2 + 1))
        for j in range(2 * k + 1)
    )
    return 1, rhs


def g2_i_real(n: int):
    s = 0
    for j in range(4 * n + 1):
        inner = sum((-1) ** m * 4 ** (j - m) * binomial(4 * n, 2 * j - 2 * m)
                    * binomial(4 * n - 2 * j + 2 * m, m) for m in range(j + 1))
        s += (-1) ** j * inner
    return 4**n, Fraction((-1) ** n * s, 16**n)


def g2_i_imag(n: int):
    s = 0
    for j in range(4 * n + 1):
        inner = sum((-1) ** m * 4 ** (j - m) * binomial(4 * n, 2 * j - 2 * m + 1)
                    * binomial(4 * n - 2 * j - 1 + 2 * m, m) for m in range(j + 1))
        s += (-1) ** j * inner
    return 0, s


# -- (Ex1) specialisations ---------------------------------------------------

def ex1_beta_one(n: int, k: int):
    lhs = sum((-1) ** j * comb(n, j) * comb(j + k, j) for j in range(n + 1))
    return lhs, (-1) ** n * binomial(k, n)


def ex1_beta_half(n: int, k: int):
    lhs = sum(
        Fraction((-1) ** j * dfact(2 * n - 1) * dfact(2 * j + 2 * k - 1),
                 factorial(j) * factorial(n - j) * dfact(2 * j - 1))
        for j in range(n + 1)
    )
    return lhs, (-1) ** n * 2**n * binomial(k, n) * dfact(2 * k - 1)


def ex2_beta_half(n: int, k: int):
    lhs = sum(
        Fraction((-1) ** (n - j) * comb(n, j) * dfact(2 * n + 2 * k + 2 * j - 1), dfact(2 * j - 1))
        for j in range(n + 1)
    )
    rhs = Fraction(2**n * factorial(n + k) * dfact(2 * n + 2 * k - 1),
                   factorial(k) * dfact(2 * n - 1))
    return lhs, rhs


# -- (Ex2) specialisations ---------------------------------------------------

def _explr_sum(n: int, rho) -> object:
    return sum(
        (-1) ** m * sum(comb(m, k) * comb(n - m, k) * rho**k for k in range(m + 1))
        for m in range(n + 1)
    )


def explr(n: int):
    rho = var("rho")
    lhs = MultiPoly.sum_of(
        MultiPoly.var("rho", k).scale((-1) ** m * comb(m, k) * comb(n - m, k))
        for m in range(n + 1)
        for k in range(m + 1)
    )
    rhs = MultiPoly() if n % 2 else (1 - rho) ** (n // 2)
    return lhs, rhs


def ex2_coefficients(n: int, k: int):
    lhs = sum((-1) ** (m - k) * comb(m, k) * comb(n - m, k) for m in range(k, n + 1))
    return lhs, 0 if n % 2 else comb(n // 2, k)


def ex2_rho_one_beta_one(n: int):
    return _explr_sum(n, 1), 0


def ex2_beta_half_x(n: int):
    x = var("x")
    terms = []
    for m in range(n + 1):
        outer = (-1) ** m * dfact(2 * m - 1) * dfact(2 * n - 2 * m - 1)
        for k in range(m + 1):
            c = (reciprocal_factorial(k) * reciprocal_factorial(m - k)
                 * reciprocal_factorial(n - m - k) / dfact(2 * k - 1))
            if c:
                terms.append(MultiPoly.var("x", k).scale(outer * c))
    lhs = MultiPoly.sum_of(terms)
    if n % 2:
        return lhs, MultiPoly()
    rhs = (2 - x) ** (n // 2) * Fraction(dfact(n - 1), factorial(n // 2))
    return lhs, rhs


def ex2_x_zero(n: int):
    lhs = sum((-1) ** m * comb(n, m) * dfact(2 * m - 1) * dfact(2 * n - 2 * m - 1)
              for m in range(n + 1))
    if n % 2:
        return lhs, 0
    return lhs, factorial(n) * dfact(n - 1) * 2 ** (n // 2) // factorial(n // 2)


def ex2_rho_one(n: int):
    terms = []
    for m in range(n + 1):
        outer = rising("beta", n - m).scale((-1) ** m * comb(n, m))
        for k in range(m + 1):
            c = comb(m, k) * comb(n - m, k) * factorial(k)
            if c:
                # (beta)^(m)/(beta)^(k) = (beta + k)^(m - k)
                terms.append((outer * rising("beta", m - k, k)).scale(c))
    return MultiPoly.sum_of(terms), MultiPoly()


# -- (Ex3) specialisations ---------------------------------------------------

def ex3_rho_zero(n: int):
    lhs = MultiPoly.sum_of(
        (rising("beta", n - m) * rising("beta", m)).scale((-1) ** (n - m) * comb(n, m))
        for m in range(n + 1)
    )
    if n % 2:
        return lhs, MultiPoly()
    return lhs, rising("beta", n // 2).scale(factorial(n) // factorial(n // 2))


def vandermonde(n: int):
    lhs = MultiPoly.sum_of(
        (rising("beta", n - m) * rising("alpha", m)).scale(comb(n, m)) for m in range(n + 1)
    )
    s = var("alpha") + var("beta")
    rhs = MultiPoly.const(1)
    for i in range(n):
        rhs = rhs * (s + i)
    return lhs, rhs


def ex3_rho_half(n: int):
    terms = []
    for m in range(n + 1):
        outer = Fraction((-1) ** (n - m) * comb(n, m), 2**m)
        for j in range(m + 1):
            terms.append((rising("beta", n - j) * rising("beta", j, m - j)).scale(outer * comb(m, j)))
    lhs = MultiPoly.sum_of(terms)
    if n % 2:
        return lhs, MultiPoly()
    h = n // 2
    return lhs, rising("beta", h).scale(Fraction(factorial(n), 2**h * factorial(h)))


def ex3_coefficients(n: int, k: int):
    terms = []
    for m in range(k, n + 1):
        c = (-1) ** (m - k) * factorial(n - k) * reciprocal_factorial(m - k) * reciprocal_factorial(n - m - k)
        if c:
            terms.append((rising("beta", m) * rising("beta", n - m)).scale(c))
    lhs = MultiPoly.sum_of(terms)
    if n % 2:
        return lhs, MultiPoly()
    h = n // 2
    return lhs, (rising("beta", k) * rising("beta", h)).scale(factorial(h) * binomial(n - k, h))


# -- golden ratio -----------------------------------------------------------

def phi_lucas(k: int):
    lhs = 2 * factorial(2 * k) // factorial(k) * L(k)
    rhs = sum((-1) ** j * _g1_weight(k, j) * (L(2 * k - 2 * j) * L(j) - 5 * F(2 * k - 2 * j) * F(j))
              for j in range(k + 1))
    return lhs, rhs


def phi_fibonacci(k: int):
    lhs = 2 * factorial(2 * k) // factorial(k) * F(k)
    rhs = sum((-1) ** j * _g1_weight(k, j) * (F(2 * k - 2 * j) * L(j) - L(2 * k - 2 * j) * F(j))
              for j in range(k + 1))
    return lhs, rhs


def lucas_fibonacci_norm(n: int):
    return L(n) ** 2 - 5 * F(n) ** 2, 4 * (-1) ** n


def phi_powers(n: int):
    lhs = ((1 + PHI) ** n, PHI**n)
    plus = QuadExtNum(Fraction(L(n), 2), Fraction(F(n), 2), 5)
    minus = QuadExtNum(Fraction(L(n), 2), Fraction(-F(n), 2), 5)
    return lhs, (plus, minus * (-1) ** n)


def pochhammer_addition(n: int, m: int):
    lhs = rising("beta", n) * rising("beta", m, n)
    beta = var("beta")
    rhs = MultiPoly.const(1)
    for i in range(n + m):
        rhs = rhs * (beta + i)
    return lhs, rhs
