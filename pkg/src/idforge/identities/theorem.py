"""Both sides of the five main polynomial identities, each built from its own formula.

Polynomials are in rho and beta.  Ratios of rising factorials
(beta)^(a)/(beta)^(b) with a >= b are expanded as (beta + b)^(a - b).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ..exactnum import binomial, double_factorial as dfact
from ..polyalg import MultiPoly, RationalFn, rising, var

RHO = var("rho")


def g1_lhs(k: int) -> MultiPoly:
    return (1 + RHO) ** k * (factorial(2 * k) // factorial(k))


def g1_rhs(k: int) -> MultiPoly:
    up = 1 + RHO
    down = 1 - RHO**2
    terms = []
    for j in range(k + 1):
        c = comb(2 * k, 2 * j) * dfact(2 * j - 1) * dfact(2 * k - 2 * j - 1)
        terms.append((up ** (2 * k - 2 * j) * down**j).scale(c))
    return MultiPoly.sum_of(terms)


def build_g1(k: int) -> tuple[MultiPoly, MultiPoly]:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return g1_lhs(k), g1_rhs(k)


def g2_lhs(k: int) -> MultiPoly:
    return (1 + RHO) ** k


def g2_rhs(k: int) -> MultiPoly:
    terms = []
    for j in range(2 * k + 1):
        for m in range(j // 2 + 1):
            p = j - 2 * m
            c = binomial(k, p) * binomial(k - p, m)
            if c:
                terms.append(MultiPoly.var("rho", p).scale(2**p * c))
    return MultiPoly.sum_of(terms).scale(Fraction(1, 2**k))


def build_g2(k: int) -> tuple[MultiPoly, MultiPoly]:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return g2_lhs(k), g2_rhs(k)


def ex1_lhs(n: int, m: int) -> RationalFn:
    """sum_j (-1)^j C(n,j) (beta)^(j+m)/(beta)^(j).

    m >= 0: each ratio is the polynomial (beta + j)^(m).
    m < 0: each ratio is 1/prod_{t=j+m}^{j-1}(beta + t); the terms are put over
    the common denominator prod_{t=m}^{n-1}(beta + t).
    """
    if m >= 0:
        return RationalFn(
            MultiPoly.sum_of(rising("beta", m, j).scale((-1) ** j * comb(n, j)) for j in range(n + 1))
        )
    beta = var("beta")
    num_terms = []
    for j in range(n + 1):
        missing = MultiPoly.const((-1) ** j * comb(n, j))
        for t in range(m, n):
            if not (j + m <= t <= j - 1):
                missing = missing * (beta + t)
        num_terms.append(missing)
    den = MultiPoly.const(1)
    for t in range(m, n):
        den = den * (beta + t)
    return RationalFn(MultiPoly.sum_of(num_terms), den)


def ex1_rhs(n: int, m: int) -> RationalFn:
    """(-1)^n n! C(m,n) (beta)^(m)/(beta)^(n) with the generalized binomial."""
    c = (-1) ** n * factorial(n) * binomial(m, n)
    if c == 0:
        return RationalFn(MultiPoly())
    if m >= 0:
        # c != 0 forces m >= n
        return RationalFn(rising("beta", m - n, n).scale(c))
    # (beta)^(m) = 1/((beta+m)...(beta-1))
    return RationalFn(MultiPoly.const(c), rising("beta", -m, m) * rising("beta", n))


def build_ex1(n: int, m: int) -> tuple[RationalFn, RationalFn]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return ex1_lhs(n, m), ex1_rhs(n, m)


def even_moment_rhs(n: int) -> MultiPoly:
    """0 for odd n, n!/(n/2)! (beta)^(n/2) (1-rho)^(n/2) for even n."""
    if n % 2:
        return MultiPoly()
    h = n // 2
    return (rising("beta", h) * (1 - RHO) ** h).scale(factorial(n) // factorial(h))


def ex2_lhs(n: int) -> MultiPoly:
    terms = []
    for m in range(n + 1):
        outer = (-1) ** m * comb(n, m)
        right = rising("beta", n - m)
        for k in range(min(m, n - m) + 1):
            c = outer * comb(m, k) * comb(n - m, k) * factorial(k)
            # (beta)^(m) k!/(beta)^(k) -> k! (beta + k)^(m - k)
            terms.append((rising("beta", m - k, k) * right * RHO**k).scale(c))
    return MultiPoly.sum_of(terms)


def build_ex2(n: int) -> tuple[MultiPoly, MultiPoly]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return ex2_lhs(n), even_moment_rhs(n)


def ex3_lhs(n: int) -> MultiPoly:
    one_minus = [MultiPoly.const(1)]
    for _ in range(n):
        one_minus.append(one_minus[-1] * (1 - RHO))
    terms = []
    for m in range(n + 1):
        outer = (-1) ** (n - m) * comb(n, m)
        for j in range(m + 1):
            beta_part = rising("beta", n - j) * rising("beta", j, m - j)
            rho_part = one_minus[j] * RHO ** (m - j)
            terms.append((beta_part * rho_part).scale(outer * comb(m, j)))
    return MultiPoly.sum_of(terms)


def build_ex3(n: int) -> tuple[MultiPoly, MultiPoly]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return ex3_lhs(n), even_moment_rhs(n)
