"""Hermite and Laguerre polynomials, monomial expansions and connection coefficients.

Hermite polynomials are the probabilists' family (monic, weight exp(-x^2/2)).
Laguerre polynomials ``L_n(x|beta)`` are normalised with leading coefficient
(-1)^n/n!, orthogonal against the Gamma(beta) density; the shape ``beta`` is
kept symbolic.

Connection coefficients E[X^j p_n(X)] for the orthonormal families carry a
square root (sqrt(n!) or sqrt(n!/(beta)^(n))).  :class:`ConnectionCoeff`
stores only the radical-free factor; products that enter moment formulas are
radical-free and are produced by :func:`mixed_moment_term`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .polyalg import MultiPoly, RationalFn, rising, var

NORMAL = "normal"
GAMMA = "gamma"


@dataclass(frozen=True)
class HermitePoly:
    n: int
    coeffs: MultiPoly


@dataclass(frozen=True)
class LaguerrePoly:
    n: int
    coeffs: MultiPoly


@dataclass(frozen=True)
class ConnectionCoeff:
    """H_{j,n} = radical_free_part / sqrt(n!) (normal) or
    radical_free_part * sqrt(n!/(beta)^(n)) (gamma)."""

    case: str
    j: int
    n: int
    radical_free_part: object

    def is_zero(self) -> bool:
        part = self.radical_free_part
        return part.is_zero() if isinstance(part, MultiPoly) else part == 0


@lru_cache(maxsize=None)
def _hermite(n: int) -> MultiPoly:
    x = var("x")
    prev, cur = MultiPoly(), MultiPoly.const(1)
    for k in range(n):
        prev, cur = cur, x * cur - prev.scale(k)
    return cur


def hermite(n: int) -> HermitePoly:
    if n < 0:
        raise ValueError("Hermite degree must be nonnegative")
    return HermitePoly(n, _hermite(n))


@lru_cache(maxsize=None)
def _laguerre(n: int) -> MultiPoly:
    terms = []
    for k in range(n + 1):
        # (beta)^(n) / (beta)^(k) = (beta + k)^(n - k)
        c = Fraction((-1) ** k, factorial(n - k) * factorial(k))
        terms.append(rising("beta", n - k, k).scale(c) * var("x", k))
    return MultiPoly.sum_of(terms)


def laguerre(n: int) -> LaguerrePoly:
    if n < 0:
        raise ValueError("Laguerre degree must be nonnegative")
    return LaguerrePoly(n, _laguerre(n))


def monomial_in_hermite(j: int) -> list[tuple[int, Fraction]]:
    """x^j = sum c_i H_i(x); returns [(i, c_i)] with i decreasing."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    return [
        (j - 2 * m, Fraction(factorial(j), 2**m * factorial(m) * factorial(j - 2 * m)))
        for m in range(j // 2 + 1)
    ]


def monomial_in_laguerre(j: int) -> list[tuple[int, MultiPoly]]:
    """x^j = sum c_k(beta) L_k(x|beta); returns [(k, c_k)] with k increasing."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    out = []
    for k in range(j + 1):
        c = (-1) ** k * factorial(j) // factorial(j - k)
        out.append((k, rising("beta", j - k, k).scale(c)))
    return out


def connection_normal(j: int, n: int) -> ConnectionCoeff:
    if j < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if n > j or (j - n) % 2:
        return ConnectionCoeff(NORMAL, j, n, Fraction(0))
    h = (j - n) // 2
    return ConnectionCoeff(NORMAL, j, n, Fraction(factorial(j), 2**h * factorial(h)))


def connection_gamma(j: int, n: int) -> ConnectionCoeff:
    if j < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if n > j:
        return ConnectionCoeff(GAMMA, j, n, MultiPoly())
    return ConnectionCoeff(GAMMA, j, n, rising("beta", j).scale((-1) ** n * comb(j, n)))


@lru_cache(maxsize=None)
def mixed_moment_term(case: str, m: int, l: int, j: int):
    """The radical-free product H_{m,j} H_{l,j}.

    Normal case returns a Fraction, gamma case a polynomial in beta.
    """
    if case == NORMAL:
        a = connection_normal(m, j).radical_free_part
        b = connection_normal(l, j).radical_free_part
        return a * b / factorial(j)
    if case == GAMMA:
        if j > m or j > l:
            return MultiPoly()
        # (beta)^(m) (beta)^(l) j! / (beta)^(j) with (beta)^(m)/(beta)^(j) = (beta+j)^(m-j)
        c = comb(m, j) * comb(l, j) * factorial(j)
        return (rising("beta", m - j, j) * rising("beta", l)).scale(c)
    raise ValueError(f"unknown case {case!r}")


@lru_cache(maxsize=None)
def eta_conditional(j: int) -> MultiPoly:
    """E(X^j | Y=y) for the bivariate gamma pair, a polynomial in rho, y, beta."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    rho, y = var("rho"), var("y")
    one_minus = 1 - rho
    terms = []
    for m in range(j + 1):
        terms.append(
            rising("beta", j - m, m).scale(comb(j, m)) * (rho * y) ** m * one_minus ** (j - m)
        )
    return MultiPoly.sum_of(terms)


def eta_laguerre_form(j: int) -> RationalFn:
    """j! (1-rho)^j L_j(-rho*y/(1-rho) | beta) as a rational function."""
    rho, y = var("rho"), var("y")
    inner = _laguerre(j).homogenize_substitute("x", -(rho * y), 1 - rho)
    return RationalFn(inner.num * (1 - rho) ** j * factorial(j), inner.den)


def shift_beta(p: MultiPoly, s) -> MultiPoly:
    return p.substitute({"beta": var("beta") + s})


def laguerre_shift_check(n: int, max_j: int | None = None) -> bool:
    """Taylor shift L_n(y|b) = sum_j L_{n-j}(x|b+j) (x-y)^j / j! as a polynomial identity.

    ``max_j`` truncates the sum (only meaningful for checking that dropping
    terms breaks the identity); the default uses all n+1 terms.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    top = n if max_j is None else min(n, max_j)
    x, y = var("x"), var("y")
    lhs = _laguerre(n).substitute({"x": y})
    rhs = MultiPoly.sum_of(
        shift_beta(_laguerre(n - j), j) * (x - y) ** j * Fraction(1, factorial(j))
        for j in range(top + 1)
    )
    return lhs == rhs
