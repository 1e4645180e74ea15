"""Re-derive specialised identities by evaluating a parent identity.

Each function evaluates both sides of the parent polynomial identity at the
specialisation point (over Q, Q(i) or Q(sqrt 5)) and rescales or splits the
values exactly as the specialisation prescribes.  The result must coincide
with the directly built sides in :mod:`.remarks`; a mismatch means the
specialised formula is wrong.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..exactnum import QuadExtNum, double_factorial as dfact
from ..polyalg import MultiPoly, rising, var
from .fiblucas import PHI
from . import theorem

# coefficient remarks revisit the same parent for every k; parents are immutable
_g1 = lru_cache(maxsize=128)(theorem.build_g1)
_g2 = lru_cache(maxsize=128)(theorem.build_g2)
_ex2 = lru_cache(maxsize=128)(theorem.build_ex2)
_ex3 = lru_cache(maxsize=128)(theorem.build_ex3)

I = QuadExtNum.i()
SQRT5 = QuadExtNum.sqrt(5)


def _at(pair, **point):
    return tuple(side.evaluate(point) for side in pair)


def g1_rho_two_thirds(k: int):
    lhs, rhs = _at(_g1(k), rho=Fraction(2, 3))
    scale = Fraction(9, 5) ** k
    return lhs * scale, rhs * scale


def g1_rho_one_third(k: int):
    lhs, rhs = _at(_g1(k), rho=Fraction(1, 3))
    scale = Fraction(9, 8) ** k
    return lhs * scale, rhs * scale


def g1_rho_four_thirds(k: int):
    lhs, rhs = _at(_g1(k), rho=Fraction(4, 3))
    scale = Fraction(-9, 7) ** k
    return lhs * scale, rhs * scale


def _g1_sqrt5(k: int):
    lhs, rhs = _at(_g1(k), rho=SQRT5)
    scale = Fraction(1, 2) ** (k - 1) if k else Fraction(2)
    return lhs, rhs, scale


def g1_lucas(k: int):
    lhs, rhs, scale = _g1_sqrt5(k)
    return lhs.a * scale, rhs.a * scale


def g1_fibonacci(k: int):
    lhs, rhs, scale = _g1_sqrt5(k)
    return lhs.b * scale, rhs.b * scale


def g1_i_4n(n: int):
    # this integer identity is (G1) at rho = 0 with k = 4n
    return _at(_g1(4 * n), rho=0)


def g1_i_4n1_a(n: int):
    lhs, rhs = _at(_g1(4 * n + 1), rho=I)
    return lhs.a, rhs.a


def g1_i_4n1_b(n: int):
    lhs, rhs = _at(_g1(4 * n + 1), rho=I)
    return lhs.b, rhs.b


def g2_alternating(k: int):
    lhs, rhs = _at(_g2(k), rho=Fraction(-1, 2))
    return lhs * 2**k, rhs * 2**k


def g2_i_real(n: int):
    lhs, rhs = _at(_g2(4 * n), rho=I)
    sign = (-1) ** n
    return lhs.a * sign, rhs.a * sign


def g2_i_imag(n: int):
    lhs, rhs = _at(_g2(4 * n), rho=I)
    return lhs.b, rhs.b * Fraction(16**n, 2)


def _ex1_at(n: int, m: int, beta):
    lhs, rhs = theorem.build_ex1(n, m)
    return lhs.evaluate({"beta": beta}), rhs.evaluate({"beta": beta})


def ex1_beta_one(n: int, k: int):
    lhs, rhs = _ex1_at(n, k, 1)
    return Fraction(lhs) / factorial(k), Fraction(rhs) / factorial(k)


def ex1_beta_half(n: int, k: int):
    lhs, rhs = _ex1_at(n, k, Fraction(1, 2))
    scale = Fraction(2**k * dfact(2 * n - 1), factorial(n))
    return lhs * scale, rhs * scale


def ex2_beta_half(n: int, k: int):
    # obtained from (Ex1) with beta = 1/2 and m = n + k
    lhs, rhs = _ex1_at(n, n + k, Fraction(1, 2))
    scale = (-1) ** n * 2 ** (n + k)
    return lhs * scale, rhs * scale


def _ex2_sub(n: int, **point):
    lhs, rhs = _ex2(n)
    return lhs.substitute(point), rhs.substitute(point)


def explr(n: int):
    lhs, rhs = _ex2_sub(n, beta=MultiPoly.const(1))
    scale = Fraction(1, factorial(n))
    return lhs.scale(scale), rhs.scale(scale)


def ex2_coefficients(n: int, k: int):
    lhs, rhs = explr(n)
    sign = (-1) ** k
    return lhs.coefficient_of("rho", k).constant_term() * sign, rhs.coefficient_of("rho", k).constant_term() * sign


def ex2_rho_one_beta_one(n: int):
    lhs, rhs = _at(_ex2(n), rho=1, beta=1)
    return Fraction(lhs) / factorial(n), Fraction(rhs) / factorial(n)


def ex2_beta_half_x(n: int):
    lhs, rhs = _ex2_sub(n, beta=MultiPoly.const(Fraction(1, 2)), rho=var("x").scale(Fraction(1, 2)))
    scale = Fraction(2**n, factorial(n))
    return lhs.scale(scale), rhs.scale(scale)


def ex2_x_zero(n: int):
    lhs, rhs = _at(_ex2(n), rho=0, beta=Fraction(1, 2))
    return lhs * 2**n, rhs * 2**n


def ex2_rho_one(n: int):
    return _ex2_sub(n, rho=MultiPoly.const(1))


def _ex3_sub(n: int, **point):
    lhs, rhs = _ex3(n)
    return lhs.substitute(point), rhs.substitute(point)


def ex3_rho_zero(n: int):
    return _ex3_sub(n, rho=MultiPoly.const(0))


def ex3_rho_half(n: int):
    return _ex3_sub(n, rho=MultiPoly.const(Fraction(1, 2)))


def ex3_coefficients(n: int, k: int):
    lhs, rhs = _ex3(n)
    scale = Fraction((-1) ** k * factorial(k) * factorial(n - k), factorial(n))
    weight = rising("beta", k).scale(scale)
    return lhs.coefficient_of("rho", k) * weight, rhs.coefficient_of("rho", k) * weight


def _g1_golden(k: int):
    # rho = -phi in the (1 - rho) form of (G1), i.e. rho = phi in the (1 + rho) form
    lhs, rhs = _at(_g1(k), rho=PHI)
    return lhs * 4, rhs * 4


def phi_lucas(k: int):
    lhs, rhs = _g1_golden(k)
    return lhs.a, rhs.a


def phi_fibonacci(k: int):
    lhs, rhs = _g1_golden(k)
    return lhs.b, rhs.b
