from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from idforge.exactnum import QuadExtNum
from idforge.polyalg import (
    MultiPoly,
    RationalFn,
    coefficient_of,
    const,
    poch_poly,
    poly_add,
    poly_eval,
    poly_equal,
    poly_mul,
    poly_neg,
    poly_pow,
    ratfn_equal,
    rising,
    var,
)

rho, beta = var("rho"), var("beta")

small = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))


@st.composite
def polys(draw):
    """Small random polynomials in rho, beta, x."""
    terms = draw(st.dictionaries(
        st.tuples(st.integers(0, 3), st.integers(0, 3), st.just(0), st.integers(0, 2), st.just(0)),
        small, max_size=5,
    ))
    return MultiPoly(terms)


points = st.fixed_dictionaries({"rho": small, "beta": small, "x": small})


def test_ring_examples():
    assert poly_mul(1 + rho, 1 - rho) == 1 - rho**2
    assert poly_pow(1 + rho, 0) == const(1)
    assert poly_pow(1 + rho, 2) == 1 + 2 * rho + rho**2
    assert poly_neg(rho) + rho == MultiPoly()


def test_canonical_form_drops_zero_coefficients():
    p = (1 + rho) ** 2 - (1 + 2 * rho + rho**2)
    assert p.is_zero()
    assert len(p) == 0
    assert poly_equal(p, MultiPoly())


def test_pow_matches_repeated_multiplication():
    acc = const(1)
    for _ in range(7):
        acc = acc * (1 + rho)
    assert poly_equal(acc, (1 + rho) ** 7)


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert poly_add(p, q) == poly_add(q, p)
    assert poly_mul(p, q) == poly_mul(q, p)
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == MultiPoly()


@given(polys(), polys(), points)
def test_evaluation_is_a_ring_map(p, q, pt):
    assert poly_eval(p * q, pt) == poly_eval(p, pt) * poly_eval(q, pt)
    assert poly_eval(p + q, pt) == poly_eval(p, pt) + poly_eval(q, pt)


@given(polys(), polys(), small, small)
def test_evaluation_over_sqrt5(p, q, a, b):
    pt = {"rho": QuadExtNum(a, b, 5), "beta": QuadExtNum(b, 1, 5), "x": QuadExtNum(1, a, 5)}
    assert poly_eval(p * q, pt) == poly_eval(p, pt) * poly_eval(q, pt)


@given(polys())
def test_coefficients_reconstruct_polynomial(p):
    rebuilt = MultiPoly.sum_of(coefficient_of(p, "rho", k) * var("rho", k) for k in range(p.degree("rho") + 1))
    assert rebuilt == p


def test_evaluation_examples():
    assert poly_eval(1 - rho**2, {"rho": Fraction(2, 3)}) == Fraction(5, 9)
    assert poly_eval(1 - rho**2, {"rho": QuadExtNum.i()}) == 2
    p = 7 + 3 * rho * beta - beta**2
    assert poly_eval(p, {"rho": 0, "beta": 0}) == p.constant_term() == 7


def test_evaluation_errors():
    with pytest.raises(KeyError):
        poly_eval(rho * beta, {"rho": 1})
    with pytest.raises(ValueError):
        poly_eval(rho * beta, {"rho": QuadExtNum.i(), "beta": QuadExtNum.sqrt(5)})


def test_coefficient_of_examples():
    assert coefficient_of(1 + 2 * rho + rho**2 * beta, "rho", 2) == beta
    assert coefficient_of((1 - rho) ** 3, "rho", 2) == const(3)
    assert coefficient_of(const(5), "rho", 1) == MultiPoly()
    with pytest.raises(ValueError):
        coefficient_of(rho, "rho", -1)


def test_poch_poly_examples():
    assert poch_poly("beta", 0) == RationalFn(1)
    assert poch_poly("beta", 2) == RationalFn(beta**2 + beta)
    assert poch_poly("beta", -1) == RationalFn(1, beta - 1)
    assert rising("beta", 3) == beta * (beta + 1) * (beta + 2)


def test_poch_poly_addition_law_symbolic():
    for n in range(-4, 6):
        for m in range(-4, 6):
            shifted = poch_poly("beta", m).num.substitute({"beta": beta + n})
            shifted_den = poch_poly("beta", m).den.substitute({"beta": beta + n})
            lhs = poch_poly("beta", n) * RationalFn(shifted, shifted_den)
            assert lhs == poch_poly("beta", n + m)


def test_rational_function_equality_by_cross_multiplication():
    assert ratfn_equal(RationalFn(beta, beta), RationalFn(1))
    assert RationalFn(beta**2 - 1, beta - 1) == RationalFn(beta + 1)
    assert RationalFn(beta, beta + 1) != RationalFn(1)
    with pytest.raises(ZeroDivisionError):
        RationalFn(beta, MultiPoly())


def test_rational_function_evaluation_stays_exact():
    r = RationalFn(beta + 1, beta + 3)
    assert r.evaluate({"beta": 1}) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        r.evaluate({"beta": -3})


def test_substitution():
    p = (1 + rho) ** 3
    assert p.substitute({"rho": var("x") * Fraction(1, 2)}) == (1 + var("x") * Fraction(1, 2)) ** 3


def test_printing():
    assert str(1 - rho**2) == "1 - rho^2"
