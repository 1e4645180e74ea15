from __future__ import annotations

import dataclasses
from fractions import Fraction

import pytest

from idforge.exactnum import QuadExtNum
from idforge.identities import (
    REGISTRY,
    FibLucas,
    GridRanges,
    UnknownIdentity,
    build_ex1,
    build_ex2,
    build_ex3,
    build_g1,
    build_g2,
    build_special,
    cells,
    fibonacci,
    get,
    lucas,
    summarize,
    verify,
    verify_grid,
    witness,
)
from idforge.identities import remarks
from idforge.polyalg import MultiPoly, RationalFn, coefficient_of, var

rho, beta = var("rho"), var("beta")


# -- theorem builders ---------------------------------------------------------

def test_g1_examples():
    assert build_g1(0) == (MultiPoly.const(1), MultiPoly.const(1))
    lhs, rhs = build_g1(1)
    assert lhs == rhs == 2 + 2 * rho
    lhs, rhs = build_g1(3)
    assert lhs == rhs


def test_g2_examples():
    assert build_g2(0) == (MultiPoly.const(1), MultiPoly.const(1))
    lhs, rhs = build_g2(1)
    assert lhs == rhs == 1 + rho
    lhs, rhs = build_g2(6)
    assert lhs == rhs


def test_ex1_examples():
    lhs, rhs = build_ex1(1, 1)
    assert lhs == rhs == RationalFn(-1)
    lhs, rhs = build_ex1(2, 0)
    assert lhs == rhs == RationalFn(0)
    lhs, rhs = build_ex1(3, 5)
    assert lhs == rhs


def test_ex1_negative_m_sample():
    # n = 1, m = -1: 1/(beta-1) - 1/beta = 1/(beta(beta-1)), and the right side agrees
    lhs, rhs = build_ex1(1, -1)
    assert lhs == RationalFn(1, beta * (beta - 1))
    assert lhs == rhs


def test_ex2_ex3_examples():
    two = (beta * (1 - rho)).scale(2)
    for build in (build_ex2, build_ex3):
        assert build(0) == (MultiPoly.const(1), MultiPoly.const(1))
        lhs, rhs = build(1)
        assert lhs.is_zero() and rhs.is_zero()
        assert build(2) == (two, two)
        lhs, rhs = build(8)
        assert lhs == rhs


def test_builders_reject_negative_parameters():
    for fn in (build_g1, build_g2, build_ex2, build_ex3):
        with pytest.raises(ValueError):
            fn(-1)
    with pytest.raises(ValueError):
        build_ex1(-1, 2)


# -- Fibonacci / Lucas --------------------------------------------------------

def test_fibonacci_lucas_values():
    assert (fibonacci(0), lucas(0)) == (0, 2)
    assert (fibonacci(5), lucas(5)) == (5, 11)
    assert lucas(3) ** 2 - 5 * fibonacci(3) ** 2 == -4
    assert FibLucas.at(10) == FibLucas(10, 55, 123)


def test_fibonacci_lucas_recurrences():
    for n in range(1, 60):
        assert fibonacci(n + 1) == fibonacci(n) + fibonacci(n - 1)
        assert lucas(n + 1) == lucas(n) + lucas(n - 1)
        assert lucas(n) ** 2 - 5 * fibonacci(n) ** 2 == 4 * (-1) ** n


def test_phi_powers():
    phi = QuadExtNum(Fraction(-1, 2), Fraction(1, 2), 5)
    assert phi * (1 + phi) == 1
    for n in range(31):
        (a, b), (c, d) = build_special("PHI-POW", n=n)
        assert a == c and b == d


# -- registry -----------------------------------------------------------------

def test_registry_shape():
    assert len(REGISTRY) >= 30
    assert list(REGISTRY)[:5] == ["THM1.i", "THM1.ii", "THM1.iii", "THM1.iv", "THM1.v"]
    for d in REGISTRY.values():
        assert d.paper_ref
    with pytest.raises(UnknownIdentity):
        get("NOPE")


@pytest.mark.parametrize(
    "ident, params, value",
    [
        ("R-G1-23", {"k": 1}, 6),
        ("R-G1-LUC", {"k": 1}, 2),
        ("R-G1-I-4N", {"n": 1}, 1680),
    ],
)
def test_build_special_examples(ident, params, value):
    lhs, rhs = build_special(ident, **params)
    assert lhs == rhs == value


def test_build_special_rejects_out_of_range():
    with pytest.raises(ValueError):
        build_special("R-EX2-COEF", n=2, k=3)
    with pytest.raises(ValueError):
        build_special("THM1.i", k=-1)
    with pytest.raises(UnknownIdentity):
        build_special("NOPE", k=1)


def test_rho_one_families_fail_at_n_zero():
    # "= 0" only holds from n = 1 on, so the registry starts there
    assert remarks.ex2_rho_one_beta_one(0) == (1, 0)
    lhs, rhs = remarks.ex2_rho_one(0)
    assert lhs == MultiPoly.const(1) and rhs.is_zero()
    assert REGISTRY["R-EX2-RHO1"].params[0].lo == 1
    assert REGISTRY["R-EX2-RHO1-B1"].params[0].lo == 1


def test_specialisations_agree_with_parent_evaluation():
    for ident, d in REGISTRY.items():
        if d.derive is None:
            continue
        for cell in cells(d, GridRanges(10, 10)):
            assert witness(d.build(**cell)[0], d.derive(**cell)[0]) is None, (ident, cell)
            assert witness(d.build(**cell)[1], d.derive(**cell)[1]) is None, (ident, cell)


def test_golden_ratio_identity_is_g1_at_plus_phi():
    # in the (1 + rho) form the Lucas identity comes from rho = +phi; rho = -phi gives other numbers
    phi = QuadExtNum(Fraction(-1, 2), Fraction(1, 2), 5)
    for k in range(1, 6):
        lhs, _ = build_g1(k)
        expected, _ = remarks.phi_lucas(k)
        assert (lhs.evaluate({"rho": phi}) * 4).a == expected
        assert (lhs.evaluate({"rho": -phi}) * 4).a != expected


@pytest.mark.parametrize("n", range(0, 21, 4))
def test_coefficient_comparison_remarks(n):
    for build in (build_ex2, build_ex3):
        lhs, rhs = build(n)
        diff = lhs - rhs
        for k in range(n + 1):
            assert coefficient_of(diff, "rho", k).is_zero()
    for k in range(n + 1):
        assert verify("R-EX2-COEF", n=n, k=k).passed
        assert verify("R-EX3-COEF", n=n, k=k).passed


def test_ex2_and_ex3_agree():
    for n in range(21):
        l2, r2 = build_ex2(n)
        l3, r3 = build_ex3(n)
        assert r2 == r3
        assert l2 == l3


def test_vandermonde():
    for n in range(26):
        assert verify("VANDERMONDE", n=n).passed


# -- engine -------------------------------------------------------------------

def test_verify_pass():
    r = verify("THM1.i", k=5)
    assert r.passed and r.witness is None
    assert r.to_dict()["paper_ref"].startswith("Eq. (G1)")


def perturbed(ident: str):
    d = get(ident)
    return dataclasses.replace(d, both=lambda **p: (d.build(**p)[0], d.build(**p)[1] + 1), derive=None)


def test_perturbed_identity_fails_with_constant_term_witness():
    r = verify(perturbed("THM1.i"), k=4)
    assert r.status == "fail"
    assert r.witness["kind"] == "monomial"
    assert r.witness["monomial"] == "1"
    assert int(r.witness["rhs"]) == int(r.witness["lhs"]) + 1


def test_perturbed_integer_and_rational_identities_fail():
    r = verify(perturbed("R-G1-23"), k=3)
    assert r.status == "fail" and r.witness["kind"] == "value"
    r = verify(perturbed("THM1.iii"), n=2, m=-3)
    assert r.status == "fail" and r.witness["kind"].startswith("cross-multiplied")


def test_crashing_builder_is_a_failure():
    d = dataclasses.replace(get("THM1.i"), both=lambda **p: 1 / 0)
    r = verify(d, k=1)
    assert r.status == "fail" and "ZeroDivisionError" in r.witness["message"]


def test_derivation_mismatch_is_reported():
    d = get("R-G1-23")
    broken = dataclasses.replace(d, derive=lambda k: (d.build(k=k)[0], d.build(k=k)[1] + 1))
    r = verify(broken, k=2)
    assert r.status == "fail" and r.witness["kind"] == "derivation"


def test_empirical_flag_on_negative_m():
    assert verify("THM1.iii", n=3, m=-2).empirical
    assert not verify("THM1.iii", n=3, m=2).empirical


def test_grid_all_pass_small():
    results = verify_grid(None, GridRanges(12, 12))
    summary = summarize(results)
    assert summary["all_pass"], [r.to_dict() for r in results if not r.passed][:3]
    assert summary["identities"] == len(REGISTRY)


def test_grid_is_order_independent_and_parallel_safe():
    ids = ["THM1.iii", "R-G1-13", "THM1.i"]
    ranges = GridRanges(6, 5, (-3, 4))
    a = verify_grid(ids, ranges, workers=1)
    b = verify_grid(list(reversed(ids)), ranges, workers=2)
    key = lambda rs: [(r.id, r.params, r.status) for r in rs]
    assert key(a) == key(b)


def test_cells_respect_schema():
    c = cells(get("R-EX2-COEF"), GridRanges(5, 3))
    assert all(p["k"] <= p["n"] for p in c)
    c = cells(get("THM1.iii"), GridRanges(0, 2, (-2, 1)))
    assert {p["m"] for p in c} == {-2, -1, 0, 1}
    assert {p["m"] for p in cells(get("POCH-ADD"), GridRanges(0, 2, (-2, 1)))} == {0, 1}
