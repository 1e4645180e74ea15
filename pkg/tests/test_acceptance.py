"""Acceptance criteria, each run at its stated range and tolerance.

Every test prints one ``[PASS]``/``[FAIL]`` line; the lines are repeated in
the terminal summary of the pytest run.
"""

from __future__ import annotations

import dataclasses
import time
from math import comb

import pytest

from conftest import ACCEPTANCE_LINES
from idforge.identities import REGISTRY, GridRanges, get, summarize, verify, verify_grid
from idforge.orthopoly import (
    GAMMA,
    NORMAL,
    connection_gamma,
    connection_normal,
    hermite,
    laguerre,
    laguerre_shift_check,
    monomial_in_hermite,
    monomial_in_laguerre,
)
from idforge.polyalg import MultiPoly, var
from idforge.stochastic import (
    GammaPairSampler,
    closed_moment_gamma,
    closed_moment_normal,
    conditional_mean_trend,
    default_points,
    diff_moment_via_mixed,
    isserlis_moment,
    mc_check,
    mixed_moment,
)

THEOREMS = ["THM1.i", "THM1.ii", "THM1.iii", "THM1.iv", "THM1.v"]


def report(name: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def _failures(results) -> str:
    bad = [f"{r.id}{r.params}" for r in results if not r.passed]
    return ", ".join(bad[:5]) or "none"


def test_theorem_suite():
    t0 = time.perf_counter()
    g = verify_grid(["THM1.i", "THM1.ii"], GridRanges(k_max=60, n_max=0))
    e1 = verify_grid(["THM1.iii"], GridRanges(k_max=0, n_max=40, m_range=(0, 40)))
    ex = verify_grid(["THM1.iv", "THM1.v"], GridRanges(k_max=0, n_max=40))
    results = g + e1 + ex
    elapsed = time.perf_counter() - t0
    s = summarize(results)
    expected = 2 * 61 + 41 * 41 + 2 * 41
    ok = s["all_pass"] and s["cells"] == expected
    report("theorem suite (G1,G2 k<=60; Ex1 n,m<=40; Ex2,Ex3 n<=40; exact)", ok,
           f"{s['cells']} cells, {s['failed']} failed ({_failures(results)}), {elapsed:.1f}s")
    assert ok


def test_remark_suite():
    ids = [i for i in REGISTRY if i not in THEOREMS]
    t0 = time.perf_counter()
    results = verify_grid(ids, GridRanges(k_max=30, n_max=30))
    elapsed = time.perf_counter() - t0
    s = summarize(results)
    covered = {r.id for r in results}
    ok = s["all_pass"] and len(ids) >= 25 and covered == set(ids)
    report("remark/corollary suite (k,n in [0,30], direct and via parent)", ok,
           f"{len(ids)} entries, {s['cells']} cells, {s['failed']} failed ({_failures(results)}), "
           f"{elapsed:.1f}s")
    assert ok


def test_ex1_negative_m_probe():
    results = verify_grid(["THM1.iii"], GridRanges(k_max=0, n_max=15, m_range=(-10, -1)))
    cells = {(r.params["n"], r.params["m"]) for r in results}
    recorded = cells == {(n, m) for n in range(16) for m in range(-10, 0)}
    flagged = all(r.empirical for r in results)
    passed = sum(r.passed for r in results)
    ok = recorded and flagged and passed == len(results)
    report("Ex1 negative-m probe (n in [0,15], m in [-10,-1], RationalFn(beta))", ok,
           f"{len(results)} cells recorded as empirical, {passed} pass, {len(results) - passed} fail")
    assert ok


def test_orthogonal_polynomial_suite():
    t0 = time.perf_counter()
    x, y = var("x"), var("y")
    problems = []
    for j in range(31):
        if MultiPoly.sum_of(hermite(i).coeffs.scale(c) for i, c in monomial_in_hermite(j)) != x**j:
            problems.append(f"hermite round-trip j={j}")
        if MultiPoly.sum_of(laguerre(k).coeffs * c for k, c in monomial_in_laguerre(j)) != x**j:
            problems.append(f"laguerre round-trip j={j}")
    for n in range(21):
        h = hermite(n).coeffs
        rhs = MultiPoly.sum_of(hermite(j).coeffs.scale(comb(n, j)) * y ** (n - j) for j in range(n + 1))
        if h.substitute({"x": x + y}) != rhs:
            problems.append(f"hermite addition n={n}")
    for n in range(11):
        if not laguerre_shift_check(n):
            problems.append(f"laguerre shift n={n}")
    for j in range(31):
        for n in range(31):
            if connection_normal(j, n).is_zero() != (n > j or (j - n) % 2 == 1):
                problems.append(f"normal zero pattern ({j},{n})")
            if connection_gamma(j, n).is_zero() != (n > j):
                problems.append(f"gamma zero pattern ({j},{n})")
    elapsed = time.perf_counter() - t0
    ok = not problems
    report("orthogonal-polynomial suite (round-trips j<=30, addition n<=20, shift n<=10, zero pattern j,n<=30)",
           ok, f"{len(problems)} problems {problems[:3]}, {elapsed:.1f}s")
    assert ok


def test_isserlis_oracle_equivalence():
    bad = [(m, l) for m in range(11) for l in range(11 - m)
           if mixed_moment(NORMAL, m, l) != isserlis_moment(m, l)]
    ok = not bad
    report("oracle equivalence (normal mixed moments vs perfect-matching sum, m+l<=10)", ok,
           f"66 (m,l) pairs, mismatches {bad}")
    assert ok


def test_structural_reproof():
    bad = [(case, n) for case, closed in ((NORMAL, closed_moment_normal), (GAMMA, closed_moment_gamma))
           for n in range(21) if diff_moment_via_mixed(case, n) != closed(n)]
    ok = not bad
    report("structural reproof (binomial sum of mixed moments = closed moment, n<=20, both cases)", ok,
           f"42 polynomial identities, mismatches {bad}")
    assert ok


def test_monte_carlo_cross_validation():
    t0 = time.perf_counter()
    cells = mc_check(default_points(), n_samples=10**6, seed=42)
    elapsed = time.perf_counter() - t0
    failed = [c for c in cells if not c.passed]
    retried = sum(c.attempts > 1 for c in cells)
    worst = max(abs(c.z) for c in cells)
    ok = not failed and len(cells) == 52
    report("Monte Carlo cross-validation (10^6 samples, |z|<=5, one retry per cell)", ok,
           f"{len(cells)} cells, {len(failed)} failed, {retried} retried, max |z| = {worst:.2f}, "
           f"{elapsed:.1f}s")
    assert ok


def test_negative_controls():
    d = get("THM1.iv")
    perturbed = dataclasses.replace(d, both=lambda n: (d.build(n=n)[0], d.build(n=n)[1] + 1))
    r = verify(perturbed, n=6)
    identity_caught = r.status == "fail" and bool(r.witness) and r.witness.get("monomial") == "1"
    good = conditional_mean_trend(GammaPairSampler(2.0, 0.5, rng_seed=42))
    wrong = conditional_mean_trend(GammaPairSampler(2.0, 0.5, rng_seed=42, cond_scale=1.0))
    ok = identity_caught and good.passed and not wrong.passed
    report("negative controls (perturbed identity, wrong conditional scale)", ok,
           f"perturbed witness {r.witness}; trend max |z| correct sampler {good.max_abs_z:.2f}, "
           f"wrong scale {wrong.max_abs_z:.1f}")
    assert ok
