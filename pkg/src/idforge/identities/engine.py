"""Exact verification of registered identities, singly or over a parameter grid."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..polyalg import MultiPoly, RationalFn, VARS
from .registry import ORDER, REGISTRY, IdentityDescriptor, get

PASS = "pass"
FAIL = "fail"


@dataclass
class VerificationResult:
    id: str
    params: dict
    status: str
    witness: dict | None = None
    elapsed_ms: float = 0.0
    paper_ref: str = ""
    empirical: bool = False

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def sort_key(self):
        return ORDER.get(self.id, len(ORDER)), tuple(self.params.values())

    def to_dict(self, timing: bool = True) -> dict:
        out = {"id": self.id, "params": dict(self.params), "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        out["elapsed_ms"] = round(self.elapsed_ms, 3) if timing else None
        out["paper_ref"] = self.paper_ref
        if self.empirical:
            out["empirical"] = True
        return out


def _monomial_str(exps) -> str:
    parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, exps) if e]
    return "*".join(parts) or "1"


def _poly_witness(a: MultiPoly, b: MultiPoly, kind: str = "monomial") -> dict | None:
    diff = a - b
    if diff.is_zero():
        return None
    exps, _ = diff.sorted_terms()[0]
    ta, tb = a.terms, b.terms
    return {
        "kind": kind,
        "monomial": _monomial_str(exps),
        "lhs": str(ta.get(exps, 0)),
        "rhs": str(tb.get(exps, 0)),
    }


def witness(lhs, rhs) -> dict | None:
    """None when the sides agree, else the first point of disagreement."""
    if isinstance(lhs, RationalFn) or isinstance(rhs, RationalFn):
        l, r = RationalFn._lift(lhs), RationalFn._lift(rhs)
        return _poly_witness(l.num * r.den, r.num * l.den, kind="cross-multiplied monomial")
    if isinstance(lhs, MultiPoly) or isinstance(rhs, MultiPoly):
        return _poly_witness(MultiPoly._lift(lhs), MultiPoly._lift(rhs))
    if isinstance(lhs, tuple):
        for i, (a, b) in enumerate(zip(lhs, rhs)):
            w = witness(a, b)
            if w is not None:
                w["component"] = i
                return w
        return None
    if lhs == rhs:
        return None
    return {"kind": "value", "lhs": str(lhs), "rhs": str(rhs)}


def _derivation_witness(desc: IdentityDescriptor, params: dict, lhs, rhs) -> dict | None:
    d_lhs, d_rhs = desc.derive(**params)
    for side, direct, via_parent in (("lhs", lhs, d_lhs), ("rhs", rhs, d_rhs)):
        w = witness(direct, via_parent)
        if w is not None:
            return {"kind": "derivation", "side": side, "detail": w}
    return None


def verify(ident: str | IdentityDescriptor, params: dict | None = None,
           check_derivation: bool = True, **kw) -> VerificationResult:
    """Build both sides and compare them exactly.

    When the descriptor carries a derivation from its parent identity, the
    directly built sides must also match the derived ones.
    """
    desc = get(ident) if isinstance(ident, str) else ident
    params = dict(params or {}, **kw)
    start = time.perf_counter()
    empirical = bool(desc.empirical and desc.empirical(**params))
    try:
        lhs, rhs = desc.build(**params)
        w = witness(lhs, rhs)
        if w is None and check_derivation and desc.derive is not None:
            w = _derivation_witness(desc, params, lhs, rhs)
    except Exception as exc:  # a crashing builder is a failed check, not an abort
        w = {"kind": "error", "message": f"{type(exc).__name__}: {exc}"}
    elapsed = (time.perf_counter() - start) * 1000
    return VerificationResult(
        desc.id, params, PASS if w is None else FAIL, w, elapsed, desc.paper_ref, empirical
    )


@dataclass(frozen=True)
class GridRanges:
    k_max: int = 12
    n_max: int = 12
    m_range: tuple[int, int] | None = None


def cells(desc: IdentityDescriptor, ranges: GridRanges) -> list[dict]:
    """Every admissible parameter assignment of ``desc`` within ``ranges``."""
    axes = []
    for p in desc.params:
        if p.bound == "k":
            lo, hi = p.lo, ranges.k_max
        elif p.bound == "m":
            lo, hi = ranges.m_range if ranges.m_range is not None else (0, ranges.n_max)
            lo = max(lo, p.lo)
        else:
            lo, hi = p.lo, ranges.n_max
        axes.append((p.name, range(lo, hi + 1)))
    out = [{}]
    for name, values in axes:
        out = [dict(c, **{name: v}) for c in out for v in values]
    return [c for c in out if desc.accepts(**c)]


def _run_cell(cell: tuple[str, dict]) -> VerificationResult:
    ident, params = cell
    return verify(ident, params)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("IDFORGE_WORKERS", "1")))
    except ValueError:
        return 1


def verify_grid(ids: Sequence[str] | None, ranges: GridRanges,
                workers: int | None = None) -> list[VerificationResult]:
    """Verify every cell of every identity; results are sorted by (registry order, params)."""
    ids = list(REGISTRY) if ids is None else list(ids)
    for ident in ids:
        get(ident)
    todo = [(ident, c) for ident in ids for c in cells(REGISTRY[ident], ranges)]
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(todo) < 2:
        results = [_run_cell(c) for c in todo]
    else:
        # big cells first so stragglers do not serialize the tail
        todo.sort(key=lambda c: -sum(abs(v) for v in c[1].values()))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_cell, todo, chunksize=1))
    results.sort(key=VerificationResult.sort_key)
    return results


def summarize(results: Iterable[VerificationResult]) -> dict:
    per_id: dict[str, dict] = {}
    for r in results:
        s = per_id.setdefault(r.id, {"pass": 0, "fail": 0, "empirical_pass": 0, "empirical_fail": 0})
        s[r.status] += 1
        if r.empirical:
            s[f"empirical_{r.status}"] += 1
    total_fail = sum(s["fail"] for s in per_id.values())
    return {
        "identities": len(per_id),
        "cells": sum(s["pass"] + s["fail"] for s in per_id.values()),
        "failed": total_fail,
        "all_pass": total_fail == 0,
        "per_identity": per_id,
    }
