"""idforge command line: verify, list, mc-check and bench.

Exit codes: 0 success, 1 verification or statistical failure, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from pathlib import Path
from typing import Sequence

from .identities.engine import GridRanges, default_workers, summarize, verify, verify_grid
from .identities.registry import REGISTRY, UnknownIdentity, get
from .orthopoly import GAMMA, NORMAL
from .report import FORMATS, envelope, render, table_markdown
from . import stochastic

K_CAP = 100
N_CAP = 80
THEOREMS = ("THM1.i", "THM1.ii", "THM1.iii", "THM1.iv", "THM1.v")

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class ConfigError(Exception):
    pass


# -- argument parsing -------------------------------------------------------

def _int_like(text: str) -> int:
    """Integers written plainly or in float notation such as 1e6."""
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if v != int(v):
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(v)


_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def parse_range(text: str) -> tuple[int, int]:
    m = _RANGE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    # argparse reads "-5..10" or "-0.3" after a flag as another option
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--m-range", "--rho", "--beta"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="idforge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def output_opts(sp, default_fmt="json"):
        sp.add_argument("--format", choices=FORMATS, default=default_fmt)
        sp.add_argument("--output", type=Path, help="write the report here instead of stdout")
        sp.add_argument("--no-timestamp", action="store_true",
                        help="omit the timestamp and per-cell timings for byte-stable reports")

    def id_opts(sp):
        sp.add_argument("--all", action="store_true", help="every registered identity (default)")
        sp.add_argument("--id", dest="ids", action="append", default=[], metavar="ID")

    def range_opts(sp, k=12, n=12):
        sp.add_argument("--k-max", type=int, default=k)
        sp.add_argument("--n-max", type=int, default=n)
        sp.add_argument("--m-range", type=parse_range, default=None, metavar="LO..HI")
        sp.add_argument("--workers", type=int, default=None,
                        help="worker processes (default: $IDFORGE_WORKERS or 1)")

    v = sub.add_parser("verify", help="verify identities over a parameter grid")
    id_opts(v)
    range_opts(v)
    output_opts(v)

    ls = sub.add_parser("list", help="show the identity registry")
    id_opts(ls)
    ls.add_argument("--format", choices=FORMATS, default="markdown")
    ls.add_argument("--output", type=Path)

    mc = sub.add_parser("mc-check", help="Monte Carlo cross-check of the moment formulas")
    mc.add_argument("--case", choices=(NORMAL, GAMMA), default=None)
    mc.add_argument("--rho", type=float, action="append", default=None)
    mc.add_argument("--beta", type=float, action="append", default=None)
    mc.add_argument("--samples", type=_int_like, default=10**6)
    mc.add_argument("--seed", type=int, default=0)
    mc.add_argument("--retries", type=int, default=1)
    output_opts(mc)

    b = sub.add_parser("bench", help="time the exact engine")
    b.add_argument("--id", dest="ids", action="append", default=[], metavar="ID")
    range_opts(b, k=60, n=40)
    b.add_argument("--format", choices=FORMATS, default="markdown")
    b.add_argument("--output", type=Path)
    return p


# -- helpers ----------------------------------------------------------------

def _select_ids(ids: list[str]) -> list[str]:
    for ident in ids:
        get(ident)
    return list(dict.fromkeys(ids)) or list(REGISTRY)


def _check_ranges(k_max: int, n_max: int, m_range) -> None:
    if k_max < 0 or n_max < 0:
        raise ConfigError("ranges must be nonnegative")
    if k_max > K_CAP:
        raise ConfigError(f"--k-max {k_max} exceeds the hard cap {K_CAP}")
    if n_max > N_CAP:
        raise ConfigError(f"--n-max {n_max} exceeds the hard cap {N_CAP}")
    if m_range is not None and max(abs(m_range[0]), abs(m_range[1])) > N_CAP:
        raise ConfigError(f"--m-range must lie within [-{N_CAP},{N_CAP}]")


def _workers(n: int | None) -> int:
    w = default_workers() if n is None else n
    if w < 1:
        raise ConfigError("--workers must be at least 1")
    return w


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text)


def _params_text(params: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in params.items())


# -- subcommands --------------------------------------------------------------

VERIFY_COLUMNS = ["id", "params", "status", "empirical", "elapsed_ms", "paper_ref", "witness"]


def cmd_verify(args) -> int:
    ids = _select_ids(args.ids)
    _check_ranges(args.k_max, args.n_max, args.m_range)
    workers = _workers(args.workers)
    ranges = GridRanges(args.k_max, args.n_max, args.m_range)
    results = verify_grid(ids, ranges, workers)
    timing = not args.no_timestamp
    summary = summarize(results)
    config = {
        "subcommand": "verify", "ids": ids, "k_max": args.k_max, "n_max": args.n_max,
        "m_range": list(args.m_range) if args.m_range else None, "workers": workers,
    }
    rows = [r.to_dict(timing) for r in results]
    doc = envelope(config, rows, summary, timing)
    if args.format == "json":
        text = render(doc, "json", VERIFY_COLUMNS)
    else:
        for r in rows:
            r["params"] = _params_text(r["params"])
            r.setdefault("empirical", False)
        per_id = [{"id": i, **counts} for i, counts in summary["per_identity"].items()]
        extra = "## Per identity\n\n" + _md_counts(per_id)
        text = render(doc, args.format, VERIFY_COLUMNS, "Identity verification",
                      extra if args.format == "markdown" else "")
    _emit(text, args.output)
    status = "all pass" if summary["all_pass"] else f"{summary['failed']} failing cell(s)"
    print(f"verify: {summary['cells']} cells over {summary['identities']} identities, {status}",
          file=sys.stderr)
    return EXIT_OK if summary["all_pass"] else EXIT_FAIL


def _md_counts(rows: list[dict]) -> str:
    return table_markdown(["id", "pass", "fail", "empirical_pass", "empirical_fail"], rows)


LIST_COLUMNS = ["id", "params", "ring", "paper_ref"]


def cmd_list(args) -> int:
    ids = _select_ids(args.ids)
    rows = []
    for ident in ids:
        d = REGISTRY[ident]
        rows.append({
            "id": d.id,
            "params": ", ".join(f"{p.name}>={p.lo}" if p.lo > -(10**6) else f"{p.name} any integer"
                                for p in d.params),
            "ring": d.ring,
            "paper_ref": d.paper_ref,
        })
    _emit(render(rows, args.format, LIST_COLUMNS, "Identity registry"), args.output)
    return EXIT_OK


MC_COLUMNS = ["case", "statistic", "params", "estimate", "std_error", "exact", "z", "attempts", "status"]


def _mc_points(args) -> list[tuple[str, float, float | None]]:
    cases = [args.case] if args.case else [NORMAL, GAMMA]
    pts: list[tuple[str, float, float | None]] = []
    for case in cases:
        if case == NORMAL:
            rhos = args.rho or list(stochastic.NORMAL_RHOS)
            if any(not -1 < r < 1 for r in rhos):
                raise ConfigError("normal requires rho in (-1,1)")
            pts += [(NORMAL, r, None) for r in rhos]
        else:
            rhos = args.rho or list(stochastic.GAMMA_RHOS)
            betas = args.beta or list(stochastic.GAMMA_BETAS)
            if any(not 0 <= r < 1 for r in rhos):
                raise ConfigError("gamma requires rho in [0,1)")
            if any(not b > 0 for b in betas):
                raise ConfigError("gamma requires beta > 0")
            pts += [(GAMMA, r, b) for r in rhos for b in betas]
    return pts


def cmd_mc_check(args) -> int:
    if args.samples < 1000:
        raise ConfigError("--samples must be at least 1000")
    if args.retries < 0:
        raise ConfigError("--retries must be nonnegative")
    points = _mc_points(args)
    if args.samples < 10**5:
        print(f"warning: {args.samples} samples give wide standard errors; "
              f"the gate stays at |z| <= {stochastic.Z_GATE:g}", file=sys.stderr)
    cells = stochastic.mc_check(points, args.samples, args.seed, retries=args.retries)
    rows = [c.to_dict() for c in cells]
    failed = sum(not c.passed for c in cells)
    summary = {"cells": len(cells), "failed": failed, "all_pass": failed == 0,
               "z_gate": stochastic.Z_GATE, "max_abs_z": max(abs(c.z) for c in cells)}
    config = {"subcommand": "mc-check", "case": args.case, "rho": args.rho, "beta": args.beta,
              "samples": args.samples, "seed": args.seed, "retries": args.retries}
    doc = envelope(config, rows, summary, not args.no_timestamp)
    if args.format != "json":
        for r in rows:
            r["params"] = _params_text(r["params"])
    _emit(render(doc, args.format, MC_COLUMNS, "Monte Carlo cross-check"), args.output)
    print(f"mc-check: {len(cells)} cells, {failed} failing, max |z| = {summary['max_abs_z']:.2f}",
          file=sys.stderr)
    return EXIT_OK if failed == 0 else EXIT_FAIL


BENCH_COLUMNS = ["id", "size", "params", "elapsed_ms", "status"]


def _ladder(top: int) -> list[int]:
    return [s for s in (5, 10, 20, 40, 60, 80, 100) if s < top] + [top]


def _bench_params(ident: str, size: int) -> dict | None:
    desc = REGISTRY[ident]
    params = {p.name: max(size, p.lo) for p in desc.params}
    return params if desc.accepts(**params) else None


def cmd_bench(args) -> int:
    ids = _select_ids(args.ids) if args.ids else list(THEOREMS)
    _check_ranges(args.k_max, args.n_max, args.m_range)
    workers = _workers(args.workers)
    ranges = GridRanges(args.k_max, args.n_max, args.m_range)
    rows = []
    for ident in ids:
        uses_k = any(p.bound == "k" for p in REGISTRY[ident].params)
        for size in _ladder(args.k_max if uses_k else args.n_max):
            params = _bench_params(ident, size)
            if params is None:
                continue
            r = verify(ident, params)
            rows.append({"id": ident, "size": size, "params": _params_text(params),
                         "elapsed_ms": round(r.elapsed_ms, 3), "status": r.status})
    t0 = time.perf_counter()
    serial = verify_grid(ids, ranges, workers=1)
    t_serial = time.perf_counter() - t0
    scaling = {"workers": workers, "grid_cells": len(serial), "serial_s": round(t_serial, 3)}
    if workers > 1:
        t0 = time.perf_counter()
        verify_grid(ids, ranges, workers=workers)
        t_par = time.perf_counter() - t0
        scaling.update(parallel_s=round(t_par, 3), speedup=round(t_serial / t_par, 3))
    failed = sum(not r.passed for r in serial) + sum(r["status"] != "pass" for r in rows)
    doc = {"version": "1", "config": {"subcommand": "bench", "ids": ids, "k_max": args.k_max,
                                      "n_max": args.n_max, "workers": workers},
           "results": rows, "summary": {"scaling": scaling, "failed": failed}}
    extra = "## Scaling\n\n" + "\n".join(f"- {k}: {v}" for k, v in scaling.items())
    _emit(render(doc, args.format, BENCH_COLUMNS, "Engine benchmark",
                 extra if args.format == "markdown" else ""), args.output)
    return EXIT_OK if failed == 0 else EXIT_FAIL


COMMANDS = {"verify": cmd_verify, "list": cmd_list, "mc-check": cmd_mc_check, "bench": cmd_bench}


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UnknownIdentity as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
