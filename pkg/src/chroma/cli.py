"""Command-line interface.

Subcommands: ``solve`` one instance with one method, ``bench`` a manifest of
cells, ``report`` a results CSV as a comparison table, ``exact`` the
chromatic number of a small instance. Exit status: 0 success, 2 unreadable
or malformed input, 1 internal invariant breach.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import fields
from pathlib import Path
from typing import Optional

from .bench import (InternalInvariantError, compare_report, parse_manifest,
                    read_results_csv, run_benchmark, run_cell)
from .dimacs import DimacsError, load_instance, read_reference_table
from .heuristics import EXACT_VERTEX_LIMIT, chromatic_number_exact
from .search import SolverParams

_OVERRIDE_FLAGS = [
    ("hc-iterations", int), ("sa-iterations", int), ("sa-decrement", float),
    ("ts-iterations", int), ("ts-tabu-length", int), ("ts-num-tweaks", int),
    ("ils-inner-seconds", float), ("ils-total-seconds", float),
    ("ils-queue-length", int), ("ils-perturbation", float),
]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chroma",
        description="Graph coloring via single-state metaheuristics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="color one DIMACS instance")
    solve.add_argument("file", help="DIMACS .col instance")
    solve.add_argument("--method", required=True, choices=["hc", "sa", "ts", "ils"])
    solve.add_argument("--seed", type=int, default=1)
    solve.add_argument("--budget", type=float, default=600.0,
                       help="wall budget in seconds (default 600)")
    solve.add_argument("--references", help="override best-known color table")
    solve.add_argument("--initializer", choices=["dsatur", "random"])
    solve.add_argument("--hc-strict", action="store_true", default=None,
                       help="reject equal-cost moves in hill climbing")
    solve.add_argument("--sa-geometric", action="store_true", default=None,
                       help="cool by a factor instead of a linear decrement")
    for flag, kind in _OVERRIDE_FLAGS:
        solve.add_argument(f"--{flag}", type=kind, default=None)

    bench = sub.add_parser("bench", help="run a benchmark manifest")
    bench.add_argument("--manifest", required=True)
    bench.add_argument("--out", required=True)
    bench.add_argument("--json", action="store_true", help="write JSON instead of CSV")
    bench.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                       help="concurrent cells (default: processor count)")

    report = sub.add_parser("report", help="format a results CSV as a table")
    report.add_argument("--in", dest="input", required=True)

    exact = sub.add_parser("exact", help="exact chromatic number (small graphs)")
    exact.add_argument("file")
    exact.add_argument("--limit", type=int, default=EXACT_VERTEX_LIMIT)

    return parser


def _params_from_args(args: argparse.Namespace) -> SolverParams:
    overrides = {"method": args.method.upper(), "wall_budget_seconds": args.budget}
    names = {f.name for f in fields(SolverParams)}
    for flag, _ in _OVERRIDE_FLAGS:
        name = flag.replace("-", "_")
        value = getattr(args, name)
        if name in names and value is not None:
            overrides[name] = value
    for name in ("initializer", "hc_strict", "sa_geometric"):
        value = getattr(args, name)
        if value is not None:
            overrides[name] = value
    return SolverParams(**overrides)


def _cmd_solve(args: argparse.Namespace) -> int:
    reference = read_reference_table(args.references) if args.references else None
    record = load_instance(args.file, reference)
    result = run_cell(record, args.method.upper(), args.seed, _params_from_args(args))
    line = f"{result.instance} {result.method} seed={result.seed}: k={result.k_colors}"
    if result.best_known is not None:
        line += f" best_known={result.best_known} diff={result.diff_percent:.2f}%"
    line += f" wall={result.wall_seconds:.3f}s"
    print(line)
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    manifest = parse_manifest(args.manifest)
    out_path = Path(args.out)
    fmt = "json" if args.json else "csv"
    with out_path.open("w") as out:
        rows, errors = run_benchmark(manifest, out, fmt=fmt, jobs=args.jobs)
    print(f"wrote {len(rows)} results to {out_path}")
    if errors:
        error_path = out_path.with_name(out_path.name + ".errors.txt")
        error_path.write_text("".join(e + "\n" for e in errors))
        for e in errors:
            print(f"error: {e}", file=sys.stderr)
        print(f"{len(errors)} cell(s) skipped; details in {error_path}", file=sys.stderr)
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    with open(args.input) as stream:
        rows = read_results_csv(stream)
    sys.stdout.write(compare_report(rows))
    return 0


def _cmd_exact(args: argparse.Namespace) -> int:
    record = load_instance(args.file)
    chi, _witness = chromatic_number_exact(record.graph, limit=args.limit)
    print(f"{record.name}: chromatic_number={chi}")
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "solve": _cmd_solve,
        "bench": _cmd_bench,
        "report": _cmd_report,
        "exact": _cmd_exact,
    }
    try:
        return handlers[args.command](args)
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except (DimacsError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
