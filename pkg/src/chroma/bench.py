"""Benchmark harness: run (instance x method x seed) cells, record results.

CSV schema: ``instance,method,seed,k_colors,proper,wall_seconds,best_known,
diff_percent`` with wall_seconds at 3 decimals and diff_percent at 2. The
JSON format is an array of objects with the same field names. diff_percent
is 100 * (obtained - reference) / reference, rounded half-up.
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields, replace
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import IO, Optional

from .clock import make_clock
from .dimacs import InstanceRecord, load_instance, read_reference_table
from .graph import is_proper
from .search import METHODS, SearchOutcome, SolverParams, solve_k_reduction

CSV_FIELDS = ("instance", "method", "seed", "k_colors", "proper",
              "wall_seconds", "best_known", "diff_percent")


class InternalInvariantError(RuntimeError):
    """A solver handed back an improper coloring; results must not be trusted."""


@dataclass
class RunResult:
    """One benchmark row: what one (instance, method, seed) cell produced."""

    instance: str
    method: str
    seed: int
    k_colors: int
    proper: bool
    wall_seconds: float
    best_known: Optional[int] = None
    diff_percent: Optional[float] = None


def diff_percent(obtained: int, reference: int) -> float:
    """Percent excess of obtained colors over the reference, half-up to 2 dp."""
    if reference < 1:
        raise ValueError(f"reference color count must be >= 1, got {reference}")
    exact = (Decimal(obtained) - Decimal(reference)) * 100 / Decimal(reference)
    return float(exact.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def write_results(rows: list[RunResult], stream: IO[str], fmt: str = "csv") -> None:
    if fmt == "csv":
        stream.write(",".join(CSV_FIELDS) + "\n")
        for r in rows:
            stream.write(
                f"{r.instance},{r.method},{r.seed},{r.k_colors},"
                f"{str(r.proper).lower()},{r.wall_seconds:.3f},"
                f"{'' if r.best_known is None else r.best_known},"
                f"{'' if r.diff_percent is None else f'{r.diff_percent:.2f}'}\n"
            )
    elif fmt == "json":
        payload = []
        for r in rows:
            entry = asdict(r)
            entry["wall_seconds"] = round(r.wall_seconds, 3)
            payload.append(entry)
        json.dump(payload, stream, indent=2)
        stream.write("\n")
    else:
        raise ValueError(f"unknown results format {fmt!r}")


def read_results_csv(stream: IO[str]) -> list[RunResult]:
    reader = csv.DictReader(stream)
    rows = []
    for rec in reader:
        rows.append(RunResult(
            instance=rec["instance"],
            method=rec["method"],
            seed=int(rec["seed"]),
            k_colors=int(rec["k_colors"]),
            proper=rec["proper"] == "true",
            wall_seconds=float(rec["wall_seconds"]),
            best_known=int(rec["best_known"]) if rec["best_known"] else None,
            diff_percent=float(rec["diff_percent"]) if rec["diff_percent"] else None,
        ))
    return rows


@dataclass
class BenchManifest:
    """Parsed run specification: which cells to execute and with what budget."""

    instances: list[str]
    methods: list[str]
    seeds: list[int]
    budget_seconds: float = 600.0
    references_path: Optional[str] = None
    param_overrides: Optional[dict] = None


_PARAM_KEYS = {f.name for f in fields(SolverParams)} - {"method", "wall_budget_seconds"}
_INT_PARAMS = {"hc_iterations", "sa_iterations", "ts_iterations",
               "ts_tabu_length", "ts_num_tweaks", "ils_queue_length"}
_BOOL_PARAMS = {"hc_strict", "sa_geometric"}


def parse_manifest(path: str | Path) -> BenchManifest:
    """Parse a flat key=value manifest; '#' starts a comment, lists use commas.

    Recognized keys: instances, methods, seeds, budget, references, and any
    solver parameter name (hc_iterations, sa_decrement, ...).
    """
    path = Path(path)
    instances: list[str] = []
    methods: list[str] = []
    seeds: list[int] = []
    budget = 600.0
    references = None
    overrides: dict = {}
    for line_no, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{line_no}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "instances":
            instances.extend(v.strip() for v in value.split(",") if v.strip())
        elif key == "methods":
            for m in (v.strip().upper() for v in value.split(",") if v.strip()):
                if m not in METHODS:
                    raise ValueError(f"{path}:{line_no}: unknown method {m!r}")
                methods.append(m)
        elif key == "seeds":
            seeds.extend(int(v) for v in value.split(",") if v.strip())
        elif key == "budget":
            budget = float(value)
        elif key == "references":
            references = value
        elif key in _PARAM_KEYS:
            if key in _INT_PARAMS:
                overrides[key] = int(value)
            elif key in _BOOL_PARAMS:
                overrides[key] = value.lower() in ("1", "true", "yes")
            elif key == "initializer":
                overrides[key] = value
            else:
                overrides[key] = float(value)
        else:
            raise ValueError(f"{path}:{line_no}: unknown manifest key {key!r}")
    if not instances:
        raise ValueError(f"{path}: manifest names no instances")
    if not methods:
        raise ValueError(f"{path}: manifest names no methods")
    if not seeds:
        seeds = [1, 2, 3]
    return BenchManifest(instances, methods, seeds, budget, references, overrides or None)


def run_cell(record: InstanceRecord, method: str, seed: int,
             params: SolverParams) -> RunResult:
    """Execute one cell, timing the solve only, and verify its witness."""
    params = replace(params, method=method)
    clock = make_clock()
    t0 = clock.now()
    coloring, k, _trace = solve_k_reduction(record.graph, params, seed, clock=clock)
    wall = clock.now() - t0
    if not is_proper(record.graph, coloring):
        raise InternalInvariantError(
            f"solver returned an improper coloring on {record.name} "
            f"(method={method}, seed={seed})"
        )
    best = record.best_known_colors
    return RunResult(
        instance=record.name,
        method=method,
        seed=seed,
        k_colors=k,
        proper=True,
        wall_seconds=wall,
        best_known=best,
        diff_percent=diff_percent(k, best) if best is not None else None,
    )


def _run_cell_args(args) -> RunResult:
    return run_cell(*args)


def run_benchmark(manifest: BenchManifest, out: Optional[IO[str]] = None,
                  fmt: str = "csv", jobs: int = 1) -> tuple[list[RunResult], list[str]]:
    """Execute every (instance x method x seed) cell.

    Instances that fail to load are skipped and reported in the returned
    error list; an improper coloring from a solver aborts the whole run.
    Rows come back sorted by (instance, method, seed) so concurrency never
    changes the output.
    """
    reference = None
    if manifest.references_path is not None:
        reference = read_reference_table(manifest.references_path)
    base = SolverParams(wall_budget_seconds=manifest.budget_seconds,
                        **(manifest.param_overrides or {}))
    errors: list[str] = []
    records: list[InstanceRecord] = []
    for inst_path in manifest.instances:
        try:
            records.append(load_instance(inst_path, reference))
        except (OSError, ValueError) as exc:
            errors.append(f"{inst_path}: {exc}")
    cells = [(rec, method, seed, base)
             for rec in records
             for method in manifest.methods
             for seed in manifest.seeds]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_cell_args, cells))
    else:
        rows = [run_cell(*cell) for cell in cells]
    rows.sort(key=lambda r: (r.instance, r.method, r.seed))
    if out is not None:
        write_results(rows, out, fmt)
    return rows, errors


def compare_report(rows: list[RunResult]) -> str:
    """Text table: one line per instance, a (k, diff%) column pair per method.

    With several seeds the best (lowest) k per cell is shown; the best k on
    each line is starred. Methods absent from the rows are omitted.
    """
    if not rows:
        raise ValueError("no rows to report")
    methods = [m for m in METHODS if any(r.method == m for r in rows)]
    by_cell: dict[tuple[str, str], RunResult] = {}
    for r in rows:
        key = (r.instance, r.method)
        if key not in by_cell or r.k_colors < by_cell[key].k_colors:
            by_cell[key] = r
    instances = sorted({r.instance for r in rows})
    name_width = max(len("instance"), max(len(i) for i in instances))
    header = f"{'instance':<{name_width}}" + "".join(
        f"  {m:>4}  {'Dif.%':>7}" for m in methods
    )
    lines = [header]
    for inst in instances:
        cells = {m: by_cell.get((inst, m)) for m in methods}
        ks = [c.k_colors for c in cells.values() if c is not None]
        best_k = min(ks) if ks else None
        line = f"{inst:<{name_width}}"
        for m in methods:
            cell = cells[m]
            if cell is None:
                line += f"  {'-':>4}  {'-':>7}"
                continue
            star = "*" if cell.k_colors == best_k else ""
            diff = f"{cell.diff_percent:.2f}" if cell.diff_percent is not None else "-"
            line += f"  {str(cell.k_colors) + star:>4}  {diff:>7}"
        lines.append(line)
    return "\n".join(lines) + "\n"
