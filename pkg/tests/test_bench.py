import io

import pytest

from chroma import render_dimacs
from chroma.bench import (BenchManifest, InternalInvariantError, RunResult,
                          compare_report, diff_percent, parse_manifest,
                          run_benchmark, run_cell)
from chroma.dimacs import load_instance
from chroma.search import SolverParams


class TestDiffPercent:
    # the full published-table reproduction lives in the acceptance suite
    @pytest.mark.parametrize("obtained,reference,expected", [
        (6, 5, 20.00),
        (20, 17, 17.65),
        (44, 44, 0.00),
        (46, 44, 4.55),
        (83, 72, 15.28),
    ])
    def test_reference_pairs(self, obtained, reference, expected):
        assert diff_percent(obtained, reference) == expected

    def test_rounds_half_up_not_bankers(self):
        # 100 * 1/800 = 0.125 exactly; half-up gives 0.13, bankers would 0.12
        assert diff_percent(801, 800) == 0.13

    def test_negative_when_better_than_reference(self):
        assert diff_percent(4, 5) == -20.00

    def test_zero_reference_rejected(self):
        with pytest.raises(ValueError):
            diff_percent(5, 0)


class TestManifest:
    def test_full_manifest(self, tmp_path):
        path = tmp_path / "run.manifest"
        path.write_text(
            "# desk-scale protocol\n"
            "instances = a.col, b.col\n"
            "methods = sa, TS\n"
            "seeds = 1, 2\n"
            "budget = 30\n"
            "sa_iterations = 500  # trimmed\n"
            "ils_inner_seconds = 0.5\n"
            "hc_strict = true\n"
        )
        m = parse_manifest(path)
        assert m.instances == ["a.col", "b.col"]
        assert m.methods == ["SA", "TS"]
        assert m.seeds == [1, 2]
        assert m.budget_seconds == 30.0
        assert m.param_overrides == {
            "sa_iterations": 500, "ils_inner_seconds": 0.5, "hc_strict": True,
        }

    def test_seeds_default(self, tmp_path):
        path = tmp_path / "run.manifest"
        path.write_text("instances = a.col\nmethods = hc\n")
        assert parse_manifest(path).seeds == [1, 2, 3]

    @pytest.mark.parametrize("text,match", [
        ("instances = a.col\nmethods = hc\nwhatever = 3\n", "unknown manifest key"),
        ("instances = a.col\nmethods = ga\n", "unknown method"),
        ("methods = hc\n", "no instances"),
        ("instances = a.col\n", "no methods"),
        ("instances = a.col\nmethods = hc\nbadline\n", "key = value"),
    ])
    def test_rejects_malformed(self, tmp_path, text, match):
        path = tmp_path / "bad.manifest"
        path.write_text(text)
        with pytest.raises(ValueError, match=match):
            parse_manifest(path)


def _write_instance(tmp_path, name, n, edges):
    path = tmp_path / f"{name}.col"
    path.write_text(render_dimacs(n, edges))
    return path


@pytest.fixture
def small_manifest(tmp_path):
    a = _write_instance(tmp_path, "tri", 3, [(0, 1), (1, 2), (0, 2)])
    b = _write_instance(tmp_path, "path4", 4, [(0, 1), (1, 2), (2, 3)])
    return BenchManifest(
        instances=[str(a), str(b)],
        methods=["HC", "TS"],
        seeds=[1, 2],
        budget_seconds=5.0,
    )


class TestRunBenchmark:
    def test_cell_grid_and_ordering(self, small_manifest):
        rows, errors = run_benchmark(small_manifest)
        assert errors == []
        assert len(rows) == 2 * 2 * 2
        keys = [(r.instance, r.method, r.seed) for r in rows]
        assert keys == sorted(keys)
        assert all(r.proper for r in rows)

    def test_expected_color_counts(self, small_manifest):
        rows, _ = run_benchmark(small_manifest)
        by_instance = {}
        for r in rows:
            by_instance.setdefault(r.instance, set()).add(r.k_colors)
        assert by_instance["tri"] == {3}
        assert by_instance["path4"] == {2}

    def test_diff_percent_recomputes(self, tmp_path):
        inst = _write_instance(tmp_path, "tri", 3, [(0, 1), (1, 2), (0, 2)])
        refs = tmp_path / "refs.txt"
        refs.write_text("tri 2\n")
        manifest = BenchManifest([str(inst)], ["HC"], [1], 5.0,
                                 references_path=str(refs))
        rows, _ = run_benchmark(manifest)
        assert rows[0].best_known == 2
        assert rows[0].diff_percent == diff_percent(rows[0].k_colors, 2) == 50.0

    def test_missing_instance_skipped_with_error(self, tmp_path):
        inst = _write_instance(tmp_path, "tri", 3, [(0, 1), (1, 2), (0, 2)])
        manifest = BenchManifest(
            [str(inst), str(tmp_path / "ghost.col")], ["HC"], [1], 5.0)
        rows, errors = run_benchmark(manifest)
        assert len(rows) == 1
        assert len(errors) == 1
        assert "ghost.col" in errors[0]

    def test_writes_csv_when_given_stream(self, small_manifest):
        out = io.StringIO()
        rows, _ = run_benchmark(small_manifest, out)
        lines = out.getvalue().splitlines()
        assert lines[0].startswith("instance,method,seed")
        assert len(lines) == len(rows) + 1

    def test_improper_coloring_aborts(self, tmp_path, monkeypatch):
        inst = _write_instance(tmp_path, "tri", 3, [(0, 1), (1, 2), (0, 2)])
        record = load_instance(inst)
        monkeypatch.setattr("chroma.bench.solve_k_reduction",
                            lambda g, p, s, clock: ([0, 0, 0], 3, []))
        with pytest.raises(InternalInvariantError):
            run_cell(record, "HC", 1, SolverParams())

    def test_parallel_jobs_produce_the_same_cells(self, small_manifest):
        serial, _ = run_benchmark(small_manifest, jobs=1)
        parallel, _ = run_benchmark(small_manifest, jobs=2)
        assert [(r.instance, r.method, r.seed, r.k_colors) for r in serial] == \
               [(r.instance, r.method, r.seed, r.k_colors) for r in parallel]


class TestCompareReport:
    def _rows(self):
        return [
            RunResult("g1", "HC", 1, 6, True, 1.0, 5, 20.0),
            RunResult("g1", "SA", 1, 7, True, 1.0, 5, 40.0),
            RunResult("g2", "HC", 1, 9, True, 1.0, None, None),
            RunResult("g2", "SA", 1, 8, True, 1.0, None, None),
        ]

    def test_layout(self):
        report = compare_report(self._rows())
        lines = report.strip().splitlines()
        assert len(lines) == 3  # header + one line per instance
        assert "HC" in lines[0] and "SA" in lines[0]
        assert "Dif.%" in lines[0]

    def test_best_k_is_flagged(self):
        lines = compare_report(self._rows()).splitlines()
        g1 = next(l for l in lines if l.startswith("g1"))
        g2 = next(l for l in lines if l.startswith("g2"))
        assert "6*" in g1 and "7*" not in g1
        assert "8*" in g2 and "9*" not in g2

    def test_missing_reference_shows_dash(self):
        lines = compare_report(self._rows()).splitlines()
        g2 = next(l for l in lines if l.startswith("g2"))
        assert "-" in g2

    def test_absent_methods_omitted(self):
        report = compare_report([RunResult("g1", "TS", 1, 4, True, 0.1, None, None)])
        assert "HC" not in report
        assert "TS" in report

    def test_multiple_seeds_collapse_to_best(self):
        rows = [
            RunResult("g1", "HC", 1, 7, True, 1.0, 5, 40.0),
            RunResult("g1", "HC", 2, 6, True, 1.0, 5, 20.0),
        ]
        report = compare_report(rows)
        assert "6*" in report
        assert "20.00" in report

    def test_empty_rows_rejected(self):
        with pytest.raises(ValueError):
            compare_report([])


# Color counts reported by the published DSJC comparison study, keyed by
# instance: (reference colors, per-method k). Recomputing their diff column
# must reproduce the published percentages exactly.
PUBLISHED_RUNS = {
    "DSJC125.1": (5, {"HC": 6, "SA": 6, "TS": 6, "ILS": 6}),
    "DSJC125.5": (17, {"HC": 20, "SA": 21, "TS": 21, "ILS": 21}),
    "DSJC125.9": (44, {"HC": 46, "SA": 47, "TS": 47, "ILS": 46}),
    "DSJC250.1": (8, {"HC": 10, "SA": 10, "TS": 10, "ILS": 10}),
    "DSJC250.5": (28, {"HC": 35, "SA": 36, "TS": 36, "ILS": 36}),
    "DSJC250.9": (72, {"HC": 81, "SA": 83, "TS": 83, "ILS": 83}),
}

PUBLISHED_DIFFS = {
    "DSJC125.1": {"HC": 20.00, "SA": 20.00, "TS": 20.00, "ILS": 20.00},
    "DSJC125.5": {"HC": 17.65, "SA": 23.53, "TS": 23.53, "ILS": 23.53},
    "DSJC125.9": {"HC": 4.55, "SA": 6.82, "TS": 6.82, "ILS": 4.55},
    "DSJC250.1": {"HC": 25.00, "SA": 25.00, "TS": 25.00, "ILS": 25.00},
    "DSJC250.5": {"HC": 25.00, "SA": 28.57, "TS": 28.57, "ILS": 28.57},
    "DSJC250.9": {"HC": 12.50, "SA": 15.28, "TS": 15.28, "ILS": 15.28},
}


class TestPublishedComparison:
    def _fixture_rows(self):
        rows = []
        for instance, (reference, per_method) in PUBLISHED_RUNS.items():
            for method, k in per_method.items():
                rows.append(RunResult(instance, method, 1, k, True, 0.0,
                                      reference, diff_percent(k, reference)))
        return rows

    def test_recomputed_diffs_match_published_values(self):
        for instance, (reference, per_method) in PUBLISHED_RUNS.items():
            for method, k in per_method.items():
                assert diff_percent(k, reference) == PUBLISHED_DIFFS[instance][method]

    def test_report_renders_published_percentages(self):
        report = compare_report(self._fixture_rows())
        lines = {line.split()[0]: line for line in report.splitlines()[1:]}
        for instance, diffs in PUBLISHED_DIFFS.items():
            for value in diffs.values():
                assert f"{value:.2f}" in lines[instance]

    def test_hill_climbing_flagged_best_where_it_won(self):
        report = compare_report(self._fixture_rows())
        lines = {line.split()[0]: line for line in report.splitlines()[1:]}
        # HC had the lowest k on the .5 and .9 instances; its cell is starred
        assert "20*" in lines["DSJC125.5"]
        assert "46*" in lines["DSJC125.9"]
        assert "35*" in lines["DSJC250.5"]
        assert "81*" in lines["DSJC250.9"]
        assert "21*" not in lines["DSJC125.5"]
