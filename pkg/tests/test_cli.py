from __future__ import annotations

import subprocess
import sys

import pytest

from domviews import Mode, cli
from domviews import _pycore
from domviews.bench import (
    CSV_HEADER, BenchReport, CountMismatch, compare_backends, emit, parse_csv, run_bench, to_text,
)
from domviews.constraints import LinearLeq
from domviews.kernel import WORD, Engine
from domviews.models import ModelSpec, build
from domviews.search import dfs_first_fail

HEADER = b"bench,mode,runs,mean_cpu_ms,mean_wall_ms,sd_cpu_ms,sd_wall_ms,peak_bytes,propagations,nodes,failures,solutions"


def test_header_bytes():
    assert CSV_HEADER.encode() == HEADER


def test_run_bench_magicseries():
    rep = run_bench(ModelSpec("magicseries", (("n", 4),), Mode.DOMVIEW), runs=3)
    assert rep.solutions == 2 and rep.runs == 3
    one = run_bench(ModelSpec("magicseries", (("n", 4),), Mode.DOMVIEW), runs=1)
    assert one.sd_cpu_ms == 0.0 and one.sd_wall_ms == 0.0


def test_noview_propagates_more():
    nv = run_bench(ModelSpec("magicseries", (("n", 5),), Mode.NOVIEW))
    dv = run_bench(ModelSpec("magicseries", (("n", 5),), Mode.DOMVIEW))
    assert (nv.nodes, nv.failures) == (dv.nodes, dv.failures)
    assert nv.propagations > dv.propagations


def test_emit_shapes():
    rep = run_bench(ModelSpec("langford", (("n", 3),)))
    lines = emit([rep], "csv").splitlines()
    assert len(lines) == 2 and lines[0] == CSV_HEADER
    text = to_text([rep, rep]).splitlines()
    assert len(text) == 3 and len({len(t) for t in text[1:]}) == 1
    assert text[1].split() == lines[1].split(",")
    with pytest.raises(ValueError):
        emit([rep], "json")


def test_csv_round_trip():
    reps = [run_bench(ModelSpec("knapsack", (("n", 3),), m)) for m in Mode]
    parsed = parse_csv(emit(reps))
    for a, b in zip(reps, parsed):
        assert (a.bench, a.mode, a.runs, a.peak_bytes, a.propagations, a.nodes, a.failures, a.solutions) == \
               (b.bench, b.mode, b.runs, b.peak_bytes, b.propagations, b.nodes, b.failures, b.solutions)
        assert b.mean_cpu_ms == round(a.mean_cpu_ms, 1)
    assert parse_csv(emit(parsed)) == parsed


def test_main_csv(capsys):
    assert cli.main(["bench", "magicseries", "--n", "4", "--mode", "all", "--runs", "2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == CSV_HEADER
    assert [r.split(",")[1] for r in out[1:]] == ["noview", "varview", "domview"]
    assert {r.split(",")[-1] for r in out[1:]} == {"2"}


def test_main_text_and_instances(capsys):
    assert cli.main(["bench", "knapsack", "--weights", "2,3", "--b", "8", "--hi", "3",
                     "--mode", "domview", "--emit", "text"]) == 0
    assert "knapsack-weights2.3-b8-hi3" in capsys.readouterr().out
    assert cli.main(["bench", "slab", "--orders", "2:0,2:1", "--capacities", "4,4", "--mode", "noview"]) == 0
    assert cli.main(["bench", "bibd", "--v", "7", "--k", "3", "--lam", "1", "--limit", "1"]) == 0


@pytest.mark.parametrize("argv", [
    ["bench", "sport"],
    ["bench", "magicseries", "--mode", "fast"],
    ["bench", "magicseries", "--runs", "0"],
    ["bench", "knapsack", "--weights", "2,x"],
    [],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2


def test_parameter_errors(capsys):
    assert cli.main(["bench", "bibd", "--v", "6", "--k", "4", "--lam", "1"]) == 2
    assert cli.main(["bench", "knapsack", "--n", "9"]) == 2
    assert cli.main(["bench", "knapsack", "--weights", "2,3"]) == 2
    assert "error" in capsys.readouterr().err


def test_internal_assertion_exit(monkeypatch, capsys):
    def boom(*a, **k):
        raise CountMismatch("differs")

    monkeypatch.setattr(cli, "run_bench", boom)
    assert cli.main(["bench", "magicseries"]) == 1


def test_count_mismatch_detected(monkeypatch):
    import domviews.bench as bench

    calls = {"n": 0}
    real = bench.build

    def flaky(spec, backend=None):
        calls["n"] += 1
        m = real(spec, backend)
        if calls["n"] == 2:
            m.engine.post(LinearLeq(m.vars[:1], 0))
        return m

    monkeypatch.setattr(bench, "build", flaky)
    with pytest.raises(CountMismatch):
        run_bench(ModelSpec("magicseries", (("n", 4),)), runs=2)


def test_backends_command(capsys):
    assert cli.main(["backends", "--runs", "1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("bench,mode,")
    assert len(out) == 6


def test_compare_backends_rows():
    rows = compare_backends([ModelSpec("langford", (("n", 3),))], runs=1)
    assert rows[0]["bench"] == "langford-n3" and "python_wall_ms" in rows[0]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "domviews", "bench", "langford", "--n", "3", "--mode", "domview"],
                          capture_output=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == HEADER


def test_peak_bytes_audit(monkeypatch):
    """Recount trail entries and queue length with independent instrumentation."""
    peak = {"trail": 0, "queue": 0}
    orig_set = _pycore.Trail.set

    def counting_set(self, slot, value):
        orig_set(self, slot, value)
        peak["trail"] = max(peak["trail"], len(self._entries))

    monkeypatch.setattr(_pycore.Trail, "set", counting_set)
    orig_var, orig_val = Engine.schedule_var_event, Engine.schedule_value_event

    def track(fn):
        def wrapped(self, *a):
            fn(self, *a)
            peak["queue"] = max(peak["queue"], len(self.queue))
        return wrapped

    monkeypatch.setattr(Engine, "schedule_var_event", track(orig_var))
    monkeypatch.setattr(Engine, "schedule_value_event", track(orig_val))

    m = build(ModelSpec("magicseries", (("n", 5),), Mode.DOMVIEW), backend="python")
    eng = m.engine
    static = 2 * WORD * eng.trail.num_slots
    static += sum(r.footprint() for r in eng.refs) + sum(WORD * (2 + len(c.scope)) for c in eng.constraints)
    st = dfs_first_fail(eng, m.vars).stats
    assert peak["trail"] > 0 and peak["queue"] > 0
    assert st.peak_bytes == static + 3 * WORD * (peak["trail"] + peak["queue"])


def test_report_fields():
    names = [f for f in BenchReport.__dataclass_fields__]
    assert ",".join(names) == CSV_HEADER
