"""Repeated benchmark runs and their CSV / text reports."""

from __future__ import annotations

import csv
import io
import statistics
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Optional

from .domains import available_backends
from .kernel import Mode
from .models import ModelSpec, build
from .search import dfs_first_fail

CSV_HEADER = (
    "bench,mode,runs,mean_cpu_ms,mean_wall_ms,sd_cpu_ms,sd_wall_ms,"
    "peak_bytes,propagations,nodes,failures,solutions"
)

_FLOAT_FIELDS = {"mean_cpu_ms", "mean_wall_ms", "sd_cpu_ms", "sd_wall_ms"}


@dataclass
class BenchReport:
    bench: str
    mode: str
    runs: int
    mean_cpu_ms: float
    mean_wall_ms: float
    sd_cpu_ms: float
    sd_wall_ms: float
    peak_bytes: int
    propagations: int
    nodes: int
    failures: int
    solutions: int


class CountMismatch(AssertionError):
    """Count-type statistics differed between repetitions of one benchmark."""


def _sd(xs: list[float]) -> float:
    return statistics.stdev(xs) if len(xs) > 1 else 0.0


def run_bench(spec: ModelSpec, runs: int = 1, limit: Optional[int] = None, backend=None) -> BenchReport:
    """Build and search ``spec`` ``runs`` times; counts must agree across runs."""
    if runs < 1:
        raise ValueError("runs must be >= 1")
    cpu, wall, counts = [], [], None
    for _ in range(runs):
        model = build(spec, backend)
        lim = limit if limit is not None else model.limit
        out = dfs_first_fail(model.engine, model.vars, limit=lim, keep_solutions=False)
        st = out.stats
        cpu.append(st.cpu_ms)
        wall.append(st.wall_ms)
        c = (st.peak_bytes, st.propagations, st.nodes, st.failures, st.solutions)
        if counts is None:
            counts = c
        elif c != counts:
            raise CountMismatch(f"{spec.label()} {spec.mode.value}: counts {c} != {counts}")
    return BenchReport(
        spec.label(), spec.mode.value, runs,
        statistics.fmean(cpu), statistics.fmean(wall), _sd(cpu), _sd(wall),
        *counts,
    )


def _cells(r: BenchReport) -> list[str]:
    out = []
    for f, v in zip(fields(BenchReport), astuple(r)):
        out.append(f"{v:.1f}" if f.name in _FLOAT_FIELDS else str(v))
    return out


def to_csv(reports: Iterable[BenchReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    buf.write(CSV_HEADER + "\n")
    for r in reports:
        w.writerow(_cells(r))
    return buf.getvalue()


def to_text(reports: Iterable[BenchReport]) -> str:
    rows = [CSV_HEADER.split(",")] + [_cells(r) for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        # names left-aligned, numbers right-aligned
        cells = [c.ljust(w) if i < 2 else c.rjust(w) for i, (c, w) in enumerate(zip(row, widths))]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def emit(reports: Iterable[BenchReport], fmt: str = "csv") -> str:
    reports = list(reports)
    if fmt == "csv":
        return to_csv(reports)
    if fmt == "text":
        return to_text(reports)
    raise ValueError(f"unknown format {fmt!r}")


def parse_csv(text: str) -> list[BenchReport]:
    reader = csv.DictReader(io.StringIO(text))
    out = []
    for row in reader:
        kw = {}
        for f in fields(BenchReport):
            raw = row[f.name]
            if f.name in ("bench", "mode"):
                kw[f.name] = raw
            elif f.name in _FLOAT_FIELDS:
                kw[f.name] = float(raw)
            else:
                kw[f.name] = int(raw)
        out.append(BenchReport(**kw))
    return out


def compare_backends(specs: Iterable[ModelSpec], runs: int = 3) -> list[dict]:
    """Time each spec on every available backend; counts must not depend on the backend."""
    rows = []
    for spec in specs:
        per = {}
        for backend in available_backends():
            rep = run_bench(spec, runs, backend=backend)
            per[backend] = rep
        counts = {b: (r.propagations, r.nodes, r.failures, r.solutions) for b, r in per.items()}
        if len(set(counts.values())) != 1:
            raise CountMismatch(f"{spec.label()}: backends disagree {counts}")
        row = {"bench": spec.label(), "mode": spec.mode.value}
        for b, r in per.items():
            row[f"{b}_wall_ms"] = r.mean_wall_ms
        if "compiled" in per:
            row["speedup"] = per["python"].mean_wall_ms / max(per["compiled"].mean_wall_ms, 1e-9)
        rows.append(row)
    return rows


DEFAULT_SUITE = (
    ModelSpec("magicseries", (("n", 7),)),
    ModelSpec("langford", (("n", 8),)),
    ModelSpec("knapsack", (("n", 6),)),
    ModelSpec("bibd", (("v", 7), ("k", 3), ("lam", 1))),
    ModelSpec("slab"),
)


def with_mode(spec: ModelSpec, mode: Mode) -> ModelSpec:
    return ModelSpec(spec.name, spec.params, Mode(mode))
