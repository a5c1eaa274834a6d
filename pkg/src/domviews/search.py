"""Depth-first search with first-fail branching."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .kernel import Engine, RunStats


@dataclass
class SearchOutcome:
    solutions: list[tuple[int, ...]] = field(default_factory=list)
    stats: RunStats = field(default_factory=RunStats)

    def node_count(self) -> int:
        return self.stats.nodes

    def failure_count(self) -> int:
        return self.stats.failures


class _LimitReached(Exception):
    pass


def select_first_fail(xs: Sequence) -> Optional[int]:
    """Index of an unbound variable of smallest domain, earliest on ties."""
    best = None
    best_size = 0
    for k, x in enumerate(xs):
        s = x.size()
        if s > 1 and (best is None or s < best_size):
            best = k
            best_size = s
            if s == 2:
                break
    return best


def dfs_first_fail(
    engine: Engine,
    xs: Sequence,
    limit: Optional[int] = None,
    verify: bool = True,
    keep_solutions: bool = True,
) -> SearchOutcome:
    """Explore the model rooted at the engine's current state.

    Runs the root fixpoint, then branches on the first-fail variable, trying
    its values in increasing order (one child per value).  ``nodes`` counts the
    root plus every bind attempt; ``failures`` counts children (or the root)
    whose fixpoint failed.  With ``verify`` each solution is re-checked against
    every posted constraint.
    """
    xs = list(xs)
    stats = engine.stats
    out = SearchOutcome(stats=stats)
    cpu0 = time.process_time()
    wall0 = time.perf_counter()
    base_depth = engine.depth

    def record() -> None:
        if verify:
            for c in engine.constraints:
                if not c.satisfied():
                    raise AssertionError(f"solution violates {c!r}")
        stats.solutions += 1
        if keep_solutions:
            out.solutions.append(tuple(x.value() for x in xs))
        if limit is not None and stats.solutions >= limit:
            raise _LimitReached

    def dfs() -> None:
        k = select_first_fail(xs)
        if k is None:
            record()
            return
        x = xs[k]
        for v in x.values():
            stats.nodes += 1
            engine.push_frame()
            if x.bind(v) and engine.propagate():
                dfs()
            else:
                stats.failures += 1
            engine.pop_frame()

    stats.nodes += 1
    try:
        if not engine.propagate():
            stats.failures += 1
        elif limit is None or limit > 0:
            dfs()
    except _LimitReached:
        pass
    finally:
        while engine.depth > base_depth:
            engine.pop_frame()
    stats.cpu_ms = (time.process_time() - cpu0) * 1000.0
    stats.wall_ms = (time.perf_counter() - wall0) * 1000.0
    stats.peak_bytes = engine.peak_bytes()
    return out
