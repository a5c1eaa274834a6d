"""Benchmark models, each buildable in every engine mode.

Views are requested through :mod:`domviews.modeling`, so the no-view builds
get auxiliary variables and channeling constraints where the view builds get
views.  The solution set of a model does not depend on the mode.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .constraints import alldifferent, bool_clause, linear_eq, linear_leq
from .kernel import Engine, Mode
from .modeling import affine, literal, negation, shift


@dataclass
class Model:
    name: str
    engine: Engine
    vars: list
    limit: Optional[int] = None
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ModelSpec:
    """A benchmark instance: name, its integer parameters and the engine mode."""

    name: str
    params: tuple = ()
    mode: Mode = Mode.DOMVIEW

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", Mode(self.mode))

    def label(self) -> str:
        """Comma-free instance name, e.g. ``langford-n8``."""
        parts = [self.name]
        for key, val in self.params:
            if isinstance(val, (tuple, list)):
                val = ".".join(str(v) for v in _flatten(val))
            parts.append(f"{key}{val}")
        return "-".join(parts)


def _flatten(val):
    for v in val:
        if isinstance(v, (tuple, list)):
            yield from _flatten(v)
        else:
            yield v


class InfeasibleParameters(ValueError):
    """Instance parameters violate a necessary existence condition."""


def build_magicseries(n: int, mode: Mode | str = Mode.DOMVIEW, backend=None) -> Model:
    """``s[i]`` counts the occurrences of ``i`` in ``s``.

    For each ``i``: ``sum_j (s[j] == i) + (-s[i]) == 0`` with literal views (or
    reified auxiliaries) and an affine view for ``-s[i]``.
    """
    if n < 1:
        raise ValueError("magic series needs n >= 1")
    eng = Engine(mode, backend)
    s = [eng.int_var(0, n - 1, name=f"s{i}") for i in range(n)]
    for i in range(n):
        terms = [literal(s[j], i, name=f"s{j}=={i}") for j in range(n)]
        terms.append(affine(s[i], -1, 0, name=f"-s{i}"))
        linear_eq(terms, 0)
    return Model("magicseries", eng, s, params={"n": n})


def build_langford(n: int, mode: Mode | str = Mode.DOMVIEW, backend=None, k: int = 2) -> Model:
    """L(2, n): the two copies of ``i`` sit ``i`` numbers apart in a row of ``2n``.

    ``first[i]`` is the position of the first copy, the second copy is the
    shift view ``first[i] + i + 1``; all ``2n`` positions are different.
    """
    if k != 2:
        raise ValueError("only L(2, n) is modelled")
    if n < 1:
        raise ValueError("langford needs n >= 1")
    eng = Engine(mode, backend)
    last = 2 * n - 1
    first = []
    for i in range(1, n + 1):
        hi = last - (i + 1)
        first.append(eng.int_var(0, max(hi, 0), name=f"p{i}"))
        if hi < 0:
            linear_leq([first[-1]], hi)
    second = [shift(p, i + 1, name=f"q{i}") for i, p in enumerate(first, start=1)]
    alldifferent(first + second)
    return Model("langford", eng, first, params={"n": n})


def build_knapsack(
    weights: Sequence[int],
    b: int,
    ranges: Sequence[tuple[int, int]],
    mode: Mode | str = Mode.DOMVIEW,
    backend=None,
) -> Model:
    """``sum_i weights[i] * x[i] == b`` with ``x[i]`` in ``ranges[i]``; coefficients are views."""
    if len(weights) != len(ranges):
        raise ValueError("weights and ranges differ in length")
    if any(w == 0 for w in weights):
        raise ValueError("knapsack weights must be non-zero")
    eng = Engine(mode, backend)
    xs = [eng.int_var(lo, hi, name=f"x{i}") for i, (lo, hi) in enumerate(ranges)]
    terms = [affine(x, w, 0, name=f"{w}*x{i}") for i, (x, w) in enumerate(zip(xs, weights))]
    linear_eq(terms, b, engine=eng)
    return Model("knapsack", eng, xs, params={"weights": tuple(weights), "b": b, "ranges": tuple(ranges)})


def bibd_shape(v: int, k: int, lam: int) -> tuple[int, int]:
    """Number of blocks and replication ``(b, r)``; raises on violated divisibility."""
    if v < 1 or k < 1 or lam < 0 or k > v:
        raise InfeasibleParameters(f"bad BIBD parameters ({v}, {k}, {lam})")
    if k == 1:
        if v > 1 and lam != 0:
            raise InfeasibleParameters("k=1 blocks cannot hold pairs")
        r = lam
    else:
        if (lam * (v - 1)) % (k - 1):
            raise InfeasibleParameters(f"lambda*(v-1)={lam * (v - 1)} not divisible by k-1={k - 1}")
        r = lam * (v - 1) // (k - 1)
    if (v * r) % k:
        raise InfeasibleParameters(f"v*r={v * r} not divisible by k={k}")
    return v * r // k, r


def build_bibd(v: int, k: int, lam: int, mode: Mode | str = Mode.DOMVIEW, backend=None) -> Model:
    """0/1 incidence matrix of ``v`` points by ``b`` blocks.

    Rows sum to ``r``, columns to ``k``, and any two rows share ``lam`` blocks.
    The conjunction of two cells is stated as ``not(not a or not b)``: an
    auxiliary ``q <=> (not a or not b)`` through clauses over negations, and
    the pair count sums ``not q``.
    """
    b, r = bibd_shape(v, k, lam)
    eng = Engine(mode, backend)
    m = [[eng.int_var(0, 1, name=f"m{i}_{j}") for j in range(b)] for i in range(v)]
    neg = [[negation(m[i][j], name=f"!m{i}_{j}") for j in range(b)] for i in range(v)]
    for i in range(v):
        linear_eq(m[i], r)
    for j in range(b):
        linear_eq([m[i][j] for i in range(v)], k)
    for i1 in range(v):
        for i2 in range(i1 + 1, v):
            both = []
            for j in range(b):
                q = eng.int_var(0, 1, name=f"q{i1}_{i2}_{j}")
                nq = negation(q, name=f"!q{i1}_{i2}_{j}")
                bool_clause([nq, neg[i1][j], neg[i2][j]])
                bool_clause([q, m[i1][j]])
                bool_clause([q, m[i2][j]])
                both.append(nq)
            linear_eq(both, lam)
    cells = [x for row in m for x in row]
    return Model("bibd", eng, cells, limit=1, params={"v": v, "k": k, "lam": lam, "b": b, "r": r})


#: desk-scale steel mill slab instance: (size, color) per order, slab capacities
SLAB_MINI = {
    "orders": ((3, 0), (2, 1), (2, 2), (1, 0), (3, 3), (2, 1), (1, 2), (2, 3)),
    "capacities": (6, 5, 5),
}


def build_slab(
    orders: Sequence[tuple[int, int]],
    capacities: Sequence[int],
    mode: Mode | str = Mode.DOMVIEW,
    backend=None,
    max_colors: int = 2,
) -> Model:
    """Assign each order to a slab within capacity, at most ``max_colors`` colors per slab.

    Loads use ``size * (x[o] == s)`` (affine over literal); the color count uses
    ``has[s][c] <=> OR_{o of color c} (x[o] == s)`` in clauses.
    """
    eng = Engine(mode, backend)
    nslabs = len(capacities)
    if nslabs == 0:
        raise ValueError("slab model needs at least one slab")
    xs = [eng.int_var(0, nslabs - 1, name=f"x{o}") for o in range(len(orders))]
    colors = sorted({c for _, c in orders})
    for s, cap in enumerate(capacities):
        lits = [literal(x, s, name=f"x{o}=={s}") for o, x in enumerate(xs)]
        load = [affine(lit, size, 0, name=f"{size}*x{o}=={s}")
                for o, (lit, (size, _)) in enumerate(zip(lits, orders))]
        if load:
            linear_leq(load, cap)
        has = []
        for c in colors:
            mine = [lits[o] for o, (_, col) in enumerate(orders) if col == c]
            h = eng.int_var(0, 1, name=f"has{s}_{c}")
            bool_clause([negation(h)] + mine)
            for lit in mine:
                bool_clause([h, negation(lit)])
            has.append(h)
        if has:
            linear_leq(has, max_colors)
    return Model("slab", eng, xs, params={"orders": tuple(orders), "capacities": tuple(capacities)})


BENCHMARKS = ("magicseries", "langford", "knapsack", "bibd", "slab")

#: knapsack instances of 3 to 6 items: (weights, b, upper bound of every x)
KNAPSACK_INSTANCES = {
    3: ((2, 3, 5), 20, 6),
    4: ((3, 5, 7, 11), 40, 6),
    5: ((4, 6, 9, 13, 17), 60, 5),
    6: ((5, 7, 11, 13, 17, 19), 80, 4),
}


def build(spec: ModelSpec, backend=None) -> Model:
    """Build a model from a :class:`ModelSpec`."""
    p = dict(spec.params)
    mode = spec.mode
    if spec.name == "magicseries":
        return build_magicseries(p.get("n", 5), mode, backend)
    if spec.name == "langford":
        return build_langford(p.get("n", 4), mode, backend)
    if spec.name == "knapsack":
        if "weights" in p:
            weights = tuple(p["weights"])
            ranges = p.get("ranges") or tuple((0, p.get("hi", 5)) for _ in weights)
            return build_knapsack(weights, p["b"], ranges, mode, backend)
        weights, b, hi = KNAPSACK_INSTANCES[p.get("n", 3)]
        return build_knapsack(weights, b, [(0, hi)] * len(weights), mode, backend)
    if spec.name == "bibd":
        return build_bibd(p.get("v", 7), p.get("k", 3), p.get("lam", 1), mode, backend)
    if spec.name == "slab":
        return build_slab(p.get("orders", SLAB_MINI["orders"]),
                          p.get("capacities", SLAB_MINI["capacities"]), mode, backend)
    raise KeyError(f"unknown benchmark {spec.name!r}; choose from {', '.join(BENCHMARKS)}")
