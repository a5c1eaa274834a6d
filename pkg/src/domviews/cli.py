"""Command-line benchmark harness.

    domviews bench <name> [--n K | instance flags] --mode noview|varview|domview|all
                   --runs N --emit csv|text [--limit S] [--backend auto|compiled|python]
    domviews backends [--runs N] [--mode ...]

Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .bench import DEFAULT_SUITE, CountMismatch, compare_backends, emit, run_bench, with_mode
from .domains import BACKEND, available_backends
from .kernel import Mode
from .models import BENCHMARKS, InfeasibleParameters, ModelSpec

MODES = [m.value for m in Mode]


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _orders(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for item in text.split(","):
        if not item.strip():
            continue
        try:
            size, color = item.split(":")
            out.append((int(size), int(color)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"orders are size:color pairs, got {item!r}")
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domviews", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="run one benchmark in one or all modes")
    b.add_argument("name", choices=BENCHMARKS)
    b.add_argument("--n", type=int, help="size for magicseries, langford, knapsack (3-6 items)")
    b.add_argument("--weights", type=_ints, help="knapsack weights, e.g. 2,3,5")
    b.add_argument("--b", type=int, help="knapsack right-hand side")
    b.add_argument("--hi", type=int, default=5, help="knapsack upper bound of every item")
    b.add_argument("--v", type=int, default=7, help="bibd points")
    b.add_argument("--k", type=int, default=3, help="bibd block size")
    b.add_argument("--lam", type=int, default=1, help="bibd pair multiplicity")
    b.add_argument("--orders", type=_orders, help="slab orders as size:color,...")
    b.add_argument("--capacities", type=_ints, help="slab capacities, e.g. 6,5,5")
    b.add_argument("--mode", choices=MODES + ["all"], default="all")
    b.add_argument("--runs", type=int, default=1)
    b.add_argument("--emit", choices=["csv", "text"], default="csv")
    b.add_argument("--limit", type=int, help="stop after this many solutions")
    b.add_argument("--backend", choices=["auto", "compiled", "python"], default="auto")

    k = sub.add_parser("backends", help="time the compiled and pure-Python cores on the suite")
    k.add_argument("--runs", type=int, default=3)
    k.add_argument("--mode", choices=MODES, default=Mode.DOMVIEW.value)
    return parser


def _params(args) -> tuple:
    name = args.name
    if name in ("magicseries", "langford"):
        return (("n", args.n),) if args.n is not None else ()
    if name == "knapsack":
        if args.weights:
            if args.b is None:
                raise ValueError("knapsack with --weights needs --b")
            return (("weights", args.weights), ("b", args.b), ("hi", args.hi))
        return (("n", args.n),) if args.n is not None else ()
    if name == "bibd":
        return (("v", args.v), ("k", args.k), ("lam", args.lam))
    if name == "slab":
        params = []
        if args.orders is not None:
            params.append(("orders", args.orders))
        if args.capacities is not None:
            params.append(("capacities", args.capacities))
        return tuple(params)
    return ()


def _bench(args, parser) -> int:
    if args.runs < 1:
        parser.error("--runs must be >= 1")
    if args.limit is not None and args.limit < 0:
        parser.error("--limit must be >= 0")
    backend = None if args.backend == "auto" else args.backend
    if backend is not None and backend not in available_backends():
        parser.error(f"backend {backend!r} is not available (have: {', '.join(available_backends())})")
    modes = MODES if args.mode == "all" else [args.mode]
    params = _params(args)
    reports = []
    for mode in modes:
        spec = ModelSpec(args.name, params, Mode(mode))
        reports.append(run_bench(spec, args.runs, args.limit, backend))
    sys.stdout.write(emit(reports, args.emit))
    return 0


def _backends(args) -> int:
    print(f"default backend: {BACKEND}; available: {', '.join(available_backends())}", file=sys.stderr)
    rows = compare_backends([with_mode(s, Mode(args.mode)) for s in DEFAULT_SUITE], args.runs)
    cols = list(rows[0])
    print(",".join(cols))
    for row in rows:
        print(",".join(f"{row[c]:.1f}" if isinstance(row[c], float) else str(row[c]) for c in cols))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "bench":
            return _bench(args, parser)
        return _backends(args)
    except (InfeasibleParameters, KeyError, ValueError) as exc:
        print(f"domviews: error: {exc}", file=sys.stderr)
        return 2
    except CountMismatch as exc:
        print(f"domviews: internal assertion: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
