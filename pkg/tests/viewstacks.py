"""Random injective view stacks and their composed reference function."""

from __future__ import annotations

import random

from domviews import Engine, Mode
from domviews.domain_views import DomainView
from domviews.variable_views import VariableView
from domviews.viewfns import Affine, Shift


def random_fns(rng: random.Random, depth: int) -> list[tuple[int, int]]:
    """``depth`` affine layers ``(a, b)``, shifts being ``a == 1``."""
    out = []
    for _ in range(depth):
        if rng.random() < 0.4:
            out.append((1, rng.randint(-5, 5)))
        else:
            out.append((rng.choice([-3, -2, -1, 2, 3]), rng.randint(-4, 4)))
    return out


def chain(layers):
    def psi(v):
        for a, b in layers:
            v = a * v + b
        return v
    return psi


def build_stack(engine: Engine, x, layers):
    cls = VariableView if engine.mode is Mode.VARVIEW else DomainView
    y = x
    for a, b in layers:
        fn = Shift(b) if a == 1 else Affine(a, b)
        y = cls(y, fn)
    return y
