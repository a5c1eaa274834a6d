"""Variable views: stateless adapters delegating domain AND watch operations.

A variable view ``y = fn(x)`` stores no domain and no constraint lists.  Its
watchers are registered on the underlying host as ``(c, y)`` pairs and value
events reach them through the recursive :meth:`VariableView.map`.
"""

from __future__ import annotations

from .kernel import WORD, Mode
from .variables import VarRef
from .viewfns import Affine, InjectiveFn, Monotonicity, Shift, compose

MONOTONE = Monotonicity.MONOTONE
ANTI_MONOTONE = Monotonicity.ANTI_MONOTONE


class InjectiveDelegate(VarRef):
    """Domain operations of a view over an injective function."""

    def __init__(self, x: VarRef, fn: InjectiveFn, name=None) -> None:
        self.x = x
        self.fn = fn
        self._register(x.engine, name)

    def member(self, v):
        w = self.fn.inverse(v)
        return w is not None and self.x.member(w)

    def remove(self, v):
        w = self.fn.inverse(v)
        if w is None:
            return True
        return self.x.remove(w)

    def bind(self, v):
        w = self.fn.inverse(v)
        if w is None:
            return False
        return self.x.bind(w)

    def is_bound_to(self, v):
        w = self.fn.inverse(v)
        return w is not None and self.x.is_bound_to(w)

    def size(self):
        return self.x.size()

    def values(self):
        fwd = self.fn.forward
        return sorted(fwd(w) for w in self.x.values())

    def min(self):
        mono = self.fn.monotonicity
        if mono is MONOTONE:
            return self.fn.forward(self.x.min())
        if mono is ANTI_MONOTONE:
            return self.fn.forward(self.x.max())
        return VarRef.min(self)

    def max(self):
        mono = self.fn.monotonicity
        if mono is MONOTONE:
            return self.fn.forward(self.x.max())
        if mono is ANTI_MONOTONE:
            return self.fn.forward(self.x.min())
        return VarRef.max(self)

    def update_min(self, v):
        mono = self.fn.monotonicity
        if mono is MONOTONE:
            return self.x.update_min(self.fn.ceil_inverse(v))
        if mono is ANTI_MONOTONE:
            return self.x.update_max(self.fn.ceil_inverse(v))
        return VarRef.update_min(self, v)

    def update_max(self, v):
        mono = self.fn.monotonicity
        if mono is MONOTONE:
            return self.x.update_max(self.fn.floor_inverse(v))
        if mono is ANTI_MONOTONE:
            return self.x.update_min(self.fn.floor_inverse(v))
        return VarRef.update_max(self, v)


class VariableView(InjectiveDelegate):
    """``y = fn(x)`` delegating watches to the host as ``(c, y)`` entries."""

    def watch(self, c):
        self.x.watch_for(c, self)

    def watch_value(self, c):
        self.x.watch_value_for(c, self, self.fn.forward)

    def watch_for(self, c, z):
        self.x.watch_for(c, z)

    def watch_value_for(self, c, z, fn=None):
        # fn is only used by function-storing hosts
        self.x.watch_value_for(c, z, compose(fn, self.fn.forward) if fn is not None else None)

    def map(self, v):
        return self.fn.forward(self.x.map(v))

    def footprint(self):
        # object header plus x and fn references
        return 2 * WORD


def _check_mode(x: VarRef) -> None:
    if x.engine.mode is not Mode.VARVIEW:
        raise ValueError(f"variable views need a {Mode.VARVIEW.value} engine, got {x.engine.mode.value}")


def shift_view(x: VarRef, k: int, name=None) -> VariableView:
    _check_mode(x)
    return VariableView(x, Shift(k), name)


def affine_view(x: VarRef, a: int, b: int, name=None) -> VariableView:
    _check_mode(x)
    return VariableView(x, Affine(a, b), name)


def negation_view(x: VarRef, name=None) -> VariableView:
    """``1 - x`` over a 0/1 variable."""
    return affine_view(x, -1, 1, name)
