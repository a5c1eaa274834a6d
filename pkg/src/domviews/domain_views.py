"""Domain views: delegate only domain operations, keep their own watch lists.

The underlying variable (or view) notifies each registered domain view after
every removal.  A view translates the removed value once through its own
function, schedules its watchers with the translated value and forwards the
same translated value to views stacked on top of it.
"""

from __future__ import annotations

from .kernel import WORD, Mode
from .variable_views import InjectiveDelegate
from .variables import VarRef
from .viewfns import Affine, InjectiveFn, Shift


class DomainView(InjectiveDelegate):
    """``y = fn(x)`` for an injective ``fn``, with local ``SC``, ``SC_v`` and views."""

    def __init__(self, x: VarRef, fn: InjectiveFn, name=None) -> None:
        self.sc: list = []
        self.scv: list = []
        self.views: list = []
        super().__init__(x, fn, name)
        x.add_view(self)

    def watch(self, c):
        if c not in self.sc:
            self.sc.append(c)

    def watch_value(self, c):
        if c not in self.scv:
            self.scv.append(c)

    def add_view(self, y):
        if y not in self.views:
            self.views.append(y)

    def wake(self):
        eng = self.engine
        for c in self.sc:
            eng.schedule_var_event(c, self)
        for y in self.views:
            y.wake()

    def wake_value(self, v):
        # v was removed from x; this view lost fn(v)
        w = self.fn.forward(v)
        eng = self.engine
        for c in self.scv:
            eng.schedule_value_event(c, self, w)
        for y in self.views:
            y.wake_value(w)

    def footprint(self):
        # header (x, fn, three list heads) plus list entries
        return WORD * (5 + len(self.sc) + len(self.scv) + len(self.views))


def _check_mode(x: VarRef) -> None:
    if x.engine.mode is not Mode.DOMVIEW:
        raise ValueError(f"domain views need a {Mode.DOMVIEW.value} engine, got {x.engine.mode.value}")


def shift_dview(x: VarRef, k: int, name=None) -> DomainView:
    _check_mode(x)
    return DomainView(x, Shift(k), name)


def affine_dview(x: VarRef, a: int, b: int, name=None) -> DomainView:
    _check_mode(x)
    return DomainView(x, Affine(a, b), name)


def negation_dview(x: VarRef, name=None) -> DomainView:
    return affine_dview(x, -1, 1, name)
