"""Domain views over non-injective functions: generic, literal (reified) and modulo.

A view value can have several supports in the underlying domain and only
disappears when the last one goes.  These views therefore stay silent on
removals that leave their own domain intact; when a view value is lost they
schedule their variable watchers, their value watchers (with the lost view
value) and notify the views stacked on them.
"""

from __future__ import annotations

from .kernel import WORD, Mode
from .variables import VarRef
from .viewfns import Modulo, NonInjectiveFn


class NonInjectiveBase(VarRef):
    def __init__(self, x: VarRef, name=None) -> None:
        self.x = x
        self.sc: list = []
        self.scv: list = []
        self.views: list = []
        self._register(x.engine, name)

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
        # deferred until a view value is actually lost (see _lose)
        pass

    def _lose(self, u: int) -> None:
        eng = self.engine
        for c in self.sc:
            eng.schedule_var_event(c, self)
        for c in self.scv:
            eng.schedule_value_event(c, self, u)
        for y in self.views:
            y.wake()
            y.wake_value(u)

    def footprint(self):
        return WORD * (5 + len(self.sc) + len(self.scv) + len(self.views))


class NonInjectiveView(NonInjectiveBase):
    """``y = fn(x)`` for any total ``fn``; supports are found by preimage lookup."""

    def __init__(self, x: VarRef, fn: NonInjectiveFn, name=None) -> None:
        super().__init__(x, name)
        self.fn = fn
        self._pre: dict[int, list[int]] = {}
        for w in x.values():
            self._pre.setdefault(fn.forward(w), []).append(w)
        x.add_view(self)

    def inverse(self, v: int):
        return self._pre.get(v)

    def member(self, v):
        pre = self._pre.get(v)
        if pre is None:
            return False
        x = self.x
        return any(x.member(w) for w in pre)

    def remove(self, v):
        pre = self._pre.get(v)
        if pre is None:
            return True
        x = self.x
        present = [w for w in pre if x.member(w)]
        # a failing removal leaves x untouched, like a plain wipeout
        if present and len(present) == x.size():
            return False
        for w in present:
            x.remove(w)
        return True

    def bind(self, v):
        if not self.member(v):
            return False
        for u in self.values():
            if u != v and not self.remove(u):
                return False
        return True

    def values(self):
        return sorted(v for v in self._pre if self.member(v))

    def wake_value(self, w):
        v = self.fn.forward(w)
        if not self.member(v):
            self._lose(v)

    def footprint(self):
        return super().footprint() + WORD * sum(1 + len(p) for p in self._pre.values())


class LiteralView(NonInjectiveBase):
    """The 0/1 truth value of ``x == i``."""

    def __init__(self, x: VarRef, i: int, name=None) -> None:
        super().__init__(x, name)
        self.i = i
        x.add_view(self)

    def member(self, v):
        if v == 0:
            return not self.x.is_bound_to(self.i)
        if v == 1:
            return self.x.member(self.i)
        return False

    def remove(self, v):
        if v == 0:
            return self.x.bind(self.i)
        if v == 1:
            return self.x.remove(self.i)
        return True

    def bind(self, v):
        if v == 1:
            return self.x.bind(self.i)
        if v == 0:
            return self.x.remove(self.i)
        return False

    def values(self):
        return [v for v in (0, 1) if self.member(v)]

    def size(self):
        return self.member(0) + self.member(1)

    def min(self):
        return 0 if self.member(0) else 1

    def max(self):
        return 1 if self.x.member(self.i) else 0

    def is_bound_to(self, v):
        if v == 1:
            return self.x.is_bound_to(self.i)
        if v == 0:
            return not self.x.member(self.i)
        return False

    def wake_value(self, v):
        if v == self.i:
            self._lose(1)
        elif not self.member(0):
            self._lose(0)


class ModuloView(NonInjectiveBase):
    """``y = x mod k`` with one reversible support counter per residue."""

    def __init__(self, x: VarRef, k: int, name=None) -> None:
        if k <= 0:
            raise ValueError(f"modulus must be positive, got {k}")
        super().__init__(x, name)
        self.k = k
        self.fn = Modulo(k)
        counts = [0] * k
        for w in x.values():
            counts[w % k] += 1
        trail = self.engine.trail
        self._slots = [trail.new_slot(n) for n in counts]
        x.add_view(self)

    def support_count(self, v: int) -> int:
        return self.engine.trail.get(self._slots[v])

    def supports(self, v: int) -> list[int]:
        k = self.k
        return [w for w in self.x.values() if w % k == v]

    def member(self, v):
        return 0 <= v < self.k and self.engine.trail.get(self._slots[v]) > 0

    def remove(self, v):
        if not self.member(v):
            return True
        x = self.x
        if self.support_count(v) == x.size():
            return False
        for w in self.supports(v):
            x.remove(w)
        return True

    def bind(self, v):
        if not self.member(v):
            return False
        k = self.k
        for w in self.x.values():
            if w % k != v and not self.x.remove(w):
                return False
        return True

    def values(self):
        get = self.engine.trail.get
        return [r for r, s in enumerate(self._slots) if get(s) > 0]

    def wake_value(self, w):
        r = w % self.k
        trail = self.engine.trail
        slot = self._slots[r]
        n = trail.get(slot) - 1
        trail.set(slot, n)
        if n == 0:
            self._lose(r)

    def footprint(self):
        return super().footprint() + WORD * self.k


def _check_mode(x: VarRef) -> None:
    if x.engine.mode is not Mode.DOMVIEW:
        raise ValueError(f"non-injective views need a {Mode.DOMVIEW.value} engine, got {x.engine.mode.value}")


def literal_view(x: VarRef, i: int, name=None) -> LiteralView:
    _check_mode(x)
    return LiteralView(x, i, name)


def modulo_view(x: VarRef, k: int, name=None) -> ModuloView:
    _check_mode(x)
    return ModuloView(x, k, name)


def noninjective_view(x: VarRef, fn: NonInjectiveFn, name=None) -> NonInjectiveView:
    _check_mode(x)
    return NonInjectiveView(x, fn, name)
