"""Plain domain variables and the common VarRef surface shared with views.

Three variable implementations exist, one per view regime:

* :class:`IntVar` keeps ``SC``/``SC_v`` as constraint lists and notifies the
  domain views registered through :meth:`IntVar.add_view` after its own
  watchers.  It serves both NOVIEW (no views ever registered) and DOMVIEW.
* :class:`HostVar` is the variable-view host: its watch lists hold
  ``(constraint, watcher)`` pairs and value events are translated with
  ``watcher.map(v)``.
* :class:`FnHostVar` stores ``(constraint, watcher, fn)`` triples instead of
  relying on ``map``.  It exists to check that both hosts emit the same events.
"""

from __future__ import annotations

from .domains import Status
from .kernel import WORD
from .viewfns import identity

CHANGED = Status.CHANGED
WIPEOUT = Status.WIPEOUT


class VarRef:
    """Anything constraints can be posted on: a variable or a view.

    Domain operations return ``True`` on success and ``False`` when the
    underlying domain would be wiped out.
    """

    engine = None
    name = None

    def _register(self, engine, name) -> None:
        self.engine = engine
        self.index = engine.register(self)
        self.name = name if name is not None else f"_{self.index}"

    # domain surface
    def member(self, v: int) -> bool:
        raise NotImplementedError

    def remove(self, v: int) -> bool:
        raise NotImplementedError

    def bind(self, v: int) -> bool:
        raise NotImplementedError

    def values(self) -> list[int]:
        raise NotImplementedError

    def size(self) -> int:
        return len(self.values())

    def min(self) -> int:
        return self.values()[0]

    def max(self) -> int:
        return self.values()[-1]

    def is_bound_to(self, v: int) -> bool:
        return self.size() == 1 and self.member(v)

    def update_min(self, v: int) -> bool:
        # value-by-value fallback; bound-aware subclasses override
        if v > self.max():
            return False
        for u in self.values():
            if u >= v:
                break
            if not self.remove(u):
                return False
        return True

    def update_max(self, v: int) -> bool:
        if v < self.min():
            return False
        for u in reversed(self.values()):
            if u <= v:
                break
            if not self.remove(u):
                return False
        return True

    def is_bound(self) -> bool:
        return self.size() == 1

    def value(self) -> int:
        if self.size() != 1:
            raise ValueError(f"{self.name} is not bound: {self.values()}")
        return self.min()

    # constraint surface
    def watch(self, c) -> None:
        raise NotImplementedError

    def watch_value(self, c) -> None:
        raise NotImplementedError

    def wake(self) -> None:
        pass

    def wake_value(self, v: int) -> None:
        pass

    def add_view(self, y) -> None:
        raise TypeError(f"{type(self).__name__} does not accept domain views")

    def map(self, v: int) -> int:
        raise TypeError(f"{type(self).__name__} has no map (variable-view mode only)")

    def footprint(self) -> int:
        return 0

    def __repr__(self) -> str:
        return f"{self.name}{self.values()}"


class IntVar(VarRef):
    """A domain variable with its own watch lists and the list of views over it."""

    def __init__(self, engine, dom, name=None) -> None:
        self.dom = dom
        self.sc: list = []
        self.scv: list = []
        self.views: list = []
        self._register(engine, name)

    def member(self, v):
        return self.dom.member(v)

    def values(self):
        return self.dom.values()

    def size(self):
        return self.dom.size()

    def min(self):
        return self.dom.min()

    def max(self):
        return self.dom.max()

    def is_bound_to(self, v):
        return self.dom.is_bound_to(v)

    def map(self, v):
        return v

    def remove(self, v):
        st = self.dom.remove(v)
        if st == CHANGED:
            self._lost(v)
            return True
        return st != WIPEOUT

    def _lost(self, v) -> None:
        self.wake()
        self.wake_value(v)
        for y in self.views:
            y.wake()
            y.wake_value(v)

    def _remove_each(self, removed) -> None:
        # views may inspect the domain while being notified, so each value
        # is removed and announced before the next one goes
        dom = self.dom
        for w in removed:
            dom.remove(w)
            self._lost(w)

    def bind(self, v):
        dom = self.dom
        if not dom.member(v):
            return False
        if self.views:
            self._remove_each([w for w in dom.values() if w != v])
        else:
            _, removed = dom.bind(v)
            self._announce(removed)
        return True

    def update_min(self, v):
        dom = self.dom
        if v <= dom.min():
            return True
        if v > dom.max():
            return False
        if self.views:
            self._remove_each([w for w in dom.values() if w < v])
        else:
            _, removed = dom.update_min(v)
            self._announce(removed)
        return True

    def update_max(self, v):
        dom = self.dom
        if v >= dom.max():
            return True
        if v < dom.min():
            return False
        if self.views:
            self._remove_each([w for w in dom.values() if w > v])
        else:
            _, removed = dom.update_max(v)
            self._announce(removed)
        return True

    def _announce(self, removed) -> None:
        if removed:
            self.wake()
            for w in removed:
                self.wake_value(w)

    def watch(self, c):
        if c not in self.sc:
            self.sc.append(c)

    def watch_value(self, c):
        if c not in self.scv:
            self.scv.append(c)

    def wake(self):
        eng = self.engine
        for c in self.sc:
            eng.schedule_var_event(c, self)

    def wake_value(self, v):
        eng = self.engine
        for c in self.scv:
            eng.schedule_value_event(c, self, v)

    def add_view(self, y):
        if y not in self.views:
            self.views.append(y)

    def footprint(self):
        # dense + sparse arrays, one word per list entry, three list heads
        return WORD * (2 * self.dom.universe_size + len(self.sc) + len(self.scv) + len(self.views) + 3)


class HostVar(IntVar):
    """Variable hosting variable views: watch lists of ``(constraint, watcher)`` pairs."""

    def watch(self, c):
        self.watch_for(c, self)

    def watch_value(self, c):
        self.watch_value_for(c, self, identity)

    def watch_for(self, c, z) -> None:
        for e in self.sc:
            if e[0] is c and e[1] is z:
                return
        self.sc.append((c, z))

    def watch_value_for(self, c, z, fn=None) -> None:
        for e in self.scv:
            if e[0] is c and e[1] is z:
                return
        self.scv.append((c, z))

    def wake(self):
        eng = self.engine
        for c, z in self.sc:
            eng.schedule_var_event(c, z)

    def wake_value(self, v):
        eng = self.engine
        for c, z in self.scv:
            eng.schedule_value_event(c, z, z.map(v))

    def add_view(self, y):
        raise TypeError("variable-view hosts do not keep a view list")

    def footprint(self):
        # pairs cost two words each
        return WORD * (2 * self.dom.universe_size + 2 * len(self.sc) + 2 * len(self.scv) + 3)


class FnHostVar(HostVar):
    """Variable-view host storing the composed view function with each value watcher."""

    def watch_value_for(self, c, z, fn=None) -> None:
        for e in self.scv:
            if e[0] is c and e[1] is z:
                return
        self.scv.append((c, z, fn if fn is not None else identity))

    def wake_value(self, v):
        eng = self.engine
        for c, z, fn in self.scv:
            eng.schedule_value_event(c, z, fn(v))

    def footprint(self):
        return WORD * (2 * self.dom.universe_size + 2 * len(self.sc) + 3 * len(self.scv) + 3)
