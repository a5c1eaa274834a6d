"""Core propagators written once against the VarRef surface.

Every constraint gets an initial run through a ``<c, None>`` event when it is
posted; later runs come from the events its watches produce.  The channeling
constraints at the bottom are what the no-view baseline posts in place of a
view (the flattening of ``y = f(x)`` into an auxiliary variable).
"""

from __future__ import annotations

from .kernel import WORD
from .viewfns import InjectiveFn, NonInjectiveFn


class Constraint:
    id = -1
    engine = None

    def __init__(self, scope) -> None:
        self.scope = list(scope)

    def attach(self, engine) -> None:
        self.engine = engine
        self.register()

    def register(self) -> None:
        for x in self.scope:
            x.watch(self)

    def propagate_var(self, source) -> bool:
        return self.propagate()

    def propagate_value(self, source, v: int) -> bool:
        return self.propagate()

    def propagate(self) -> bool:
        raise NotImplementedError

    def check(self, values: list[int]) -> bool:
        """Does the assignment ``values`` (aligned with ``scope``) satisfy the constraint?"""
        raise NotImplementedError

    def satisfied(self) -> bool:
        return self.check([x.value() for x in self.scope])

    def footprint(self) -> int:
        return WORD * (2 + len(self.scope))

    def __repr__(self) -> str:
        return f"{type(self).__name__}#{self.id}"


class AllDifferent(Constraint):
    """Forward checking: a bound member's value is removed from every other member."""

    def register(self):
        for x in self.scope:
            x.watch_value(self)

    def propagate_var(self, source):
        scope = self.scope
        if len({id(x) for x in scope}) != len(scope):
            return False
        for x in scope:
            if x.size() == 1 and not self._forward(x):
                return False
        return True

    def propagate_value(self, source, v):
        if source.size() == 1:
            return self._forward(source)
        return True

    def _forward(self, x) -> bool:
        val = x.min()
        for y in self.scope:
            if y is not x and not y.remove(val):
                return False
        return True

    def check(self, values):
        return len(set(values)) == len(values)


class LinearEq(Constraint):
    """``sum(scope) == b`` with bounds filtering."""

    def __init__(self, scope, b: int) -> None:
        super().__init__(scope)
        self.b = b

    def propagate(self):
        xs = self.scope
        mins = [x.min() for x in xs]
        maxs = [x.max() for x in xs]
        smin = sum(mins)
        smax = sum(maxs)
        b = self.b
        if smin > b or smax < b:
            return False
        for k, x in enumerate(xs):
            lo = b - (smax - maxs[k])
            if lo > mins[k] and not x.update_min(lo):
                return False
            hi = b - (smin - mins[k])
            if hi < maxs[k] and not x.update_max(hi):
                return False
        return True

    def check(self, values):
        return sum(values) == self.b


class LinearLeq(Constraint):
    """``sum(scope) <= b`` with bounds filtering."""

    def __init__(self, scope, b: int) -> None:
        super().__init__(scope)
        self.b = b

    def propagate(self):
        xs = self.scope
        mins = [x.min() for x in xs]
        slack = self.b - sum(mins)
        if slack < 0:
            return False
        for k, x in enumerate(xs):
            hi = mins[k] + slack
            if hi < x.max() and not x.update_max(hi):
                return False
        return True

    def check(self, values):
        return sum(values) <= self.b


class BoolClause(Constraint):
    """``OR(pos) or OR(not n for n in neg)`` over 0/1 variables, by unit propagation."""

    def __init__(self, pos, neg=()) -> None:
        self.pos = list(pos)
        self.neg = list(neg)
        super().__init__(self.pos + self.neg)

    def propagate(self):
        count = 0
        last = None
        for x in self.pos:
            if not x.member(0):
                return True
            if x.member(1):
                count += 1
                last = (x, 1)
        for x in self.neg:
            if not x.member(1):
                return True
            if x.member(0):
                count += 1
                last = (x, 0)
        if count == 0:
            return False
        if count == 1:
            return last[0].bind(last[1])
        return True

    def check(self, values):
        npos = len(self.pos)
        return any(v == 1 for v in values[:npos]) or any(v == 0 for v in values[npos:])


# -- channeling constraints for the flattened (no-view) models --------------


class AffineChannel(Constraint):
    """``y == fn(x)`` for an injective ``fn``; value-based in both directions."""

    def __init__(self, x, y, fn: InjectiveFn) -> None:
        super().__init__([x, y])
        self.x = x
        self.y = y
        self.fn = fn

    def register(self):
        self.x.watch_value(self)
        self.y.watch_value(self)

    def propagate_var(self, source):
        x, y, fn = self.x, self.y, self.fn
        for w in x.values():
            if not y.member(fn.forward(w)) and not x.remove(w):
                return False
        for u in y.values():
            w = fn.inverse(u)
            if (w is None or not x.member(w)) and not y.remove(u):
                return False
        return True

    def propagate_value(self, source, v):
        if source is self.x:
            return self.y.remove(self.fn.forward(v))
        w = self.fn.inverse(v)
        return w is None or self.x.remove(w)

    def check(self, values):
        return values[1] == self.fn.forward(values[0])


class ReifEqChannel(Constraint):
    """``b <=> (x == i)`` with 0/1 ``b``."""

    def __init__(self, x, i: int, b) -> None:
        super().__init__([x, b])
        self.x = x
        self.i = i
        self.b = b

    def register(self):
        self.x.watch_value(self)
        self.b.watch_value(self)

    def propagate_var(self, source):
        x, i, b = self.x, self.i, self.b
        for u in b.values():
            if u not in (0, 1) and not b.remove(u):
                return False
        if not x.member(i) and not b.remove(1):
            return False
        if x.is_bound_to(i) and not b.remove(0):
            return False
        if not b.member(1) and not x.remove(i):
            return False
        if not b.member(0) and not x.bind(i):
            return False
        return True

    def propagate_value(self, source, v):
        if source is self.x:
            if v == self.i:
                return self.b.remove(1)
            if self.x.is_bound_to(self.i):
                return self.b.remove(0)
            return True
        if v == 1:
            return self.x.remove(self.i)
        if v == 0:
            return self.x.bind(self.i)
        return True

    def check(self, values):
        return values[1] == (1 if values[0] == self.i else 0)


class FnChannel(Constraint):
    """``y == fn(x)`` for a non-injective ``fn`` (e.g. modulo)."""

    def __init__(self, x, y, fn: NonInjectiveFn) -> None:
        super().__init__([x, y])
        self.x = x
        self.y = y
        self.fn = fn

    def register(self):
        self.x.watch_value(self)
        self.y.watch_value(self)

    def propagate_var(self, source):
        x, y, fwd = self.x, self.y, self.fn.forward
        for w in x.values():
            if not y.member(fwd(w)) and not x.remove(w):
                return False
        image = {fwd(w) for w in x.values()}
        for u in y.values():
            if u not in image and not y.remove(u):
                return False
        return True

    def propagate_value(self, source, v):
        x, fwd = self.x, self.fn.forward
        if source is x:
            u = fwd(v)
            if any(fwd(w) == u for w in x.values()):
                return True
            return self.y.remove(u)
        for w in x.values():
            if fwd(w) == v and not x.remove(w):
                return False
        return True

    def check(self, values):
        return values[1] == self.fn.forward(values[0])


# -- constructors mirroring the modelling vocabulary ------------------------


def alldifferent(xs, engine=None):
    if not xs:
        raise ValueError("alldifferent needs at least one variable")
    return _post(AllDifferent(xs), engine)


def linear_eq(xs, b: int, engine=None):
    return _post(LinearEq(xs, b), engine)


def linear_leq(xs, b: int, engine=None):
    return _post(LinearLeq(xs, b), engine)


def bool_clause(pos, neg=(), engine=None):
    return _post(BoolClause(pos, neg), engine)


def _post(c: Constraint, engine=None):
    if engine is None:
        if not c.scope:
            raise ValueError(f"{type(c).__name__} over no variables needs an explicit engine")
        engine = c.scope[0].engine
    return engine.post(c)
