"""Propagation kernel: event queue, fixpoint loop, trail frames and run statistics."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import asdict, dataclass
from typing import Any, NamedTuple, Optional

from .domains import domain_from_values, load_backend, type_for

#: bytes per machine word in the engine-level memory accounting
WORD = 8


class Mode(str, enum.Enum):
    """How views are realised.  Fixed per engine."""

    NOVIEW = "noview"
    VARVIEW = "varview"
    DOMVIEW = "domview"


class EventKind(enum.Enum):
    VAR = "var"
    VALUE = "value"


class Event(NamedTuple):
    """``<c, x>`` when ``value`` is None, otherwise ``<c, x, value>``.

    ``value`` is expressed in the coordinates of ``source``.
    """

    constraint: Any
    source: Any
    value: Optional[int] = None

    @property
    def kind(self) -> EventKind:
        return EventKind.VAR if self.value is None else EventKind.VALUE


@dataclass
class RunStats:
    propagations: int = 0
    nodes: int = 0
    failures: int = 0
    solutions: int = 0
    peak_bytes: int = 0
    cpu_ms: float = 0.0
    wall_ms: float = 0.0

    def counts(self) -> tuple[int, int, int, int, int]:
        return (self.propagations, self.nodes, self.failures, self.solutions, self.peak_bytes)

    def as_dict(self) -> dict:
        return asdict(self)


class Engine:
    """Owns the queue, the trail and every variable, view and constraint of one model.

    ``mode`` selects the view regime (see :class:`Mode`).  ``backend`` picks the
    domain core ("compiled", "python" or None for the import-time default).
    ``store_functions`` switches variable-view hosts to the function-storing
    watch lists instead of ``map`` (only meaningful in VARVIEW mode).
    ``record_events`` keeps a log of every scheduled event.
    """

    def __init__(
        self,
        mode: Mode | str = Mode.DOMVIEW,
        backend: str | None = None,
        store_functions: bool = False,
        record_events: bool = False,
    ) -> None:
        self.mode = Mode(mode)
        self.core = load_backend(backend)
        self.trail = self.core.Trail()
        self.store_functions = store_functions
        self.queue: deque = deque()
        self._scheduled: set = set()
        self.refs: list = []
        self.constraints: list = []
        self.stats = RunStats()
        self.log: Optional[list[Event]] = [] if record_events else None
        self.peak_queue = 0

    # -- model construction -------------------------------------------------

    def int_var(self, lo: int, hi: Optional[int] = None, *, values=None, name: str | None = None):
        """A plain variable over ``[lo, hi]`` (or exactly ``values``)."""
        from .variables import FnHostVar, HostVar, IntVar

        if values is not None:
            dom = domain_from_values(self.trail, values)
        else:
            dom = type_for(self.trail)(self.trail, lo, lo if hi is None else hi)
        if self.mode is Mode.VARVIEW:
            cls = FnHostVar if self.store_functions else HostVar
        else:
            cls = IntVar
        return cls(self, dom, name)

    def register(self, ref) -> int:
        self.refs.append(ref)
        return len(self.refs) - 1

    def post(self, constraint):
        """Attach ``constraint`` and schedule its initial run; returns it as the id."""
        constraint.id = len(self.constraints)
        self.constraints.append(constraint)
        constraint.attach(self)
        self.schedule_var_event(constraint, None)
        return constraint

    # -- scheduling ---------------------------------------------------------

    def schedule_var_event(self, c, x) -> None:
        key = (c, x)
        if key in self._scheduled:
            return
        self._scheduled.add(key)
        q = self.queue
        q.append((c, x, None))
        if len(q) > self.peak_queue:
            self.peak_queue = len(q)
        if self.log is not None:
            self.log.append(Event(c, x))

    def schedule_value_event(self, c, x, v: int) -> None:
        q = self.queue
        q.append((c, x, v))
        if len(q) > self.peak_queue:
            self.peak_queue = len(q)
        if self.log is not None:
            self.log.append(Event(c, x, v))

    def pending(self) -> list[Event]:
        return [Event(*e) for e in self.queue]

    def pop_event(self) -> Optional[Event]:
        """Pop one event without dispatching it (clears its dedup flag)."""
        if not self.queue:
            return None
        c, x, v = self.queue.popleft()
        if v is None:
            self._scheduled.discard((c, x))
        return Event(c, x, v)

    def flush(self) -> None:
        self.queue.clear()
        self._scheduled.clear()

    def propagate(self) -> bool:
        """Run the queue to a fixpoint.  False means some domain was wiped out."""
        q = self.queue
        scheduled = self._scheduled
        stats = self.stats
        while q:
            c, x, v = q.popleft()
            stats.propagations += 1
            if v is None:
                scheduled.discard((c, x))
                ok = c.propagate_var(x)
            else:
                ok = c.propagate_value(x, v)
            if not ok:
                self.flush()
                return False
        return True

    # -- backtracking -------------------------------------------------------

    def push_frame(self) -> None:
        self.trail.push()

    def pop_frame(self) -> None:
        self.trail.pop()
        self.flush()

    @property
    def depth(self) -> int:
        return self.trail.depth

    # -- memory accounting --------------------------------------------------

    def static_bytes(self) -> int:
        """Engine-tracked bytes of the constructed model (slots, domains, lists, views, constraints)."""
        total = 2 * WORD * self.trail.num_slots
        total += sum(ref.footprint() for ref in self.refs)
        total += sum(c.footprint() for c in self.constraints)
        return total

    def peak_bytes(self) -> int:
        """Static bytes plus the high-water marks of the trail and the queue."""
        return self.static_bytes() + 3 * WORD * (self.trail.peak_entries + self.peak_queue)
