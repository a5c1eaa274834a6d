"""Reversible integer domains backing plain variables.

The sparse-set domain and its trail come from the compiled ``_core``
extension when it is importable, otherwise from the pure-Python ``_pycore``
module.  Both expose the same classes and status codes; ``load_backend``
gives explicit access to either one (used by the backend benchmark).
"""

from __future__ import annotations

import enum
from types import ModuleType

from . import _pycore

try:
    from . import _core as _compiled
except ImportError:  # extension not built
    _compiled = None


class Status(enum.IntEnum):
    """Outcome of a domain update.  Aliases name the same outcome per operation."""

    NOCHANGE = 0
    CHANGED = 1
    WIPEOUT = -1
    ABSENT = 0
    REMOVED = 1
    BOUND = 1


BACKENDS = ("compiled", "python")
BACKEND = "compiled" if _compiled is not None else "python"


def available_backends() -> list[str]:
    return [name for name in BACKENDS if name == "python" or _compiled is not None]


def load_backend(name: str | None = None) -> ModuleType:
    """Return the core module for ``name`` ("compiled", "python", "auto"/None)."""
    if name in (None, "auto"):
        name = BACKEND
    if name == "python":
        return _pycore
    if name == "compiled":
        if _compiled is None:
            raise ImportError("compiled core (domviews._core) is not built")
        return _compiled
    raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")


_default = load_backend()
Trail = _default.Trail
IntDomain = _default.IntDomain


def domain_from_values(trail, values) -> "IntDomain":
    """Build a domain over ``[min(values), max(values)]`` holding exactly ``values``.

    Holes are removed before any frame is pushed, so they are permanent.
    """
    vals = sorted(set(values))
    if not vals:
        raise ValueError("cannot build an empty domain")
    dom = type_for(trail)(trail, vals[0], vals[-1])
    keep = set(vals)
    for v in range(vals[0], vals[-1] + 1):
        if v not in keep:
            dom.remove(v)
    return dom


def type_for(trail) -> type:
    """The IntDomain class matching a trail's backend."""
    if isinstance(trail, _pycore.Trail):
        return _pycore.IntDomain
    return _compiled.IntDomain
