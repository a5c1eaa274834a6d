"""Finite-domain propagation engine with variable views and domain views."""

from .domains import BACKEND, IntDomain, Status, Trail, available_backends, load_backend
from .kernel import Engine, Event, EventKind, Mode, RunStats
from .search import SearchOutcome, dfs_first_fail

__all__ = [
    "BACKEND",
    "Engine",
    "Event",
    "EventKind",
    "IntDomain",
    "Mode",
    "RunStats",
    "SearchOutcome",
    "Status",
    "Trail",
    "available_backends",
    "dfs_first_fail",
    "load_backend",
]

__version__ = "0.1.0"
