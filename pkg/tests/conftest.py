from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from domviews import Engine, available_backends  # noqa: E402
from domviews.kernel import Mode  # noqa: E402

_criteria: dict[int, dict] = {}


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param


@pytest.fixture(params=[m.value for m in Mode])
def mode(request):
    return request.param


@pytest.fixture
def engine(backend):
    return Engine(Mode.DOMVIEW, backend, record_events=True)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when not in ("setup", "call"):
        return
    num, title = marker.args
    entry = _criteria.setdefault(num, {"title": title, "ok": True, "seen": False})
    entry["seen"] = True
    if rep.failed or (rep.when == "call" and rep.skipped):
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        e = _criteria[num]
        verdict = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {num}: {e['title']}")
