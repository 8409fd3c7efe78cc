from __future__ import annotations

import pytest
from hypothesis import settings

from graphs import e1, e2, f6

settings.register_profile("repo", derandomize=True, deadline=None, print_blob=True)
settings.load_profile("repo")

_acceptance: list[tuple[str, str]] = []


@pytest.fixture
def E1():
    return e1()


@pytest.fixture
def E2():
    return e2()


@pytest.fixture(params=["a", "b", "c", "d"])
def F6(request):
    return request.param, f6(request.param)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.get_closest_marker("acceptance") and report.when == "call":
        _acceptance.append((item.name, "PASS" if report.passed else "FAIL"))
    elif item.get_closest_marker("acceptance") and report.when == "setup" and report.failed:
        _acceptance.append((item.name, "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in _acceptance:
        terminalreporter.write_line(f"{verdict}  {name}")
