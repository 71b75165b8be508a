"""Shared fixtures and the acceptance-criterion summary lines."""

import pytest

from gridline import load_bundled
from gridline.faulttree import load_bundled_tree


@pytest.fixture(scope="session")
def greenline():
    return load_bundled("greenline17")


@pytest.fixture(scope="session")
def bundled_tree():
    return load_bundled_tree()


_acceptance_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or item.get_closest_marker("acceptance") is None:
        return
    label = (item.function.__doc__ or item.name).strip().splitlines()[0]
    _acceptance_results[item.nodeid] = (label, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for label, outcome in _acceptance_results.values():
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {status}: {label}")
