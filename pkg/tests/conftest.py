from __future__ import annotations

import pytest

_RESULTS_KEY = pytest.StashKey[dict]()


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
                     help="run long checks (n=7 extremal audit and similar)")


def pytest_configure(config):
    config.stash[_RESULTS_KEY] = {}


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def criterion(request):
    """Record an acceptance verdict: ``criterion(number, passed, detail)``."""
    results = request.config.stash[_RESULTS_KEY]

    def record(number: int, passed: bool, detail: str) -> None:
        results[number] = (passed, detail)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS_KEY, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        passed, detail = results[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}")
