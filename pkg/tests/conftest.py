import pytest

from grdecomp.fixtures import fixture

_RESULTS = {}


@pytest.fixture(scope="session")
def fx():
    """Cached access to the shipped fixtures."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = fixture(name)
        return cache[name]

    return get


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _RESULTS[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_RESULTS):
        num = int(name.split("_")[2])
        title = name.split("_", 3)[3].replace("_", " ")
        status = "PASS" if _RESULTS[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d} {status}: {title}")
