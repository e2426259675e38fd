import os

import pytest
from hypothesis import HealthCheck, settings

from mahler_lab import catalog

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def stern():
    return catalog.get("stern")


@pytest.fixture(scope="session")
def baum_sweet():
    return catalog.get("baum-sweet")


@pytest.fixture(scope="session")
def geometric():
    return catalog.get("geometric")


@pytest.fixture(scope="session")
def dilcher_stolarsky():
    return catalog.get("dilcher-stolarsky")


# -- acceptance summary ---------------------------------------------------------

_CRITERIA = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = mark.args
        _CRITERIA.append((number, title, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome, duration in sorted(_CRITERIA, key=lambda c: str(c[0])):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status} ({duration:.2f} s) {title}")
