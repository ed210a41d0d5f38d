import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from polya import ColorSet, cyclic_group, dihedral_group, trivial_group  # noqa: E402

_criteria: dict[str, tuple[int, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    prev = _criteria.get(item.nodeid, (number, title, "PASS"))[2]
    if report.failed or (report.when == "call" and report.outcome != "passed"):
        prev = "FAIL"
    _criteria[item.nodeid] = (number, title, prev)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    merged: dict[int, tuple[str, str]] = {}
    for number, title, status in _criteria.values():
        old = merged.get(number, (title, "PASS"))[1]
        merged[number] = (title, "FAIL" if "FAIL" in (old, status) else "PASS")
    terminalreporter.section("acceptance criteria")
    for number in sorted(merged):
        title, status = merged[number]
        terminalreporter.write_line(f"{status}  criterion {number:>2}: {title}")


@pytest.fixture
def rwb():
    return ColorSet.of("r,w,b")


@pytest.fixture(scope="session")
def c4():
    return cyclic_group(4)


@pytest.fixture(scope="session")
def d4():
    return dihedral_group(4)


@pytest.fixture(scope="session")
def e4():
    return trivial_group(4)
