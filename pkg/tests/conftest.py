import pytest

from zipstrata.rootdata import build_root_datum
from zipstrata.zipdata import make_zip_datum

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion covered by a test")


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker is None:
        return
    number, title = marker
    passed = _ACCEPTANCE.get(number, (True, title))[0]
    if report.failed or (report.when == "call" and not report.passed):
        passed = False
    _ACCEPTANCE[number] = (passed, title)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        report.acceptance = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        passed, title = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {title}")


def siegel(g):
    rd = build_root_datum("C", g, similitude=True)
    return make_zip_datum(rd, (1,) * (g + 1))


@pytest.fixture
def siegel_c2():
    return siegel(2)
