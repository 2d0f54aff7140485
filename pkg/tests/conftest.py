import pytest

from depthzero.finlab.chartable import character_table
from depthzero.finlab.groups import build_sl

_tables = {}


def sl_table(n, q):
    if (n, q) not in _tables:
        _tables[(n, q)] = character_table(build_sl(n, q))
    return _tables[(n, q)]


@pytest.fixture(scope="session")
def table():
    return sl_table


ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (number, title) before asserting."""
    state = {}

    def start(number, title):
        state["key"] = (number, title)

    yield start
    if "key" in state:
        rep = getattr(request.node, "rep_call", None)
        ACCEPTANCE[state["key"]] = rep is not None and rep.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(ACCEPTANCE.items()):
        terminalreporter.write_line("criterion %2d: %s  %s" % (number, "PASS" if ok else "FAIL", title))
