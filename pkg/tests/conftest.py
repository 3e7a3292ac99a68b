import sys
from collections import OrderedDict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: "OrderedDict[int, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, desc): acceptance criterion covered by this test")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            n, desc = m.args
            _CRITERIA.setdefault(n, {"desc": desc, "tests": 0, "failed": 0})
            _CRITERIA[n]["tests"] += 1


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mk = item.get_closest_marker("criterion")
    if mk is None or rep.passed and rep.when != "call":
        return
    if rep.failed or (rep.when == "call" and rep.skipped):
        _CRITERIA[mk.args[0]]["failed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        info = _CRITERIA[n]
        status = "PASS" if info["failed"] == 0 else "FAIL"
        tr.write_line(f"criterion {n}: {status}: {info['desc']} ({info['tests']} tests, {info['failed']} failed)")
