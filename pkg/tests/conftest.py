import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_markers = {}
_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): an exit criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            _markers[item.nodeid] = m.args


def pytest_runtest_logreport(report):
    key = _markers.get(report.nodeid)
    if key is None:
        return
    if report.failed:
        _results[key] = "FAIL"
    elif report.when == "call":
        _results.setdefault(key, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), status in sorted(_results.items()):
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
