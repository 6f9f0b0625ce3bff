import pytest

ACCEPTANCE_RESULTS = {}


def pytest_runtest_makereport(item, call):
    crit = item.get_closest_marker("criterion")
    if crit is None or call.when != "call":
        return
    key = crit.args[0]
    passed = call.excinfo is None
    prev = ACCEPTANCE_RESULTS.get(key, (True, crit.args[1]))
    ACCEPTANCE_RESULTS[key] = (prev[0] and passed, crit.args[1])


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, title = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] C{key:02d} {title}")
