"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""
import pytest

_RESULTS = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion this test belongs to")
    config.stash[_RESULTS] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        n = marker.args[0]
        results = item.config.stash[_RESULTS]
        entry = results.setdefault(n, {"text": item.module.CRITERIA[n], "failed": [], "ran": 0})
        entry["ran"] += 1
        if report.failed:
            entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash[_RESULTS]
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        entry = results[n]
        status = "FAIL" if entry["failed"] else "PASS"
        line = f"{status} criterion {n}: {entry['text']} ({entry['ran']} checks)"
        if entry["failed"]:
            line += " -- failing: " + ", ".join(entry["failed"])
        terminalreporter.write_line(line)
