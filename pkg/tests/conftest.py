"""Shared pytest wiring.

The acceptance tests in test_acceptance.py are tagged with the
``acceptance(num, label)`` marker; outcomes are collected here and echoed
as one line per criterion at the end of the run, so a scan of the tail of
the log answers "which criteria hold" without grepping test names.
"""

import pytest

_RESULTS: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(num, label): tags a test as an acceptance criterion"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    num, label = marker.args
    if report.when == "call":
        _RESULTS[num] = (label, report.passed)
    elif report.when == "setup" and report.failed:
        _RESULTS[num] = (label, False)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_RESULTS):
        label, ok = _RESULTS[num]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[acceptance] criterion {num} ({label}): {verdict}")
