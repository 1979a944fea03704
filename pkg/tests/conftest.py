"""Collects acceptance-test outcomes and prints one verdict line per criterion."""
from collections import defaultdict

import pytest

_outcomes = defaultdict(list)
_titles = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    _titles[number] = title
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes[number].append(report.outcome)


def _verdict(outcomes):
    if "failed" in outcomes:
        return "FAIL"
    if outcomes and all(o == "skipped" for o in outcomes):
        return "SKIP"
    return "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        outcomes = _outcomes[number]
        extra = ""
        skipped = outcomes.count("skipped")
        if skipped and len(outcomes) > skipped:
            extra = f"  ({skipped} optional check(s) skipped)"
        terminalreporter.write_line(
            f"criterion {number}: {_verdict(outcomes)}  {_titles[number]}{extra}")
