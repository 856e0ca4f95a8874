"""Shared pytest plumbing for the suite.

The acceptance tests record one [PASS]/[FAIL] line per criterion; the
lines are echoed into a dedicated section after the run so they stay
visible even though pytest captures per-test stdout.
"""
from __future__ import annotations

ACCEPTANCE_LINES: list[str] = []


def record_criterion(line: str) -> None:
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.line(line)
