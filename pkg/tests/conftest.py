import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

# (criterion, passed, detail) rows filled in by test_acceptance.py
ACCEPTANCE = []


@pytest.fixture
def record():
    def _record(name, passed, detail=""):
        ACCEPTANCE.append((name, bool(passed), detail))
        print(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
        return passed
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
