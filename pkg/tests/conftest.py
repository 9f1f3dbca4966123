import os
import sys
import time

sys.path.insert(0, os.path.dirname(__file__))

# criterion number -> (passed, description, detail)
ACCEPTANCE = {}
_SESSION_START = time.perf_counter()
SUITE_BUDGET_S = 300.0


def record_criterion(number, passed, description, detail=""):
    ACCEPTANCE[number] = (bool(passed), description, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    elapsed = time.perf_counter() - _SESSION_START
    if 11 in ACCEPTANCE:
        ok, desc, detail = ACCEPTANCE[11]
        within = elapsed < SUITE_BUDGET_S
        ACCEPTANCE[11] = (ok and within, desc, f"{detail}; suite wall clock {elapsed:.1f} s")
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, desc, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{n:2d}] {desc}: {detail}")
