import pytest
from hypothesis import strategies as st

from ddyck.paths import Path

# A (-1)-Dyck path of semi-length 14 with valley levels (0,1,0,3,4,3,2) and area 70.
SAMPLE_28 = "UDUUDUDDUUUUDUUDUDDUUDDDUDDD"


@st.composite
def dyck_paths(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    steps, h, ups = [], 0, 0
    for _ in range(2 * n):
        if ups == n:
            up = False
        elif h == 0:
            up = True
        else:
            up = draw(st.booleans())
        steps.append("U" if up else "D")
        h += 1 if up else -1
        ups += up
    return Path("".join(steps))


_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[name] = report.outcome.upper()


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        terminalreporter.write_line(f"{'PASS' if outcome == 'PASSED' else 'FAIL'}  {name}")
