import sys

import pytest

from orthocevia import Point, make_triangle


@pytest.fixture
def t345():
    return make_triangle(Point(0, 0), Point(4, 0), Point(0, 3))


@pytest.fixture
def tacu():
    return make_triangle(Point(0, 0), Point(4, 0), Point(1, 3))


def close(p, q, tol=1e-12):
    return abs(p.x - q[0]) <= tol and abs(p.y - q[1]) <= tol


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
