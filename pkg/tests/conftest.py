import pytest

from dporewrite import Graph


@pytest.fixture
def arrow():
    """n1(A) -e1(x)-> n2(B)"""
    return Graph.build({"n1": "A", "n2": "B"}, {"e1": ("n1", "n2", "x")})


@pytest.fixture
def arrow_copy():
    return Graph.build({"m1": "A", "m2": "B"}, {"d1": ("m1", "m2", "x")})


ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
