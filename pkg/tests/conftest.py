import sys
from pathlib import Path

import pytest

from artin_cube.defining_graph import parse

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def paw():
    return parse("vertices: a b c d; edges: a-b:3 b-c:3 a-c:3 c-d:2")


@pytest.fixture
def paw_ra():
    return parse("vertices: a b c d; edges: a-b:2 b-c:2 a-c:2 c-d:2")


@pytest.fixture
def p4():
    return parse("vertices: a b c d; edges: a-b:2 b-c:2 c-d:2")


@pytest.fixture
def c4():
    return parse("vertices: a b c d; edges: a-b:2 b-c:2 c-d:2 a-d:2")


@pytest.fixture
def single():
    return parse("vertices: s")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
