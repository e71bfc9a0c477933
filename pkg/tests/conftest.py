import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pathdecomp.graph import build_graph  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def bowtie():
    # two triangles sharing vertex 2
    return build_graph([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


@pytest.fixture
def k23():
    return build_graph([(a, b) for a in (0, 1) for b in (2, 3, 4)])


@pytest.fixture
def c9_triangle():
    # C9 with a triangle hanging off vertex 0
    edges = [(i, (i + 1) % 9) for i in range(9)] + [(0, 9), (9, 10), (0, 10)]
    return build_graph(edges)
