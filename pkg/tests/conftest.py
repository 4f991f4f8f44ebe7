from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

from chromnbc.graph import Graph

DATA = Path(__file__).parent / "data"

# Filled by test_acceptance.py, printed after the run.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def data_dir() -> Path:
    return DATA


@st.composite
def graphs(draw, max_vertices=5, max_edges=9):
    n = draw(st.integers(0, max_vertices))
    vs = [str(i) for i in range(1, n + 1)]
    pairs = list(combinations(vs, 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges)) if pairs else []
    return Graph(vs, chosen)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
