import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from p2turan.digraph import Digraph

sys.path.insert(0, str(Path(__file__).parent))


@st.composite
def digraphs(draw, min_order=1, max_order=8):
    n = draw(st.integers(min_order, max_order))
    rows = []
    for u in range(n):
        row = draw(st.integers(0, (1 << n) - 1)) & ~(1 << u)
        rows.append(row)
    return Digraph(n, tuple(rows))


def random_digraph(rng, n, density=None):
    p = rng.random() if density is None else density
    return Digraph.from_arcs(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


@pytest.fixture
def two_cycle():
    return Digraph.from_arcs(2, [(0, 1), (1, 0)])


@pytest.fixture
def three_cycle():
    return Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
