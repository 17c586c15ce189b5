import itertools

import pytest
from hypothesis import strategies as st

from gsq.graph import Graph, from_edge_list


@st.composite
def graphs(draw, min_n=0, max_n=8):
    """Random labelled graph; each vertex pair is an edge with a drawn bit."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, b in zip(pairs, bits) if b])


@st.composite
def graphs_with_permutation(draw, min_n=1, max_n=8):
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)


def edge_set(g: Graph):
    return set(g.edges())


@pytest.fixture
def c8():
    from gsq.graph import cycle_graph
    return cycle_graph(8)


# one line per acceptance criterion, echoed after the run even under capture
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
