import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs
from gsq.chordality import (CHORDAL, NOT_CHORDAL, Violation, canonical_cycle, check_peo,
                            enumerate_induced_cycles, find_hole, has_induced_cycle_geq, is_chordal,
                            is_hole, mcs_order)
from gsq.errors import NotAPermutationError
from gsq.graph import complete_graph, cycle_graph, empty_graph, path_graph, power, square
from gsq.named import chordal_sunflower_5


def brute_force_holes(g):
    """Vertex sets inducing a chordless cycle of length >= 4 (subset scan)."""
    out = set()
    for k in range(4, g.n + 1):
        for sub in itertools.combinations(range(g.n), k):
            degs = [sum(g.has_edge(a, b) for b in sub if b != a) for a in sub]
            if any(d != 2 for d in degs):
                continue
            # 2-regular: connected iff a single cycle
            seen, stack = {sub[0]}, [sub[0]]
            while stack:
                a = stack.pop()
                for b in sub:
                    if b not in seen and g.has_edge(a, b):
                        seen.add(b)
                        stack.append(b)
            if len(seen) == k:
                out.add(frozenset(sub))
    return out


def test_mcs_order_examples():
    assert mcs_order(complete_graph(3)) == [0, 1, 2]
    assert mcs_order(empty_graph(3)) == [0, 1, 2]
    assert check_peo(cycle_graph(4), mcs_order(cycle_graph(4))) is not None


def test_check_peo_examples():
    for order in itertools.permutations(range(4)):
        assert check_peo(complete_graph(4), order) is None
    assert check_peo(cycle_graph(4), [0, 1, 2, 3]) == Violation(0, 1, 3)
    assert check_peo(path_graph(3), [1, 0, 2]) == Violation(1, 0, 2)
    with pytest.raises(NotAPermutationError):
        check_peo(path_graph(3), [0, 0, 1])


def test_is_chordal_examples():
    cert = is_chordal(cycle_graph(4))
    assert cert.verdict == NOT_CHORDAL and cert.hole == (0, 1, 2, 3)
    cert = is_chordal(chordal_sunflower_5())
    assert cert.verdict == CHORDAL and check_peo(chordal_sunflower_5(), cert.peo) is None
    cert = is_chordal(square(cycle_graph(6)))
    assert not cert.chordal and set(cert.hole) == {0, 1, 3, 4}


def test_is_hole_and_canonical_cycle():
    c6 = cycle_graph(6)
    assert is_hole(c6, [0, 1, 2, 3, 4, 5])
    assert not is_hole(c6, [0, 1, 2, 3])
    assert not is_hole(complete_graph(4), [0, 1, 2, 3])
    assert not is_hole(cycle_graph(4), [0, 1, 2, 3, 0])
    assert canonical_cycle((3, 2, 1, 0)) == (0, 1, 2, 3)
    assert canonical_cycle((2, 3, 0, 1)) == (0, 1, 2, 3)


def test_enumerate_induced_cycles_examples():
    assert enumerate_induced_cycles(cycle_graph(6), 6) == [(0, 1, 2, 3, 4, 5)]
    assert enumerate_induced_cycles(cycle_graph(5), 6) == []
    assert (0, 2, 4, 6) in enumerate_induced_cycles(power(cycle_graph(8), 2), 4)


def test_has_induced_cycle_geq_examples():
    assert has_induced_cycle_geq(cycle_graph(6), 6) is not None
    assert has_induced_cycle_geq(complete_graph(5), 4) is None
    assert has_induced_cycle_geq(chordal_sunflower_5(), 4) is None


@settings(max_examples=300)
@given(graphs(max_n=8))
def test_certificates_are_sound(g):
    cert = is_chordal(g)
    if cert.chordal:
        assert check_peo(g, cert.peo) is None
    else:
        assert is_hole(g, cert.hole)
        assert find_hole(g) is not None


@settings(max_examples=200)
@given(graphs(max_n=8))
def test_verdict_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert is_chordal(g).chordal == nx.is_chordal(h)


@settings(max_examples=150)
@given(graphs(max_n=8))
def test_enumeration_matches_subset_scan(g):
    cycles = enumerate_induced_cycles(g, 4)
    assert len(set(cycles)) == len(cycles)
    assert all(is_hole(g, c) and canonical_cycle(c) == c for c in cycles)
    assert {frozenset(c) for c in cycles} == brute_force_holes(g)
    assert is_chordal(g).chordal == (not cycles)


@given(graphs(max_n=8))
def test_length_window(g):
    everything = enumerate_induced_cycles(g, 4)
    window = enumerate_induced_cycles(g, 5, 6)
    assert window == [c for c in everything if 5 <= len(c) <= 6]
