from dataclasses import replace

import pytest
from hypothesis import given, settings

from conftest import graphs
from gsq.chordality import enumerate_induced_cycles, is_chordal, is_hole
from gsq.errors import NotAHoleError
from gsq.graph import cycle_graph, from_edge_list, is_connected, line_graph, square, star_graph
from gsq.named import c5_two_pendants, chordal_sunflower_5, f4
from gsq.patterns import FlowerWitness, SproutWitness, is_withered
from gsq.witnesses import extract_flower, extract_sprout, verify_flower, verify_sprout


# ------------------------------------------------------------- extraction

def test_extract_flower_c8():
    f = extract_flower(cycle_graph(8), (0, 2, 4, 6))
    assert f.u == (0, 2, 4, 6) and f.w == (1, 3, 5, 7) and f.q == 4 and not f.pending
    assert verify_flower(cycle_graph(8), f) == []


def test_extract_flower_sunflower_is_all_pending():
    g = chordal_sunflower_5()
    f = extract_flower(g, (0, 1, 2, 3, 4))
    assert f.size == 5 and f.pending == frozenset(range(5))
    assert set(f.cycle) == set(range(5, 10))
    assert is_withered(g, f) is None


def test_extract_flower_rejects_non_holes():
    with pytest.raises(NotAHoleError):
        extract_flower(cycle_graph(4), (0, 1, 2, 3))


def test_extract_sprout_c6():
    # line-graph ids of the edges 01, 12, 34, 45 of C6
    s = extract_sprout(cycle_graph(6), (0, 2, 4, 5))
    assert set(s.u_edges) == {(0, 1), (1, 2), (3, 4), (4, 5)}
    assert set(s.w_edges) == {(2, 3), (0, 5)}
    assert s.q == 2 and s.fertile


def test_extract_sprout_c8_and_rejection():
    c8 = cycle_graph(8)
    hole = is_chordal(square(line_graph(c8).lg)).hole
    s = extract_sprout(c8, hole)
    assert s.size == len(hole) and verify_sprout(c8, s) == []
    with pytest.raises(NotAHoleError):
        extract_sprout(star_graph(3), (0, 1, 2))


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=4, max_n=8))
def test_every_square_hole_yields_a_flower(g):
    if not is_connected(g):
        return
    for hole in enumerate_induced_cycles(square(g), 4)[:10]:
        f = extract_flower(g, hole)
        assert verify_flower(g, f) == [] and not f.withered
        assert set(f.u) == set(hole)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=4, max_n=7))
def test_every_line_square_hole_yields_a_sprout(g):
    if g.m > 10:
        return
    lg2 = square(line_graph(g).lg)
    for hole in enumerate_induced_cycles(lg2, 4)[:10]:
        s = extract_sprout(g, hole)
        assert verify_sprout(g, s) == [] and s.fertile


# ------------------------------------------------------------ verifiers

def test_verify_flower_negative_cases():
    c8 = cycle_graph(8)
    f = extract_flower(c8, (0, 2, 4, 6))
    shuffled = replace(f, w=(f.w[0], f.w[2], f.w[1], f.w[3]))
    assert "i" in verify_flower(c8, shuffled)
    chorded = from_edge_list(8, c8.edges() + [(0, 4)])
    assert "ii" in verify_flower(chorded, f)
    assert verify_flower(c8, replace(f, withered_by=3)) == ["withered_by"]


def test_verify_flower_condition_vi():
    # an extra u-w edge breaks the exact neighbourhood pattern
    c8 = cycle_graph(8)
    f = extract_flower(c8, (0, 2, 4, 6))
    assert "vi" in verify_flower(from_edge_list(8, c8.edges() + [(0, 3)]), f)


def test_verify_flower_f4_inner_square():
    f = FlowerWitness((3, 0, 1, 2), (4, 5, 6, 7), (4, 5, 6, 7), frozenset({0, 1, 2, 3}))
    assert verify_flower(f4(), f) == []


def test_verify_sprout_negative_cases():
    c6 = cycle_graph(6)
    s = extract_sprout(c6, (0, 2, 4, 5))
    assert verify_sprout(c6, s) == []
    rotated = replace(s, u_edges=s.u_edges[1:] + s.u_edges[:1])
    assert "ii" in verify_sprout(c6, rotated)

    # two pending edges meeting at vertex 5
    g = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (3, 5)])
    bad = SproutWitness(((0, 4), (0, 1), (2, 5), (3, 5)), ((1, 2), (2, 3), (3, 4)),
                        ((1, 2), (2, 3), (3, 4), (0, 4), (0, 1)), frozenset({(2, 5), (3, 5)}))
    assert verify_sprout(g, bad) == ["v"]


def test_verify_sprout_pendants():
    g = c5_two_pendants()
    s = SproutWitness(((0, 4), (0, 1), (2, 5), (3, 6)), ((1, 2), (2, 3), (3, 4)),
                      ((1, 2), (2, 3), (3, 4), (0, 4), (0, 1)), frozenset({(2, 5), (3, 6)}))
    assert verify_sprout(g, s) == []
    assert verify_sprout(g, replace(s, infertile_by=(0, 1))) == ["infertile_by"]


def test_extract_flower_with_two_member_gap():
    # 8 and 0 are adjacent in C9, so they share one gap between w-vertices 7 and 1
    c9 = cycle_graph(9)
    f = extract_flower(c9, (0, 2, 4, 6, 8))
    assert f.u == (8, 0, 2, 4, 6) and f.w == (1, 3, 5, 7) and f.q == 4
    assert verify_flower(c9, f) == [] and is_hole(square(c9), f.u)
