import itertools

import pytest
from hypothesis import given, settings

from conftest import graphs
from gsq.chordality import is_chordal, is_hole
from gsq.errors import InvalidWitnessError
from gsq.graph import (add_vertex, complete_graph, cycle_graph, from_edge_list, induced_subgraph,
                       path_graph, square, star_graph)
from gsq.named import (c5_two_pendants, chordal_sunflower_5, f4, f4_suspended, p5_plus_a,
                       suspended_sunflower_7)
from gsq.patterns import (check_sufficient_chordalsq, find_claw, find_f4, find_flower, find_p5a,
                          find_sprout, find_sunflower, find_unwithered_flower, has_unsuspended_sunflower,
                          is_withered, iter_claws)
from gsq.witnesses import verify_flower, verify_sprout


def E(a, b):
    return (min(a, b), max(a, b))


# ------------------------------------------------------------------ claws

def test_find_claw_examples():
    c = find_claw(star_graph(3))
    assert c.center == 0 and set(c.leaves) == {1, 2, 3}
    assert find_claw(cycle_graph(6)) is None
    g = chordal_sunflower_5()
    # the claw at w4 with leaves u4, u5, w1 is one of the induced claws
    assert any(c.center == 8 and set(c.leaves) == {3, 4, 5} for c in iter_claws(g))
    assert find_claw(g) == min(iter_claws(g), key=lambda c: (c.center, c.leaves))


@settings(max_examples=150)
@given(graphs(max_n=7))
def test_claws_are_induced(g):
    for c in iter_claws(g):
        assert all(g.has_edge(c.center, x) for x in c.leaves)
        assert not any(g.has_edge(x, y) for x, y in itertools.combinations(c.leaves, 2))
    brute = any(not any(g.has_edge(x, y) for x, y in itertools.combinations(t, 2))
                for v in range(g.n) for t in itertools.combinations(g.neighbors(v), 3))
    assert (find_claw(g) is not None) == brute


# ------------------------------------------------------------------- P5+a

def test_find_p5a_examples():
    assert find_p5a(p5_plus_a()) is not None
    assert find_p5a(cycle_graph(5)) is None
    w = find_p5a(f4())
    assert w is not None
    sub, _ = induced_subgraph(f4(), w.path)
    assert sub.m == 5


# --------------------------------------------------------------------- F4

def test_find_f4_examples():
    found = find_f4(f4())
    assert len(found) == 1 and not found[0].suspended
    found = find_f4(f4_suspended())
    assert len(found) == 1 and found[0].suspended_by == 8
    assert find_f4(complete_graph(4)) == []


def test_f4_embedding_is_exact():
    for g in (f4(), f4_suspended()):
        for f in find_f4(g):
            sub, _ = induced_subgraph(g, f.u + f.w)
            assert sub.m == 12
            for i in range(4):
                assert g.has_edge(f.u[i], f.w[i - 1]) and g.has_edge(f.u[i], f.w[i])


# -------------------------------------------------------------- sunflowers

def _check_sunflower(g, s):
    n = len(s.u)
    assert is_chordal(induced_subgraph(g, s.w)[0]).chordal
    assert not any(g.has_edge(a, b) for a, b in itertools.combinations(s.u, 2))
    for i in range(n):
        for j in range(n):
            assert g.has_edge(s.u[i], s.w[j]) == (j in (i, (i + 1) % n))


def test_sunflower_examples():
    found = find_sunflower(chordal_sunflower_5(), 5)
    assert len(found) == 1
    s = found[0]
    assert set(s.u) == set(range(5)) and set(s.w) == set(range(5, 10)) and not s.suspended
    _check_sunflower(chordal_sunflower_5(), s)

    found = find_sunflower(suspended_sunflower_7(), 7, max_order=15)
    assert found and all(s.suspended_by == 14 for s in found)
    assert all(not s.suspended for s in find_sunflower(suspended_sunflower_7(False), 7, max_order=15))


def test_sunflowers_of_c8():
    # both alternating bipartitions of C8 are sunflowers with edgeless core
    found = find_sunflower(cycle_graph(8), 4)
    assert {frozenset(s.u) for s in found} == {frozenset({0, 2, 4, 6}), frozenset({1, 3, 5, 7})}
    for s in found:
        _check_sunflower(cycle_graph(8), s)
        assert not s.suspended


def test_has_unsuspended_sunflower():
    assert has_unsuspended_sunflower(chordal_sunflower_5()) is not None
    assert has_unsuspended_sunflower(complete_graph(6)) is None


# ---------------------------------------------------------------- flowers

def test_flower_examples():
    c8 = cycle_graph(8)
    flowers = find_flower(c8, 4)
    assert any(set(f.u) == {0, 2, 4, 6} and set(f.w) == {1, 3, 5, 7} and f.q == 4 and not f.withered
               for f in flowers)
    inner = [f for f in find_flower(f4(), 4)
             if f.q == 4 and set(f.pending) == {0, 1, 2, 3} and not f.withered]
    assert inner and set(inner[0].cycle) == {4, 5, 6, 7}
    assert find_flower(complete_graph(4), 4) == []


def test_flowers_verify_and_form_square_holes():
    for g in (cycle_graph(8), f4(), chordal_sunflower_5(), c5_two_pendants()):
        for size in range(4, 2 * g.n // 3 + 1):
            for f in find_flower(g, size):
                assert verify_flower(g, f) == []
                if not f.withered:
                    assert is_hole(square(g), f.u)


def test_is_withered_examples():
    f = next(f for f in find_flower(f4(), 4) if set(f.pending) == {0, 1, 2, 3})
    assert is_withered(f4(), f) is None
    assert is_withered(add_vertex(f4(), [0, 2]), f) == 8
    c8 = cycle_graph(8)
    f = next(f for f in find_flower(c8, 4) if set(f.u) == {0, 2, 4, 6})
    assert is_withered(add_vertex(c8, [0, 4]), f) == 8
    with pytest.raises(InvalidWitnessError):
        is_withered(path_graph(8), f)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=4, max_n=7))
def test_unwithered_flower_iff_square_not_chordal(g):
    from gsq.graph import is_connected
    if not is_connected(g):
        return
    f = find_unwithered_flower(g)
    assert (f is None) == is_chordal(square(g)).chordal
    if f is not None:
        assert verify_flower(g, f) == []


# ----------------------------------------------------------------- sprouts

def test_sprout_examples():
    c6 = cycle_graph(6)
    target = ({E(0, 1), E(1, 2), E(3, 4), E(4, 5)}, {E(2, 3), E(0, 5)})
    found = find_sprout(c6, 4)
    assert any((set(s.u_edges), set(s.w_edges)) == target and s.q == 2 and s.fertile for s in found)

    g = c5_two_pendants()
    assert any(s.q == 3 and s.pending == {(2, 5), (3, 6)} and s.fertile for s in find_sprout(g, 4))
    assert find_sprout(star_graph(3), 4) == []


def test_sprouts_verify():
    for g in (cycle_graph(6), cycle_graph(8), c5_two_pendants(), f4()):
        for size in (4, 5):
            for s in find_sprout(g, size):
                assert verify_sprout(g, s) == []
                assert s.fertile == (not s.withered)


def test_infertile_sprout():
    # a chord of C6 joining endpoints of opposite u-edges kills fertility
    g = from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)] + [(1, 4)])
    found = find_sprout(g, 4)
    assert any(set(s.u_edges) == {E(0, 1), E(1, 2), E(3, 4), E(4, 5)} for s in found)
    assert all(not s.fertile and s.infertile_by == (1, 4) for s in found)


# ---------------------------------------------------- sufficient condition

def test_check_sufficient_examples():
    r = check_sufficient_chordalsq(cycle_graph(4))
    assert r.applicable and is_chordal(square(cycle_graph(4))).chordal
    r = check_sufficient_chordalsq(star_graph(3))
    assert not r.claw_free and not r.applicable
    r = check_sufficient_chordalsq(f4())
    assert r.claw_free and r.no_long_hole and not r.all_f4_suspended and not r.applicable
    assert check_sufficient_chordalsq(f4_suspended()).all_f4_suspended


@settings(max_examples=200)
@given(graphs(max_n=9))
def test_sufficient_condition_implies_chordal_square(g):
    if check_sufficient_chordalsq(g).applicable:
        assert is_chordal(square(g)).chordal
