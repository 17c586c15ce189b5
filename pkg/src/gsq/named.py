"""Small named graphs used by tests, demos and the CLI.

Vertex ids follow the labels in each docstring.
"""

from __future__ import annotations

from .graph import Graph, add_vertex, cycle_graph, from_edge_list, star_graph


def claw() -> Graph:
    """K_{1,3} with centre 0."""
    return star_graph(3)


def p5_plus_a() -> Graph:
    """Path 0-1-2-3-4 plus the edge 1-3."""
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])


def _sunflower_edges(k: int, offset_u: int, offset_w: int, shift: int):
    # u_i joined to two cyclically consecutive w's; shift selects the pair
    edges = []
    for i in range(k):
        edges.append((offset_u + i, offset_w + (i - shift) % k))
        edges.append((offset_u + i, offset_w + (i - shift + 1) % k))
    return edges


def f4() -> Graph:
    """F4: u1..u4 = 0..3, w1..w4 = 4..7.

    The w's form the 4-cycle w1 w2 w3 w4, the u's are pairwise
    non-adjacent and u_i is adjacent to exactly w_{i-1} and w_i.
    """
    edges = _sunflower_edges(4, 0, 4, 1)
    edges += [(4 + i, 4 + (i + 1) % 4) for i in range(4)]
    return from_edge_list(8, edges)


def f4_suspended() -> Graph:
    """F4 plus vertex 8 adjacent to u1 and u3."""
    return add_vertex(f4(), [0, 2])


def chordal_sunflower_5() -> Graph:
    """Chordal graph on 10 vertices whose square is not chordal.

    u1..u5 = 0..4 and w1..w5 = 5..9; the w's form the 5-cycle
    w1..w5 with chords w2w4 and w1w4; u1 sees w5, w1 and u_i (i > 1) sees
    w_{i-1}, w_i.  The u's form an unsuspended sunflower of size 5.
    """
    edges = _sunflower_edges(5, 0, 5, 1)
    edges += [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    edges += [(6, 8), (8, 5)]
    return from_edge_list(10, edges)


def suspended_sunflower_7(with_v: bool = True) -> Graph:
    """Sunflower of size 7 with a triangulated 7-cycle as its core.

    u1..u7 = 0..6, w1..w7 = 7..13 with chords w1w3, w1w4, w4w7, w4w6;
    u_i sees w_{i-1} and w_i.  With ``with_v`` vertex 14 is joined to u4
    and u6, which suspends the sunflower.
    """
    edges = _sunflower_edges(7, 0, 7, 1)
    edges += [(7 + i, 7 + (i + 1) % 7) for i in range(7)]
    edges += [(9, 7), (10, 7), (10, 13), (10, 12)]
    g = from_edge_list(14, edges)
    return add_vertex(g, [3, 5]) if with_v else g


def c5_two_pendants() -> Graph:
    """5-cycle 0-1-2-3-4 with pendant edges 2-5 and 3-6.

    Hosts a fertile sprout of size 4 with u-edges 01, 25, 36, 40 (the two
    pendant edges pending) and w-edges 12, 23, 34.
    """
    return from_edge_list(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (3, 6)])


def cycle(n: int) -> Graph:
    return cycle_graph(n)


NAMED = {
    "claw": claw,
    "p5a": p5_plus_a,
    "f4": f4,
    "f4-suspended": f4_suspended,
    "chordal-sunflower-5": chordal_sunflower_5,
    "suspended-sunflower-7": suspended_sunflower_7,
    "c5-two-pendants": c5_two_pendants,
}
