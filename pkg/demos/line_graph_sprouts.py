"""Sprouts: holes in the square of a line graph, seen from the graph.

For C6 and for a 5-cycle with two pendant edges, finds the holes of
L(G)^2, maps each one back to a fertile sprout and prints it.  A chord of
C6 joining opposite u-edges shows how a sprout becomes infertile.
"""

from gsq.chordality import enumerate_induced_cycles
from gsq.graph import cycle_graph, from_edge_list, line_graph, square
from gsq.named import c5_two_pendants
from gsq.patterns import find_sprout
from gsq.witnesses import extract_sprout


def show(name, g):
    lmap = line_graph(g)
    holes = enumerate_induced_cycles(square(lmap.lg), 4)
    print(f"{name}: {len(holes)} hole(s) in L(G)^2")
    for hole in holes:
        s = extract_sprout(g, hole)
        print(f"  hole {[lmap.edge_of_vertex[x] for x in hole]}")
        print(f"    u-edges {list(s.u_edges)}  w-edges {list(s.w_edges)}  pending {sorted(s.pending)}")


def main():
    show("C6", cycle_graph(6))
    show("C5 with two pendant edges", c5_two_pendants())
    chorded = from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)] + [(1, 4)])
    sprouts = find_sprout(chorded, 4)
    print(f"C6 plus chord 1-4: {len(sprouts)} sprouts of size 4, "
          f"infertile by {sorted({s.infertile_by for s in sprouts})}")
    print(f"  L(G)^2 holes: {len(enumerate_induced_cycles(square(line_graph(chorded).lg), 4))}")


if __name__ == "__main__":
    main()
