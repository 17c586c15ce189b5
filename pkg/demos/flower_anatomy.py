"""Flowers certify holes in squares.

Walks through the C8 flower, shows how one extra vertex withers it, then
surveys every hole of a square over the connected graphs on up to 7
vertices and tabulates the flower sizes and the number q of w-vertices.
"""

from collections import Counter

from gsq.chordality import enumerate_induced_cycles
from gsq.corpus import generate_up_to
from gsq.graph import add_vertex, cycle_graph, square
from gsq.patterns import find_flower, is_withered
from gsq.witnesses import extract_flower, verify_flower


def main():
    c8 = cycle_graph(8)
    f = extract_flower(c8, (0, 2, 4, 6))
    print(f"C8 flower: u={list(f.u)} w={list(f.w)} cycle={list(f.cycle)}")
    print(f"  conditions violated: {verify_flower(c8, f) or 'none'}")
    print(f"  flowers of size 4 in C8: {len(find_flower(c8, 4))}")
    x = add_vertex(c8, [0, 4])
    print(f"  with a vertex joined to 0 and 4 the flower is withered by {is_withered(x, f)}")

    ratios = Counter()
    for g in generate_up_to(7, connected_only=True):
        for hole in enumerate_induced_cycles(square(g), 4):
            f = extract_flower(g, hole)
            ratios[(f.size, f.q, len(f.pending))] += 1
    print("\nholes of G^2 over connected graphs n <= 7")
    print(" size  q  pending  count")
    for (size, q, pending), count in sorted(ratios.items()):
        print(f"  {size:>3} {q:>2} {pending:>8} {count:>6}")


if __name__ == "__main__":
    main()
