"""Minimal graphs whose square (or line-graph square) is not chordal.

Lists every graph on up to N vertices (default 6) with a non-chordal
target square all of whose proper induced subgraphs have chordal target
squares, with graph6 strings and edge lists.
"""

import sys

from gsq.corpus import write_graph6
from gsq.harness import Target, mine_obstructions


def main(n_max=6):
    for target in Target:
        found = mine_obstructions(target, n_max)
        print(f"{target.value}: {len(found)} minimal obstruction(s) with n <= {n_max}")
        for g in found:
            print(f"  {write_graph6(g):<10} n={g.n} m={g.m} edges={g.edges()}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 6)
