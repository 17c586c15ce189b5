"""A chordal graph whose square is not chordal, and why.

Builds the 10-vertex sunflower graph, shows that it is chordal, lists the
holes of its square and explains each one by a flower sitting in the
graph.  Then contrasts F4 with its suspended version: one extra vertex
joined to two opposite u-vertices makes the square chordal.
"""

from gsq.chordality import enumerate_induced_cycles, is_chordal
from gsq.graph import square
from gsq.named import chordal_sunflower_5, f4, f4_suspended
from gsq.patterns import check_sufficient_chordalsq, find_sunflower
from gsq.witnesses import extract_flower


def main():
    g = chordal_sunflower_5()
    print(f"graph: n={g.n}, m={g.m}")
    cert = is_chordal(g)
    print(f"chordal: {cert.chordal}  (elimination order {list(cert.peo)})")
    for s in find_sunflower(g, 5):
        print(f"sunflower u={list(s.u)} w={list(s.w)} suspended={s.suspended}")

    holes = enumerate_induced_cycles(square(g), 4)
    print(f"square chordal: {not holes}; {len(holes)} holes")
    for hole in holes:
        f = extract_flower(g, hole)
        print(f"  hole {list(hole)}: flower w={list(f.w)} cycle={list(f.cycle)} pending={sorted(f.pending)}")

    for name, h in (("F4", f4()), ("F4 suspended", f4_suspended())):
        r = check_sufficient_chordalsq(h)
        print(f"{name}: claw-free {r.claw_free}, no hole >= 5 {r.no_long_hole}, "
              f"F4s suspended {r.all_f4_suspended}, square chordal {is_chordal(square(h)).chordal}")


if __name__ == "__main__":
    main()
