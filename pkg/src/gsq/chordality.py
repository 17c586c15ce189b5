"""Chordality recognition with certificates.

A chordal verdict carries a perfect elimination ordering, a non-chordal one
carries a hole (induced cycle of length >= 4).  Both are re-checkable with
:func:`check_peo` and :func:`is_hole`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import NotAPermutationError, TooLargeError
from .graph import Graph, iter_bits, mask_of

MAX_ENUM_ORDER = 40

CHORDAL = "CHORDAL"
NOT_CHORDAL = "NOT_CHORDAL"


@dataclass(frozen=True)
class Violation:
    """``v`` has two later neighbours ``x`` and ``y`` that are not adjacent."""

    v: int
    x: int
    y: int


@dataclass(frozen=True)
class ChordalityCertificate:
    verdict: str
    peo: Optional[tuple[int, ...]] = None
    hole: Optional[tuple[int, ...]] = None

    @property
    def chordal(self) -> bool:
        return self.verdict == CHORDAL

    def __bool__(self):
        return self.chordal


def mcs_order(g: Graph) -> list[int]:
    """Elimination ordering from maximum cardinality search.

    Vertices are visited by decreasing count of visited neighbours; among
    equal counts the highest id is visited first, so reversing the visit
    sequence lists lower ids earlier.  The reversed visit sequence is
    returned; it is a perfect elimination ordering iff ``g`` is chordal.
    """
    n = g.n
    weight = [0] * n
    unvisited = (1 << n) - 1
    visit = []
    for _ in range(n):
        best = -1
        pick = -1
        for v in iter_bits(unvisited):
            if weight[v] >= best:
                best, pick = weight[v], v
        visit.append(pick)
        unvisited &= ~(1 << pick)
        for w in iter_bits(g.adj[pick] & unvisited):
            weight[w] += 1
    visit.reverse()
    return visit


def check_peo(g: Graph, order: Sequence[int]) -> Optional[Violation]:
    """Return ``None`` if ``order`` is a perfect elimination ordering, else the
    first violation found (earliest ``v``, then earliest pair in ``order``)."""
    if sorted(order) != list(range(g.n)):
        raise NotAPermutationError(f"{list(order)} is not a permutation of 0..{g.n - 1}")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    later = (1 << g.n) - 1
    for v in order:
        later &= ~(1 << v)
        nb = sorted(iter_bits(g.adj[v] & later), key=pos.__getitem__)
        for i, x in enumerate(nb):
            missing = [y for y in nb[i + 1:] if not g.adj[x] >> y & 1]
            if missing:
                return Violation(v, x, missing[0])
    return None


def is_hole(g: Graph, cycle: Sequence[int]) -> bool:
    """Induced-cycle predicate: length >= 4, distinct vertices, consecutive
    pairs adjacent and every other pair non-adjacent."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    if any(not 0 <= v < g.n for v in cycle):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = bool(g.adj[cycle[i]] >> cycle[j] & 1)
            if adjacent != ((j - i) in (1, k - 1)):
                return False
    return True


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect so the smallest vertex comes first and its smaller
    cycle-neighbour second."""
    k = len(cycle)
    i = min(range(k), key=cycle.__getitem__)
    fwd = tuple(cycle[(i + j) % k] for j in range(k))
    back = tuple(cycle[(i - j) % k] for j in range(k))
    return fwd if fwd[1] < back[1] else back


def _shortest_path(g: Graph, allowed: int, s: int, t: int) -> Optional[list[int]]:
    parent = {s: s}
    frontier = [s]
    seen = 1 << s
    while frontier:
        nxt = []
        for v in frontier:
            for w in iter_bits(g.adj[v] & allowed & ~seen):
                seen |= 1 << w
                parent[w] = v
                if w == t:
                    path = [t]
                    while path[-1] != s:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                nxt.append(w)
        frontier = nxt
    return None


def _hole_through(g: Graph, v: int, x: int, y: int) -> Optional[list[int]]:
    # v + shortest x..y path avoiding N[v] (except x, y) is an induced cycle
    full = (1 << g.n) - 1
    blocked = (g.adj[v] | (1 << v)) & ~((1 << x) | (1 << y))
    path = _shortest_path(g, full & ~blocked, x, y)
    if path is None:
        return None
    return _minimize([v] + path, g)


def _minimize(cycle: list[int], g: Graph) -> list[int]:
    # shortcut across chords until none is left
    changed = True
    while changed and len(cycle) > 3:
        changed = False
        k = len(cycle)
        for i in range(k):
            for j in range(i + 2, k):
                if (i, j) == (0, k - 1):
                    continue
                if g.adj[cycle[i]] >> cycle[j] & 1:
                    a = cycle[: i + 1] + cycle[j:]
                    b = cycle[i : j + 1]
                    cycle = a if len(a) >= 4 else b
                    changed = True
                    break
            if changed:
                break
    return cycle


def find_hole(g: Graph, violation: Optional[Violation] = None) -> Optional[tuple[int, ...]]:
    """Some hole of ``g`` or ``None``; tries ``violation`` first."""
    if violation is not None:
        c = _hole_through(g, violation.v, violation.x, violation.y)
        if c is not None and len(c) >= 4:
            return canonical_cycle(c)
    for v in range(g.n):
        nb = list(iter_bits(g.adj[v]))
        for i, x in enumerate(nb):
            for y in nb[i + 1:]:
                if g.adj[x] >> y & 1:
                    continue
                c = _hole_through(g, v, x, y)
                if c is not None and len(c) >= 4:
                    return canonical_cycle(c)
    return None


def is_chordal(g: Graph) -> ChordalityCertificate:
    order = mcs_order(g)
    bad = check_peo(g, order)
    if bad is None:
        return ChordalityCertificate(CHORDAL, peo=tuple(order))
    hole = find_hole(g, bad)
    assert hole is not None and is_hole(g, hole), "PEO violation without a hole"
    return ChordalityCertificate(NOT_CHORDAL, hole=hole)


def chordal(g: Graph) -> bool:
    """Boolean shortcut for :func:`is_chordal`."""
    return check_peo(g, mcs_order(g)) is None


# ------------------------------------------------------ induced cycles

def iter_induced_cycles(g: Graph, min_len: int = 4, max_len: Optional[int] = None,
                        max_order: int = MAX_ENUM_ORDER) -> Iterator[tuple[int, ...]]:
    """Yield every induced cycle with ``min_len <= length <= max_len`` once,
    in canonical orientation (see :func:`canonical_cycle`)."""
    if min_len < 3:
        raise ValueError("min_len must be at least 3")
    if g.n > max_order:
        raise TooLargeError(f"induced-cycle enumeration supports n <= {max_order}")
    top = g.n if max_len is None else min(max_len, g.n)
    adj = g.adj
    for s in range(g.n):
        higher = ~((1 << (s + 1)) - 1)
        for p1 in iter_bits(adj[s] & higher):
            yield from _extend(adj, s, [s, p1], (1 << s) | (1 << p1), 0, higher, min_len, top)


def _extend(adj, s, path, on_path, forbid, higher, min_len, top):
    # forbid: neighbours of interior path vertices (all but s and the last)
    last = path[-1]
    k = len(path)
    p1 = path[1]
    for x in iter_bits(adj[last] & higher & ~forbid & ~on_path):
        if adj[x] >> s & 1:
            if min_len <= k + 1 <= top and p1 < x:
                yield tuple(path) + (x,)
            continue
        if k + 1 < top:
            path.append(x)
            yield from _extend(adj, s, path, on_path | (1 << x), forbid | adj[last],
                               higher, min_len, top)
            path.pop()


def enumerate_induced_cycles(g: Graph, min_len: int = 4, max_len: Optional[int] = None,
                             max_order: int = MAX_ENUM_ORDER) -> list[tuple[int, ...]]:
    return sorted(iter_induced_cycles(g, min_len, max_len, max_order), key=lambda c: (len(c), c))


def has_induced_cycle_geq(g: Graph, f: int) -> Optional[tuple[int, ...]]:
    """A witness induced cycle of length >= ``f``, or ``None``."""
    if f < 4:
        raise ValueError("f must be at least 4")
    return next(iter_induced_cycles(g, f), None)
