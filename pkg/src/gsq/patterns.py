"""Searches for the structures that decide chordality of squares.

Claws, P5+a, F4, sunflowers, flowers (vertex level, certify holes in the
square) and sprouts (edge level, certify holes in the square of the line
graph).  All searches are exhaustive and meant for small graphs; every
``iter_*`` generator yields each structure once, up to rotation and
reflection of its cyclic labelling.

Labelling conventions
---------------------
* sunflower: ``u[i]`` is adjacent to ``w[i]`` and ``w[i+1]``;
* F4: ``u[i]`` is adjacent to ``w[i-1]`` and ``w[i]``;
* flower / sprout: the cycle runs ``w1, gap1, w2, ..., wq, gap_q`` and
  ``u`` lists the u-members of ``gap_q`` first, then gaps ``1..q-1``, so
  ``u[0]`` touches ``w[-1]`` and ``u[1]`` touches ``w[0]``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterator, Optional

from .chordality import chordal, has_induced_cycle_geq, iter_induced_cycles
from .errors import InvalidWitnessError, TooLargeError
from .graph import Graph, induced_subgraph, iter_bits, mask_of

MAX_ORDER = 12
MAX_SPROUT_EDGES = 18

Edge = tuple[int, int]


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def _nonconsecutive_pairs(n: int) -> Iterator[tuple[int, int]]:
    for i in range(n):
        for j in range(i + 2, n):
            if (i, j) != (0, n - 1):
                yield i, j


# ------------------------------------------------------------------ claws

@dataclass(frozen=True)
class ClawWitness:
    center: int
    leaves: tuple[int, int, int]


def iter_claws(g: Graph) -> Iterator[ClawWitness]:
    for c in range(g.n):
        nb = list(iter_bits(g.adj[c]))
        for a, b, d in combinations(nb, 3):
            if not (g.adj[a] >> b & 1 or g.adj[a] >> d & 1 or g.adj[b] >> d & 1):
                yield ClawWitness(c, (a, b, d))


def find_claw(g: Graph) -> Optional[ClawWitness]:
    """Lexicographically first induced claw (smallest centre, then leaves)."""
    return next(iter_claws(g), None)


# ------------------------------------------------------------------ P5 + a

@dataclass(frozen=True)
class P5aWitness:
    """Induced path ``v1..v5`` plus the edge ``v2 v4``."""

    path: tuple[int, int, int, int, int]

    @property
    def extra_edge(self) -> Edge:
        return _edge(self.path[1], self.path[3])


def iter_p5a(g: Graph) -> Iterator[P5aWitness]:
    adj = g.adj
    for v3 in range(g.n):
        for v2, v4 in combinations(iter_bits(adj[v3]), 2):
            if not adj[v2] >> v4 & 1:
                continue
            core = (1 << v2) | (1 << v3) | (1 << v4)
            for v1 in iter_bits(adj[v2] & ~core & ~adj[v3] & ~adj[v4]):
                for v5 in iter_bits(adj[v4] & ~core & ~adj[v3] & ~adj[v2] & ~adj[v1]):
                    if v5 != v1:
                        path = (v1, v2, v3, v4, v5)
                        yield P5aWitness(path if v1 < v5 else path[::-1])


def find_p5a(g: Graph) -> Optional[P5aWitness]:
    return min(iter_p5a(g), key=lambda w: (sorted(w.path), w.path), default=None)


# -------------------------------------------------------------- sunflowers

@dataclass(frozen=True)
class SunflowerWitness:
    u: tuple[int, ...]
    w: tuple[int, ...]
    suspended_by: Optional[int] = None

    @property
    def suspended(self) -> bool:
        return self.suspended_by is not None


def suspending_vertex(g: Graph, u, others=()) -> Optional[int]:
    """Smallest vertex outside ``u`` and ``others`` adjacent to two
    non-consecutive members of the cyclic sequence ``u``."""
    skip = mask_of(u) | mask_of(others)
    found = []
    for i, j in _nonconsecutive_pairs(len(u)):
        common = g.adj[u[i]] & g.adj[u[j]] & ~skip
        if common:
            found.append((common & -common).bit_length() - 1)
    return min(found) if found else None


def _reverse_cyclic(ws, gaps):
    # same structure traversed the other way round, still starting at ws[0]
    q = len(ws)
    rws = (ws[0],) + tuple(reversed(ws[1:]))
    rgaps = tuple((gaps[(q - 1 - k) % q][0], tuple(reversed(gaps[(q - 1 - k) % q][1])))
                  for k in range(q))
    return rws, rgaps


def iter_sunflowers(g: Graph, size: int, max_order: int = MAX_ORDER) -> Iterator[SunflowerWitness]:
    """Every sunflower of the given size in ``g``: a stable ``U``, a ``W``
    with ``g[W]`` chordal, and the exact cyclic U-W adjacency pattern."""
    if size < 3:
        raise ValueError("sunflower size must be >= 3")
    if g.n > max_order:
        raise TooLargeError(f"sunflower search supports n <= {max_order}")
    adj = g.adj
    for w1 in range(g.n):
        higher = ~((1 << (w1 + 1)) - 1)
        ws = [w1]
        us: list[int] = []

        def grow(wmask, umask):
            cur = ws[-1]
            k = len(ws)
            for u in iter_bits(adj[cur] & ~wmask & ~umask):
                if adj[u] & umask or adj[u] & wmask != 1 << cur and not (
                        k == size and adj[u] & wmask == (1 << cur) | (1 << w1)):
                    continue
                if k == size:
                    if not adj[u] >> w1 & 1 or adj[u] & wmask != (1 << cur) | (1 << w1):
                        continue
                    us.append(u)
                    yield from _close_sunflower(g, tuple(ws), tuple(us))
                    us.pop()
                    continue
                for nxt in iter_bits(adj[u] & higher & ~wmask & ~umask & ~(1 << u)):
                    if adj[nxt] & umask:
                        continue
                    us.append(u)
                    ws.append(nxt)
                    yield from grow(wmask | (1 << nxt), umask | (1 << u))
                    ws.pop()
                    us.pop()

        yield from grow(1 << w1, 0)


def _close_sunflower(g: Graph, ws, us):
    n = len(ws)
    wset = mask_of(ws)
    uset = mask_of(us)
    for i, u in enumerate(us):
        if g.adj[u] & uset or g.adj[u] & wset != (1 << ws[i]) | (1 << ws[(i + 1) % n]):
            return
    rep = (ws, tuple(("S", (u,)) for u in us))
    if rep > min(rep, _reverse_cyclic(*rep)):
        return
    if not chordal(induced_subgraph(g, ws)[0]):
        return
    yield SunflowerWitness(us, ws, suspending_vertex(g, us, ws))


def find_sunflower(g: Graph, size: int, max_order: int = MAX_ORDER) -> list[SunflowerWitness]:
    return sorted(iter_sunflowers(g, size, max_order),
                  key=lambda s: (sorted(s.u + s.w), s.w, s.u))


def has_unsuspended_sunflower(g: Graph, min_size: int = 4, max_order: int = MAX_ORDER) -> Optional[SunflowerWitness]:
    for size in range(min_size, g.n // 2 + 1):
        for s in iter_sunflowers(g, size, max_order):
            if not s.suspended:
                return s
    return None


# --------------------------------------------------------------------- F4

@dataclass(frozen=True)
class F4Witness:
    """Induced F4; ``u[i]`` is adjacent to ``w[i-1]`` and ``w[i]``."""

    u: tuple[int, int, int, int]
    w: tuple[int, int, int, int]
    suspended_by: Optional[int] = None

    @property
    def suspended(self) -> bool:
        return self.suspended_by is not None


def find_f4(g: Graph, max_order: int = MAX_ORDER) -> list[F4Witness]:
    """All induced copies of F4, one per vertex set, with suspension."""
    if g.n > max_order:
        raise TooLargeError(f"F4 search supports n <= {max_order}")
    adj = g.adj
    found = {}
    for c in iter_induced_cycles(g, 4, 4):
        wmask = mask_of(c)
        picks = []
        for i in range(4):
            a, b = c[i - 1], c[i]
            cand = adj[a] & adj[b] & ~wmask
            picks.append([x for x in iter_bits(cand) if adj[x] & wmask == (1 << a) | (1 << b)])
        for us in _product(picks):
            if len(set(us)) < 4 or any(adj[x] & mask_of(us) for x in us):
                continue
            key = frozenset(us) | frozenset(c)
            if key in found:
                continue
            v = None
            for x in range(g.n):
                if (1 << x) & (wmask | mask_of(us)):
                    continue
                if (adj[x] >> us[0] & 1 and adj[x] >> us[2] & 1) or (adj[x] >> us[1] & 1 and adj[x] >> us[3] & 1):
                    v = x
                    break
            found[key] = F4Witness(tuple(us), tuple(c), v)
    return sorted(found.values(), key=lambda f: (sorted(f.u + f.w), f.w, f.u))


def _product(lists):
    if not lists:
        yield ()
        return
    for x in lists[0]:
        for rest in _product(lists[1:]):
            yield (x,) + rest


# ---------------------------------------------------------------- flowers

@dataclass(frozen=True)
class FlowerWitness:
    """A flower in a host graph.

    ``cycle`` is the vertex sequence of the defining cycle, starting at
    ``w[0]`` and heading towards ``w[1]``; ``pending`` holds the u-members
    off the cycle.
    """

    u: tuple[int, ...]
    w: tuple[int, ...]
    cycle: tuple[int, ...]
    pending: frozenset = frozenset()
    withered_by: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.u)

    @property
    def q(self) -> int:
        return len(self.w)

    @property
    def withered(self) -> bool:
        return self.withered_by is not None


def is_withered(g: Graph, f) -> Optional[int]:
    """Smallest vertex adjacent to two non-consecutive u-members, or ``None``.

    Any vertex other than the pair itself counts, including a third
    u-member joined to both of its cyclic neighbours.  Raises
    :class:`InvalidWitnessError` if ``f`` is not a flower of ``g``.
    """
    from .witnesses import verify_flower

    problems = verify_flower(g, replace(f, withered_by=None))
    if problems:
        raise InvalidWitnessError(f"not a flower of this graph: conditions {problems} fail")
    return _withering_vertex(g, f.u)


def _withering_vertex(g: Graph, u) -> Optional[int]:
    found = []
    for i, j in _nonconsecutive_pairs(len(u)):
        common = g.adj[u[i]] & g.adj[u[j]]
        if common:
            found.append((common & -common).bit_length() - 1)
    return min(found) if found else None


def iter_flowers(g: Graph, size: int, max_order: int = MAX_ORDER) -> Iterator[FlowerWitness]:
    """Every induced flower of the given size, annotated with withering."""
    if size < 4:
        raise ValueError("flower size must be >= 4")
    if g.n > max_order:
        raise TooLargeError(f"flower search supports n <= {max_order}")
    for q in range(_ceil_half(size), size + 1):
        for w1 in range(g.n):
            yield from _FlowerSearch(g, size, q, w1).run()


class _FlowerSearch:
    """Depth-first construction of ``w1, gap1, w2, ..., wq, gap_q``.

    A gap is ``("P", (u,))`` (pending u, w-w edge on the cycle),
    ``("S", (u,))`` or ``("D", (u, t))``.  ``w1`` is the smallest w-vertex.
    """

    def __init__(self, g, size, q, w1):
        self.g, self.size, self.q, self.w1 = g, size, q, w1
        self.higher = ~((1 << (w1 + 1)) - 1)
        self.ws = [w1]
        self.gaps = []

    def run(self):
        yield from self._gap(1 << self.w1, 0, self.size - self.q)

    def _gap(self, wmask, umask, doubles):
        adj = self.g.adj
        cur = self.ws[-1]
        k = len(self.ws)
        closing = k == self.q
        singles = (self.q - k + 1) - doubles
        free = ~wmask & ~umask
        # a u may only see w-vertices designated for it
        for u in iter_bits(adj[cur] & free):
            if adj[u] & wmask & ~(1 << cur) & ~((1 << self.w1) if closing else 0):
                continue
            if singles > 0:
                for kind in ("P", "S"):
                    if kind == "P" and adj[u] & umask:
                        continue
                    targets = adj[u] & (adj[cur] if kind == "P" else -1)
                    yield from self._next_w(kind, (u,), targets, wmask, umask | (1 << u), doubles)
            if doubles > 0:
                if adj[u] >> self.w1 & 1 and closing:
                    continue
                for t in iter_bits(adj[u] & free & ~(1 << u)):
                    if adj[t] & wmask & ~((1 << self.w1) if closing else 0):
                        continue
                    yield from self._next_w("D", (u, t), adj[t], wmask, umask | (1 << u) | (1 << t),
                                            doubles - 1)

    def _next_w(self, kind, members, targets, wmask, umask, doubles):
        adj = self.g.adj
        last = members[-1]
        self.gaps.append((kind, members))
        if len(self.ws) == self.q:
            if targets >> self.w1 & 1:
                yield from self._close()
        else:
            for nxt in iter_bits(targets & self.higher & ~wmask & ~umask):
                # nxt may only see the u just placed before it
                if adj[nxt] & umask != 1 << last:
                    continue
                self.ws.append(nxt)
                yield from self._gap(wmask | (1 << nxt), umask, doubles)
                self.ws.pop()
        self.gaps.pop()

    def _close(self):
        g, adj = self.g, self.g.adj
        ws, gaps, q = tuple(self.ws), tuple(self.gaps), self.q
        rep = (ws, gaps)
        if rep > _reverse_cyclic(ws, gaps):
            return
        wset = mask_of(ws)
        order = [gaps[-1]] + list(gaps[:-1])
        useq = [x for _, members in order for x in members]
        uset = mask_of(useq)
        if len(useq) != self.size or len(set(useq)) != self.size:
            return
        pending = set()
        n = self.size
        pos = {x: i for i, x in enumerate(useq)}
        for k, (kind, members) in enumerate(gaps):
            a, b = ws[k], ws[(k + 1) % q]
            if kind == "P":
                if not adj[a] >> b & 1:
                    return
                pending.add(members[0])
            first, last = members[0], members[-1]
            if adj[first] & wset != ((1 << a) | (1 << b) if len(members) == 1 else 1 << a):
                return
            if adj[last] & wset != ((1 << a) | (1 << b) if len(members) == 1 else 1 << b):
                return
            if kind == "D" and not adj[first] >> last & 1:
                return
        for x in useq:
            i = pos[x]
            allowed = 0 if x in pending else (1 << useq[(i - 1) % n]) | (1 << useq[(i + 1) % n])
            if x not in pending:
                allowed &= ~mask_of(pending)
            if adj[x] & uset & ~allowed:
                return
        cycle = []
        for k, (kind, members) in enumerate(gaps):
            cycle.append(ws[k])
            if kind != "P":
                cycle.extend(members)
        f = FlowerWitness(tuple(useq), ws, tuple(cycle), frozenset(pending))
        yield replace(f, withered_by=_withering_vertex(g, f.u))


def _flower_key(f):
    return (sorted(f.u + f.w), f.w, f.u, f.cycle)


def find_flower(g: Graph, size: int, max_order: int = MAX_ORDER) -> list[FlowerWitness]:
    return sorted(iter_flowers(g, size, max_order), key=_flower_key)


def find_unwithered_flower(g: Graph, sizes=None, max_order: int = MAX_ORDER) -> Optional[FlowerWitness]:
    """First unwithered flower over ``sizes`` (default ``4..floor(2n/3)``)."""
    if sizes is None:
        sizes = range(4, 2 * g.n // 3 + 1)
    for size in sizes:
        for f in iter_flowers(g, size, max_order):
            if not f.withered:
                return f
    return None


# ----------------------------------------------------------------- sprouts

@dataclass(frozen=True)
class SproutWitness:
    """A sprout: edge-level analogue of a flower.

    ``cycle`` lists the edges of the defining cycle in traversal order,
    starting with ``w_edges[0]``.
    """

    u_edges: tuple[Edge, ...]
    w_edges: tuple[Edge, ...]
    cycle: tuple[Edge, ...]
    pending: frozenset = frozenset()
    infertile_by: Optional[Edge] = None

    @property
    def size(self) -> int:
        return len(self.u_edges)

    @property
    def q(self) -> int:
        return len(self.w_edges)

    @property
    def fertile(self) -> bool:
        return self.infertile_by is None

    # the same notion under the name used for flowers
    @property
    def withered(self) -> bool:
        return self.infertile_by is not None


def infertile_edge(g: Graph, u_edges) -> Optional[Edge]:
    """Smallest edge of ``g`` joining endpoints of two non-consecutive
    u-edges, or ``None``."""
    found = []
    for i, j in _nonconsecutive_pairs(len(u_edges)):
        for a in u_edges[i]:
            for b in u_edges[j]:
                if a != b and g.adj[a] >> b & 1:
                    found.append(_edge(a, b))
    return min(found) if found else None


def iter_sprouts(g: Graph, size: int, max_edges: int = MAX_SPROUT_EDGES) -> Iterator[SproutWitness]:
    """Every sprout of the given size in ``g``, annotated with fertility."""
    if size < 4:
        raise ValueError("sprout size must be >= 4")
    if g.m > max_edges:
        raise TooLargeError(f"sprout search supports graphs with <= {max_edges} edges")
    edges = g.edges()
    for q in range(_ceil_half(size), size + 1):
        for w1 in edges:
            for a, b in (w1, w1[::-1]):
                yield from _SproutSearch(g, size, q, w1, a, b).run()


class _SproutSearch:
    """Walks the cycle vertex by vertex from ``a`` (start of ``w1``).

    Gaps are ``("P", (u,))`` with ``u`` hanging off the shared vertex,
    ``("S", (u,))`` or ``("D", (t, u))``; members are edges.
    """

    def __init__(self, g, size, q, w1, a, b):
        self.g, self.size, self.q = g, size, q
        self.w1, self.start = w1, a
        self.ws = [w1]
        self.gaps = []
        self.path = [a, b]

    def run(self):
        yield from self._gap(self.path[-1], (1 << self.path[0]) | (1 << self.path[1]), self.size - self.q)

    def _gap(self, cur, onc, doubles):
        adj = self.g.adj
        k = len(self.ws)
        singles = (self.q - k + 1) - doubles
        closing = k == self.q
        if closing:
            if cur == self.start:
                if singles == 1 and doubles == 0:
                    yield from self._pending(cur, lambda: self._close())
                return
            if singles == 1 and doubles == 0 and adj[cur] >> self.start & 1:
                self.gaps.append(("S", (_edge(cur, self.start),)))
                yield from self._close()
                self.gaps.pop()
            if doubles == 1 and singles == 0:
                for c in iter_bits(adj[cur] & adj[self.start] & ~onc):
                    self.gaps.append(("D", (_edge(cur, c), _edge(c, self.start))))
                    self.path.append(c)
                    yield from self._close()
                    self.path.pop()
                    self.gaps.pop()
            return
        if singles > 0:
            # pending: next w starts at cur
            yield from self._pending(cur, lambda: self._w_from(cur, onc, doubles, "P"))
            for c in iter_bits(adj[cur] & ~onc):
                self.gaps.append(("S", (_edge(cur, c),)))
                self.path.append(c)
                yield from self._w_from(c, onc | (1 << c), doubles, "S")
                self.path.pop()
                self.gaps.pop()
        if doubles > 0:
            for c in iter_bits(adj[cur] & ~onc):
                for d in iter_bits(adj[c] & ~onc & ~(1 << c)):
                    self.gaps.append(("D", (_edge(cur, c), _edge(c, d))))
                    self.path += [c, d]
                    yield from self._w_from(d, onc | (1 << c) | (1 << d), doubles - 1, "D")
                    del self.path[-2:]
                    self.gaps.pop()

    def _pending(self, x, cont):
        # the pending edge is chosen now; the gap list entry is a placeholder
        for y in iter_bits(self.g.adj[x]):
            self.gaps.append(("P", (_edge(x, y),)))
            yield from cont()
            self.gaps.pop()

    def _w_from(self, s, onc, doubles, kind):
        adj = self.g.adj
        last_w = len(self.ws) + 1 == self.q
        for e in iter_bits(adj[s]):
            new = not onc >> e & 1
            if not new and not (last_w and e == self.start and len(self.path) > 2):
                continue
            edge = _edge(s, e)
            if edge < self.w1:
                continue
            self.ws.append(edge)
            if new:
                self.path.append(e)
            yield from self._gap(e, onc | (1 << e), doubles)
            if new:
                self.path.pop()
            self.ws.pop()

    def _close(self):
        g = self.g
        ws, gaps, q = tuple(self.ws), tuple(self.gaps), self.q
        rep = (ws, gaps)
        if rep > _reverse_cyclic(ws, gaps):
            return
        order = [gaps[-1]] + list(gaps[:-1])
        useq = tuple(e for _, members in order for e in members)
        if len(set(useq)) != self.size or set(useq) & set(ws):
            return
        if len(set(ws)) != q:
            return
        n = self.size
        for i, j in _nonconsecutive_pairs(n):
            if set(useq[i]) & set(useq[j]):
                return
        pending = [m[0] for kind, m in gaps if kind == "P"]
        for x in range(len(pending)):
            for y in range(x + 1, len(pending)):
                if set(pending[x]) & set(pending[y]):
                    return
        cycle = []
        for k, (kind, members) in enumerate(gaps):
            cycle.append(ws[k])
            if kind != "P":
                cycle.extend(members)
        cycle_set = set(cycle)
        if any(p in cycle_set for p in pending):
            return
        for k in range(q):
            shared = set(ws[k]) & set(ws[(k + 1) % q])
            if shared:
                touching = [e for e in useq if set(e) & shared]
                if len(touching) != 1 or gaps[k][0] != "P":
                    return
        yield SproutWitness(useq, ws, tuple(cycle), frozenset(pending), infertile_edge(g, useq))


def _sprout_key(s):
    return (sorted(s.u_edges + s.w_edges), s.w_edges, s.u_edges, s.cycle)


def find_sprout(g: Graph, size: int, max_edges: int = MAX_SPROUT_EDGES) -> list[SproutWitness]:
    return sorted(iter_sprouts(g, size, max_edges), key=_sprout_key)


def find_fertile_sprout(g: Graph, sizes, max_edges: int = MAX_SPROUT_EDGES) -> Optional[SproutWitness]:
    for size in sizes:
        for s in iter_sprouts(g, size, max_edges):
            if s.fertile:
                return s
    return None


# ------------------------------------------------- sufficient condition

@dataclass(frozen=True)
class SufficientReport:
    claw_free: bool
    no_long_hole: bool
    all_f4_suspended: bool
    claw: Optional[ClawWitness] = None
    long_hole: Optional[tuple[int, ...]] = None
    unsuspended_f4: Optional[F4Witness] = None

    @property
    def applicable(self) -> bool:
        return self.claw_free and self.no_long_hole and self.all_f4_suspended


def check_sufficient_chordalsq(g: Graph, max_order: int = MAX_ORDER) -> SufficientReport:
    """Evaluate the three hypotheses (claw-free, no induced cycle of length
    >= 5, every induced F4 suspended) that force a chordal square."""
    claw = find_claw(g)
    hole = has_induced_cycle_geq(g, 5)
    bad = next((f for f in find_f4(g, max_order) if not f.suspended), None)
    return SufficientReport(claw is None, hole is None, bad is None, claw, hole, bad)
