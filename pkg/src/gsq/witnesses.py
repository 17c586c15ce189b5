"""Certificate extraction and independent verification.

:func:`extract_flower` turns a hole of ``G^2`` into an unwithered flower of
``G``; :func:`extract_sprout` turns a hole of ``L(G)^2`` into a fertile
sprout of ``G``.  The verifiers check every defining condition on their
own, without reusing any search code, and name the ones that fail.
"""

from __future__ import annotations

from typing import Sequence

from .chordality import is_hole
from .errors import NotAHoleError, TheoremViolation
from .graph import Graph, iter_bits, line_graph, mask_of, square
from .patterns import Edge, FlowerWitness, SproutWitness, infertile_edge, is_withered

FLOWER_CONDITIONS = ("structure", "i", "ii", "iii", "iv", "v", "vi", "withered_by")
SPROUT_CONDITIONS = ("structure", "i", "ii", "iii", "iv", "v", "infertile_by")


# -------------------------------------------------------------- extraction

def _gap_walk(adjacent, connectors, hole):
    """Closed walk ``u1 [w] u2 [w] ...`` split into w-vertices and the runs
    of u-members between consecutive ones (as in a flower)."""
    n = len(hole)
    walk = []
    for i in range(n):
        a, b = hole[i], hole[(i + 1) % n]
        walk.append(("u", a))
        if not adjacent(a, b):
            walk.append(("w", connectors(a, b, i)))
    first = next(i for i, (kind, _) in enumerate(walk) if kind == "w")
    walk = walk[first:] + walk[:first]
    ws, runs = [], []
    for kind, x in walk:
        if kind == "w":
            ws.append(x)
            runs.append([])
        else:
            runs[-1].append(x)
    return ws, runs


def extract_flower(g: Graph, hole: Sequence[int]) -> FlowerWitness:
    """Unwithered flower of ``g`` whose u-members are the vertices of a hole
    of ``square(g)``.

    Consecutive hole vertices at distance two are joined through the
    smallest vertex whose neighbourhood meets the hole in exactly that
    pair; vertices at distance one form a two-member gap.  A single member
    between two adjacent w-vertices becomes pending.  Any failure of these
    steps would refute the characterisation and raises
    :class:`TheoremViolation`.
    """
    hole = tuple(hole)
    if not is_hole(square(g), hole):
        raise NotAHoleError(f"{hole} is not an induced cycle of the square")
    n = len(hole)
    umask = mask_of(hole)

    def connector(a, b, i):
        want = (1 << a) | (1 << b)
        for w in iter_bits(g.adj[a] & g.adj[b] & ~umask):
            if g.adj[w] & umask == want:
                return w
        raise TheoremViolation(f"no connector for hole pair ({a}, {b})", graph=g,
                               payload={"hole": hole, "pair": (a, b)})

    ws, runs = _gap_walk(g.has_edge, connector, hole)
    q = len(ws)
    cycle, pending = [], set()
    for k in range(q):
        cycle.append(ws[k])
        run = runs[k]
        if len(run) == 1 and g.has_edge(ws[k], ws[(k + 1) % q]):
            pending.add(run[0])
        else:
            cycle.extend(run)
    u = tuple(runs[-1] + [x for run in runs[:-1] for x in run])
    f = FlowerWitness(u, tuple(ws), tuple(cycle), frozenset(pending))
    _require(verify_flower(g, f), g, f, "extracted flower fails verification")
    v = is_withered(g, f)
    if v is not None:
        raise TheoremViolation(f"extracted flower withered by {v}", graph=g, payload=f)
    assert len(u) == n
    return f


def extract_sprout(g: Graph, hole: Sequence[int]) -> SproutWitness:
    """Fertile sprout of ``g`` from a hole of ``square(L(g))``.

    The hole is given in line-graph vertex ids.  The flower extracted in
    ``L(g)`` already has all its w-vertices on its cycle, so it maps back to
    a sprout directly: line-graph vertices become edges of ``g`` and the
    pending members become pending edges.
    """
    lmap = line_graph(g)
    lg, edge_of = lmap.lg, lmap.edge_of_vertex
    hole = tuple(hole)
    if not is_hole(square(lg), hole):
        raise NotAHoleError(f"{hole} is not an induced cycle of the line-graph square")
    f = extract_flower(lg, hole)

    def e(x):
        return edge_of[x]

    s = SproutWitness(tuple(map(e, f.u)), tuple(map(e, f.w)), tuple(map(e, f.cycle)),
                      frozenset(map(e, f.pending)))
    _require(verify_sprout(g, s), g, s, "extracted sprout fails verification")
    bad = infertile_edge(g, s.u_edges)
    if bad is not None:
        raise TheoremViolation(f"extracted sprout made infertile by {bad}", graph=g, payload=s)
    return s


def _require(problems, g, witness, message):
    if problems:
        raise TheoremViolation(f"{message}: {problems}", graph=g, payload=witness)


# ---------------------------------------------------------- verification

def _cyclic_order_ok(positions: list[int], length: int) -> bool:
    # positions increase around the cycle, wrapping at most once
    if len(set(positions)) != len(positions):
        return False
    drops = sum(1 for a, b in zip(positions, positions[1:] + positions[:1]) if b <= a)
    return drops <= 1


def _segment(cycle, start, end):
    # cycle entries strictly between indices start and end, going forward
    out = []
    i = (start + 1) % len(cycle)
    while i != end:
        out.append(cycle[i])
        i = (i + 1) % len(cycle)
    return out


def verify_flower(g: Graph, f: FlowerWitness) -> list[str]:
    """Names of the flower conditions ``f`` violates in ``g`` (empty if ok).

    ``"structure"`` covers sizes, ranges and disjointness; ``"i"`` to
    ``"vi"`` are the defining conditions; ``"withered_by"`` flags a withering
    annotation that does not hold.
    """
    bad = []
    u, w, cycle = tuple(f.u), tuple(f.w), tuple(f.cycle)
    n, q = len(u), len(w)
    pending = set(f.pending)
    everything = u + w + cycle
    if (n < 3 or not (n + 1) // 2 <= q <= n or len(set(u)) != n or len(set(w)) != q
            or set(u) & set(w) or any(not 0 <= x < g.n for x in everything)
            or not pending <= set(u)):
        return ["structure"]

    def adj(a, b):
        return bool(g.adj[a] >> b & 1)

    L = len(cycle)
    pos = {x: i for i, x in enumerate(cycle)}
    simple = L >= 3 and len(pos) == L and all(adj(cycle[i], cycle[(i + 1) % L]) for i in range(L))
    # i: a cycle through W in the listed order
    if not simple or not set(w) <= set(cycle) or not _cyclic_order_ok([pos[x] for x in w], L):
        bad.append("i")
        return bad

    wset, uset = set(w), set(u)
    fmask = mask_of(u) | mask_of(w)
    on_cycle = {x for x in u if x in pos}
    # where each pending member sits: the consecutive w-pair it hangs from
    hang = {}
    for x in uset - on_cycle:
        nw = [k for k in range(q) if adj(x, w[k]) and adj(x, w[(k + 1) % q])]
        hang[x] = nw[0] if nw else None

    # ii: U in cycle order, u1 ~ wq, u2 ~ w1, non-consecutive u's apart
    keys = []
    for x in u:
        if x in pos:
            keys.append(2 * pos[x])
        elif hang[x] is not None:
            keys.append(2 * pos[w[hang[x]]] + 1)
        else:
            keys.append(None)
    ok = None not in keys and _cyclic_order_ok(keys, 2 * L)
    ok = ok and adj(u[0], w[-1]) and adj(u[1 % n], w[0])
    ok = ok and not any(adj(u[i], u[j]) for i in range(n) for j in range(i + 1, n)
                        if (j - i) % n not in (1, n - 1))
    if not ok:
        bad.append("ii")

    # iii / iv: what lies between consecutive w's
    iii_ok = iv_ok = True
    required = {x: set() for x in u}
    for k in range(q):
        a, b = w[k], w[(k + 1) % q]
        seg = _segment(cycle, pos[a], pos[b])
        if not seg:
            hanging = [x for x in uset - on_cycle
                       if g.adj[x] & fmask == (1 << a) | (1 << b)]
            if len(hanging) != 1:
                iii_ok = False
            for x in hanging:
                required[x] |= {a, b}
        elif len(seg) == 1:
            if not (seg[0] in uset and adj(seg[0], a) and adj(seg[0], b)):
                iv_ok = False
            else:
                required[seg[0]] |= {a, b}
        elif len(seg) == 2:
            if not (seg[0] in uset and seg[1] in uset):
                iv_ok = False
            else:
                required[seg[0]].add(a)
                required[seg[1]].add(b)
        else:
            iv_ok = False
    if not iii_ok:
        bad.append("iii")
    if not iv_ok:
        bad.append("iv")

    # v: pending = U off the cycle, pairwise non-adjacent
    off = uset - on_cycle
    if pending != off or any(adj(a, b) for a in off for b in off if a < b):
        bad.append("v")

    # vi: no U-W edges beyond the required ones
    if any({y for y in wset if adj(x, y)} != required[x] for x in u):
        bad.append("vi")

    if f.withered_by is not None:
        v = f.withered_by
        ok = 0 <= v < g.n and any(
            adj(v, u[i]) and adj(v, u[j]) and v not in (u[i], u[j])
            for i in range(n) for j in range(i + 1, n) if (j - i) % n not in (1, n - 1))
        if not ok:
            bad.append("withered_by")
    return bad


def verify_sprout(g: Graph, s: SproutWitness) -> list[str]:
    """Names of the sprout conditions ``s`` violates in ``g`` (empty if ok)."""
    bad = []

    def norm(e):
        a, b = e
        return (a, b) if a < b else (b, a)

    u = tuple(norm(e) for e in s.u_edges)
    w = tuple(norm(e) for e in s.w_edges)
    cycle = tuple(norm(e) for e in s.cycle)
    pending = {norm(e) for e in s.pending}
    n, q = len(u), len(w)
    every = u + w + cycle
    if (n < 3 or not (n + 1) // 2 <= q <= n or len(set(u)) != n or len(set(w)) != q
            or set(u) & set(w) or not pending <= set(u)
            or any(a == b or not (0 <= a < g.n and 0 <= b < g.n) or not g.adj[a] >> b & 1
                   for a, b in every)):
        return ["structure"]

    L = len(cycle)
    pos = {e: i for i, e in enumerate(cycle)}
    # i: the edges form a simple cycle containing W in order
    degree: dict[int, int] = {}
    for a, b in cycle:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
    simple = (L >= 3 and len(pos) == L and all(d == 2 for d in degree.values())
              and all(len(set(cycle[i]) & set(cycle[(i + 1) % L])) == 1 for i in range(L))
              and len(degree) == L)
    if not simple or not set(w) <= set(cycle) or not _cyclic_order_ok([pos[e] for e in w], L):
        bad.append("i")
        return bad

    uset = set(u)
    on_cycle = {e for e in u if e in pos}
    off = uset - on_cycle

    def meets(e, f):
        return bool(set(e) & set(f))

    # ii
    keys = []
    for e in u:
        if e in pos:
            keys.append(2 * pos[e])
            continue
        spot = None
        for k in range(q):
            shared = set(w[k]) & set(w[(k + 1) % q])
            if shared and shared & set(e):
                spot = 2 * pos[w[k]] + 1
        keys.append(spot)
    ok = None not in keys and _cyclic_order_ok(keys, 2 * L)
    ok = ok and meets(u[0], w[-1]) and meets(u[1 % n], w[0])
    ok = ok and not any(meets(u[i], u[j]) for i in range(n) for j in range(i + 1, n)
                        if (j - i) % n not in (1, n - 1))
    if not ok:
        bad.append("ii")

    iii_ok = iv_ok = True
    for k in range(q):
        a, b = w[k], w[(k + 1) % q]
        shared = set(a) & set(b)
        seg = _segment(cycle, pos[a], pos[b])
        if shared:
            if len([e for e in u if set(e) & shared]) != 1 or seg:
                iii_ok = False
        elif not (1 <= len(seg) <= 2 and all(e in uset for e in seg)):
            iv_ok = False
    if not iii_ok:
        bad.append("iii")
    if not iv_ok:
        bad.append("iv")

    if pending != off or any(meets(a, b) for a in off for b in off if a < b):
        bad.append("v")

    if s.infertile_by is not None:
        x, y = norm(s.infertile_by)
        ok = bool(g.adj[x] >> y & 1) and any(
            (x in u[i] and y in u[j]) or (y in u[i] and x in u[j])
            for i in range(n) for j in range(i + 1, n) if (j - i) % n not in (1, n - 1))
        if not ok:
            bad.append("infertile_by")
    return bad
