"""Immutable simple graphs on vertices ``0..n-1`` with bitset adjacency.

Every other module works on :class:`Graph`.  Adjacency is stored as one
Python ``int`` per vertex; bit ``j`` of ``adj[i]`` is set iff ``ij`` is an
edge.  Graphs are hashable and never mutated after construction.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import EmptyGraphError, GraphError, OutOfRangeError, SelfLoopError, TooLargeError

UNREACHABLE = -1
MAX_CANONICAL_ORDER = 12


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph.

    Use :func:`from_edge_list` for validated construction; the constructor
    trusts its input and is meant for internal callers that already hold a
    symmetric, loop-free adjacency.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)
        self._hash = None

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(a | (1 << i) == full for i, a in enumerate(self.adj))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << i) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, list(g.adj) + [a << shift for a in h.adj])


def add_vertex(g: Graph, neighbors: Iterable[int]) -> Graph:
    """Return ``g`` plus one new vertex ``g.n`` joined to ``neighbors``."""
    new = g.n
    nb = mask_of(neighbors)
    if nb >> new:
        raise OutOfRangeError("neighbor outside the graph")
    adj = [a | (1 << new) if nb >> i & 1 else a for i, a in enumerate(g.adj)]
    adj.append(nb)
    return Graph(new + 1, adj)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``order[i]`` of ``g``."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = [0] * g.n
    for i, v in enumerate(order):
        m = 0
        for w in iter_bits(g.adj[v]):
            m |= 1 << pos[w]
        adj[i] = m
    return Graph(g.n, adj)


# ---------------------------------------------------------------- distances

def _bfs(adj: Sequence[int], n: int, source: int) -> list[int]:
    dist = [UNREACHABLE] * n
    seen = frontier = 1 << source
    d = 0
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            dist[v] = d
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return dist


def distances(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All-pairs hop distances; ``UNREACHABLE`` (-1) across components."""
    return tuple(tuple(_bfs(g.adj, g.n, s)) for s in range(g.n))


def diameter(g: Graph) -> int:
    """Maximum diameter over the components of ``g``."""
    if g.n == 0:
        raise EmptyGraphError("diameter of the empty graph is undefined")
    return max(max(row) for row in distances(g))


def ball(g: Graph, v: int, radius: int) -> int:
    """Bitmask of the vertices within ``radius`` hops of ``v``."""
    seen = frontier = 1 << v
    for _ in range(radius):
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= g.adj[w]
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
    return seen


def power(g: Graph, k: int) -> Graph:
    """k-th power: ``xy`` is an edge iff ``1 <= dist(x, y) <= k``."""
    if k < 1:
        raise GraphError("graph power needs k >= 1")
    if k == 1:
        return g
    return Graph(g.n, [ball(g, v, k) & ~(1 << v) for v in range(g.n)])


def square(g: Graph) -> Graph:
    return power(g, 2)


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by smallest vertex."""
    out = []
    left = (1 << g.n) - 1
    while left:
        low = left & -left
        comp = ball(g, low.bit_length() - 1, g.n)
        out.append(frozenset(iter_bits(comp)))
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or ball(g, 0, g.n) == (1 << g.n) - 1


# ------------------------------------------------------------- line graph

class LineGraphMap(NamedTuple):
    lg: Graph
    edge_of_vertex: tuple[tuple[int, int], ...]

    def vertex_of_edge(self, u: int, v: int) -> int:
        return self.edge_of_vertex.index((min(u, v), max(u, v)))


def line_graph(g: Graph) -> LineGraphMap:
    """Line graph; vertex ``i`` of the result is the i-th edge of ``g`` in
    lexicographic order."""
    edges = g.edges()
    incident: list[int] = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    adj = [(incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)]
    return LineGraphMap(Graph(len(edges), adj), tuple(edges))


# ------------------------------------------------------- induced subgraphs

def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """``g[S]`` relabelled to ``0..|S|-1`` in increasing id order.

    Returns the subgraph and the tuple of original ids (``remap[i]`` is the
    original id of new vertex ``i``).
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise OutOfRangeError(f"vertex {v} outside 0..{g.n - 1}")
    pos = {v: i for i, v in enumerate(keep)}
    smask = mask_of(keep)
    adj = []
    for v in keep:
        m = 0
        for w in iter_bits(g.adj[v] & smask):
            m |= 1 << pos[w]
        adj.append(m)
    return Graph(len(keep), adj), tuple(keep)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~a & ~(1 << i) for i, a in enumerate(g.adj)])


# -------------------------------------------------------- canonical form

def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    # colour refinement on an ordered partition; splitting is label-invariant
    while True:
        masks = [mask_of(c) for c in cells]
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                sig = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _leaf_key(adj: Sequence[int], order: Sequence[int]) -> int:
    key = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            key = (key << 1) | (row >> order[i] & 1)
    return key


def canonical_labeling(g: Graph, max_order: int = MAX_CANONICAL_ORDER) -> tuple[int, ...]:
    """An ordering of the vertices such that relabelling by it yields the same
    graph for every member of an isomorphism class.

    Individualisation-refinement search over degree-refined ordered
    partitions; the leaf with the largest packed adjacency wins.  Branches on
    twin vertices are skipped because swapping twins is an automorphism.
    """
    if g.n > max_order:
        raise TooLargeError(f"canonical form supports n <= {max_order}, got {g.n}")
    adj = g.adj
    if g.n == 0:
        return ()
    best_key = -1
    best_order: tuple[int, ...] = ()

    def search(cells):
        nonlocal best_key, best_order
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            key = _leaf_key(adj, order)
            if key > best_key:
                best_key, best_order = key, tuple(order)
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            av = adj[v]
            if any(av & ~(1 << t) == adj[t] & ~(1 << v) for t in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(g.n))])
    return best_order


def canonical_graph(g: Graph, max_order: int = MAX_CANONICAL_ORDER) -> Graph:
    return relabel(g, canonical_labeling(g, max_order))


def canonical_form(g: Graph, max_order: int = MAX_CANONICAL_ORDER) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    order = canonical_labeling(g, max_order)
    key = _leaf_key(g.adj, order)
    nbits = g.n * (g.n - 1) // 2
    return bytes([g.n]) + key.to_bytes((nbits + 7) // 8, "big")
