"""Reading, writing and generating graphs.

Formats: graph6 (short form, n <= 62), a plain edge list, and DOT output
with optional witness highlighting.  Corpora come from exhaustive
isomorphism-free generation, a seeded random generator, or a file.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .errors import FormatError, GraphError, TooLargeError
from .graph import Graph, add_vertex, canonical_form, canonical_graph, from_edge_list, is_connected, iter_bits

MAX_GRAPH6_ORDER = 62
MAX_EXHAUSTIVE_ORDER = 8


# ------------------------------------------------------------------ graph6

def parse_graph6(line: str) -> Graph:
    """Decode one short-form graph6 string (an optional ``>>graph6<<``
    header and surrounding whitespace are ignored)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("TRUNCATED", "empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise FormatError("BAD_CHAR", f"character {ch!r} outside the graph6 alphabet")
    n = ord(s[0]) - 63
    if n > MAX_GRAPH6_ORDER:
        raise FormatError("BAD_CHAR", "only the short form (n <= 62) is supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise FormatError("TRUNCATED", f"expected {need} data characters, got {len(body)}")
    if len(body) > need:
        raise FormatError("SYNTAX", f"{len(body) - need} characters after the data")
    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = 6 * need - nbits
    if bits & ((1 << pad) - 1):
        raise FormatError("TRAILING_BITS_NONZERO", "padding bits must be zero")
    bits >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, adj)


def write_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_GRAPH6_ORDER:
        raise TooLargeError("short-form graph6 supports n <= 62")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(63 + v))
    return "".join(out)


# --------------------------------------------------------------- edge list

def parse_edge_list(text: str) -> Graph:
    """``n m`` header, then ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise FormatError("SYNTAX", "missing 'n m' header")
    try:
        header = [int(x) for x in rows[0]]
        pairs = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise FormatError("SYNTAX", str(exc)) from None
    if len(header) != 2 or any(len(p) != 2 for p in pairs):
        raise FormatError("SYNTAX", "header and edge lines need exactly two integers")
    n, m = header
    if m != len(pairs):
        raise FormatError("COUNT_MISMATCH", f"header says {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def read_graphs(text: str, fmt: str = "g6") -> list[Graph]:
    """Graphs in a text: one graph6 string per line, or a single edge list.

    Edge-list text may hold several graphs separated by blank lines.
    """
    if fmt == "g6":
        return [parse_graph6(line) for line in text.splitlines()
                if line.strip() and not line.lstrip().startswith("#")]
    if fmt == "edges":
        blocks, cur = [], []
        for line in text.splitlines():
            if line.strip():
                cur.append(line)
            elif cur:
                blocks.append("\n".join(cur))
                cur = []
        if cur:
            blocks.append("\n".join(cur))
        return [parse_edge_list(b) for b in blocks
                if any(line.split("#", 1)[0].strip() for line in b.splitlines())]
    raise ValueError(f"unknown format {fmt!r}")


# ------------------------------------------------------------- generation

@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    # one canonical representative per isomorphism class on n vertices
    if n <= 1:
        return (Graph(n, [0] * n),)
    seen = {}
    for h in _classes(n - 1):
        for s in range(1 << (n - 1)):
            c = add_vertex(h, iter_bits(s))
            key = canonical_form(c)
            if key not in seen:
                seen[key] = canonical_graph(c)
    return tuple(seen[k] for k in sorted(seen, key=lambda k: (seen[k].m, k)))


def generate_all(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class on ``n`` vertices.

    Built by adding a vertex to every class on ``n - 1`` vertices in all
    possible ways and keeping the first graph of each canonical form.
    Representatives are canonically labelled and come out sorted by edge
    count, then canonical form.
    """
    if n < 0:
        raise GraphError("negative order")
    if n > MAX_EXHAUSTIVE_ORDER:
        raise TooLargeError(f"exhaustive generation supports n <= {MAX_EXHAUSTIVE_ORDER}")
    for g in _classes(n):
        if not connected_only or is_connected(g):
            yield g


def generate_up_to(n_max: int, connected_only: bool = False, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from generate_all(n, connected_only)


MASK64 = (1 << 64) - 1


class XorShift64Star:
    """xorshift64* generator seeded through splitmix64.

    ``next_u64`` is ``x ^= x >> 12; x ^= x << 25; x ^= x >> 27`` followed by
    multiplication with 0x2545F4914F6CDD1D (mod 2**64).  ``random`` uses the
    top 53 bits.  The seed ``s`` becomes the state ``splitmix64(s)`` (with 0
    replaced by a fixed non-zero constant).
    """

    def __init__(self, seed: int):
        z = (seed + 0x9E3779B97F4A7C15) & MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        z ^= z >> 31
        self.state = z or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def generate_random(n: int, p: float, count: int, seed: int) -> Iterator[Graph]:
    """``count`` graphs where each pair ``u < v`` (lexicographic order) is an
    edge iff the next draw is below ``p``.  One generator serves the whole
    stream."""
    if not 0 <= p <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = XorShift64Star(seed)
    for _ in range(count):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        yield from_edge_list(n, edges)


# ------------------------------------------------------------ corpus spec

class CorpusMode(enum.Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"
    FILE = "file"


@dataclass(frozen=True)
class CorpusSpec:
    """Where the graphs of a verification run come from."""

    mode: CorpusMode
    n: int = 0
    edge_probability: float = 0.0
    count: int = 0
    seed: int = 0
    path: Optional[str] = None
    fmt: str = "g6"
    connected_only: bool = False

    def __post_init__(self):
        if self.mode is CorpusMode.EXHAUSTIVE and not 0 <= self.n <= MAX_EXHAUSTIVE_ORDER:
            raise TooLargeError(f"exhaustive corpora support n_max <= {MAX_EXHAUSTIVE_ORDER}")
        if self.mode is CorpusMode.RANDOM and not 0 <= self.edge_probability <= 1:
            raise ValueError("edge probability must lie in [0, 1]")
        if self.mode is CorpusMode.FILE and not self.path:
            raise ValueError("file corpora need a path")

    @classmethod
    def exhaustive(cls, n_max: int, connected_only: bool = False) -> "CorpusSpec":
        return cls(CorpusMode.EXHAUSTIVE, n=n_max, connected_only=connected_only)

    @classmethod
    def random(cls, n: int, p: float, count: int, seed: int, connected_only: bool = False) -> "CorpusSpec":
        return cls(CorpusMode.RANDOM, n=n, edge_probability=p, count=count, seed=seed,
                   connected_only=connected_only)

    @classmethod
    def file(cls, path: str, fmt: str = "g6", connected_only: bool = False) -> "CorpusSpec":
        return cls(CorpusMode.FILE, path=path, fmt=fmt, connected_only=connected_only)

    def graphs(self) -> Iterator[Graph]:
        if self.mode is CorpusMode.EXHAUSTIVE:
            yield from generate_up_to(self.n, self.connected_only)
            return
        if self.mode is CorpusMode.RANDOM:
            source = generate_random(self.n, self.edge_probability, self.count, self.seed)
        else:
            with open(self.path, encoding="utf-8") as fh:
                source = read_graphs(fh.read(), self.fmt)
        for g in source:
            if not self.connected_only or is_connected(g):
                yield g

    def describe(self) -> dict:
        d = {"mode": self.mode.value, "connected_only": self.connected_only}
        if self.mode is CorpusMode.EXHAUSTIVE:
            d["n_max"] = self.n
        elif self.mode is CorpusMode.RANDOM:
            d.update(n=self.n, p=self.edge_probability, count=self.count, seed=self.seed)
        else:
            d.update(path=self.path, format=self.fmt)
        return d


# ------------------------------------------------------------------- DOT

def write_dot(g: Graph, highlights=None, name: str = "G") -> str:
    """DOT text for ``g``; ``highlights`` may be any witness object.

    Roles are marked through a ``role`` attribute plus colours: u-members
    red, w-members blue, pending ones dashed, a withering or suspending
    vertex orange, hole/cycle edges bold.
    """
    roles: dict[int, str] = {}
    edge_roles: dict[tuple[int, int], str] = {}
    if highlights is not None:
        roles, edge_roles = _roles(highlights)
    style = {
        "u": 'color=red, style=filled, fillcolor="#ffd0d0"',
        "w": 'color=blue, style=filled, fillcolor="#d0d8ff"',
        "pending": 'color=red, style=dashed',
        "withering": 'color=orange, style=filled, fillcolor="#ffe0b0"',
        "hole": 'color=red, penwidth=2',
        "center": 'color=blue, style=filled, fillcolor="#d0d8ff"',
        "leaf": 'color=red',
    }
    edge_style = {
        "cycle": "penwidth=2",
        "u": "color=red, penwidth=2",
        "w": "color=blue, penwidth=2",
        "pending": "color=red, style=dashed",
        "infertile": "color=orange, penwidth=2",
    }
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        role = roles.get(v)
        attrs = f' [role="{role}", {style[role]}]' if role else ""
        lines.append(f"  {v}{attrs};")
    for u, v in g.edges():
        role = edge_roles.get((u, v))
        attrs = f' [role="{role}", {edge_style[role]}]' if role else ""
        lines.append(f"  {u} -- {v}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _roles(w):
    from .patterns import (ClawWitness, F4Witness, FlowerWitness, P5aWitness, SproutWitness,
                           SunflowerWitness)

    roles, eroles = {}, {}

    def key(a, b):
        return (a, b) if a < b else (b, a)

    if isinstance(w, FlowerWitness):
        for x in w.w:
            roles[x] = "w"
        for x in w.u:
            roles[x] = "pending" if x in w.pending else "u"
        c = w.cycle
        for i in range(len(c)):
            eroles[key(c[i], c[(i + 1) % len(c)])] = "cycle"
        if w.withered_by is not None:
            roles[w.withered_by] = "withering"
    elif isinstance(w, SproutWitness):
        for e in w.w_edges:
            eroles[key(*e)] = "w"
        for e in w.u_edges:
            eroles[key(*e)] = "pending" if e in w.pending else "u"
        if w.infertile_by is not None:
            eroles[key(*w.infertile_by)] = "infertile"
    elif isinstance(w, (SunflowerWitness, F4Witness)):
        for x in w.w:
            roles[x] = "w"
        for x in w.u:
            roles[x] = "u"
        if w.suspended_by is not None:
            roles[w.suspended_by] = "withering"
    elif isinstance(w, ClawWitness):
        roles[w.center] = "center"
        for x in w.leaves:
            roles[x] = "leaf"
    elif isinstance(w, P5aWitness):
        for x in w.path:
            roles[x] = "u"
    else:
        # a hole: plain vertex sequence
        c = tuple(w)
        for x in c:
            roles[x] = "hole"
        for i in range(len(c)):
            eroles[key(c[i], c[(i + 1) % len(c)])] = "cycle"
    return roles, eroles
