"""Theorem checks over graph corpora.

Each :class:`TheoremId` names one structural statement about squares,
powers or line graphs.  :func:`check_theorem` tests a single graph and
returns ``HOLDS``, ``VACUOUS`` (hypothesis not met) or ``COUNTEREXAMPLE``
with a payload of re-checkable certificates.  :func:`verify_corpus` runs a
set of checks over a corpus, optionally on several worker processes, and
aggregates a report whose JSON form does not depend on the worker count.
"""

from __future__ import annotations

import enum
import json
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .chordality import (check_peo, chordal, has_induced_cycle_geq, is_chordal, is_hole,
                         iter_induced_cycles)
from .corpus import CorpusSpec, generate_up_to, parse_graph6, write_graph6
from .errors import TheoremViolation, TooLargeError
from .graph import (Graph, MAX_CANONICAL_ORDER, canonical_form, canonical_graph, components,
                    diameter, induced_subgraph, iter_bits, line_graph, mask_of, power, square)
from .patterns import (FlowerWitness, SproutWitness, check_sufficient_chordalsq, find_claw,
                       find_fertile_sprout, find_p5a, find_unwithered_flower,
                       has_unsuspended_sunflower)
from .witnesses import extract_flower, verify_flower, verify_sprout

REPORT_VERSION = 1

HOLDS = "HOLDS"
VACUOUS = "VACUOUS"
COUNTEREXAMPLE = "COUNTEREXAMPLE"


class TheoremId(enum.Enum):
    DIAMETER_COMPLETE = "DIAMETER_COMPLETE"
    DUCHET = "DUCHET"
    LS_EQUIV = "LS_EQUIV"
    LS_CLOSED = "LS_CLOSED"
    NO_TWO_CONSEC = "NO_TWO_CONSEC"
    BP_SUFFICIENT = "BP_SUFFICIENT"
    FLOTOW = "FLOTOW"
    NEW_SUFFICIENT = "NEW_SUFFICIENT"
    FLOWER_EQUIV = "FLOWER_EQUIV"
    LINE_CYCLE = "LINE_CYCLE"
    LG_CYCLE_BOUND = "LG_CYCLE_BOUND"
    CAMERON = "CAMERON"
    SPROUT_EQUIV = "SPROUT_EQUIV"
    LG_SQUARE_EQUIV = "LG_SQUARE_EQUIV"


# statement checked for every id; each line is distinct
STATEMENTS = {
    TheoremId.DIAMETER_COMPLETE: "every component of G^k is complete iff k >= diameter(G)",
    TheoremId.DUCHET: "Duchet: G^k chordal implies G^(k+2) chordal",
    TheoremId.LS_EQUIV: "Laskar-Shier: for chordal G, G^2 chordal iff no unsuspended sunflower of size >= 4",
    TheoremId.LS_CLOSED: "Laskar-Shier: chordal G without unsuspended sunflowers keeps both properties in every power",
    TheoremId.NO_TWO_CONSEC: "for a hole C of G^k and r <= k/2, G^r has no two consecutive edges of C and at most |C|/2 of its edges",
    TheoremId.BP_SUFFICIENT: "Balakrishnan-Paulraja: no induced claw, P5+a or cycle of length >= 6 implies G^2 chordal",
    TheoremId.FLOTOW: "Flotow: chordal and claw-free implies G^2 chordal",
    TheoremId.NEW_SUFFICIENT: "claw-free, no induced cycle of length >= 5 and every induced F4 suspended implies G^2 chordal",
    TheoremId.FLOWER_EQUIV: "G^2 chordal iff every induced flower of size >= 4 is withered",
    TheoremId.LINE_CYCLE: "cycles of length l >= 4 in G correspond to induced cycles of length l in L(G)",
    TheoremId.LG_CYCLE_BOUND: "no induced cycle of length >= f in G implies none in L(G)^2",
    TheoremId.CAMERON: "Cameron: G chordal implies L(G)^2 chordal",
    TheoremId.SPROUT_EQUIV: "L(G)^2 has a hole of length l iff G has a fertile sprout of size l",
    TheoremId.LG_SQUARE_EQUIV: "L(G)^2 chordal iff G has no induced cycle of length >= 6 and no fertile sprout of size 4 or 5",
}

# (max order, max edge count) accepted by check_theorem
BOUNDS = {
    TheoremId.DIAMETER_COMPLETE: (12, None),
    TheoremId.DUCHET: (12, None),
    TheoremId.LS_EQUIV: (10, None),
    TheoremId.LS_CLOSED: (10, None),
    TheoremId.NO_TWO_CONSEC: (10, None),
    TheoremId.BP_SUFFICIENT: (12, None),
    TheoremId.FLOTOW: (12, None),
    TheoremId.NEW_SUFFICIENT: (12, None),
    TheoremId.FLOWER_EQUIV: (9, None),
    TheoremId.LINE_CYCLE: (8, None),
    TheoremId.LG_CYCLE_BOUND: (8, None),
    TheoremId.CAMERON: (12, None),
    TheoremId.SPROUT_EQUIV: (8, 10),
    TheoremId.LG_SQUARE_EQUIV: (8, 12),
}

assert set(STATEMENTS) == set(TheoremId) == set(BOUNDS)
assert len(set(STATEMENTS.values())) == len(STATEMENTS)

IMPLICATIONS = frozenset({TheoremId.DUCHET, TheoremId.LS_CLOSED, TheoremId.BP_SUFFICIENT,
                          TheoremId.FLOTOW, TheoremId.NEW_SUFFICIENT, TheoremId.LG_CYCLE_BOUND,
                          TheoremId.CAMERON, TheoremId.NO_TWO_CONSEC})


def parse_ids(text: str) -> list[TheoremId]:
    """``"all"``, ``"implications"`` or a comma-separated list of ids."""
    text = text.strip()
    if text.lower() == "all":
        return list(TheoremId)
    if text.lower() == "implications":
        return [t for t in TheoremId if t in IMPLICATIONS]
    return [TheoremId(part.strip().upper()) for part in text.split(",") if part.strip()]


@dataclass(frozen=True)
class Verdict:
    status: str
    payload: Optional[dict] = None

    def to_dict(self) -> dict:
        d = {"status": self.status}
        if self.payload is not None:
            d["payload"] = self.payload
        return d


_HOLDS = Verdict(HOLDS)
_VACUOUS = Verdict(VACUOUS)


# ------------------------------------------------------------ certificates

def _target(g: Graph, of: str) -> Graph:
    # "G", "G^k", "L(G)" or "L(G)^k"
    base, _, exp = of.partition("^")
    h = line_graph(g).lg if base == "L(G)" else g
    return power(h, int(exp)) if exp else h


def _chordality_cert(g: Graph, of: str) -> dict:
    cert = is_chordal(_target(g, of))
    if cert.chordal:
        return {"kind": "peo", "of": of, "order": list(cert.peo)}
    return {"kind": "hole", "of": of, "cycle": list(cert.hole)}


def _flower_cert(f: FlowerWitness) -> dict:
    return {"kind": "flower", "of": "G", "u": list(f.u), "w": list(f.w), "cycle": list(f.cycle),
            "pending": sorted(f.pending)}


def _sprout_cert(s: SproutWitness) -> dict:
    return {"kind": "sprout", "of": "G", "u": [list(e) for e in s.u_edges],
            "w": [list(e) for e in s.w_edges], "cycle": [list(e) for e in s.cycle],
            "pending": sorted(list(e) for e in s.pending)}


def recheck_certificate(g: Graph, cert: dict) -> bool:
    """Re-verify one certificate of a payload with the independent checkers."""
    kind = cert["kind"]
    h = _target(g, cert.get("of", "G"))
    if kind == "hole":
        return is_hole(h, cert["cycle"])
    if kind == "peo":
        return check_peo(h, cert["order"]) is None
    if kind == "flower":
        f = FlowerWitness(tuple(cert["u"]), tuple(cert["w"]), tuple(cert["cycle"]),
                          frozenset(cert["pending"]))
        return not verify_flower(h, f)
    if kind == "sprout":
        s = SproutWitness(tuple(map(tuple, cert["u"])), tuple(map(tuple, cert["w"])),
                          tuple(map(tuple, cert["cycle"])),
                          frozenset(map(tuple, cert["pending"])))
        return not verify_sprout(h, s)
    raise ValueError(f"unknown certificate kind {kind!r}")


def recheck_payload(g: Graph, payload: dict) -> bool:
    """True iff every certificate carried by a counterexample payload holds."""
    return all(recheck_certificate(g, c) for c in payload.get("certificates", []))


def _counterexample(g: Graph, certs: list, **facts) -> Verdict:
    payload = {"graph6": write_graph6(g), "certificates": certs}
    payload.update(facts)
    return Verdict(COUNTEREXAMPLE, payload)


# ------------------------------------------------------------------ checks

def _components_complete(h: Graph) -> bool:
    for comp in components(h):
        m = mask_of(comp)
        if any(h.adj[v] | (1 << v) != m for v in comp):
            return False
    return True


def _check_diameter_complete(g):
    if g.n == 0:
        return _VACUOUS
    d = diameter(g)
    for k in range(1, g.n + 1):
        lhs = _components_complete(power(g, k))
        if lhs != (k >= d):
            return _counterexample(g, [], k=k, diameter=d, components_complete=lhs)
    return _HOLDS


def _check_duchet(g):
    if g.n == 0:
        return _VACUOUS
    applied = False
    for k in range(1, max(diameter(g), 1) + 1):
        if not chordal(power(g, k)):
            continue
        applied = True
        if not chordal(power(g, k + 2)):
            return _counterexample(g, [_chordality_cert(g, f"G^{k}"),
                                       _chordality_cert(g, f"G^{k + 2}")], k=k)
    return _HOLDS if applied else _VACUOUS


def _sunflower_facts(s):
    return {"sunflower": {"u": list(s.u), "w": list(s.w)}}


def _check_ls_equiv(g):
    if not chordal(g):
        return _VACUOUS
    sq = chordal(square(g))
    s = has_unsuspended_sunflower(g)
    if sq == (s is None):
        return _HOLDS
    facts = _sunflower_facts(s) if s is not None else {}
    return _counterexample(g, [_chordality_cert(g, "G"), _chordality_cert(g, "G^2")], **facts)


def _check_ls_closed(g):
    if g.n == 0 or not chordal(g) or has_unsuspended_sunflower(g) is not None:
        return _VACUOUS
    for k in range(1, diameter(g) + 2):
        h = power(g, k)
        if not chordal(h):
            return _counterexample(g, [_chordality_cert(g, f"G^{k}")], k=k)
        s = has_unsuspended_sunflower(h)
        if s is not None:
            return _counterexample(g, [], k=k, **_sunflower_facts(s))
    return _HOLDS


def _check_no_two_consec(g):
    applied = False
    for k in (2, 3, 4):
        gk = power(g, k)
        lower = {r: power(g, r) for r in range(1, k // 2 + 1)}
        for hole in iter_induced_cycles(gk, 4):
            applied = True
            L = len(hole)
            for r, gr in lower.items():
                present = [bool(gr.adj[hole[i]] >> hole[(i + 1) % L] & 1) for i in range(L)]
                twice = any(present[i] and present[(i + 1) % L] for i in range(L))
                if twice or sum(present) > L // 2:
                    return _counterexample(g, [{"kind": "hole", "of": f"G^{k}", "cycle": list(hole)}],
                                           k=k, r=r, edges_in_lower_power=sum(present))
    return _HOLDS if applied else _VACUOUS


def _sufficient(g, hypothesis):
    if not hypothesis:
        return _VACUOUS
    cert = is_chordal(square(g))
    if cert.chordal:
        return _HOLDS
    return _counterexample(g, [{"kind": "hole", "of": "G^2", "cycle": list(cert.hole)}])


def _check_bp(g):
    return _sufficient(g, find_claw(g) is None and find_p5a(g) is None
                       and has_induced_cycle_geq(g, 6) is None)


def _check_flotow(g):
    return _sufficient(g, chordal(g) and find_claw(g) is None)


def _check_new_sufficient(g):
    return _sufficient(g, check_sufficient_chordalsq(g).applicable)


def _check_flower_equiv(g):
    cert = is_chordal(square(g))
    f = find_unwithered_flower(g)
    if cert.chordal != (f is None):
        certs = [_chordality_cert(g, "G^2")]
        if f is not None:
            certs.append(_flower_cert(f))
        return _counterexample(g, certs)
    if f is not None and not is_hole(square(g), f.u):
        return _counterexample(g, [_flower_cert(f)], reason="flower members do not form a hole of G^2")
    if not cert.chordal:
        try:
            extract_flower(g, cert.hole)
        except TheoremViolation as exc:
            return _counterexample(g, [{"kind": "hole", "of": "G^2", "cycle": list(cert.hole)}],
                                   reason=str(exc))
    return _HOLDS


def cycle_length_counts(g: Graph) -> dict[int, int]:
    """Number of (not necessarily induced) cycles of each length >= 3."""
    counts: dict[int, int] = {}
    adj = g.adj

    def walk(start, last, visited, length):
        for x in iter_bits(adj[last] & ~((1 << (start + 1)) - 1)):
            if visited >> x & 1:
                continue
            if adj[x] >> start & 1 and length >= 1:
                counts[length + 2] = counts.get(length + 2, 0) + 1
            walk(start, x, visited | (1 << x), length + 1)

    for s in range(g.n):
        walk(s, s, 1 << s, 0)
    # every cycle was traced once in each direction
    return {k: c // 2 for k, c in sorted(counts.items())}


def _check_line_cycle(g):
    ours = {k: c for k, c in cycle_length_counts(g).items() if k >= 4}
    theirs: dict[int, int] = {}
    for c in iter_induced_cycles(line_graph(g).lg, 4):
        theirs[len(c)] = theirs.get(len(c), 0) + 1
    if ours == theirs:
        return _HOLDS
    return _counterexample(g, [], cycles_in_g=ours, induced_cycles_in_line_graph=theirs)


def _check_lg_cycle_bound(g):
    lg2 = square(line_graph(g).lg)
    applied = False
    for f in (4, 5, 6):
        if has_induced_cycle_geq(g, f) is not None:
            continue
        applied = True
        bad = has_induced_cycle_geq(lg2, f)
        if bad is not None:
            return _counterexample(g, [{"kind": "hole", "of": "L(G)^2", "cycle": list(bad)}], f=f)
    return _HOLDS if applied else _VACUOUS


def _check_cameron(g):
    if not chordal(g):
        return _VACUOUS
    cert = is_chordal(square(line_graph(g).lg))
    if cert.chordal:
        return _HOLDS
    return _counterexample(g, [_chordality_cert(g, "G"),
                               {"kind": "hole", "of": "L(G)^2", "cycle": list(cert.hole)}])


def _check_sprout_equiv(g):
    lg2 = square(line_graph(g).lg)
    holes = {len(c) for c in iter_induced_cycles(lg2, 4)}
    sizes = set()
    for s in range(4, 2 * g.m // 3 + 1):
        if find_fertile_sprout(g, (s,)) is not None:
            sizes.add(s)
    if holes == sizes:
        return _HOLDS
    return _counterexample(g, [], hole_lengths=sorted(holes), fertile_sprout_sizes=sorted(sizes))


def _check_lg_square_equiv(g):
    cert = is_chordal(square(line_graph(g).lg))
    long_hole = has_induced_cycle_geq(g, 6)
    sprout = None if long_hole is not None else find_fertile_sprout(g, (4, 5))
    rhs = long_hole is None and sprout is None
    if cert.chordal == rhs:
        return _HOLDS
    certs = [_chordality_cert(g, "L(G)^2")]
    if long_hole is not None:
        certs.append({"kind": "hole", "of": "G", "cycle": list(long_hole)})
    if sprout is not None:
        certs.append(_sprout_cert(sprout))
    return _counterexample(g, certs)


_CHECKS = {
    TheoremId.DIAMETER_COMPLETE: _check_diameter_complete,
    TheoremId.DUCHET: _check_duchet,
    TheoremId.LS_EQUIV: _check_ls_equiv,
    TheoremId.LS_CLOSED: _check_ls_closed,
    TheoremId.NO_TWO_CONSEC: _check_no_two_consec,
    TheoremId.BP_SUFFICIENT: _check_bp,
    TheoremId.FLOTOW: _check_flotow,
    TheoremId.NEW_SUFFICIENT: _check_new_sufficient,
    TheoremId.FLOWER_EQUIV: _check_flower_equiv,
    TheoremId.LINE_CYCLE: _check_line_cycle,
    TheoremId.LG_CYCLE_BOUND: _check_lg_cycle_bound,
    TheoremId.CAMERON: _check_cameron,
    TheoremId.SPROUT_EQUIV: _check_sprout_equiv,
    TheoremId.LG_SQUARE_EQUIV: _check_lg_square_equiv,
}
assert set(_CHECKS) == set(TheoremId)


def within_bounds(tid: TheoremId, g: Graph) -> bool:
    max_n, max_m = BOUNDS[tid]
    return g.n <= max_n and (max_m is None or g.m <= max_m)


def check_theorem(tid: TheoremId, g: Graph) -> Verdict:
    """Check one statement on one graph (see :data:`BOUNDS` for size limits)."""
    tid = TheoremId(tid)
    if not within_bounds(tid, g):
        max_n, max_m = BOUNDS[tid]
        limit = f"n <= {max_n}" + (f" and m <= {max_m}" if max_m is not None else "")
        raise TooLargeError(f"{tid.value} is checked for graphs with {limit}")
    return _CHECKS[tid](g)


# ------------------------------------------------------------------ corpus

def graph_key(g: Graph) -> str:
    """graph6 of the canonical relabelling (plain graph6 above the bound)."""
    if g.n <= MAX_CANONICAL_ORDER:
        return write_graph6(canonical_graph(g))
    return write_graph6(g)


@dataclass
class TheoremReport:
    corpus: dict
    ids: list
    entries: list = field(default_factory=list)  # (key, {id: Verdict}) sorted by key
    seconds: dict = field(default_factory=dict)

    def summary(self) -> dict:
        out = {}
        for tid in self.ids:
            counts = {HOLDS: 0, VACUOUS: 0, COUNTEREXAMPLE: 0, "SKIPPED": 0}
            for _, verdicts in self.entries:
                v = verdicts.get(tid.value)
                counts["SKIPPED" if v is None else v.status] += 1
            out[tid.value] = counts
        return out

    def counterexamples(self) -> list:
        return [(key, tid, v) for key, verdicts in self.entries
                for tid, v in sorted(verdicts.items()) if v.status == COUNTEREXAMPLE]

    @property
    def ok(self) -> bool:
        return not self.counterexamples()

    def to_dict(self, details: bool = False, timing: bool = False) -> dict:
        d = {
            "version": REPORT_VERSION,
            "corpus": self.corpus,
            "graphs": len(self.entries),
            "theorems": [t.value for t in self.ids],
            "summary": self.summary(),
            "counterexamples": [{"graph6": key, "theorem": tid, **v.to_dict()}
                                for key, tid, v in self.counterexamples()],
        }
        if details:
            d["results"] = [{"graph6": key, "verdicts": {t: v.status for t, v in sorted(vs.items())}}
                            for key, vs in self.entries]
        if timing:
            d["seconds"] = {k: round(v, 3) for k, v in sorted(self.seconds.items())}
        return d

    def to_json(self, details: bool = False, timing: bool = False) -> str:
        return json.dumps(self.to_dict(details, timing), indent=2, sort_keys=True) + "\n"


def _run_one(job):
    g6, ids = job
    g = parse_graph6(g6)
    verdicts, seconds = {}, {}
    for name in ids:
        tid = TheoremId(name)
        if not within_bounds(tid, g):
            continue
        t0 = time.perf_counter()
        verdicts[name] = check_theorem(tid, g)
        seconds[name] = time.perf_counter() - t0
    return graph_key(g), verdicts, seconds


def verify_corpus(spec: CorpusSpec, ids: Iterable[TheoremId], jobs: int = 1,
                  graphs: Optional[Iterable[Graph]] = None) -> TheoremReport:
    """Run every id on every graph of the corpus.

    Graphs beyond an id's size bound are counted as ``SKIPPED`` for it.
    Results are sorted by canonical graph6 key, so the report does not
    depend on ``jobs``.
    """
    ids = sorted({TheoremId(t) for t in ids}, key=lambda t: list(TheoremId).index(t))
    names = tuple(t.value for t in ids)
    source = spec.graphs() if graphs is None else graphs
    work = [(write_graph6(g), names) for g in source]
    if jobs > 1 and len(work) > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_run_one, work, chunksize=max(1, len(work) // (8 * jobs)))
    else:
        results = [_run_one(w) for w in work]
    seconds: dict[str, float] = {}
    for _, _, sec in results:
        for k, v in sec.items():
            seconds[k] = seconds.get(k, 0.0) + v
    entries = sorted(((key, verdicts) for key, verdicts, _ in results),
                     key=lambda e: (len(e[0]), e[0], sorted((k, v.status) for k, v in e[1].items())))
    return TheoremReport(spec.describe(), ids, entries, seconds)


# --------------------------------------------------------------- obstructions

class Target(enum.Enum):
    SQUARE = "square"
    LG_SQUARE = "lgsquare"


def _target_chordal(g: Graph, target: Target) -> bool:
    if target is Target.SQUARE:
        return chordal(square(g))
    return chordal(square(line_graph(g).lg))


def mine_obstructions(target: Target, n_max: int) -> list[Graph]:
    """Minimal graphs (up to isomorphism, ``n <= n_max``) whose target square
    is not chordal although every proper induced subgraph's is.

    A graph is "hereditarily good" when its target square and those of all
    its induced subgraphs are chordal; by induction it suffices to look at
    the one-vertex deletions, whose classes are memoised by canonical form.
    """
    target = Target(target)
    if n_max > 8:
        raise TooLargeError("obstruction mining supports n_max <= 8")
    hereditary: dict[bytes, bool] = {}
    found = []
    for g in generate_up_to(n_max, n_min=0):
        good = _target_chordal(g, target)
        subs_good = all(hereditary[canonical_form(induced_subgraph(g, [x for x in range(g.n) if x != v])[0])]
                        for v in range(g.n))
        hereditary[canonical_form(g)] = good and subs_good
        if not good and subs_good:
            found.append(g)
    return found
