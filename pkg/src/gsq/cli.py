"""``gsq`` command line interface.

Exit codes: 0 success, 1 the checked property fails (for example a graph
is not chordal), 2 usage or input error, 3 a theorem check produced a
counterexample (its graph6 is printed on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .chordality import has_induced_cycle_geq, is_chordal
from .corpus import CorpusSpec, read_graphs, write_dot, write_edge_list, write_graph6
from .errors import GraphError, TheoremViolation
from .graph import line_graph, power, square
from .harness import Target, mine_obstructions, parse_ids, verify_corpus
from .named import NAMED
from .patterns import check_sufficient_chordalsq, find_f4, find_p5a
from .witnesses import extract_flower, extract_sprout

EXIT_OK, EXIT_PROPERTY, EXIT_USAGE, EXIT_CONTRADICTION = 0, 1, 2, 3


def _load(args):
    src = args.file
    if src.startswith("named:"):
        name = src[len("named:"):]
        if name not in NAMED:
            raise GraphError(f"unknown named graph {name!r}; choose from {sorted(NAMED)}")
        return [NAMED[name]()]
    text = sys.stdin.read() if src == "-" else open(src, encoding="utf-8").read()
    return read_graphs(text, args.format)


def _emit(args, objs):
    # one object per input graph; a single graph prints a bare object
    out = objs[0] if len(objs) == 1 else objs
    print(json.dumps(out, indent=2 if args.json else None, sort_keys=True))


def _graph_text(g, fmt):
    return write_graph6(g) + "\n" if fmt == "g6" else write_edge_list(g)


def _cert_dict(cert):
    d = {"chordal": cert.chordal, "verdict": cert.verdict}
    if cert.chordal:
        d["peo"] = list(cert.peo)
    else:
        d["hole"] = list(cert.hole)
    return d


# ----------------------------------------------------------------- commands

def cmd_check_chordal(args):
    graphs = _load(args)
    certs = [is_chordal(g) for g in graphs]
    _emit(args, [dict(graph6=write_graph6(g), **_cert_dict(c)) for g, c in zip(graphs, certs)])
    return EXIT_OK if all(c.chordal for c in certs) else EXIT_PROPERTY


def cmd_square(args):
    if args.k < 1:
        raise GraphError("-k must be at least 1")
    graphs = [power(g, args.k) for g in _load(args)]
    if args.json:
        _emit(args, [{"graph6": write_graph6(h), "edges": h.edges()} for h in graphs])
    else:
        sys.stdout.write("".join(_graph_text(h, args.format) for h in graphs))
    return EXIT_OK


def cmd_linegraph(args):
    maps = [line_graph(g) for g in _load(args)]
    if args.json:
        _emit(args, [{"graph6": write_graph6(m.lg), "edge_of_vertex": [list(e) for e in m.edge_of_vertex]}
                     for m in maps])
    else:
        sys.stdout.write("".join(_graph_text(m.lg, args.format) for m in maps))
    return EXIT_OK


def classify(g) -> dict:
    """Structural summary of one graph."""
    report = check_sufficient_chordalsq(g)
    p5a = find_p5a(g)
    return {
        "graph6": write_graph6(g),
        "n": g.n,
        "m": g.m,
        "chordal": is_chordal(g).chordal,
        "claw_free": report.claw_free,
        "claw": None if report.claw is None else {"center": report.claw.center,
                                                  "leaves": list(report.claw.leaves)},
        "p5a": None if p5a is None else list(p5a.path),
        "no_induced_cycle_geq_5": report.no_long_hole,
        "no_induced_cycle_geq_6": has_induced_cycle_geq(g, 6) is None,
        "f4": [{"u": list(f.u), "w": list(f.w), "suspended": f.suspended,
                "suspended_by": f.suspended_by} for f in find_f4(g)],
        "sufficient_chordalsq": report.applicable,
        "square_chordal": is_chordal(square(g)).chordal,
        "line_graph_square_chordal": is_chordal(square(line_graph(g).lg)).chordal,
    }


def cmd_classify(args):
    _emit(args, [classify(g) for g in _load(args)])
    return EXIT_OK


def cmd_witness(args):
    out, missing = [], False
    for g in _load(args):
        if args.target == "square":
            cert = is_chordal(square(g))
            if cert.chordal:
                missing = True
                out.append({"graph6": write_graph6(g), "square_chordal": True, "peo": list(cert.peo)})
                continue
            f = extract_flower(g, cert.hole)
            item = {"graph6": write_graph6(g), "square_chordal": False, "hole": list(cert.hole),
                    "flower": {"u": list(f.u), "w": list(f.w), "cycle": list(f.cycle),
                               "pending": sorted(f.pending)}}
            witness = f
        else:
            lmap = line_graph(g)
            cert = is_chordal(square(lmap.lg))
            if cert.chordal:
                missing = True
                out.append({"graph6": write_graph6(g), "line_graph_square_chordal": True,
                            "peo": list(cert.peo)})
                continue
            s = extract_sprout(g, cert.hole)
            item = {"graph6": write_graph6(g), "line_graph_square_chordal": False,
                    "hole": [list(lmap.edge_of_vertex[x]) for x in cert.hole],
                    "sprout": {"u_edges": [list(e) for e in s.u_edges],
                               "w_edges": [list(e) for e in s.w_edges],
                               "cycle": [list(e) for e in s.cycle],
                               "pending": sorted(list(e) for e in s.pending)}}
            witness = s
        if args.dot:
            item["dot"] = write_dot(g, witness)
        out.append(item)
    _emit(args, out)
    return EXIT_PROPERTY if missing else EXIT_OK


def cmd_verify(args):
    if args.exhaustive is not None:
        spec = CorpusSpec.exhaustive(args.exhaustive, args.connected)
    elif args.random is not None:
        n, p, count = args.random
        spec = CorpusSpec.random(int(n), float(p), int(count), args.seed, args.connected)
    else:
        spec = CorpusSpec.file(args.file, args.format, args.connected)
    ids = parse_ids(args.theorems)
    t0 = time.perf_counter()
    report = verify_corpus(spec, ids, jobs=args.jobs)
    sys.stdout.write(report.to_json(details=args.details))
    print(f"checked {len(report.entries)} graphs in {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    for name, sec in sorted(report.seconds.items()):
        print(f"  {name}: {sec:.2f}s", file=sys.stderr)
    bad = report.counterexamples()
    for key, tid, _ in bad:
        print(f"COUNTEREXAMPLE {tid} {key}", file=sys.stderr)
    return EXIT_CONTRADICTION if bad else EXIT_OK


def cmd_mine(args):
    found = mine_obstructions(Target(args.target), args.nmax)
    if args.json:
        print(json.dumps([{"graph6": write_graph6(g), "n": g.n, "m": g.m, "dot": write_dot(g)}
                          for g in found], indent=2))
    else:
        for g in found:
            print(write_graph6(g))
    return EXIT_OK


def cmd_convert(args):
    graphs = _load(args)
    if args.to == "g6":
        sys.stdout.write("".join(write_graph6(g) + "\n" for g in graphs))
    elif args.to == "edges":
        sys.stdout.write("\n".join(write_edge_list(g) for g in graphs))
    else:
        sys.stdout.write("".join(write_dot(g, name=f"G{i}") for i, g in enumerate(graphs)))
    return EXIT_OK


# ------------------------------------------------------------------ parser

def _common(p, suppress):
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=("g6", "edges"),
                   default=default if suppress else "g6", help="input/output graph format")
    p.add_argument("--json", action="store_true", default=default if suppress else False,
                   help="pretty-printed JSON output")
    p.add_argument("--jobs", type=int, default=default if suppress else 1,
                   help="worker processes for verify")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gsq", description="Chordality of graph squares and line-graph squares.")
    parser.add_argument("--version", action="version", version=f"gsq {__version__}")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        _common(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("check-chordal", cmd_check_chordal, "chordality with a PEO or hole certificate")
    p.add_argument("file", help="graph file, '-' for stdin, or named:NAME")
    p = add("square", cmd_square, "k-th power of each graph")
    p.add_argument("-k", type=int, default=2)
    p.add_argument("file")
    p = add("linegraph", cmd_linegraph, "line graph of each graph")
    p.add_argument("file")
    p = add("classify", cmd_classify, "structural summary (claws, F4, sufficient condition, squares)")
    p.add_argument("file")
    p = add("witness", cmd_witness, "flower or sprout certificate for a non-chordal square")
    p.add_argument("target", choices=("square", "lgsquare"))
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="include DOT with the witness highlighted")
    p = add("verify", cmd_verify, "run theorem checks over a corpus")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--exhaustive", type=int, metavar="N")
    src.add_argument("--random", nargs=3, metavar=("N", "P", "COUNT"))
    src.add_argument("--file", metavar="PATH")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--theorems", default="all", help="'all', 'implications' or comma-separated ids")
    p.add_argument("--connected", action="store_true", help="only connected graphs")
    p.add_argument("--details", action="store_true", help="per-graph verdicts in the report")
    p = add("mine", cmd_mine, "minimal graphs with a non-chordal target square")
    p.add_argument("target", choices=("square", "lgsquare"))
    p.add_argument("--nmax", type=int, required=True)
    p = add("convert", cmd_convert, "convert between graph formats")
    p.add_argument("--to", choices=("g6", "edges", "dot"), required=True)
    p.add_argument("file", nargs="?", default="-")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TheoremViolation as exc:
        g6 = write_graph6(exc.graph) if exc.graph is not None else "?"
        print(f"theorem check failed: {exc}\ncounterexample: {g6}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except (GraphError, ValueError, OSError) as exc:
        print(f"gsq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
