"""Command line interface: ``genturan <subcommand> ...``.

Graphs are read and written as graph6.  Exit codes: 0 success (for
``check-free``: the graph is free), 1 pattern found, 2 bad arguments,
3 capacity exceeded, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from . import constructions as C
from . import graph6
from .counting import count_copies
from .errors import ArgumentError, GenTuranError
from .formulas import CaseId, TheoremCase, prediction
from .freeness import (
    Book,
    Clique,
    DisjointCliques,
    Explicit,
    ForbiddenPattern,
    Nothing,
    UnionPair,
    witness,
)
from .graph import Graph, bits, complete_bipartite, complete_graph, cycle_graph, path_graph
from .oracle import LIMIT_ENV, ResultCache, cached_oracle, oracle_limit
from .symmetrization import Mode, run
from .verify import SUITES, verify


# -- argument parsing helpers ---------------------------------------------------------


def _ints(text: str, count: int, what: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise ArgumentError(f"{what}: expected {count} comma-separated integers, got {text!r}") from None
    if len(values) != count:
        raise ArgumentError(f"{what}: expected {count} comma-separated integers, got {text!r}")
    return values


def parse_graph(text: str) -> Graph:
    if text == "-":
        text = sys.stdin.readline()
    return graph6.decode(text.strip())


def parse_target(text: str) -> Graph:
    """``clique:k``, ``biclique:a,b``, ``book:r,s``, ``path:n``, ``cycle:n`` or ``g6:<code>``."""
    kind, _, arg = text.partition(":")
    if kind == "clique":
        return complete_graph(_ints(arg, 1, "clique")[0])
    if kind == "biclique":
        a, b = _ints(arg, 2, "biclique")
        return complete_bipartite(a, b)
    if kind == "book":
        r, s = _ints(arg, 2, "book")
        return C.book(r, s)
    if kind == "path":
        return path_graph(_ints(arg, 1, "path")[0])
    if kind == "cycle":
        return cycle_graph(_ints(arg, 1, "cycle")[0])
    if kind == "g6":
        return graph6.decode(arg)
    raise ArgumentError(f"unknown target graph {text!r}")


def split_family(text: str) -> list[str]:
    """Split ``clique:3,biclique:2,2`` into target specs (bare numbers continue the previous spec)."""
    out: list[str] = []
    for token in text.split(","):
        if ":" in token or not out:
            out.append(token)
        else:
            out[-1] += "," + token
    return out


def parse_pattern(text: str) -> ForbiddenPattern:
    """``clique:r``, ``book:r,s``, ``kcliques:k,r``, ``union:g6,g6``, ``g6:<code>`` or ``none``."""
    if text == "none":
        return Nothing()
    kind, _, arg = text.partition(":")
    if kind == "clique":
        return Clique(_ints(arg, 1, "clique")[0])
    if kind == "book":
        return Book(*_ints(arg, 2, "book"))
    if kind == "kcliques":
        return DisjointCliques(*_ints(arg, 2, "kcliques"))
    if kind == "union":
        first, sep, second = arg.partition(",")
        if not sep:
            raise ArgumentError("union: expected two graph6 strings separated by a comma")
        return UnionPair(graph6.decode(first), graph6.decode(second))
    if kind == "g6":
        return Explicit(graph6.decode(arg))
    raise ArgumentError(f"unknown forbidden pattern {text!r}")


def _emit(data: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, sort_keys=True))
    elif fmt == "md":
        print("| key | value |\n|---|---|")
        for k in sorted(data):
            print(f"| {k} | {data[k]} |")
    else:
        for k in sorted(data):
            print(f"{k},{data[k]}")


def _vertex_list(mask: Optional[int]) -> Optional[list[int]]:
    return None if mask is None else list(bits(mask))


# -- subcommands -------------------------------------------------------------------------


CONSTRUCTIONS = {
    "turan": (("n", "r"), C.turan),
    "turan-plus": (("n", "r"), C.turan_plus),
    "book": (("r", "s"), C.book),
    "kcliques": (("k", "r"), C.disjoint_cliques),
    "clique-join-turan": (("m", "q", "n"), C.clique_join_turan),
    "bipartite-plus-edge": (("m", "n", "side"), C.bipartite_plus_edge),
    "complete": (("n",), complete_graph),
}


def cmd_construct(args) -> int:
    if args.kind == "multipartite":
        g = C.complete_multipartite(args.values)
    else:
        names, fn = CONSTRUCTIONS[args.kind]
        values = list(args.values)
        if args.kind == "bipartite-plus-edge" and len(values) == 2:
            values.append(0)
        if len(values) != len(names):
            raise ArgumentError(f"{args.kind} takes {len(names)} integers: {' '.join(names)}")
        g = fn(*values)
    if args.format == "json":
        _emit({"graph6": graph6.encode(g), "n": g.n, "edges": g.num_edges()}, "json")
    else:
        print(graph6.encode(g))
    return 0


def cmd_count(args) -> int:
    g = parse_graph(args.graph)
    h = parse_target(args.h)
    _emit({"count": str(count_copies(g, h))}, args.format)
    return 0


def cmd_check_free(args) -> int:
    g = parse_graph(args.graph)
    f = parse_pattern(args.f)
    found = witness(g, f)
    _emit({"pattern": str(f), "free": found is None, "witness": _vertex_list(found)}, args.format)
    return 0 if found is None else 1


def cmd_formula(args) -> int:
    case = TheoremCase(CaseId(args.case), n=args.n, r=args.r, s=args.s, t=args.t, k=args.k, a=args.a, b=args.b)
    p = prediction(case)
    data = {
        "case": case.label(),
        "value": str(p.value),
        "graph6": graph6.encode(p.graph),
        "pattern": str(p.pattern),
    }
    data.update({k: v for k, v in p.extra.items()})
    _emit(data, args.format)
    return 0


def cmd_symmetrize(args) -> int:
    g = parse_graph(args.graph)
    h = parse_target(args.h)
    kind, _, arg = args.mode.partition(":")
    if kind == "plain":
        r = _ints(arg, 1, "plain")[0]
        trace = run(g, h, Clique(r), Mode.PLAIN, cap=args.cap)
    elif kind == "restricted":
        r, s = _ints(arg, 2, "restricted")
        trace = run(g, h, Book(r, s), Mode.RESTRICTED, cap=args.cap)
    else:
        raise ArgumentError(f"unknown mode {args.mode!r}; use plain:r or restricted:r,s")
    for i, st in enumerate(trace.steps):
        print(json.dumps({"step": i, "source": st.source, "target": st.target,
                          "count_before": str(st.count_before), "count_after": str(st.count_after),
                          "d_source": str(st.d_source), "d_target": str(st.d_target)}, sort_keys=True))
    print(json.dumps({"final": graph6.encode(trace.final), "steps": len(trace.steps),
                      "terminated": trace.terminated.value,
                      "count": str(count_copies(trace.final, h))}, sort_keys=True))
    return 0


def cmd_ex(args) -> int:
    f = parse_pattern(args.f)
    specs = list(args.h) + (split_family(args.family) if args.family else [])
    if not specs:
        raise ArgumentError("ex needs at least one target via --h or --family")
    hs = [parse_target(t) for t in specs]
    cache = ResultCache(args.cache) if args.cache else None
    result = cached_oracle(args.n, hs, f, cache=cache, witnesses=args.witnesses, jobs=args.jobs)
    data = {"n": args.n, "pattern": str(f), **result.to_dict(timing=False)}
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        data["witnesses"] = " ".join(result.witnesses)
        _emit(data, args.format)
    return 0


def _grid(items: Sequence[str]) -> dict:
    grid: dict = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise ArgumentError(f"grid entry {item!r} must look like key=lo..hi or key=v1,v2")
        if ".." in value:
            lo, hi = value.split("..", 1)
            grid[key] = list(range(int(lo), int(hi) + 1))
        else:
            grid[key] = [int(v) for v in value.split(",")]
    return grid


def cmd_verify(args) -> int:
    cache = ResultCache(args.cache) if args.cache else None
    report = verify(args.suite, _grid(args.grid), oracle_max_n=args.oracle_limit,
                    witnesses=args.witnesses, jobs=args.jobs, cache=cache)
    text = report.render(args.format)
    print(text, end="" if text.endswith("\n") else "\n")
    return 0


# -- parser ------------------------------------------------------------------------------------


def _global_flags(parser: argparse.ArgumentParser, defaults: bool) -> None:
    # Subcommands accept the global flags too; their copies must not
    # overwrite values given before the subcommand name.
    def d(value):
        return value if defaults else argparse.SUPPRESS

    parser.add_argument("--format", choices=("json", "md", "csv"), default=d(None))
    parser.add_argument("--jobs", type=int, default=d(1), help="worker processes for the oracle")
    parser.add_argument("--cache", default=d(None), help="JSON-lines file caching oracle results")
    parser.add_argument("--seed", type=int, default=d(0), help="seed for randomized helpers")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, defaults=False)

    parser = argparse.ArgumentParser(
        prog="genturan",
        description="Generalized Turán numbers: constructions, counting, freeness and exhaustive checks.",
    )
    _global_flags(parser, defaults=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="print a named graph as graph6")
    p.add_argument("kind", choices=sorted(CONSTRUCTIONS) + ["multipartite"])
    p.add_argument("values", type=int, nargs="*", help="integer parameters of the construction")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("count", parents=[common], help="count unlabelled copies of H")
    p.add_argument("graph", nargs="?", default="-", help="graph6 string; read from stdin when omitted")
    p.add_argument("--h", required=True, help="clique:k | biclique:a,b | book:r,s | path:n | cycle:n | g6:<code>")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("check-free", parents=[common], help="exit 0 if free, 1 with a witness if not")
    p.add_argument("graph", nargs="?", default="-", help="graph6 string; read from stdin when omitted")
    p.add_argument("--f", required=True, help="book:r,s | clique:r | kcliques:k,r | union:g6,g6 | g6:<code>")
    p.set_defaults(func=cmd_check_free)

    p = sub.add_parser("formula", parents=[common], help="predicted extremal value and its construction")
    p.add_argument("--case", required=True, choices=[c.value for c in CaseId])
    p.add_argument("--n", type=int, required=True)
    for name in ("r", "s", "t", "k", "a", "b"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("symmetrize", parents=[common], help="run symmetrization and print the trace")
    p.add_argument("graph", nargs="?", default="-", help="graph6 string; read from stdin when omitted")
    p.add_argument("--h", required=True)
    p.add_argument("--mode", required=True, help="plain:r | restricted:r,s")
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_symmetrize)

    p = sub.add_parser("ex", parents=[common], help="exhaustive generalized Turán number")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", action="append", default=[], help="target graph; repeat to sum a family")
    p.add_argument("--family", help="comma-separated target graphs, e.g. clique:3,clique:4")
    p.add_argument("--f", required=True)
    p.add_argument("--witnesses", type=int, default=10)
    p.set_defaults(func=cmd_ex)

    p = sub.add_parser("verify", parents=[common], help="check a theorem suite against the oracle")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--grid", nargs="*", default=[], metavar="KEY=RANGE", help="e.g. n=5..8 r=3,4")
    p.add_argument("--oracle-limit", type=int, help=f"largest n sent to the oracle (default ${LIMIT_ENV} or {oracle_limit()})")
    p.add_argument("--witnesses", type=int, default=3)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    random.seed(args.seed)
    if args.format is None and args.command != "construct":
        args.format = "json"
    try:
        return args.func(args)
    except GenTuranError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
