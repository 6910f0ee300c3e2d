"""Command-line interface.

Exit status: 0 on success, 1 when ``verify`` finds counterexamples, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Iterator, TextIO

from .canon import enumerate_graphs
from .conditions import condition_report, realize, sequence_report
from .families import classify_family, derive_x, load_x_corpus
from .graph import DegreeSequence, Graph, GraphError, degree_sequence
from .graph6 import Graph6Error, read_graph6_lines, write_graph6
from .percolation import EXACT_MAX_ORDER, greedy_upper_bound, min_contagious, percolate
from .verify import THEOREM_NAMES, TheoremVerdict, iter_records, theorem, verify_monotone_counterexample


class UsageError(Exception):
    pass


def _graphs(args: argparse.Namespace, stdin: TextIO) -> Iterator[Graph]:
    sources = [args.input is not None, getattr(args, "enumerate", None) is not None]
    if sum(sources) != 1:
        raise UsageError("give exactly one input source: --input PATH (or -) or --enumerate N")
    if args.input is not None:
        if args.input == "-":
            yield from read_graph6_lines(stdin)
        else:
            with open(args.input, encoding="utf-8") as fh:
                yield from read_graph6_lines(fh)
    else:
        for n in range(1, args.enumerate + 1):
            yield from enumerate_graphs(n)


class Emitter:
    """Writes records one line at a time; TSV columns follow the first record's keys."""

    def __init__(self, fmt: str, out: TextIO) -> None:
        self.fmt = fmt
        self.out = out
        self.columns: list[str] | None = None
        self.count = 0

    def write(self, rec: dict) -> None:
        if self.fmt == "tsv":
            if self.columns is None:
                self.columns = list(rec)
                self.out.write("\t".join(self.columns) + "\n")
            self.out.write("\t".join(_tsv_cell(rec.get(c)) for c in self.columns) + "\n")
        elif self.fmt == "jsonl":
            self.out.write(json.dumps(rec) + "\n")
        self.out.flush()
        self.count += 1


def _emit(records: Iterable[dict], fmt: str, out: TextIO) -> int:
    em = Emitter(fmt, out)
    for rec in records:
        em.write(rec)
    return em.count


def _tsv_cell(value: object) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value)
    if value is None:
        return ""
    return str(value).lower() if isinstance(value, bool) else str(value)


def _map(fn: Callable[[Graph], dict], graphs: Iterable[Graph], parallel: int) -> Iterator[dict]:
    if parallel <= 1:
        return map(fn, graphs)
    pool = ThreadPoolExecutor(max_workers=parallel)
    return pool.map(fn, graphs)


def _summary(out: TextIO, payload: dict) -> None:
    out.write(json.dumps(payload) + "\n")


def cmd_percolate(args, stdin, out) -> int:
    seed = [int(s) for s in args.seed.split(",") if s.strip()] if args.seed else []

    def one(g: Graph) -> dict:
        trace = percolate(g, seed, args.r)
        return {
            "graph6": write_graph6(g),
            "r": args.r,
            "rounds": trace.to_json(),
            "closure": trace.closure.to_list(),
            "contagious": trace.closure.is_full(),
        }

    n = _emit(_map(one, _graphs(args, stdin), args.parallel), args.format, out)
    if args.format == "summary":
        _summary(out, {"command": "percolate", "graphs": n})
    return 0


def cmd_msolve(args, stdin, out) -> int:
    def one(g: Graph) -> dict:
        if args.greedy or g.n > EXACT_MAX_ORDER:
            seed = greedy_upper_bound(g, args.r)
            m, witness, exact = len(seed), seed, False
        else:
            res = min_contagious(g, args.r)
            m, witness, exact = res.m, res.witness, res.exact
        return {"graph6": write_graph6(g), "n": g.n, "r": args.r, "m": m, "witness": witness.to_list(), "exact": exact}

    results = _map(one, _graphs(args, stdin), args.parallel)
    if args.format == "summary":
        ms = [rec["m"] for rec in results]
        _summary(out, {"command": "msolve", "r": args.r, "graphs": len(ms), "max_m": max(ms, default=None)})
    else:
        _emit(results, args.format, out)
    return 0


def cmd_conditions(args, stdin, out) -> int:
    if args.sequence is not None:
        if args.input is not None or args.enumerate is not None:
            raise UsageError("--sequence cannot be combined with a graph input")
        _emit([sequence_report(DegreeSequence.parse(args.sequence))], _records_fmt(args.format), out)
        return 0

    def one(g: Graph) -> dict:
        return {"graph6": write_graph6(g), "degree_sequence": list(degree_sequence(g).d), **condition_report(g, args.r).to_json()}

    _emit(_map(one, _graphs(args, stdin), args.parallel), _records_fmt(args.format), out)
    return 0


def _records_fmt(fmt: str) -> str:
    return "jsonl" if fmt == "summary" else fmt


def cmd_classify(args, stdin, out) -> int:
    corpus = load_x_corpus()

    def one(g: Graph) -> dict:
        return {"graph6": write_graph6(g), **classify_family(g, corpus).to_json()}

    results = _map(one, _graphs(args, stdin), args.parallel)
    if args.format == "summary":
        counts: dict[str, int] = {}
        for rec in results:
            key = str(rec["kind"])
            counts[key] = counts.get(key, 0) + 1
        _summary(out, {"command": "classify", "kinds": dict(sorted(counts.items()))})
    else:
        _emit(results, args.format, out)
    return 0


def cmd_enumerate(args, stdin, out) -> int:
    n = args.n if args.n is not None else args.enumerate
    if n is None:
        raise UsageError("enumerate needs an order: enumerate N")
    count = 0
    for g in enumerate_graphs(n):
        if args.format != "summary":
            out.write(write_graph6(g) + "\n")
        count += 1
    if args.format == "summary":
        _summary(out, {"command": "enumerate", "n": n, "graphs": count})
    return 0


def cmd_derive_x(args, stdin, out) -> int:
    source = None
    if args.input is not None:
        source = _graphs(args, stdin)
    corpus = derive_x(args.max_n, source)
    if args.format == "summary":
        _summary(out, {"command": "derive-x", "max_n": args.max_n, "graphs": len(corpus), "orders": corpus.orders()})
    else:
        out.write(corpus.dumps())
    return 0


def cmd_realize(args, stdin, out) -> int:
    d = DegreeSequence.parse(args.sequence)
    g = realize(d)
    _emit([{"sequence": list(d.d), "graph6": write_graph6(g), "edges": [list(e) for e in g.edges()]}], _records_fmt(args.format), out)
    return 0


def cmd_verify(args, stdin, out) -> int:
    if args.theorem == "monotone":
        if args.n is None or args.i is None:
            raise UsageError("--theorem monotone needs --n and --i")
        report = verify_monotone_counterexample(args.n, args.i, args.weak, samples=args.samples, seed=args.rng_seed)
        _summary(out, report.to_json())
        return 0 if report.confirmed else 1
    corpus = load_x_corpus()
    thm = theorem(args.theorem, corpus)
    graphs = (g for g in _graphs(args, stdin) if g.n >= 2)
    em = Emitter(args.format, out)

    def tap() -> Iterator:
        for rec in iter_records(thm, graphs, args.parallel):
            em.write(rec.to_json())
            yield rec

    verdict = TheoremVerdict.from_records(args.theorem, tap(), keep=False)
    _summary(out, verdict.summary())
    return 0 if verdict.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="perckit", description="Bootstrap percolation toolkit")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, default=2, help="activation threshold (default 2)")
    common.add_argument("--input", help="graph6 file, or - for standard input")
    common.add_argument("--format", choices=("jsonl", "tsv", "summary"), default="jsonl")
    common.add_argument("--parallel", type=int, default=1, metavar="K")
    common.add_argument("--enumerate", type=int, metavar="N", help="use all graphs on 1..N vertices as input")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("percolate", parents=[common], help="trace the process from a seed")
    p.add_argument("--seed", default="", help="comma-separated seed vertices")
    p.set_defaults(func=cmd_percolate)

    p = sub.add_parser("msolve", parents=[common], help="minimum contagious set size")
    p.add_argument("--greedy", action="store_true", help="greedy upper bound instead of exact search")
    p.set_defaults(func=cmd_msolve)

    p = sub.add_parser("conditions", parents=[common], help="degree-condition report")
    p.add_argument("--sequence", help="comma-separated degree sequence instead of graphs")
    p.set_defaults(func=cmd_conditions)

    p = sub.add_parser("classify", parents=[common], help="exceptional family membership")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", parents=[common], help="non-isomorphic graphs on N vertices as graph6")
    p.add_argument("n", type=int, nargs="?")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("derive-x", parents=[common], help="regenerate the residual exceptional set")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_derive_x)

    p = sub.add_parser("realize", parents=[common], help="Havel-Hakimi realisation of a degree sequence")
    p.add_argument("--sequence", required=True)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", parents=[common], help="check a theorem over a corpus")
    p.add_argument("--theorem", choices=THEOREM_NAMES + ("monotone",), required=True)
    p.add_argument("--n", type=int, help="order for --theorem monotone")
    p.add_argument("--i", type=int, help="index for --theorem monotone")
    p.add_argument("--weak", action="store_true")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--rng-seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.r < 1:
        print("perckit: error: --r must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args, stdin, stdout)
    except (UsageError, Graph6Error, GraphError, OSError) as exc:
        print(f"perckit: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
