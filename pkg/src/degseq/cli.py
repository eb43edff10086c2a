"""Command-line interface.

Subcommands::

    degseq check   "2,2,1,1"            four verdicts as JSON lines
    degseq realize [--connected] [--format dot|edges|structured] "2,2,2,2,2,2"
    degseq trace   "4,4,3,3,3,3"        smallest-term reduction chain
    degseq oracle  [--count] "2,2,2,2,2,2"
    degseq gen     --n 6 --count 3 --seed 7 [--connected]

Sequences are given inline or with ``--file`` (one per line, comma and/or
whitespace separated, optional surrounding parentheses). Without either,
sequences are read from stdin.

Exit codes: 0 yes / success, 1 verdict no, 2 input or usage error. In batch
mode a bad line is reported and skipped, and the run exits 2 at the end.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from dataclasses import dataclass
from typing import Iterator, TextIO

from .graph import Graph, degree_sequence
from .oracle import MAX_N, OracleCapError, enumerate_realizations, exists_connected_bruteforce, exists_graphic_bruteforce
from .realize import RealizationError, connect, realize, realize_connected
from .sequence import DegreeSequence, DomainError, check_report, normalize, reduction_trace

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2

_TOKEN = re.compile(r"[^,\s]+")


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_sequence(text: str, line: int = 1) -> DegreeSequence:
    """Parse one sequence such as ``"2,2,1,1"``, ``"2 2 1 1"`` or ``"(2,2,1,1)"``."""
    body = text.rstrip("\n")
    stripped = body.strip()
    offset = len(body) - len(body.lstrip())
    if stripped.startswith("(") and stripped.endswith(")"):
        stripped = stripped[1:-1]
        offset += 1
    values = []
    for m in _TOKEN.finditer(stripped):
        col = offset + m.start() + 1
        try:
            v = int(m.group())
        except ValueError:
            raise ParseError(line, col, f"not an integer: {m.group()!r}") from None
        if v < 0:
            raise ParseError(line, col, f"negative entry {v}")
        values.append(v)
    if not values:
        raise ParseError(line, 1, "empty sequence")
    try:
        return normalize(values)
    except DomainError as exc:
        raise ParseError(line, 1, str(exc)) from None


@dataclass
class Item:
    line: int
    seq: DegreeSequence | None = None
    error: str | None = None


def _read_items(args: argparse.Namespace) -> tuple[list[Item], bool]:
    """Return parsed items and whether we are in batch mode."""
    if args.sequence is not None:
        lines: list[str] = [args.sequence]
        batch = False
    else:
        if args.file:
            with open(args.file) as fh:
                lines = fh.readlines()
        else:
            lines = sys.stdin.readlines()
        batch = True
    items = []
    for i, text in enumerate(lines, start=1):
        if batch and (not text.strip() or text.lstrip().startswith("#")):
            continue
        try:
            items.append(Item(i, parse_sequence(text, i)))
        except ParseError as exc:
            items.append(Item(i, error=str(exc)))
    return items, batch


def _report_error(item: Item, out: TextIO, structured: bool = True) -> None:
    print(f"error: {item.error}", file=sys.stderr)
    if structured:
        out.write(json.dumps({"line": item.line, "error": item.error}) + "\n")


def _batch_exit(results: list[int]) -> int:
    return max(results, default=EXIT_YES)


# graph text formats


def format_edges(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def format_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines += [f"  v{i};" for i in range(g.n)]
    lines += [f"  v{u} -- v{v};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_structured(g: Graph, seq: DegreeSequence, swaps=()) -> str:
    record = {
        "sequence": list(seq.terms),
        "n": g.n,
        "edges": [list(e) for e in g.sorted_edges()],
        "swaps": [
            {
                "removed": [list(e) for e in r.removed],
                "added": [list(e) for e in r.added],
                "variant": r.variant.value,
            }
            for r in swaps
        ],
    }
    return json.dumps(record) + "\n"


def parse_edges(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0][0] != "n":
        raise ValueError("edges text must start with 'n <count>'")
    n = int(lines[0][1])
    return Graph(n, frozenset((int(u), int(v)) for u, v in lines[1:]))


_DOT_NODE = re.compile(r"^\s*v(\d+)\s*;\s*$", re.M)
_DOT_EDGE = re.compile(r"v(\d+)\s*--\s*v(\d+)")


def parse_dot(text: str) -> Graph:
    nodes = [int(m) for m in _DOT_NODE.findall(text)]
    edges = [(int(u), int(v)) for u, v in _DOT_EDGE.findall(text)]
    n = max(nodes + [x for e in edges for x in e], default=-1) + 1
    return Graph(n, frozenset(edges))


def parse_structured(text: str) -> Graph:
    record = json.loads(text)
    return Graph(record["n"], frozenset(tuple(e) for e in record["edges"]))


# subcommands


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    items, batch = _read_items(args)
    codes = []
    for item in items:
        if item.error:
            _report_error(item, out)
            codes.append(EXIT_ERROR)
            continue
        report = check_report(item.seq)
        out.write(json.dumps(report.to_record()) + "\n")
        codes.append(EXIT_YES if report.connected_graphic else EXIT_NO)
    if batch:
        return EXIT_ERROR if EXIT_ERROR in codes else EXIT_YES
    return codes[0]


def cmd_realize(args: argparse.Namespace, out: TextIO) -> int:
    items, _ = _read_items(args)
    codes = []
    for item in items:
        if item.error:
            _report_error(item, out, structured=False)
            codes.append(EXIT_ERROR)
            continue
        s = item.seq
        try:
            if args.connected:
                g, swaps = realize_connected(s)
            else:
                g, swaps = realize(s), []
        except RealizationError as exc:
            print(f"no: {exc}", file=sys.stderr)
            codes.append(EXIT_NO)
            continue
        if args.format == "dot":
            out.write(format_dot(g))
        elif args.format == "structured":
            out.write(format_structured(g, s, swaps))
        else:
            out.write(format_edges(g))
        codes.append(EXIT_YES)
    return _batch_exit(codes)


def cmd_trace(args: argparse.Namespace, out: TextIO) -> int:
    items, _ = _read_items(args)
    codes = []
    for item in items:
        if item.error:
            _report_error(item, out, structured=False)
            codes.append(EXIT_ERROR)
            continue
        trace = reduction_trace(item.seq)
        if args.format == "structured":
            out.write(
                json.dumps(
                    {
                        "steps": [list(st.terms) for st in trace.steps],
                        "verdict": trace.verdict,
                        "reason": trace.terminal_reason,
                    }
                )
                + "\n"
            )
        else:
            out.write(f"{trace}\n")
            if trace.verdict:
                out.write("verdict: yes\n")
            else:
                out.write(f"verdict: no ({trace.terminal_reason})\n")
        codes.append(EXIT_YES if trace.verdict else EXIT_NO)
    return _batch_exit(codes)


def cmd_oracle(args: argparse.Namespace, out: TextIO) -> int:
    items, _ = _read_items(args)
    codes = []
    for item in items:
        if item.error:
            _report_error(item, out, structured=False)
            codes.append(EXIT_ERROR)
            continue
        s = item.seq
        try:
            if args.count:
                e = enumerate_realizations(s, limit=0)
                exists, connected = e.total > 0, e.connected > 0
            else:
                exists = exists_graphic_bruteforce(s)
                connected = exists and exists_connected_bruteforce(s)
        except OracleCapError as exc:
            print(f"error: {exc}", file=sys.stderr)
            codes.append(EXIT_ERROR)
            continue
        record = {"sequence": list(s.terms), "exists": exists, "connected": connected}
        if args.count:
            record["total"] = e.total
            record["connected_total"] = e.connected
        if args.format == "structured":
            out.write(json.dumps(record) + "\n")
        else:
            out.write(f"sequence: {s}\n")
            for key, value in list(record.items())[1:]:
                if isinstance(value, bool):
                    value = str(value).lower()
                out.write(f"{key}: {value}\n")
        codes.append(EXIT_YES if connected else EXIT_NO)
    return _batch_exit(codes)


def random_graph(n: int, rng: random.Random, connected: bool = False) -> Graph:
    """Random simple graph with an edge count drawn from [n-1, n(n-1)/2].

    With ``connected``, isolated vertices are first given an edge by moving
    one endpoint of an edge whose other end keeps degree >= 1, then the
    components are merged by degree-invariant swaps.
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = rng.randint(max(n - 1, 0), len(pairs))
    edges = set(rng.sample(pairs, m))
    if connected and n > 1:
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        for iso in [v for v in range(n) if deg[v] == 0]:
            # with m >= n-1 and an isolated vertex some edge has a degree >= 2 end
            movable = sorted((u, v) for u, v in edges if deg[u] >= 2 or deg[v] >= 2)
            u, v = rng.choice(movable)
            keep, drop = (v, u) if deg[u] >= 2 else (u, v)
            edges.discard((u, v))
            edges.add((min(iso, keep), max(iso, keep)))
            deg[drop] -= 1
            deg[iso] += 1
        g, _ = connect(Graph(n, frozenset(edges)))
        return g
    return Graph(n, frozenset(edges))


def cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    if args.n < 1 or args.count < 1:
        print("error: --n and --count must be >= 1", file=sys.stderr)
        return EXIT_ERROR
    rng = random.Random(args.seed)
    for _ in range(args.count):
        g = random_graph(args.n, rng, connected=args.connected)
        out.write(f"{degree_sequence(g)}\n")
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degseq", description="Degree sequence checks, realizations and traces."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("sequence", nargs="?", help="inline sequence, e.g. '2,2,1,1'")
        p.add_argument("--file", metavar="PATH", help="one sequence per line")
        return p

    p = with_input(sub.add_parser("check", help="run all four verdicts"))
    p.set_defaults(func=cmd_check)

    p = with_input(sub.add_parser("realize", help="emit a witness graph"))
    p.add_argument("--connected", action="store_true")
    p.add_argument("--format", choices=("edges", "dot", "structured"), default="edges")
    p.set_defaults(func=cmd_realize)

    p = with_input(sub.add_parser("trace", help="print the reduction chain"))
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_trace)

    p = with_input(sub.add_parser("oracle", help=f"brute-force enumeration (n <= {MAX_N})"))
    p.add_argument("--count", action="store_true", help="count all realizations")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate graphic sequences from random graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "sequence", None) is not None and getattr(args, "file", None):
        print("error: give an inline sequence or --file, not both", file=sys.stderr)
        return EXIT_ERROR
    return args.func(args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
