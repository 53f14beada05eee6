"""Command-line entry point.

Graph files are DIMACS-style: ``c`` comment lines, one ``p edge <n> <m>``
header, then ``e <u> <v>`` lines with 1-based vertex numbers.  Colorings are
written as ``v <vertex> <color>`` lines or, with ``--json``, as
``{"vertices": n, "colors": {"1": 1, ...}}``.

Exit codes: 0 success, 1 negative verdict, 2 parse or I/O error,
3 budget exceeded, 4 not a member.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from collections.abc import Sequence
from typing import TextIO

from .errors import GenerationFailure, InputError, P10C7Error, StructuralDiagnostic
from .generator import FAMILIES, GenParams, generate
from .graph import Graph, build_graph
from .lists import Coloring, verify_coloring
from .membership import check_membership
from .oracle import DEFAULT_CAP, brute_force_color
from .pipeline import Budget, BudgetExceeded, Colorable, NotColorable, NotMember, solve

EXIT_OK = 0
EXIT_NO = 1
EXIT_IO = 2
EXIT_BUDGET = 3
EXIT_NOT_MEMBER = 4


class ParseError(InputError):
    def __init__(self, line: int, column: int, message: str) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


# ---------------------------------------------------------------------------
# Graph and coloring formats
# ---------------------------------------------------------------------------


def _fields(raw: str) -> list[tuple[int, str]]:
    """Whitespace-separated tokens with their 1-based columns."""
    out = []
    col = 0
    for tok in raw.split():
        col = raw.index(tok, col)
        out.append((col + 1, tok))
        col += len(tok)
    return out


def _int(lineno: int, field: tuple[int, str], what: str) -> int:
    col, tok = field
    try:
        val = int(tok)
    except ValueError:
        raise ParseError(lineno, col, f"{what} must be an integer, got {tok!r}") from None
    return val


def parse_dimacs(text: str) -> Graph:
    n: int | None = None
    m = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = _fields(raw)
        if not toks or toks[0][1] == "c":
            continue
        head = toks[0][1]
        if head == "p":
            if n is not None:
                raise ParseError(lineno, toks[0][0], "second header line")
            if len(toks) != 4 or toks[1][1] != "edge":
                raise ParseError(lineno, toks[0][0], "header must read 'p edge <n> <m>'")
            n = _int(lineno, toks[2], "vertex count")
            m = _int(lineno, toks[3], "edge count")
            if n < 0 or m < 0:
                raise ParseError(lineno, toks[2][0], "counts must be non-negative")
        elif head == "e":
            if n is None:
                raise ParseError(lineno, 1, "edge line before header")
            if len(toks) != 3:
                raise ParseError(lineno, toks[0][0], "edge line must read 'e <u> <v>'")
            u, v = (_int(lineno, t, "vertex") for t in toks[1:])
            for tok, x in zip(toks[1:], (u, v)):
                if not 1 <= x <= n:
                    raise ParseError(lineno, tok[0], f"vertex {x} outside 1..{n}")
            if u == v:
                raise ParseError(lineno, toks[1][0], f"self-loop at {u}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(lineno, toks[0][0], f"unknown line type {head!r}")
    if n is None:
        raise ParseError(1, 1, "missing 'p edge' header")
    g = build_graph(n, edges)
    if len(edges) != m:
        raise ParseError(1, 1, f"header announces {m} edges, found {len(edges)}")
    return g


def format_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = [f"c {comment}"] if comment else []
    edges = g.edges()
    lines.append(f"p edge {g.n} {len(edges)}")
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def coloring_to_json(n: int, c: Coloring) -> dict:
    return {"vertices": n, "colors": {str(v + 1): c[v] for v in sorted(c)}}


def coloring_from_json(data: object) -> tuple[int, Coloring]:
    if not isinstance(data, dict) or set(data) != {"vertices", "colors"}:
        raise InputError("coloring JSON needs exactly the keys 'vertices' and 'colors'")
    n, colors = data["vertices"], data["colors"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0 or not isinstance(colors, dict):
        raise InputError("'vertices' must be a non-negative integer and 'colors' an object")
    out: Coloring = {}
    for key, col in colors.items():
        try:
            v = int(key)
        except ValueError:
            raise InputError(f"vertex key {key!r} is not an integer") from None
        if not 1 <= v <= n:
            raise InputError(f"vertex {v} outside 1..{n}")
        if col not in (1, 2, 3) or isinstance(col, bool):
            raise InputError(f"vertex {v} has color {col!r}")
        out[v - 1] = col
    return n, out


def format_coloring(c: Coloring) -> str:
    return "".join(f"v {v + 1} {c[v]}\n" for v in sorted(c))


def parse_coloring(text: str) -> Coloring:
    """Either the JSON schema or ``v <vertex> <color>`` lines."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(e.lineno, e.colno, e.msg) from None
        return coloring_from_json(data)[1]
    out: Coloring = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = _fields(raw)
        if not toks or toks[0][1] == "c":
            continue
        if toks[0][1] != "v" or len(toks) != 3:
            raise ParseError(lineno, toks[0][0], "expected 'v <vertex> <color>'")
        v = _int(lineno, toks[1], "vertex")
        col = _int(lineno, toks[2], "color")
        if v < 1:
            raise ParseError(lineno, toks[1][0], f"vertex {v} must be positive")
        if col not in (1, 2, 3):
            raise ParseError(lineno, toks[2][0], f"color {col} outside 1..3")
        if v - 1 in out:
            raise ParseError(lineno, toks[1][0], f"vertex {v} colored twice")
        out[v - 1] = col
    return out


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def read_graph(path: str) -> Graph:
    return parse_dimacs(_read(path))


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _budget(raw: str | None) -> Budget:
    if raw is None:
        return Budget.from_env()
    head, _, tail = raw.partition(":")
    try:
        return Budget(int(head), float(tail) if tail else Budget.seconds)
    except ValueError:
        raise InputError(f"bad budget {raw!r}; use LEAVES or LEAVES:SECONDS") from None


def _shift(seq) -> str:
    return " ".join(str(v + 1) for v in seq)


def cmd_check(args, out: TextIO) -> int:
    g = read_graph(args.graph)
    rep = check_membership(g)
    if args.json:
        json.dump({
            "member": rep.is_member,
            "bipartite": rep.is_bipartite,
            "induced_p10": [v + 1 for v in rep.bad_path] if rep.bad_path else None,
            "bad_cycle": [v + 1 for v in rep.bad_cycle] if rep.bad_cycle else None,
        }, out)
        out.write("\n")
    else:
        out.write(f"member: {'yes' if rep.is_member else 'no'}\n")
        out.write(f"bipartite: {'yes' if rep.is_bipartite else 'no'}\n")
        if rep.bad_path:
            out.write(f"induced P10: {_shift(rep.bad_path)}\n")
        if rep.bad_cycle:
            out.write(f"induced C{len(rep.bad_cycle)}: {_shift(rep.bad_cycle)}\n")
    return EXIT_OK if rep.is_member else EXIT_NO


def cmd_color(args, out: TextIO) -> int:
    g = read_graph(args.graph)
    res = solve(g, _budget(args.budget), assume_member=args.assume_member)
    if isinstance(res, NotMember):
        rep = res.report
        out.write("not a member\n")
        if rep.bad_path:
            out.write(f"induced P10: {_shift(rep.bad_path)}\n")
        if rep.bad_cycle:
            out.write(f"induced C{len(rep.bad_cycle)}: {_shift(rep.bad_cycle)}\n")
        return EXIT_NOT_MEMBER
    if isinstance(res, BudgetExceeded):
        print(f"budget exceeded: {json.dumps(res.stats.as_dict())}", file=sys.stderr)
        return EXIT_BUDGET
    if isinstance(res, NotColorable):
        out.write("not 3-colorable\n")
        return EXIT_NO
    assert isinstance(res, Colorable)
    if args.json:
        json.dump(coloring_to_json(g.n, res.coloring), out)
        out.write("\n")
    else:
        out.write(format_coloring(res.coloring))
    if args.stats:
        print(json.dumps(res.stats.as_dict()), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    g = read_graph(args.graph)
    c = parse_coloring(_read(args.coloring))
    extra = sorted(v + 1 for v in c if v not in g)
    if extra:
        raise InputError(f"coloring names vertices outside the graph: {extra}")
    missing = sorted(v + 1 for v in g.vertices if v not in c)
    if missing:
        out.write(f"invalid: {len(missing)} uncolored, first {missing[0]}\n")
        return EXIT_NO
    ok = verify_coloring(g, c)
    out.write("valid\n" if ok else "invalid\n")
    return EXIT_OK if ok else EXIT_NO


def cmd_generate(args, out: TextIO) -> int:
    p = GenParams(n_target=args.size, attachment_density=args.density, family=args.family,
                  fixture=args.fixture, core=args.core)
    g = generate(args.seed, p)
    text = format_dimacs(g, f"seed {args.seed} family {args.family} size {args.size}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _pct(xs: list[float], q: float) -> float:
    if not xs:
        return 0.0
    xs = sorted(xs)
    return xs[min(len(xs) - 1, int(q * len(xs)))]


def fuzz_report(seed: int, count: int, size: int, families: Sequence[str], budget: Budget,
                core: bool = False) -> dict:
    """Pipeline against the oracle on ``count`` generated members."""
    if size > DEFAULT_CAP:
        raise InputError(f"size {size} exceeds the oracle cap {DEFAULT_CAP}")
    tally = {"instances": 0, "agree": 0, "mismatches": 0, "generation_failures": 0,
             "budget_exceeded": 0, "diagnostics": 0, "colorable": 0}
    mismatches: list[dict] = []
    times: list[float] = []
    for k in range(count):
        fam = families[k % len(families)]
        p = GenParams(n_target=size, family=fam, attachment_density=0.3 + 0.2 * (k % 2),
                      core=core and fam != "a")
        try:
            g = generate(seed * 100003 + k, p)
        except GenerationFailure:
            tally["generation_failures"] += 1
            continue
        tally["instances"] += 1
        t0 = time.perf_counter()
        try:
            res = solve(g, budget, assume_member=True)
        except StructuralDiagnostic as e:
            tally["diagnostics"] += 1
            mismatches.append({"index": k, "family": fam, "diagnostic": e.kind})
            continue
        times.append(time.perf_counter() - t0)
        if isinstance(res, BudgetExceeded):
            tally["budget_exceeded"] += 1
            continue
        want = brute_force_color(g) is not None
        got = isinstance(res, Colorable)
        sound = not got or verify_coloring(g, res.coloring)
        if want == got and sound:
            tally["agree"] += 1
            tally["colorable"] += got
        else:
            tally["mismatches"] += 1
            mismatches.append({"index": k, "family": fam, "oracle": want, "pipeline": got,
                               "graph": format_dimacs(g)})
    tally["time_p50"] = round(_pct(times, 0.5), 4)
    tally["time_p90"] = round(_pct(times, 0.9), 4)
    tally["time_max"] = round(max(times, default=0.0), 4)
    tally["time_mean"] = round(statistics.fmean(times), 4) if times else 0.0
    tally["failures"] = mismatches
    return tally


def cmd_fuzz(args, out: TextIO) -> int:
    fams = args.family or list(FAMILIES)
    rep = fuzz_report(args.seed, args.count, args.size, fams, _budget(args.budget), args.core)
    if args.json:
        json.dump(rep, out, sort_keys=True)
        out.write("\n")
    else:
        for key in ("instances", "agree", "mismatches", "diagnostics", "budget_exceeded",
                    "generation_failures", "colorable", "time_p50", "time_p90", "time_max"):
            out.write(f"{key}: {rep[key]}\n")
        for f in rep["failures"]:
            out.write(f"failure: {json.dumps({k: v for k, v in f.items() if k != 'graph'})}\n")
    bad = rep["mismatches"] or rep["diagnostics"]
    return EXIT_NO if bad else EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="p10c7", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test membership in the class")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("color", help="find a 3-coloring or show none exists")
    p.add_argument("graph")
    p.add_argument("--assume-member", action="store_true", help="skip the membership check")
    p.add_argument("--budget", help="LEAVES or LEAVES:SECONDS (default from P10C7_BUDGET)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--stats", action="store_true", help="print search statistics to stderr")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a seeded member of the class")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--family", choices=FAMILIES, default="b")
    p.add_argument("--size", type=int, default=12)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--fixture")
    p.add_argument("--core", action="store_true", help="emit the cleaned core of a larger member")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("fuzz", help="compare the solver with brute force")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--size", type=int, default=10)
    p.add_argument("--family", action="append", choices=FAMILIES)
    p.add_argument("--core", action="store_true")
    p.add_argument("--budget")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fuzz)
    return ap


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except (OSError, InputError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except P10C7Error as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NO


if __name__ == "__main__":
    sys.exit(main())
