"""``kitegraph`` command line: graphs travel as graph6 lines on stdin/stdout.

Exit codes: 0 success (DS / all PASS), 1 a negative result (mates found,
a FAIL line), 2 bad flags, malformed graph6 or any other error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence, TextIO

from .census import CACHE_ENV, cospectral_classes, ds_check
from .claims import CLAIMS, GRAPH_CHECKS, Context, run_claims, verify_graph
from .exact import MatrixKind, charpoly, discriminant
from .families import FAMILIES, make_family
from .graph import Graph, GraphError
from .graph6 import from_graph6, to_graph6
from .spectra import eigenvalues
from .structure import ROOT_SEARCH_MAX_N, clique_number, is_smith, root_graph_search, triangle_count
from .transforms import generalized_line_graph, line_graph, subdivision

DEFAULT_CACHE = "./census-cache"

KIND_HELP = "matrix: adjacency (default), laplacian, signless"


class UsageError(Exception):
    pass


def _kind(text: str) -> MatrixKind:
    try:
        return MatrixKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _read_graphs(stream: TextIO) -> list[Graph]:
    # parse everything first so a bad line fails before any output
    graphs = []
    for lineno, line in enumerate(stream, 1):
        if not line.strip():
            continue
        try:
            graphs.append(from_graph6(line))
        except GraphError as exc:
            raise UsageError(f"stdin line {lineno}: {exc}") from None
    return graphs


def _cache_dir(args) -> str:
    return args.cache_dir or os.environ.get(CACHE_ENV) or DEFAULT_CACHE


# ------------------------------------------------------------------ verbs


def cmd_make(args, out: TextIO, inp: TextIO) -> int:
    graphs = [make_family(spec) for spec in args.specs]
    for g in graphs:
        out.write(to_graph6(g) + "\n")
    return 0


def _parse_petals(text: str | None, n: int) -> list[int]:
    if text is None:
        raise UsageError("gline needs --petals")
    try:
        counts = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--petals must be comma-separated integers, got {text!r}") from None
    if len(counts) != n:
        raise UsageError(f"--petals has {len(counts)} entries, graph has {n} vertices")
    return counts


def cmd_transform(args, out: TextIO, inp: TextIO) -> int:
    graphs = _read_graphs(inp)
    if args.op == "gline":
        results = [generalized_line_graph(g, _parse_petals(args.petals, g.n)) for g in graphs]
    else:
        op = line_graph if args.op == "line" else subdivision
        results = [op(g) for g in graphs]
    for h in results:
        out.write(to_graph6(h) + "\n")
    return 0


def cmd_charpoly(args, out: TextIO, inp: TextIO) -> int:
    for g in _read_graphs(inp):
        out.write(" ".join(str(c) for c in charpoly(g, args.kind).coeffs) + "\n")
    return 0


def cmd_spectrum(args, out: TextIO, inp: TextIO) -> int:
    graphs = _read_graphs(inp)
    for i, g in enumerate(graphs):
        if i:
            out.write("\n")
        if g.n == 0:
            continue
        for x in eigenvalues(g, args.kind).values:
            out.write(f"{x:.15g}\n")
    return 0


def analyze(g: Graph) -> dict:
    """The ``analyze`` report for one graph."""
    spec = eigenvalues(g).values if g.n else ()
    roots = None
    if g.n <= ROOT_SEARCH_MAX_N:
        roots = sorted({r.kind for r in root_graph_search(g)})
    return {
        "n": g.n,
        "m": g.m,
        "triangles": triangle_count(g),
        "clique_number": clique_number(g),
        "discriminant": discriminant(g),
        "lambda1": spec[0] if spec else None,
        "lambda2": spec[1] if len(spec) > 1 else None,
        "lambda_min": spec[-1] if spec else None,
        "is_smith": bool(g.n and g.is_connected() and is_smith(g)),
        "root_classification": roots,
    }


def cmd_analyze(args, out: TextIO, inp: TextIO) -> int:
    for g in _read_graphs(inp):
        out.write(json.dumps(analyze(g)) + "\n")
    return 0


def cmd_verify(args, out: TextIO, inp: TextIO) -> int:
    if args.claim not in GRAPH_CHECKS:
        raise UsageError(f"no single-graph check for {args.claim!r}; choose from {', '.join(GRAPH_CHECKS)}")
    status = 0
    for g in _read_graphs(inp):
        ok, detail = verify_graph(args.claim, g)
        status |= not ok
        out.write(f"{'PASS' if ok else 'FAIL'} {to_graph6(g)} {detail}\n")
    return status


def cmd_census(args, out: TextIO, inp: TextIO) -> int:
    report = cospectral_classes(args.n, args.kind, args.connected, cache_dir=_cache_dir(args), jobs=args.jobs)
    text = report.dumps() + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_ds_check(args, out: TextIO, inp: TextIO) -> int:
    graphs = _read_graphs(inp)
    status = 0
    for i, g in enumerate(graphs):
        if i:
            out.write("\n")
        verdict = ds_check(g, args.kind, args.connected, cache_dir=_cache_dir(args), jobs=args.jobs)
        if verdict.is_ds:
            out.write("DS\n")
        else:
            status = 1
            out.write("".join(m + "\n" for m in verdict.mates))
    return status


def cmd_reproduce(args, out: TextIO, inp: TextIO) -> int:
    claims = args.claim or list(CLAIMS)
    unknown = [c for c in claims if c not in CLAIMS]
    if unknown:
        raise UsageError(f"unknown claim(s) {unknown}; choose from {', '.join(CLAIMS)}")
    ctx = Context(seed=args.seed, jobs=args.jobs, cache_dir=_cache_dir(args))
    failed = 0
    for res in run_claims(claims, ctx):
        failed += not res.passed
        out.write(res.line() + "\n")
        out.flush()
    out.write(f"{len(claims) - failed}/{len(claims)} claims passed\n")
    return 1 if failed else 0


# ------------------------------------------------------------------ parser


def _add_census_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cache-dir", help=f"census cache directory (default ${CACHE_ENV} or {DEFAULT_CACHE})")
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes for enumeration (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kitegraph",
        description="Spectral characterization of small graphs. Graphs are read and written as graph6, one per line.",
        epilog="exit status: 0 success, 1 negative result (mates found or a FAIL), 2 error",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("make", help="build named graphs", description=(
        "Print graph6 for each family spec, e.g. kite:p=5,q=3, lollipop:n=7,p=3, starlike:l=1,1,3, smith_e8. "
        f"Families: {', '.join(sorted(FAMILIES))}."))
    p.add_argument("specs", nargs="+", metavar="SPEC")
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("transform", help="line graph, subdivision or generalized line graph", description=(
        "Read graph6, write the transformed graph6. gline attaches --petals=a1,...,an petals per vertex first."))
    p.add_argument("op", choices=["line", "subdivide", "gline"])
    p.add_argument("--petals", help="comma-separated petal counts, one per vertex (gline only)")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("charpoly", help="exact characteristic polynomial", description=(
        "One line per graph: coefficients c_0 c_1 ... c_n of det(xI - M), ascending, exact decimal integers."))
    p.add_argument("--kind", type=_kind, default=MatrixKind.ADJACENCY, help=KIND_HELP)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("spectrum", help="floating eigenvalues", description=(
        "Eigenvalues one per line, descending, printed with 15 significant digits (%%.15g); "
        "a blank line separates graphs."))
    p.add_argument("--kind", type=_kind, default=MatrixKind.ADJACENCY, help=KIND_HELP)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("analyze", help="JSON invariants report", description=(
        "One JSON object per graph with keys n, m, triangles, clique_number, discriminant, lambda1, lambda2, "
        "lambda_min (floats, repr precision), is_smith, root_classification (sorted root kinds; null above "
        f"n={ROOT_SEARCH_MAX_N})."))
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check a claim on each input graph", description=(
        "One line 'PASS|FAIL <graph6> <detail>' per input graph. Graphs outside the claim's hypothesis FAIL "
        f"with the reason. Claims: {', '.join(GRAPH_CHECKS)}."))
    p.add_argument("claim")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="cospectral classes of all graphs of one order", description=(
        "JSON report of every class of two or more non-isomorphic graphs with equal characteristic polynomial; "
        "members are canonical graph6."))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", type=_kind, default=MatrixKind.ADJACENCY, help=KIND_HELP)
    p.add_argument("--connected", action="store_true", help="restrict to connected graphs")
    p.add_argument("-o", "--output", help="write the JSON here instead of stdout")
    _add_census_flags(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("ds-check", help="is the graph determined by its spectrum", description=(
        "For each input graph print DS, or its cospectral mates as canonical graph6 lines; blank lines separate "
        "graphs. Exit 0 if every graph is DS, 1 if any has mates."))
    p.add_argument("--kind", type=_kind, default=MatrixKind.ADJACENCY, help=KIND_HELP)
    p.add_argument("--connected", action="store_true", help="compare only against connected graphs")
    _add_census_flags(p)
    p.set_defaults(func=cmd_ds_check)

    p = sub.add_parser("reproduce", help="run the acceptance claims", description=(
        f"Print a PASS/FAIL table. Claims: {', '.join(CLAIMS)}. Exit 1 iff any claim fails."))
    p.add_argument("--claim", action="append", help="run only this claim (repeatable)")
    p.add_argument("--seed", type=int, default=0, help="seed for random test graphs (default 0)")
    _add_census_flags(p)
    p.set_defaults(func=cmd_reproduce)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, inp: TextIO | None = None) -> int:
    out = out or sys.stdout
    inp = inp or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, inp)
    except (UsageError, GraphError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"kitegraph {args.verb}: error: {msg}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
