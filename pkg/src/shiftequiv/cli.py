"""Command-line front end.

Exit status: 0 on success or a positive verdict, 1 on a negative
mathematical result (verification failed, theorem not applicable, no
witness found), 2 on usage, input or arithmetic errors, 3 when the
witness search hits its node limit.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from shiftequiv import formats
from shiftequiv.graphs import GraphError, analyze, graph_from_matrix, vertex_matrix
from shiftequiv.gralg import corner_maps, enumerate_saturated_hereditary, morita_verdict, outsplit_toeplitz
from shiftequiv.matrices import MatrixError, MatrixOverflowError, multiply, trace_powers
from shiftequiv.sse import (
    DEFAULT_MAX_NODES,
    ElementaryPair,
    SearchLimitExceeded,
    find_elementary,
    inflate_graph,
    rect_graph,
    trace_obstruction,
    verify_chain,
    verify_elementary,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


def _names(text: Optional[str]) -> Optional[list[str]]:
    return text.split(",") if text else None


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def _pair_from_args(args) -> ElementaryPair:
    if args.manifest:
        if any((args.a, args.b, args.r, args.s)):
            raise argparse.ArgumentTypeError("give either a manifest or --a/--b/--r/--s")
        return formats.read_esse(args.manifest)
    missing = [f"--{k}" for k in "abrs" if not getattr(args, k)]
    if missing:
        raise argparse.ArgumentTypeError(f"missing {', '.join(missing)}")
    return ElementaryPair(*(formats.read_matrix(getattr(args, k)) for k in "abrs"))


def cmd_mul(args):
    return EXIT_OK, formats.dumps_matrix(multiply(formats.read_matrix(args.left), formats.read_matrix(args.right)))


def cmd_traces(args):
    traces = trace_powers(formats.read_matrix(args.matrix), args.kmax)
    return EXIT_OK, "".join(f"tr(A^{k})={t}\n" for k, t in enumerate(traces, start=1))


def cmd_verify_esse(args):
    check = verify_elementary(_pair_from_args(args))
    return (EXIT_OK if check else EXIT_NEGATIVE), check.diagnostic + "\n"


def cmd_find_esse(args):
    a, b = formats.read_matrix(args.a), formats.read_matrix(args.b)
    out = []
    if not trace_obstruction(a, b, args.kmax):
        out.append("# trace obstruction: traces of powers differ, not strong shift equivalent\n")
    try:
        pair = find_elementary(a, b, args.bound, max_nodes=args.max_nodes)
    except SearchLimitExceeded as exc:
        return EXIT_LIMIT, "".join(out) + f"gave up: {exc}\n"
    if pair is None:
        return EXIT_NEGATIVE, "".join(out) + f"none with entries <= {args.bound}\n"
    out += ["# R\n", formats.dumps_matrix(pair.R), "# S\n", formats.dumps_matrix(pair.S)]
    return EXIT_OK, "".join(out)


def cmd_chain(args):
    check = verify_chain(formats.read_chain(args.chain))
    return (EXIT_OK if check else EXIT_NEGATIVE), check.diagnostic + "\n"


def cmd_inflate(args):
    g = inflate_graph(formats.read_matrix(args.r), formats.read_matrix(args.s), _names(args.rows), _names(args.cols))
    return EXIT_OK, formats.dumps_graph(g)


def cmd_rect(args):
    g = rect_graph(formats.read_matrix(args.r), _names(args.rows), _names(args.cols))
    return EXIT_OK, formats.dumps_graph(g)


def cmd_vmatrix(args):
    return EXIT_OK, formats.dumps_matrix(vertex_matrix(formats.read_graph(args.graph)))


def cmd_frommatrix(args):
    return EXIT_OK, formats.dumps_graph(graph_from_matrix(formats.read_matrix(args.matrix), _names(args.names)))


def cmd_analyze(args):
    g = formats.read_graph(args.graph)
    info = analyze(g)
    lines = [
        f"sinks={formats.format_subset(info.sinks)}",
        f"sources={formats.format_subset(info.sources)}",
    ]
    for v in g.vertices:
        count = info.return_path_counts[v]
        lines.append(f"return_paths {v}={'>=2' if count >= 2 else count}")
    lines.append(f"condition_k={_bool(info.condition_k)}")
    lines.append(f"row_finite={_bool(info.row_finite)}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_ideals(args):
    lattice = enumerate_saturated_hereditary(formats.read_graph(args.graph), brute_force=args.brute_force)
    return EXIT_OK, formats.lattice_report(lattice)


def cmd_toeplitz(args):
    return EXIT_OK, formats.dumps_graph(outsplit_toeplitz(formats.read_graph(args.graph)))


def cmd_corners(args):
    e_map, f_map, *_ = corner_maps(formats.read_matrix(args.r), formats.read_matrix(args.s),
                                   _names(args.rows), _names(args.cols))
    text = (
        f"# E corner {formats.format_subset(e_map.corner_vertices)}\n" + formats.corner_report(e_map)
        + f"# F corner {formats.format_subset(f_map.corner_vertices)}\n" + formats.corner_report(f_map)
    )
    return EXIT_OK, text


def cmd_verdict(args):
    verdict = morita_verdict(formats.read_graph(args.e), formats.read_graph(args.f),
                             formats.read_matrix(args.r), formats.read_matrix(args.s))
    lines = [
        f"esse_verified={_bool(verdict.esse_verified)}",
        f"regular_E={_bool(verdict.profile_E.regular)}",
        f"regular_F={_bool(verdict.profile_F.regular)}",
        f"applicable={_bool(verdict.applicable)}",
        f"conclusion={verdict.conclusion.value}",
    ]
    lines += [f"obstruction: {o}" for o in verdict.obstructions]
    return (EXIT_OK if verdict.applicable else EXIT_NEGATIVE), "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftequiv",
        description="Strong shift equivalence and graph C*-algebra combinatorics.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("-o", "--output", help="write the report here instead of stdout")
        p.set_defaults(func=func)
        return p

    p = add("mul", cmd_mul, "multiply two matrices")
    p.add_argument("left")
    p.add_argument("right")

    p = add("traces", cmd_traces, "traces of the first powers of a square matrix")
    p.add_argument("matrix")
    p.add_argument("--kmax", type=int, default=6)

    p = add("verify-esse", cmd_verify_esse, "check RS=A and SR=B")
    p.add_argument("manifest", nargs="?", help=".esse manifest (alternative to --a/--b/--r/--s)")
    for k in "abrs":
        p.add_argument(f"--{k}")

    p = add("find-esse", cmd_find_esse, "search for an elementary equivalence with bounded entries")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    p.add_argument("--kmax", type=int, default=None)

    p = add("chain", cmd_chain, "verify a chain of elementary equivalences")
    p.add_argument("chain")

    for name, func, help in (("inflate", cmd_inflate, "bipartite inflation graph G_{R,S}"),
                             ("corners", cmd_corners, "corner generator maps")):
        p = add(name, func, help)
        p.add_argument("--r", required=True)
        p.add_argument("--s", required=True)
        p.add_argument("--rows", help="comma-separated names for the row vertices")
        p.add_argument("--cols", help="comma-separated names for the column vertices")

    p = add("rect", cmd_rect, "bipartite graph G_R of a rectangular matrix")
    p.add_argument("--r", required=True)
    p.add_argument("--rows")
    p.add_argument("--cols")

    p = add("vmatrix", cmd_vmatrix, "vertex matrix of a graph")
    p.add_argument("graph")

    p = add("frommatrix", cmd_frommatrix, "graph with the given vertex matrix")
    p.add_argument("matrix")
    p.add_argument("--names")

    p = add("analyze", cmd_analyze, "sinks, sources and Condition (K)")
    p.add_argument("graph")

    p = add("ideals", cmd_ideals, "proper saturated hereditary subsets")
    p.add_argument("graph")
    p.add_argument("--brute-force", action="store_true", help="test all 2^|V| subsets (<= 20 vertices)")

    p = add("toeplitz", cmd_toeplitz, "outsplit a graph at every vertex")
    p.add_argument("graph")

    p = add("verdict", cmd_verdict, "does the shift-equivalence theorem give Morita equivalence?")
    for k in ("e", "f", "r", "s"):
        p.add_argument(f"--{k}", required=True)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, text = args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"shiftequiv {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, formats.ParseError, MatrixError, MatrixOverflowError, GraphError, ValueError) as exc:
        print(f"shiftequiv {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        formats.write_text(args.output, text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
