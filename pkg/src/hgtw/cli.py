"""Command-line interface.

Exit codes: 0 success, 1 validation/verification failure, 2 usage error.
A path of "-" means stdin/stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, TextIO

from .bounds import bounds_report
from .core import stats
from .corpus import SUITES, run_suite, write_csv, write_json
from .decomp import SupertreeDecomposition, validate_std, validate_td
from .derive import two_section
from .errors import HgtwError, ParseError
from .families import cycle_power, cycle_power_dual, graph_dual, \
    path_power, path_power_dual, random_linear
from .fileio import read_decomposition, read_graph, read_hypergraph, \
    write_decomposition, write_graph, write_hypergraph
from .solve import exact_treewidth, supertree_width
from .transform import hypergraph_supertree_from_td, supertree_to_td


def _open_in(path: str) -> TextIO:
    return sys.stdin if path == "-" else open(path)


def _open_out(path: str) -> TextIO:
    return sys.stdout if path == "-" else open(path, "w")


def _solver_cap() -> Optional[int]:
    raw = os.environ.get("HGTW_EXACT_LIMIT")
    return int(raw) if raw else None


def _emit(obj, stream=None) -> None:
    def default(x):
        if isinstance(x, Fraction):
            return {"exact": "%d/%d" % (x.numerator, x.denominator),
                    "float": float(x)}
        raise TypeError(type(x))
    json.dump(obj, stream or sys.stdout, indent=2, default=default)
    (stream or sys.stdout).write("\n")


def cmd_stats(args) -> int:
    with _open_in(args.file) as fh:
        h = read_hypergraph(fh)
    st = stats(h)
    _emit({"n": st.n, "m": st.m, "rank": st.rank, "anti_rank": st.anti_rank,
           "max_degree": st.max_degree, "min_degree": st.min_degree,
           "avg_rank": st.avg_rank, "linear": st.is_linear,
           "regular": st.regular})
    return 0


def cmd_tw(args) -> int:
    with _open_in(args.file) as fh:
        g = read_graph(fh)
    res = exact_treewidth(g, cap=_solver_cap())
    _emit({"tw": res.width, "method": res.method,
           "elapsed": round(res.elapsed, 3)})
    return 0


def cmd_stw(args) -> int:
    with _open_in(args.file) as fh:
        h = read_hypergraph(fh)
    res = supertree_width(h)
    _emit({"stw": res.width, "method": res.method,
           "elapsed": round(res.elapsed, 3)})
    return 0


def cmd_bounds(args) -> int:
    with _open_in(args.file) as fh:
        h = read_hypergraph(fh)
    exact_tw = exact_stw = None
    if args.exact:
        exact_tw = exact_treewidth(two_section(h), cap=_solver_cap()).width
        exact_stw = supertree_width(h).width
    report = bounds_report(h, exact_tw=exact_tw, exact_stw=exact_stw)
    payload = {"exact_tw": report.exact_tw, "exact_stw": report.exact_stw,
               "notes": report.notes}
    for key in ("clique_lower", "degree_ratio_lower", "cover_upper",
                "chain_lower", "avg_rank_lower", "anti_rank_lower_deg3",
                "anti_rank_lower_deg2", "regular_lower", "stw_rank_upper"):
        bound = getattr(report, key)
        payload[key] = None if bound is None \
            else {"value": bound.value, "strict": bound.strict}
    _emit(payload)
    return 0


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "path-power":
        write_graph(path_power(args.n, args.k), sys.stdout)
    elif kind == "cycle-power":
        write_graph(cycle_power(args.n, args.k), sys.stdout)
    elif kind == "path-power-dual":
        write_hypergraph(path_power_dual(args.n, args.k), sys.stdout)
    elif kind == "cycle-power-dual":
        write_hypergraph(cycle_power_dual(args.n, args.k,
                                          odd_variant=args.odd), sys.stdout)
    elif kind == "graph-dual":
        with _open_in(args.file) as fh:
            write_hypergraph(graph_dual(read_graph(fh)), sys.stdout)
    elif kind == "random-linear":
        write_hypergraph(random_linear(args.n, args.m, args.rank,
                                       args.min_degree, args.seed),
                         sys.stdout)
    else:  # pragma: no cover - argparse restricts choices
        return 2
    return 0


def cmd_convert(args) -> int:
    with _open_in(args.hypergraph) as fh:
        h = read_hypergraph(fh)
    with _open_in(args.decomposition) as fh:
        d = read_decomposition(fh)
    if args.direction == "td2std":
        if isinstance(d, SupertreeDecomposition):
            print("td2std expects a plain decomposition", file=sys.stderr)
            return 2
        problems = validate_td(two_section(h), d)
        if problems:
            print("input decomposition invalid: %s" % problems[0],
                  file=sys.stderr)
            return 1
        std = hypergraph_supertree_from_td(h, d)
        write_decomposition(std, sys.stdout, n=h.n)
    else:
        if not isinstance(d, SupertreeDecomposition):
            print("std2td expects a supertree decomposition",
                  file=sys.stderr)
            return 2
        problems = validate_std(h, d)
        if problems:
            print("input decomposition invalid: %s" % problems[0],
                  file=sys.stderr)
            return 1
        td, _base = supertree_to_td(h, d)
        write_decomposition(td, sys.stdout, n=h.n)
    return 0


def cmd_verify(args) -> int:
    rows, failures = run_suite(args.suite, seed=args.seed, max_n=args.max_n)
    if args.csv:
        with _open_out(args.csv) as fh:
            write_csv(rows, fh)
    if args.json:
        with _open_out(args.json) as fh:
            write_json(rows, failures, fh)
    for line in failures:
        print("FAIL %s" % line, file=sys.stderr)
    print("%s: %d rows, %d failures" % (args.suite, len(rows),
                                        len(failures)))
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hgtw",
                                description="linear-hypergraph treewidth "
                                            "toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("stats", help="hypergraph statistics")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("tw", help="exact treewidth of a graph file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_tw)

    sp = sub.add_parser("stw", help="exact supertree width of a hypergraph")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_stw)

    sp = sub.add_parser("bounds", help="bound report for a hypergraph")
    sp.add_argument("file")
    sp.add_argument("--exact", action="store_true",
                    help="also compute exact widths")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("gen", help="generate a family instance")
    sp.add_argument("kind", choices=["path-power", "cycle-power",
                                     "path-power-dual", "cycle-power-dual",
                                     "graph-dual", "random-linear"])
    sp.add_argument("--n", type=int, default=8)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--m", type=int, default=8)
    sp.add_argument("--rank", type=int, default=3)
    sp.add_argument("--min-degree", type=int, default=2)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--odd", action="store_true",
                    help="odd anti-rank variant (cycle-power-dual)")
    sp.add_argument("--file", default="-",
                    help="input graph for graph-dual")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("convert", help="convert between decompositions")
    sp.add_argument("direction", choices=["td2std", "std2td"])
    sp.add_argument("hypergraph")
    sp.add_argument("decomposition")
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=list(SUITES), default="all")
    sp.add_argument("--seed", type=int, default=2024)
    sp.add_argument("--max-n", type=int, default=18)
    sp.add_argument("--csv", help="write instance rows as CSV")
    sp.add_argument("--json", help="write rows and failures as JSON")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 1
    except HgtwError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
