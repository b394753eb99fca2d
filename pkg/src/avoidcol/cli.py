"""Command-line interface.

Subcommands: chi (exact avoiding chromatic number), decide (budgeted
decision), nested (bipartite nestedness), bounds (report array), closed-form
(family formulas), reduce (hypergraph gadget constructions), random (G(n,p)
experiment CSV).  Exit codes: 0 success, 1 negative decision, 2 usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from ._kernels import backend_name
from .bounds import (
    BoundReport,
    chi_2k2_matching,
    chi_2k2_path,
    chi_2k2_subdivided_star,
    cube_lower_bound,
    edge_bound_lower,
    projective_lower_bound,
    prop5_upper,
)
from .graph import (
    Graph,
    GraphError,
    chromatic_number,
    graph_to_edgelist,
    independence_number,
    parse_graph,
)
from .nestedness import bipartite_from_matrix, nestedness_number
from .pattern import pattern_from_token
from .polyalgs import decide_2k2_at_most_3
from .randexp import random_report, report_to_csv
from .reductions import parse_hypergraph, reduce_to_p3, reduce_to_p4
from .solver import NoAvoidingColoring, chi_H, decide_chi_H, is_avoiding_coloring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avoidcol",
        description="Colorings whose class-pair unions avoid a bipartite pattern.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_graph_flags(p):
        p.add_argument("--graph", required=True, help="graph file")
        p.add_argument(
            "--format",
            choices=["edgelist", "dimacs", "matrix"],
            default="edgelist",
            help="graph file format (default edgelist)",
        )

    p_chi = sub.add_parser("chi", help="exact avoiding chromatic number")
    add_graph_flags(p_chi)
    p_chi.add_argument("--h", required=True, help="pattern token, e.g. 2K2, P3, P4")
    p_chi.add_argument("--threads", type=int, default=1)

    p_dec = sub.add_parser("decide", help="is there a coloring with at most k classes")
    add_graph_flags(p_dec)
    p_dec.add_argument("--h", required=True)
    p_dec.add_argument("--k", type=int, required=True)
    p_dec.add_argument("--threads", type=int, default=1)

    p_nested = sub.add_parser("nested", help="nestedness of a 0/1 matrix")
    p_nested.add_argument("--graph", required=True, help="matrix file")

    p_bounds = sub.add_parser("bounds", help="bound reports for a graph and pattern")
    add_graph_flags(p_bounds)
    p_bounds.add_argument("--h", required=True)
    p_bounds.add_argument(
        "--ell",
        type=int,
        default=None,
        help="max edges of a pattern-free class-pair union, enables the edge bound",
    )

    p_cf = sub.add_parser("closed-form", help="family formulas")
    p_cf.add_argument(
        "--family",
        required=True,
        choices=["path", "matching", "star", "cube", "projective"],
    )
    p_cf.add_argument("--n", type=int, required=True)
    p_cf.add_argument("--json", action="store_true")

    p_red = sub.add_parser("reduce", help="build a hardness gadget graph")
    p_red.add_argument("--target", required=True, choices=["p3", "p4"])
    p_red.add_argument("--hypergraph", required=True, help="file: 'n m' then 'a b c' lines")
    p_red.add_argument("--out", default=None, help="write the edgelist here")
    p_red.add_argument("--json", action="store_true")

    p_rand = sub.add_parser("random", help="G(n,p) experiment CSV")
    p_rand.add_argument("--n", type=int, required=True)
    p_rand.add_argument("--p", type=float, required=True)
    p_rand.add_argument("--trials", type=int, required=True)
    p_rand.add_argument("--seed", type=int, required=True)
    p_rand.add_argument("--out", default=None)
    return parser


def _load_graph(path: str, fmt: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc
    return parse_graph(text, fmt)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _run_chi(args) -> int:
    g = _load_graph(args.graph, args.format)
    h = pattern_from_token(args.h)
    result = chi_H(g, h, threads=args.threads)
    assert result.witness is not None
    if not is_avoiding_coloring(g, h, result.witness):
        raise AssertionError("witness failed re-validation")
    _emit(
        {
            "pattern": h.name,
            "n": g.n,
            "chi_h": result.value,
            "witness": list(result.witness.assignment),
            "nodes": result.nodes_explored,
            "backend": backend_name(),
        }
    )
    return 0


def _run_decide(args) -> int:
    g = _load_graph(args.graph, args.format)
    h = pattern_from_token(args.h)
    if args.k < 1:
        raise GraphError("k must be at least 1")
    if h.tag == "TwoK2" and args.k == 3:
        print("using the 2K2 <= 3 special-case procedure", file=sys.stderr)
        coloring = decide_2k2_at_most_3(g)
        method = "special-case"
    else:
        if h.tag == "TwoK2":
            print(
                "no special case for this k; running the general search",
                file=sys.stderr,
            )
        coloring = decide_chi_H(g, h, args.k, threads=args.threads)
        method = "search"
    payload = {
        "pattern": h.name,
        "k": args.k,
        "decision": "present" if coloring is not None else "absent",
        "witness": None if coloring is None else list(coloring.assignment),
        "method": method,
    }
    _emit(payload)
    return 0 if coloring is not None else 1


def _run_nested(args) -> int:
    try:
        with open(args.graph, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {args.graph}: {exc}") from exc
    inst = bipartite_from_matrix(text)
    _emit(nestedness_number(inst).to_json_dict())
    return 0


def _run_bounds(args) -> int:
    g = _load_graph(args.graph, args.format)
    h = pattern_from_token(args.h)
    reports: list[BoundReport] = []
    if args.ell is not None:
        value = edge_bound_lower(g.edge_count, args.ell)
        reports.append(
            BoundReport(
                "edge_bound",
                "lower",
                value,
                {"edge_count": g.edge_count, "ell": args.ell},
            )
        )
    if h.k1 >= 2 and g.n >= 1:
        chi = chromatic_number(g)
        assert chi is not None
        alpha = independence_number(g)
        if chi >= 1 and alpha >= 1:
            reports.append(prop5_upper(g.n, chi, alpha, h.k1, h.k2))
    print(json.dumps([r.to_json_dict() for r in reports], indent=2, sort_keys=True))
    return 0


def _run_closed_form(args) -> int:
    family = args.family
    if family == "path":
        value = chi_2k2_path(args.n)
    elif family == "matching":
        value = chi_2k2_matching(args.n)
    elif family == "star":
        value = chi_2k2_subdivided_star(args.n)
    elif family == "cube":
        value = cube_lower_bound(args.n)
    else:
        value = projective_lower_bound(args.n)
    if args.json:
        _emit({"family": family, "n": args.n, "value": value})
    else:
        print(value)
    return 0


def _run_reduce(args) -> int:
    try:
        with open(args.hypergraph, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {args.hypergraph}: {exc}") from exc
    t = parse_hypergraph(text)
    g = reduce_to_p3(t) if args.target == "p3" else reduce_to_p4(t)
    listing = graph_to_edgelist(g)
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(listing)
    if args.json:
        _emit(
            {
                "target": args.target,
                "vertices": g.n,
                "edges": g.edge_count,
                "out": args.out,
            }
        )
    elif args.out is None:
        print(listing, end="")
    else:
        print(f"{args.target}: {g.n} vertices, {g.edge_count} edges -> {args.out}")
    return 0


def _run_random(args) -> int:
    rows = random_report(args.n, args.p, args.trials, args.seed)
    csv_text = report_to_csv(rows)
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        print(csv_text, end="")
    return 0


_HANDLERS = {
    "chi": _run_chi,
    "decide": _run_decide,
    "nested": _run_nested,
    "bounds": _run_bounds,
    "closed-form": _run_closed_form,
    "reduce": _run_reduce,
    "random": _run_random,
}


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.subcommand](args)
    except (GraphError, NoAvoidingColoring, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
