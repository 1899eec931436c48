"""Command-line entry point.

Subcommands: verify, transform, search, bounds, harness, emit-dot. Exit
codes follow one discipline everywhere: 0 the requested property holds or
the operation succeeded, 1 the property fails or the search exhausted,
2 usage or input errors, 3 timeout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import IasiError
from .graph import Graph, emit_dot, format_graph, parse_graph
from .harness import THEOREM_IDS, generate_corpus, run_suite
from .labeling import SetLabeling, format_labeling, parse_labeling, verify
from .search import (
    MODES,
    SearchSpec,
    find_labeling,
    ground_set_lower_bound,
    minimal_ground_set,
    prefix_ground,
    uniform_ground_set_lower_bound,
)
from .setcore import DEFAULT_UNIVERSE_BOUND
from .transforms import contract_edge, format_provenance, line_graph, topological_reduction, total_graph

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--universe-bound",
        type=int,
        default=DEFAULT_UNIVERSE_BOUND,
        help=f"largest representable integer in any set (default {DEFAULT_UNIVERSE_BOUND})",
    )
    common.add_argument(
        "--json", action="store_true", help="emit a machine-readable JSON document"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="iasi",
        description="Validate, transform, and search set-labelings of finite simple graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a labeling against a graph")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("labels", help="labeling file (<v>: {a,b,c} per line)")

    p = sub.add_parser("emit-dot", parents=[common], help="render a graph as DOT")
    p.add_argument("graph")
    p.add_argument("--labels", help="optional labeling file; annotates nodes and edges")

    p = sub.add_parser("bounds", parents=[common], help="ground-set cardinality floors")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--uniform", type=int, help="report the floor for size-L vertex labels")

    p = sub.add_parser("transform", parents=[common], help="derived graphs and induced labelings")
    p.add_argument("graph")
    p.add_argument("--op", required=True, choices=["line", "total", "contract", "reduce"])
    p.add_argument("--labels", help="labeling file; induces a labeling on the result")
    p.add_argument("--edge", help="edge 'u v' to contract (op=contract)")
    p.add_argument("--vertex", help="degree-2 vertex to reduce away (op=reduce)")
    p.add_argument("--out-graph", help="write the derived graph here instead of stdout")
    p.add_argument("--out-labels", help="write the induced labeling here")
    p.add_argument("--out-provenance", help="write the provenance sidecar here")

    p = sub.add_parser("search", parents=[common], help="exhaustive labeling search")
    p.add_argument("graph")
    p.add_argument("--mode", required=True, choices=list(MODES))
    p.add_argument(
        "--ground-max",
        type=int,
        required=True,
        metavar="M",
        help="ground set is the prefix {0..M}",
    )
    p.add_argument("--uniform", type=int, help="require every vertex label to have size L")
    p.add_argument("--max-label-size", type=int, help="cap vertex label sizes")
    p.add_argument(
        "--minimize",
        action="store_true",
        help="find the smallest ground prefix cardinality that admits a labeling",
    )
    p.add_argument("--budget", type=float, help="wall-clock budget in seconds")

    p = sub.add_parser("harness", parents=[common], help="run the claim-adjudication suite")
    p.add_argument("--max-n", type=int, default=5, help="enumerate connected graphs up to this size")
    p.add_argument("--seed", type=int, default=0, help="seed for labeling sampling")
    p.add_argument("--family-cap", type=int, help="extend with named families up to this size")
    p.add_argument("--theorem", choices=list(THEOREM_IDS), help="run a single check")
    p.add_argument("--out", help="also write the JSON report to this path")

    return parser


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _load_labeling(path: str, universe_bound: int) -> SetLabeling:
    return parse_labeling(_read(path), universe_bound)


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    f = _load_labeling(args.labels, args.universe_bound)
    report = verify(g, f)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        print(report.to_text(), end="")
    return EXIT_OK if report.is_iasi else EXIT_FAIL


def _cmd_emit_dot(args) -> int:
    g = _load_graph(args.graph)
    f = _load_labeling(args.labels, args.universe_bound) if args.labels else None
    print(emit_dot(g, f), end="")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    if args.n < 1:
        raise IasiError(f"--n must be >= 1, got {args.n}")
    if args.uniform is not None:
        bound = uniform_ground_set_lower_bound(args.n, args.uniform)
        payload = {"n": args.n, "uniform": args.uniform, "bound": bound}
    else:
        bound = ground_set_lower_bound(args.n)
        payload = {"n": args.n, "bound": bound}
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(bound)
    return EXIT_OK


def _cmd_transform(args) -> int:
    if args.op in ("line", "total") and (args.edge or args.vertex):
        raise IasiError(f"--edge/--vertex do not apply to op={args.op}")
    if args.op == "contract" and args.vertex:
        raise IasiError("--vertex does not apply to op=contract (use --edge)")
    if args.op == "reduce" and args.edge:
        raise IasiError("--edge does not apply to op=reduce (use --vertex)")
    g = _load_graph(args.graph)
    f = _load_labeling(args.labels, args.universe_bound) if args.labels else None
    if args.op == "line":
        result = line_graph(g, f)
    elif args.op == "total":
        result = total_graph(g, f)
    elif args.op == "contract":
        if not args.edge:
            raise IasiError("--edge 'u v' is required for op=contract")
        parts = args.edge.split()
        if len(parts) != 2:
            raise IasiError(f"--edge expects two vertex names, got {args.edge!r}")
        result = contract_edge(g, (parts[0], parts[1]), f)
    else:
        if not args.vertex:
            raise IasiError("--vertex is required for op=reduce")
        result = topological_reduction(g, args.vertex, f)

    graph_text = format_graph(result.graph)
    labels_text = (
        format_labeling(result.induced_labeling, result.graph)
        if result.induced_labeling is not None
        else None
    )
    prov_text = format_provenance(result.provenance)

    if args.out_graph:
        Path(args.out_graph).write_text(graph_text, encoding="utf-8")
    if args.out_labels and labels_text is not None:
        Path(args.out_labels).write_text(labels_text, encoding="utf-8")
    if args.out_provenance:
        Path(args.out_provenance).write_text(prov_text, encoding="utf-8")

    if args.json:
        payload = {
            "op": args.op,
            "graph": graph_text,
            "labeling": labels_text,
            "provenance": {name: list(origin) for name, origin in result.provenance.items()},
            "report": result.report.to_json_dict() if result.report else None,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif not (args.out_graph or args.out_labels or args.out_provenance):
        print("# == graph ==")
        print(graph_text, end="")
        if labels_text is not None:
            print("# == labeling ==")
            print(labels_text, end="")
        print("# == provenance ==")
        print(prov_text, end="")
        if result.report is not None:
            print("# == report ==")
            print(result.report.to_text(), end="")
    return EXIT_OK


def _cmd_search(args) -> int:
    g = _load_graph(args.graph)
    if args.ground_max < 0:
        raise IasiError(f"--ground-max must be >= 0, got {args.ground_max}")
    if args.minimize:
        m, outcome = minimal_ground_set(
            g,
            args.mode,
            uniform_vertex_size=args.uniform,
            max_label_size=args.max_label_size,
            time_budget=args.budget,
            universe_bound=args.universe_bound,
        )
        payload = {
            "status": outcome.status,
            "minimal_ground_size": m if outcome.found else None,
            "nodes_expanded": outcome.nodes_expanded,
            "labeling": (
                format_labeling(outcome.labeling, g) if outcome.labeling is not None else None
            ),
            "report": outcome.report.to_json_dict() if outcome.report else None,
        }
        text_head = f"status: {outcome.status}\nminimal_ground_size: {m if outcome.found else '-'}"
    else:
        spec = SearchSpec(
            mode=args.mode,
            ground=prefix_ground(args.ground_max + 1, args.universe_bound),
            max_label_size=args.max_label_size,
            uniform_vertex_size=args.uniform,
            time_budget=args.budget,
        )
        outcome = find_labeling(g, spec)
        payload = {
            "status": outcome.status,
            "nodes_expanded": outcome.nodes_expanded,
            "labeling": (
                format_labeling(outcome.labeling, g) if outcome.labeling is not None else None
            ),
            "report": outcome.report.to_json_dict() if outcome.report else None,
        }
        text_head = f"status: {outcome.status}"
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text_head)
        print(f"nodes_expanded: {outcome.nodes_expanded}")
        if outcome.labeling is not None:
            print("labeling:")
            print(format_labeling(outcome.labeling, g), end="")
    if outcome.status == "found":
        return EXIT_OK
    if outcome.status == "timeout":
        return EXIT_TIMEOUT
    return EXIT_FAIL


def _cmd_harness(args) -> int:
    corpus = generate_corpus(n_max=args.max_n, seed=args.seed, family_cap=args.family_cap)
    theorems = (args.theorem,) if args.theorem else None
    suite = run_suite(corpus, theorems=theorems)
    if args.out:
        Path(args.out).write_text(suite.to_json_text(), encoding="utf-8")
    if args.json:
        print(suite.to_json_text(), end="")
    else:
        print(suite.to_text(), end="")
    return EXIT_FAIL if suite.errored else EXIT_OK


_COMMANDS = {
    "verify": _cmd_verify,
    "emit-dot": _cmd_emit_dot,
    "bounds": _cmd_bounds,
    "transform": _cmd_transform,
    "search": _cmd_search,
    "harness": _cmd_harness,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep its code
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (IasiError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
