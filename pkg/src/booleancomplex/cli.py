"""Command-line front end.

Subcommands: beta, chi, enumerate, matching, homology, family, crosscheck.
Graphs come from --family NAME:n, --edges "u v"-lines, or --file PATH; output
is human text or, with --json, a stable schema (field "schema").

Exit codes: 0 ok, 2 unparseable input, 3 budget exceeded, 4 cross-check
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import homology, morse
from .beta import (
    CrossCheckError,
    beta_euler,
    beta_family,
    beta_recursive,
    beta_subset_formula,
    cross_check,
)
from .graph import (
    FamilySpec,
    Graph,
    GraphError,
    family_graph,
    parse_edge_list,
    resolve_family,
)
from .ideal import (
    BudgetError,
    DEFAULT_BUDGET,
    enumerate_ideal,
    format_word,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4

_METHODS = {
    "recursion": lambda g, budget: beta_recursive(g).value,
    "euler": lambda g, budget: beta_euler(g, budget).value,
    "subset_formula": lambda g, budget: beta_subset_formula(g).value,
    "homology": lambda g, budget: homology.top_betti(g),
    "morse": lambda g, budget: len(
        morse.build_h_matching(g, g.vertices[0]).unmatched_maximal
    ),
}
_METHOD_ALIASES = {"subset": "subset_formula", "rec": "recursion"}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="booleancomplex",
        description="Boolean complexes of finite simple graphs: sphere counts, "
        "matchings, GF(2) homology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            src = p.add_mutually_exclusive_group(required=False)
            src.add_argument("--family", help='family spec like "A:5" or "affineD:6"')
            src.add_argument("--edges", help='inline edge list, lines "u v" (";" also separates)')
            src.add_argument("--file", help="path of an edge-list file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument(
            "--budget", type=int, default=DEFAULT_BUDGET,
            help="ideal enumeration budget (elements)",
        )

    p = sub.add_parser("beta", help="sphere count by the requested methods")
    add_common(p)
    p.add_argument(
        "--method", default="recursion",
        help="comma list of recursion,euler,subset_formula,homology,morse",
    )

    p = sub.add_parser("chi", help="Euler characteristic and the implied sphere count")
    add_common(p)

    p = sub.add_parser("enumerate", help="rank sizes of the boolean ideal")
    add_common(p)
    p.add_argument("--words", action="store_true", help="also list canonical words")

    p = sub.add_parser("matching", help="anchored acyclic matching plus verification")
    add_common(p)
    p.add_argument("--at-vertex", type=int, default=None, help="anchor vertex (default: smallest)")

    p = sub.add_parser("homology", help="reduced GF(2) Betti numbers")
    add_common(p)
    p.add_argument("--cycles", action="store_true", help="also print a top cycle basis")

    p = sub.add_parser("family", help="build a named family member and report its count")
    add_common(p)

    p = sub.add_parser("crosscheck", help="run all methods and compare")
    add_common(p)
    p.add_argument("--sweep", type=int, metavar="N",
                   help="instead check every isomorphism class on up to N vertices")

    return parser


def _load_graph(args):
    sources = [s for s in (args.family, args.edges, args.file) if s is not None]
    if len(sources) != 1:
        raise GraphError("need exactly one of --family / --edges / --file")
    if args.family is not None:
        return family_graph(FamilySpec.parse(args.family)), None
    if args.edges is not None:
        text = args.edges.replace(";", "\n")
    else:
        try:
            with open(args.file, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise GraphError(f"cannot read {args.file}: {exc}") from None
    graph, labels = parse_edge_list(text)
    if len(graph) == 0:
        raise GraphError("the input graph is empty")
    mapping = None
    if labels != graph.vertices:
        mapping = dict(zip(graph.vertices, labels))
    return graph, mapping


def _graph_json(graph):
    return {"vertices": list(graph.vertices), "edges": [list(e) for e in graph.edges]}


def _emit(args, payload, lines):
    if args.json:
        payload["schema"] = SCHEMA_VERSION
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _describe_graph(graph, mapping):
    lines = [f"graph: {len(graph)} vertices, {len(graph.edges)} edges"]
    if mapping:
        lines.append(
            "label mapping: " + " ".join(f"{v}<-{x}" for v, x in mapping.items())
        )
    return lines


def _cmd_beta(args):
    graph, mapping = _load_graph(args)
    names = []
    for raw in args.method.split(","):
        name = raw.strip()
        name = _METHOD_ALIASES.get(name, name)
        if name not in _METHODS:
            raise GraphError(f"unknown method {raw!r}")
        names.append(name)
    values = {name: _METHODS[name](graph, args.budget) for name in names}
    lines = _describe_graph(graph, mapping)
    lines += [f"beta[{name}] = {value}" for name, value in values.items()]
    _emit(args, {"command": "beta", "graph": _graph_json(graph), "beta": values}, lines)
    return EXIT_OK


def _cmd_chi(args):
    graph, mapping = _load_graph(args)
    ideal = enumerate_ideal(graph, args.budget)
    chi = ideal.euler_characteristic()
    implied = (-1) ** (len(graph) - 1) * (chi - 1)
    lines = _describe_graph(graph, mapping)
    lines += [f"chi = {chi}", f"implied sphere count = {implied}"]
    _emit(
        args,
        {"command": "chi", "graph": _graph_json(graph), "chi": chi, "beta": implied},
        lines,
    )
    return EXIT_OK


def _cmd_enumerate(args):
    graph, mapping = _load_graph(args)
    ideal = enumerate_ideal(graph, args.budget)
    sizes = ideal.rank_sizes()
    lines = _describe_graph(graph, mapping)
    lines.append("rank sizes: " + " ".join(map(str, sizes)))
    payload = {
        "command": "enumerate",
        "graph": _graph_json(graph),
        "rank_sizes": list(sizes),
        "euler_characteristic": ideal.euler_characteristic(),
    }
    if args.words:
        payload["ranks"] = [
            [format_word(w) for w in words] for words in ideal.ranks
        ]
        for r, words in enumerate(ideal.ranks):
            lines.append(f"rank {r}: " + " ".join(format_word(w) for w in words))
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_matching(args):
    graph, mapping = _load_graph(args)
    anchor = args.at_vertex if args.at_vertex is not None else graph.vertices[0]
    matching = morse.build_h_matching(graph, anchor)
    ideal = enumerate_ideal(graph, args.budget)
    acyclic = morse.verify_acyclic(matching, ideal)
    report = morse.verify_h_properties(matching, ideal)
    lines = _describe_graph(graph, mapping)
    lines += [
        f"anchored at {anchor}: {len(matching.pairs)} pairs",
        f"unmatched rank 0: {format_word(matching.unmatched_rank0)}",
        "unmatched maximal: "
        + (" ".join(format_word(w) for w in matching.unmatched_maximal) or "(none)"),
        f"acyclic: {acyclic}; h1: {report.h1}; h2: {report.h2}; h3: {report.h3}",
    ]
    payload = {
        "command": "matching",
        "graph": _graph_json(graph),
        "matching": json.loads(matching.to_json()),
        "acyclic": acyclic,
        "h1": report.h1,
        "h2": report.h2,
        "h3": report.h3,
    }
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_homology(args):
    graph, mapping = _load_graph(args)
    betti = homology.betti_gf2(graph)
    lines = _describe_graph(graph, mapping)
    lines.append("reduced Betti numbers: " + " ".join(map(str, betti)))
    payload = {
        "command": "homology",
        "graph": _graph_json(graph),
        "betti": list(betti),
    }
    if args.cycles:
        basis = homology.top_cycle_basis(graph)
        payload["top_cycles"] = [[format_word(w) for w in c.words()] for c in basis]
        for i, chain in enumerate(basis):
            lines.append(
                f"cycle {i}: " + " + ".join(f"[{format_word(w)}]" for w in chain.words())
            )
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_family(args):
    if args.family is None:
        raise GraphError("family subcommand needs --family")
    spec = FamilySpec.parse(args.family)
    name, n = resolve_family(spec)
    graph = family_graph(spec)
    count = beta_family(spec)
    dim = len(graph) - 1
    wedge = f"{count} sphere(s) of dimension {dim}"
    lines = [
        f"family {name}:{n}: {len(graph)} vertices, {len(graph.edges)} edges",
        f"edges: {graph.edges}",
        f"closed-form sphere count: {count}  ({wedge})",
    ]
    payload = {
        "command": "family",
        "family": name,
        "n": n,
        "graph": _graph_json(graph),
        "beta": count,
        "sphere_dimension": dim,
    }
    _emit(args, payload, lines)
    return EXIT_OK


def _sweep_graphs(max_vertices):
    """One representative per isomorphism class on 1..max_vertices vertices."""
    seen = set()
    out = []
    for n in range(1, max_vertices + 1):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for mask in range(1 << len(pairs)):
            g = Graph(
                edges=[e for i, e in enumerate(pairs) if (mask >> i) & 1],
                vertices=range(n),
            )
            key = g.canonical_key()
            if key not in seen:
                seen.add(key)
                out.append(g)
    return out


def _cmd_crosscheck(args):
    if args.sweep is not None:
        if args.sweep > 6:
            raise GraphError("sweep is exhaustive; 6 vertices is the supported cap")
        graphs = _sweep_graphs(args.sweep)
        memo = {}
        rows = []
        try:
            for g in graphs:
                rows.append(cross_check(g, memo=memo))
        except CrossCheckError as exc:
            _emit_mismatch(args, exc)
            return EXIT_MISMATCH
        lines = [f"{len(rows)} isomorphism classes checked, all methods agree"]
        payload = {
            "command": "crosscheck",
            "sweep": args.sweep,
            "classes": len(rows),
            "agree": True,
        }
        _emit(args, payload, lines)
        return EXIT_OK

    graph, mapping = _load_graph(args)
    try:
        report = cross_check(graph)
    except CrossCheckError as exc:
        _emit_mismatch(args, exc)
        return EXIT_MISMATCH
    lines = _describe_graph(graph, mapping)
    lines += [f"beta[{name}] = {value}" for name, value in report.values.items()]
    if report.skipped:
        lines.append("skipped (over budget): " + ", ".join(report.skipped))
    lines.append("all methods agree")
    payload = {
        "command": "crosscheck",
        "graph": _graph_json(graph),
        "values": report.values,
        "skipped": list(report.skipped),
        "agree": True,
    }
    _emit(args, payload, lines)
    return EXIT_OK


def _emit_mismatch(args, exc):
    report = exc.report
    payload = {
        "command": "crosscheck",
        "graph": _graph_json(report.graph),
        "values": report.values,
        "agree": False,
    }
    lines = [f"METHOD MISMATCH on {report.graph!r}: {report.values}"]
    _emit(args, payload, lines)


_COMMANDS = {
    "beta": _cmd_beta,
    "chi": _cmd_chi,
    "enumerate": _cmd_enumerate,
    "matching": _cmd_matching,
    "homology": _cmd_homology,
    "family": _cmd_family,
    "crosscheck": _cmd_crosscheck,
}


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def console_main():
    sys.exit(run())


if __name__ == "__main__":
    console_main()
