"""geodex command line.

    geodex build <spec> [--format edges|graph6] [--out PATH]
    geodex analyze <spec> | geodex analyze --in PATH  [--format text|kv]
    geodex census --order N [--jobs K] [--out PATH] [--raw]
    geodex verify <suite> --p P [--m M]

Specs follow the family grammar (cycle:27, hamming:3,5, ep3B:5, kmb:9,3,
schlafli, ...).  GEODEX_NODE_BUDGET overrides the automorphism-search node
cap.  Exit codes: 0 all good, 1 verification claim failed, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .. import analyze, families, grp
from ..analyze import TransitivityReport
from ..graph import Graph
from . import census as census_mod
from . import formats
from .verify import SUITES, run_suite


def _node_budget() -> int | None:
    raw = os.environ.get("GEODEX_NODE_BUDGET")
    return int(raw) if raw else None


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_build(args) -> int:
    graph = families.from_spec(args.spec)
    if args.format == "edges":
        text = formats.write_edge_list(graph)
    else:
        text = formats.write_graph6(graph) + "\n"
    _write_output(text, args.out)
    return 0


def _read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    parts = first.split()
    if len(parts) == 2 and all(tok.isdigit() for tok in parts):
        return formats.read_edge_list(text)
    return formats.read_graph6(first)


def _cayley_presentation(spec: str):
    """(group, connection set) matching the family's vertex numbering, if known."""
    spec = spec.strip()
    name, _, raw = spec.partition(":")
    try:
        params = [int(tok) for tok in raw.split(",")] if raw else []
    except ValueError:
        return None
    if name == "cycle" and len(params) == 1:
        n = params[0]
        return grp.cyclic(n), frozenset({1 % n, (n - 1) % n} - {0})
    if name == "complete" and len(params) == 1:
        n = params[0]
        return grp.cyclic(n), frozenset(range(1, n))
    if name == "hamming" and len(params) == 2 and grp.is_prime(params[1]):
        d, n = params
        G = grp.elementary_abelian(n, d)
        return G, grp.cyclic_closure(G, G.generators)
    if name == "hamming2c" and len(params) == 1 and grp.is_prime(params[0]):
        n = params[0]
        G = grp.elementary_abelian(n, 2)
        axes = grp.cyclic_closure(G, G.generators)
        return G, frozenset(range(G.size)) - axes - {G.identity}
    if name == "kmb" and len(params) == 2:
        m, b = params
        G = grp.direct_product(grp.cyclic(m), grp.cyclic(b))
        return G, frozenset(x for x in range(G.size) if x // b % m != 0)
    if name == "ep3A" and len(params) == 1:
        E = grp.extraspecial_p3(params[0])
        return E, grp.ep3_family_a_set(E)
    if name == "ep3B" and len(params) == 1:
        E = grp.extraspecial_p3(params[0])
        return E, grp.ep3_family_b_set(E)
    return None


REPORT_KEYS = ("n", "valency", "girth", "diameter", "distance_distribution",
               "arcs", "two_arcs", "two_geodesics", "aut_order",
               "vertex_transitive", "arc_transitive", "two_arc_transitive",
               "two_geodesic_transitive", "distance_transitive", "primitive",
               "normal_cayley", "generators_source")


def render_report(report: TransitivityReport, fmt: str = "text") -> str:
    sep = "=" if fmt == "kv" else ": "
    lines = []
    for key in REPORT_KEYS:
        value = getattr(report, key)
        if key == "normal_cayley" and value is None:
            continue
        if key == "girth" and value is None:
            value = "infinite"
        if key == "aut_order" and value is None:
            value = "unknown"
        if key == "distance_distribution":
            value = ",".join(map(str, value))
        lines.append(f"{key}{sep}{value}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    budget = _node_budget()
    if args.input:
        graph = _read_graph(args.input)
        presentation = None
    else:
        graph = families.from_spec(args.spec)
        presentation = _cayley_presentation(args.spec)
    normal = None
    if presentation is not None:
        G, S = presentation
        assert families.cayley(G, S) == graph, "presentation must match the family"
        try:
            normal = analyze.is_normal_cayley(G, S)
        except ValueError:
            normal = None
    report = analyze.transitivity_report(graph, node_budget=budget,
                                         normal_cayley=normal)
    _write_output(render_report(report, args.format), args.out)
    return 0


def cmd_census(args) -> int:
    result = census_mod.run_census(
        args.order, reduce_by_aut=not args.raw, mu_filter=not args.raw,
        jobs=args.jobs, node_budget=_node_budget())
    _write_output(census_mod.render(result), args.out)
    return 0


def cmd_verify(args) -> int:
    outcomes = run_suite(args.suite, args.p, args.m, node_budget=_node_budget())
    for outcome in outcomes:
        print(outcome.line())
    failed = sum(not o.passed for o in outcomes)
    print(f"suite {args.suite}: {len(outcomes) - failed}/{len(outcomes)} claims passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geodex",
        description="build, analyze, census and verify 2-geodesic transitive "
                    "graphs of prime-power order")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct a named family graph")
    p_build.add_argument("spec")
    p_build.add_argument("--format", choices=("edges", "graph6"), default="edges")
    p_build.add_argument("--out")
    p_build.set_defaults(func=cmd_build)

    p_an = sub.add_parser("analyze", help="full transitivity report")
    p_an.add_argument("spec", nargs="?")
    p_an.add_argument("--in", dest="input")
    p_an.add_argument("--format", choices=("text", "kv"), default="text")
    p_an.add_argument("--out")
    p_an.set_defaults(func=cmd_analyze)

    p_cen = sub.add_parser("census", help="exhaustive small-order Cayley census")
    p_cen.add_argument("--order", type=int, required=True,
                       choices=census_mod.SUPPORTED_ORDERS)
    p_cen.add_argument("--jobs", type=int, default=1)
    p_cen.add_argument("--raw", action="store_true",
                       help="disable the output-preserving reductions")
    p_cen.add_argument("--out")
    p_cen.set_defaults(func=cmd_census)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=SUITES)
    p_ver.add_argument("--p", type=int, required=True)
    p_ver.add_argument("--m", type=int, default=None)
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "analyze" and bool(args.spec) == bool(args.input):
        parser.error("analyze needs exactly one of <spec> or --in PATH")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
