"""Command-line front end.

Layout of every command: machine-readable output (JSON, edge lines, PASS/FAIL)
goes to stdout; human progress and summaries go to stderr. Exit codes: 0 means
success with no violations, 1 means violations (or a failed verification) were
found, 2 means the invocation or its input was unusable.
"""

from __future__ import annotations

import argparse
import json
import sys

from .axioms import (
    AxiomId,
    report_to_json,
    run_checker,
    run_suite,
)
from .corpus import (
    CorpusSpec,
    TreeCriterion,
    certify_tree,
    derive_seed,
    gen_connected,
    gen_unicyclic,
    instance_destination,
)
from .errors import RouteLabError, UnknownCase
from .graph import emit_dot, parse_graph, serialize_graph, format_weight
from .routing import AlgorithmId, resolve_router
from .tightness import (
    CaseStatus,
    case_to_json,
    grid_cells,
    run_grid,
    run_tightness,
    standard_corpus,
    standard_unicyclic_corpus,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2

# numeric axiom tokens as used in suite specs; 4 and 4d pick the direction
AXIOM_TOKENS = {
    "1": AxiomId.ROBUSTNESS,
    "2": AxiomId.SCALE_INVARIANCE,
    "3": AxiomId.SHIFT_INVARIANCE,
    "4": AxiomId.MONOTONICITY,
    "4d": AxiomId.INVERSE_MONOTONICITY,
    "5": AxiomId.FIRST_HOP,
    "6": AxiomId.PATH_CARDINAL_INVARIANCE,
    "7": AxiomId.PATH_ORDINAL_INVARIANCE,
}

ORACLE_CRITERIA = {
    AlgorithmId.MST: TreeCriterion.MIN_TOTAL,
    AlgorithmId.SHORTEST_PATH: TreeCriterion.SHORTEST_ALL,
    AlgorithmId.WEAKEST_LINK: TreeCriterion.MAXIMIN_ALL,
}

ALGO_NAMES = [a.value for a in AlgorithmId]


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit_json(obj, json_out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(text)
    if json_out:
        with open(json_out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _parse_axiom_tokens(csv: str) -> list[AxiomId]:
    axioms = []
    for token in csv.split(","):
        token = token.strip()
        if token not in AXIOM_TOKENS:
            raise UnknownCase(f"unknown axiom token {token!r} (use 1,2,3,4,4d,5,6,7)")
        axioms.append(AXIOM_TOKENS[token])
    if not axioms:
        raise UnknownCase("empty axiom list")
    return axioms


def cmd_route(args) -> int:
    g, file_dest = _load_graph(args.graph)
    dest = args.dest if args.dest is not None else file_dest
    label, router = resolve_router(args.algo)
    tree = router(g, dest)
    for e in tree.sorted_edges():
        print(f"e {e[0]} {e[1]} {format_weight(g.weight(e))}")
    if args.dot_out:
        with open(args.dot_out, "w", encoding="utf-8") as fh:
            fh.write(emit_dot(g, tree))
    if args.fig:
        from .figures import render_route

        render_route(g, tree, args.fig, title=f"{label}, destination {dest}")
        _say(f"figure written to {args.fig}")
    return EXIT_OK


def cmd_check(args) -> int:
    g, file_dest = _load_graph(args.graph)
    dest = args.dest if args.dest is not None else file_dest
    axiom = AxiomId(args.axiom)
    report = run_checker(
        args.algo, axiom, g, dest, args.seed, samples=args.trials, trials=args.trials
    )
    _emit_json(report_to_json(report), args.json_out)
    _say(
        f"{report.algorithm} / {axiom.value}: {report.trials} trials, "
        f"{report.skipped} skipped, {len(report.violations)} violations"
    )
    if args.fig_dir and report.violations:
        from .figures import witness_figures

        written = witness_figures(
            report.violations, args.fig_dir, f"{report.algorithm}-{axiom.value}"
        )
        _say(f"{len(written)} witness figures written to {args.fig_dir}")
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def cmd_suite(args) -> int:
    axioms = _parse_axiom_tokens(args.axioms)
    corpus = CorpusSpec(
        graph_count=args.graphs,
        node_range=(args.min_nodes, args.max_nodes),
        distinct_weights=args.distinct,
        seed=derive_seed(args.seed, 1),
    )
    # 0 unicyclic graphs means "none requested"; two-path axioms then fail
    # loudly instead of passing on an empty pool
    unicyclic = None
    if args.unicyclic_graphs > 0:
        unicyclic = CorpusSpec(
            graph_count=args.unicyclic_graphs,
            node_range=(max(3, args.min_nodes), args.max_nodes),
            distinct_weights=args.distinct,
            unicyclic=True,
            seed=derive_seed(args.seed, 2),
        )
    reports = run_suite(
        args.algo,
        axioms,
        corpus,
        args.seed,
        unicyclic_corpus=unicyclic,
        samples=args.trials,
        trials=args.trials,
    )
    _emit_json([report_to_json(r) for r in reports], args.json_out)
    total = 0
    for r in reports:
        total += len(r.violations)
        _say(
            f"{r.algorithm} / {r.axiom.value}: {r.trials} trials, "
            f"{r.skipped} skipped, {len(r.violations)} violations"
        )
    if args.fig_dir:
        from .figures import witness_figures

        for r in reports:
            if r.violations:
                witness_figures(r.violations, args.fig_dir, f"{r.algorithm}-{r.axiom.value}")
        _say(f"witness figures written to {args.fig_dir}")
    return EXIT_VIOLATIONS if total else EXIT_OK


def cmd_gen(args) -> int:
    spec = CorpusSpec(
        graph_count=args.index + 1,
        node_range=(args.nodes, args.nodes),
        distinct_weights=args.distinct,
        unicyclic=args.unicyclic,
        seed=args.seed,
    )
    g = gen_unicyclic(spec, args.index) if args.unicyclic else gen_connected(spec, args.index)
    dest = instance_destination(spec, args.index, g.n)
    text = serialize_graph(g, dest)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        _say(f"graph written to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle_verify(args) -> int:
    g, file_dest = _load_graph(args.graph)
    dest = args.dest if args.dest is not None else file_dest
    algo = AlgorithmId(args.algo)
    criterion = ORACLE_CRITERIA[algo]
    _, router = resolve_router(algo)
    tree = router(g, dest)
    ok = certify_tree(tree, criterion)
    print("PASS" if ok else "FAIL")
    _say(f"{algo.value} on n={g.n} d={dest}: certified against {criterion.value}")
    return EXIT_OK if ok else EXIT_VIOLATIONS


def cmd_tightness(args) -> int:
    corpus = standard_corpus(args.seed)
    unicyclic = standard_unicyclic_corpus(args.seed)
    if args.all:
        cases = run_grid(corpus, args.seed, unicyclic_corpus=unicyclic)
    else:
        if args.target is None or args.drop is None:
            raise UnknownCase("need a target and --drop, or --all")
        cases = [
            run_tightness(
                AlgorithmId(args.target),
                AxiomId(args.drop),
                corpus,
                args.seed,
                unicyclic_corpus=unicyclic,
            )
        ]
    payload = [case_to_json(c) for c in cases]
    _emit_json(payload if args.all else payload[0], args.json_out)
    for c in cases:
        _say(
            f"{c.target.value} without {c.dropped.value}: {c.status.value} "
            f"(alternative {c.alternative}, {c.retained_violations} retained violations)"
        )
    if args.fig_dir:
        from .figures import render_comparison
        import os

        os.makedirs(args.fig_dir, exist_ok=True)
        for c in cases:
            if c.witness is None:
                continue
            g, d = c.witness, c.witness_destination
            _, target_router = resolve_router(c.target)
            if c.hybrid is not None:
                from .graph import RoutingTree, edge_key

                alt_tree = RoutingTree(
                    g, d, frozenset(edge_key(u, v) for u, v in c.hybrid["tree"])
                )
            else:
                _, alt_router = resolve_router(c.alternative)
                alt_tree = alt_router(g, d)
            out = os.path.join(
                args.fig_dir, f"{c.target.value}-drop-{c.dropped.value}.png"
            )
            render_comparison(
                g, d, target_router(g, d), alt_tree,
                (c.target.value, c.alternative), out,
            )
        _say(f"divergence figures written to {args.fig_dir}")
    return (
        EXIT_VIOLATIONS
        if any(c.status is CaseStatus.UNCONFIRMED for c in cases)
        else EXIT_OK
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="routelab",
        description="Routing algorithms, their defining properties, and the "
        "experiments that separate them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("route", help="run one algorithm on one graph file")
    p.add_argument("graph", help="graph file (see README for the format)")
    p.add_argument("--algo", required=True, choices=ALGO_NAMES)
    p.add_argument("--dest", type=int, default=None, help="override the file's destination")
    p.add_argument("--dot-out", default=None, help="also write Graphviz DOT here")
    p.add_argument("--fig", default=None, help="also render a PNG figure here")
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("check", help="run one axiom checker on one graph file")
    p.add_argument("graph")
    p.add_argument("--algo", required=True, choices=ALGO_NAMES)
    p.add_argument("--axiom", required=True, choices=[a.value for a in AxiomId])
    p.add_argument("--dest", type=int, default=None)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=5, help="samples/trials per randomized checker")
    p.add_argument("--json-out", default=None)
    p.add_argument("--fig-dir", default=None, help="render violation witnesses as PNGs here")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("suite", help="run an axiom suite over a generated corpus")
    p.add_argument("algo", choices=ALGO_NAMES)
    p.add_argument("axioms", help="comma-separated tokens from 1,2,3,4,4d,5,6,7")
    p.add_argument("--graphs", type=int, default=50)
    p.add_argument("--unicyclic-graphs", type=int, default=100)
    p.add_argument("--min-nodes", type=int, default=3)
    p.add_argument("--max-nodes", type=int, default=6)
    p.add_argument("--distinct", action="store_true", default=True)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--json-out", default=None)
    p.add_argument("--fig-dir", default=None)
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("gen", help="generate one corpus graph deterministically")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--index", type=int, default=0, help="instance index within the seed stream")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--unicyclic", action="store_true")
    p.add_argument("--distinct", action="store_true", default=True)
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser(
        "oracle-verify", help="certify an algorithm's tree against brute-force enumeration"
    )
    p.add_argument("graph")
    p.add_argument(
        "--algo",
        required=True,
        choices=[a.value for a in ORACLE_CRITERIA],
        help="one of the three characterized algorithms",
    )
    p.add_argument("--dest", type=int, default=None)
    p.set_defaults(func=cmd_oracle_verify)

    p = sub.add_parser("tightness", help="axiom-drop experiments")
    p.add_argument("target", nargs="?", choices=[a.value for a in ORACLE_CRITERIA])
    p.add_argument("--drop", choices=[a.value for a in AxiomId])
    p.add_argument("--all", action="store_true", help="run the whole grid")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--json-out", default=None)
    p.add_argument("--fig-dir", default=None, help="render divergence witnesses as PNGs here")
    p.set_defaults(func=cmd_tightness)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RouteLabError as exc:
        _say(f"error: {exc}")
        return EXIT_USAGE
    except OSError as exc:
        _say(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
