"""End-to-end acceptance gate.

One test per criterion; each prints a single ``criterion N: PASS|FAIL``
line (run with ``pytest -s`` to see them all). Seeds are pinned, so every
line is reproducible. A FAIL here is a genuine gap, not flakiness; the
assertion message says what was measured.
"""

import contextlib
import io
import time
from fractions import Fraction as F

from routelab.axioms import (
    AxiomId,
    Direction,
    check_first_hop,
    check_monotonicity,
    check_path_cardinal_invariance,
    check_path_ordinal_invariance,
    check_shift_invariance,
    replay_witness,
    run_suite,
)
from routelab.cli import main
from routelab.corpus import (
    CorpusSpec,
    TreeCriterion,
    certify_tree,
    corpus_graphs,
    derive_seed,
    instance_destination,
)
from routelab.graph import WeightedGraph, serialize_graph
from routelab.routing import AlgorithmId, mst_route, route
from routelab.tightness import (
    CaseStatus,
    run_grid,
    standard_corpus,
    standard_unicyclic_corpus,
)

G_TRI = WeightedGraph(3, {(0, 1): F(1), (0, 2): F(3), (1, 2): F(1)})
G_FH = WeightedGraph(4, {(0, 1): F(1), (0, 2): F(2), (1, 3): F(1), (2, 3): F(2)})
G_ORD = WeightedGraph(4, {(0, 1): F(2), (1, 2): F(3), (2, 3): F(6), (0, 3): F(10)})

GENERAL = CorpusSpec(graph_count=200, node_range=(2, 8), seed=derive_seed(1, 102))
UNICYCLIC = CorpusSpec(graph_count=100, node_range=(3, 8), unicyclic=True, seed=derive_seed(1, 103))


def report(n: int, ok: bool, detail: str) -> None:
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {n}: {detail}"


def test_criterion_1_certified_routes_within_budget():
    spec = CorpusSpec(graph_count=500, node_range=(2, 7), seed=derive_seed(1, 101))
    criteria = {
        AlgorithmId.MST: TreeCriterion.MIN_TOTAL,
        AlgorithmId.SHORTEST_PATH: TreeCriterion.SHORTEST_ALL,
        AlgorithmId.WEAKEST_LINK: TreeCriterion.MAXIMIN_ALL,
    }
    start = time.perf_counter()
    failures = 0
    for i, g in enumerate(corpus_graphs(spec)):
        d = instance_destination(spec, i, g.n)
        for algo, criterion in criteria.items():
            if not certify_tree(route(algo, g, d), criterion):
                failures += 1
    elapsed = time.perf_counter() - start
    report(
        1,
        failures == 0 and elapsed < 60.0,
        f"500 graphs x 3 algorithms certified, {failures} failures, {elapsed:.1f}s (budget 60s)",
    )


def _suite_violations(algo, axioms):
    reports = run_suite(algo, axioms, GENERAL, 1, unicyclic_corpus=UNICYCLIC)
    return reports, sum(len(r.violations) for r in reports)


def test_criterion_2_mst_axiom_suite_clean():
    _, violations = _suite_violations(
        AlgorithmId.MST,
        [
            AxiomId.ROBUSTNESS,
            AxiomId.SCALE_INVARIANCE,
            AxiomId.SHIFT_INVARIANCE,
            AxiomId.MONOTONICITY,
            AxiomId.FIRST_HOP,
        ],
    )
    report(2, violations == 0, f"mst suite over 200+100 graphs: {violations} violations")


def test_criterion_3_shortest_path_suite_clean_but_shift_fails():
    _, violations = _suite_violations(
        AlgorithmId.SHORTEST_PATH,
        [
            AxiomId.ROBUSTNESS,
            AxiomId.SCALE_INVARIANCE,
            AxiomId.MONOTONICITY,
            AxiomId.PATH_CARDINAL_INVARIANCE,
        ],
    )
    # the axiom it does not claim must fail fast when probed anyway
    shift_trials = shift_violations = 0
    for i, g in enumerate(corpus_graphs(GENERAL)):
        d = instance_destination(GENERAL, i, g.n)
        r = check_shift_invariance(AlgorithmId.SHORTEST_PATH, g, d, 5, derive_seed(1, 104, i))
        shift_trials += r.trials
        shift_violations += len(r.violations)
        if shift_trials >= 100:
            break
    ok = violations == 0 and shift_violations >= 1
    report(
        3,
        ok,
        f"shortest-path suite: {violations} violations; "
        f"shift probe: {shift_violations} violations within {shift_trials} trials",
    )


def test_criterion_4_weakest_link_axiom_suite_clean():
    _, violations = _suite_violations(
        AlgorithmId.WEAKEST_LINK,
        [
            AxiomId.ROBUSTNESS,
            AxiomId.SCALE_INVARIANCE,
            AxiomId.SHIFT_INVARIANCE,
            AxiomId.INVERSE_MONOTONICITY,
            AxiomId.PATH_ORDINAL_INVARIANCE,
        ],
    )
    report(4, violations == 0, f"weakest-link suite over 200+100 graphs: {violations} violations")


NAMED_CELLS = {
    ("mst", "monotonicity"),
    ("mst", "first-hop"),
    ("shortest-path", "monotonicity"),
    ("shortest-path", "path-cardinal-invariance"),
    ("weakest-link", "inverse-monotonicity"),
    ("weakest-link", "path-ordinal-invariance"),
}


def test_criterion_5_tightness_grid():
    cases = run_grid(standard_corpus(1), 1, standard_unicyclic_corpus(1))
    named_open = []
    figure_bad = []
    for c in cases:
        key = (c.target.value, c.dropped.value)
        tag = "named" if key in NAMED_CELLS else "figure"
        print(f"    {tag} cell ({key[0]}, drop {key[1]}): {c.status.value} via {c.alternative}")
        if tag == "named" and c.status is not CaseStatus.CONFIRMED:
            named_open.append(f"({key[0]}, drop {key[1]}) -> {c.alternative}")
        if tag == "figure" and c.status not in (CaseStatus.CONFIRMED, CaseStatus.FIGURE_DEPENDENT):
            figure_bad.append(key)
    ok = not named_open and not figure_bad
    detail = "all named cells CONFIRMED, figure cells resolved"
    if named_open:
        # honest red: the greedy path-commitment alternatives couple nodes
        # together, so removing or reweighting edges far from one node's own
        # comparison still reroutes it; the retained axioms cannot all hold.
        # The cell notes and README discuss why no compliant construction
        # for these two cells is known.
        detail = f"{len(named_open)} named cells UNCONFIRMED: " + "; ".join(named_open)
    report(5, ok, detail)


def test_criterion_6_mst_ignores_destination():
    spec = CorpusSpec(graph_count=100, node_range=(2, 7), seed=derive_seed(1, 106))
    dependent = 0
    for g in corpus_graphs(spec):
        if len({mst_route(g, d).edge_set for d in range(g.n)}) != 1:
            dependent += 1
    report(6, dependent == 0, f"100 graphs, {dependent} destination-dependent trees")


def _cli(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = main(argv)
    return code, out.getvalue()


def test_criterion_7_byte_identical_reruns(tmp_path):
    tri = tmp_path / "tri.graph"
    tri.write_text(serialize_graph(G_TRI, 2))
    commands = [
        ["check", str(tri), "--algo", "shortest-path", "--axiom", "shift-invariance", "--seed", "1"],
        ["suite", "mst", "1,2", "--graphs", "5", "--max-nodes", "5",
         "--unicyclic-graphs", "0", "--seed", "1"],
        ["tightness", "weakest-link", "--drop", "path-ordinal-invariance", "--seed", "1"],
    ]
    stable = 0
    for argv in commands:
        first, second = _cli(argv), _cli(argv)
        if first == second and first[1]:
            stable += 1
    report(7, stable == len(commands), f"{stable}/{len(commands)} commands byte-identical on rerun")


def test_criterion_8_every_witness_replays():
    batches = [
        ("shortest-path", check_shift_invariance("shortest-path", G_TRI, 2, 5, 1)),
        ("max-spanning-tree", check_monotonicity("max-spanning-tree", G_TRI, 2, Direction.UP, 1)),
        ("mst", check_path_cardinal_invariance("mst", G_TRI, 2, 10, 1)),
        ("shortest-path", check_path_ordinal_invariance("shortest-path", G_ORD, 3, 20, 1)),
        ("shortest-path", check_first_hop("shortest-path", G_FH, 3, 20, 8)),
    ]
    # a corpus sweep with an algorithm that fails often, for volume
    small = CorpusSpec(graph_count=20, node_range=(3, 6), seed=derive_seed(1, 108))
    for i, g in enumerate(corpus_graphs(small)):
        d = instance_destination(small, i, g.n)
        batches.append(
            ("max-spanning-tree",
             check_monotonicity("max-spanning-tree", g, d, Direction.UP, derive_seed(1, 109, i)))
        )
    total = replayed = 0
    for algo, rep in batches:
        for w in rep.violations:
            total += 1
            if replay_witness(algo, w):
                replayed += 1
    report(8, total > 0 and replayed == total, f"{replayed}/{total} witnesses replayed exactly")
