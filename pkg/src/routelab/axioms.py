"""Executable checkers for the invariance properties of routing functions.

Each checker probes one property on one (graph, destination) instance and
returns an AxiomReport. A reported violation always carries a witness whose
transformation can be replayed: rebuilding the transformed graph and rerunning
the algorithm reproduces the recorded expected and actual outputs exactly.

Randomized checkers are deterministic in their seed; exhaustive ones take no
seed at all.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .corpus import CorpusSpec, corpus_graphs, derive_seed, instance_destination
from .errors import (
    InfeasibleSpec,
    InvariantViolation,
    NonPositiveWeight,
    NotUnicyclic,
    RouteLabError,
)
from .graph import (
    EdgeKey,
    Path,
    RoutingTree,
    WeightedGraph,
    edge_key,
    format_weight,
    is_bridge,
    iter_simple_paths,
    remove_edge,
    serialize_graph,
    set_edge_weight,
    transform_weights,
)
from .routing import resolve_router


class AxiomId(str, Enum):
    ROBUSTNESS = "robustness"
    SCALE_INVARIANCE = "scale-invariance"
    SHIFT_INVARIANCE = "shift-invariance"
    MONOTONICITY = "monotonicity"
    INVERSE_MONOTONICITY = "inverse-monotonicity"
    FIRST_HOP = "first-hop"
    PATH_CARDINAL_INVARIANCE = "path-cardinal-invariance"
    PATH_ORDINAL_INVARIANCE = "path-ordinal-invariance"


class Direction(str, Enum):
    UP = "up"
    DOWN = "down"


Outcome = Union[Path, RoutingTree]

# Fixed probe values; randomized probes are appended per instance.
SCALE_PROBES = (
    Fraction(1, 2),
    Fraction(2),
    Fraction(37, 10),
    Fraction(1, 1000),
    Fraction(1000),
)
SHIFT_PROBES = (Fraction(-5), Fraction(-1, 10), Fraction(1), Fraction(42))

# Doubling search ceiling for the monotonicity threshold.
MONO_MAX_EXP = 40
MONO_REWEIGHTS = 3


@dataclass(frozen=True)
class Witness:
    """One reproducible counterexample: the instance, what was done to it,
    and the before/after outputs."""

    graph: WeightedGraph
    destination: int
    transformation: dict
    expected: Outcome
    actual: Outcome


@dataclass
class AxiomReport:
    axiom: AxiomId
    algorithm: str
    seed: int
    trials: int = 0
    skipped: int = 0
    violations: list[Witness] = field(default_factory=list)

    @property
    def passes(self) -> int:
        return self.trials - self.skipped - len(self.violations)

    def merge(self, other: "AxiomReport") -> None:
        self.trials += other.trials
        self.skipped += other.skipped
        self.violations.extend(other.violations)


# --- JSON encoding ----------------------------------------------------------


def _encode_weights(weights: dict[EdgeKey, Fraction]) -> dict[str, str]:
    return {f"{u},{v}": format_weight(w) for (u, v), w in sorted(weights.items())}


def _decode_weights(data: dict[str, str]) -> dict[EdgeKey, Fraction]:
    out = {}
    for key, w in data.items():
        u, v = key.split(",")
        out[edge_key(int(u), int(v))] = Fraction(w)
    return out


def outcome_to_json(x: Outcome) -> dict:
    if isinstance(x, Path):
        return {
            "kind": "path",
            "source": x.source,
            "destination": x.destination,
            "edges": [list(e) for e in x.edges],
        }
    return {
        "kind": "tree",
        "destination": x.destination,
        "edges": [list(e) for e in x.sorted_edges()],
    }


def witness_to_json(w: Witness) -> dict:
    return {
        "graph": serialize_graph(w.graph, w.destination),
        "destination": w.destination,
        "transformation": w.transformation,
        "expected": outcome_to_json(w.expected),
        "actual": outcome_to_json(w.actual),
    }


def report_to_json(report: AxiomReport) -> dict:
    return {
        "axiom": report.axiom.value,
        "algorithm": report.algorithm,
        "seed": report.seed,
        "trials": report.trials,
        "skipped": report.skipped,
        "violations": [witness_to_json(w) for w in report.violations],
    }


# --- shared helpers ---------------------------------------------------------


def _positive_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 1000), rng.randint(1, 100))


def _signed_rational(rng: random.Random) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-500, 500)
    return Fraction(num, rng.randint(1, 50))


def _fresh_weight(rng: random.Random, used: set[Fraction]) -> Fraction:
    while True:
        w = Fraction(rng.randint(1, 300), rng.randint(1, 10))
        if w not in used:
            used.add(w)
            return w


def _avoiding_neighbors(tree: RoutingTree, v: int) -> list[int]:
    """Neighbors of v whose tree path to the destination does not pass v."""
    return [c for c in tree.graph.neighbors(v) if v not in tree.path_from(c).nodes()]


def _cycle_nodes(g: WeightedGraph) -> set[int]:
    """Nodes on the unique cycle of a connected graph with m == n."""
    degree = {v: g.degree(v) for v in range(g.n)}
    removed: set[int] = set()
    queue = [v for v in range(g.n) if degree[v] == 1]
    while queue:
        v = queue.pop()
        removed.add(v)
        for u in g.neighbors(v):
            if u in removed:
                continue
            degree[u] -= 1
            if degree[u] == 1:
                queue.append(u)
    return {v for v in range(g.n) if v not in removed}


def _two_path_nodes(g: WeightedGraph, destination: int) -> list[int]:
    """Cycle nodes with exactly two simple paths to the destination.

    Those are all cycle nodes except the one nearest to the destination
    (or except the destination itself when it sits on the cycle).
    """
    if g.m != g.n:
        raise NotUnicyclic(f"need m == n, got n={g.n}, m={g.m}")
    cycle = _cycle_nodes(g)
    if destination in cycle:
        exit_node = destination
    else:
        # BFS from the destination; the first cycle node reached is the
        # unique attachment of the destination's hanging tree.
        from collections import deque

        seen = {destination}
        queue = deque([destination])
        exit_node = None
        while queue and exit_node is None:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w in seen:
                    continue
                if w in cycle:
                    exit_node = w
                    break
                seen.add(w)
                queue.append(w)
        assert exit_node is not None
    return sorted(cycle - {exit_node})


# --- checkers ---------------------------------------------------------------


def check_robustness(algo, g: WeightedGraph, destination: int) -> AxiomReport:
    """Removing a non-bridge edge must not reroute nodes that never used it.

    Exhaustive over edges; one trial per edge, bridges are skipped. Only the
    first affected node per edge is recorded, keeping one violation per trial.
    """
    label, router = resolve_router(algo)
    report = AxiomReport(AxiomId.ROBUSTNESS, label, 0)
    base = router(g, destination)
    base_paths = {v: base.path_from(v) for v in range(g.n)}
    for e in g.edges:
        report.trials += 1
        if is_bridge(g, e):
            report.skipped += 1
            continue
        reduced = remove_edge(g, e)
        after = router(reduced, destination)
        for v in range(g.n):
            if e in base_paths[v].edges:
                continue
            if after.path_from(v) != base_paths[v]:
                report.violations.append(
                    Witness(
                        graph=g,
                        destination=destination,
                        transformation={"kind": "remove-edge", "edge": list(e), "node": v},
                        expected=base_paths[v],
                        actual=after.path_from(v),
                    )
                )
                break
    return report


def _check_uniform_transform(
    algo,
    g: WeightedGraph,
    destination: int,
    samples: int,
    rng_seed: int,
    axiom: AxiomId,
) -> AxiomReport:
    if samples < 1:
        raise InvariantViolation("need at least one random probe")
    label, router = resolve_router(algo)
    report = AxiomReport(axiom, label, rng_seed)
    rng = random.Random(rng_seed)
    scale = axiom is AxiomId.SCALE_INVARIANCE
    if scale:
        probes = list(SCALE_PROBES) + [_positive_rational(rng) for _ in range(samples)]
    else:
        probes = list(SHIFT_PROBES) + [_signed_rational(rng) for _ in range(samples)]
    try:
        base = router(g, destination)
    except NonPositiveWeight:
        report.trials = len(probes)
        report.skipped = len(probes)
        return report
    for alpha in probes:
        report.trials += 1
        g2 = transform_weights(g, alpha, 0) if scale else transform_weights(g, 1, alpha)
        try:
            after = router(g2, destination)
        except NonPositiveWeight:
            report.skipped += 1
            continue
        if after.edge_set != base.edge_set:
            kind = "scale-weights" if scale else "shift-weights"
            report.violations.append(
                Witness(
                    graph=g,
                    destination=destination,
                    transformation={"kind": kind, "alpha": format_weight(alpha)},
                    expected=base,
                    actual=after,
                )
            )
    return report


def check_scale_invariance(
    algo, g: WeightedGraph, destination: int, samples: int, rng_seed: int
) -> AxiomReport:
    """Multiplying every weight by a positive factor must keep the tree."""
    return _check_uniform_transform(algo, g, destination, samples, rng_seed, AxiomId.SCALE_INVARIANCE)


def check_shift_invariance(
    algo, g: WeightedGraph, destination: int, samples: int, rng_seed: int
) -> AxiomReport:
    """Adding a constant to every weight must keep the tree.

    Probes that break an algorithm's positivity requirement are skipped.
    """
    return _check_uniform_transform(algo, g, destination, samples, rng_seed, AxiomId.SHIFT_INVARIANCE)


def _reweighted(g: WeightedGraph, fixed: EdgeKey, rng: random.Random) -> WeightedGraph:
    """Fresh positive weights on every edge except `fixed`."""
    used: set[Fraction] = {g.weight(fixed)}
    weights = {}
    for e, w in g.weighted_edges():
        weights[e] = w if e == fixed else _fresh_weight(rng, used)
    return WeightedGraph(g.n, weights)


def check_monotonicity(
    algo, g: WeightedGraph, destination: int, direction: Direction, rng_seed: int
) -> AxiomReport:
    """Pushing an edge's weight far enough must expel it from the tree.

    Direction UP raises edges outside the tree and expects them to stay out;
    DOWN lowers tree edges and expects them to drop out. The threshold is
    found by doubling (max |weight| + 2^k, k up to 40); once a probe succeeds
    the two spot probes beyond it must also exclude the edge. Each eligible
    edge is tried under the original weights and under 3 random reweightings
    of the other edges. Bridges can never leave a spanning tree, so they are
    skipped.
    """
    label, router = resolve_router(algo)
    axiom = AxiomId.MONOTONICITY if direction is Direction.UP else AxiomId.INVERSE_MONOTONICITY
    report = AxiomReport(axiom, label, rng_seed)
    base = router(g, destination)
    if direction is Direction.UP:
        candidates = [e for e in g.edges if e not in base.edge_set]
    else:
        candidates = [e for e in g.edges if e in base.edge_set]
    rng = random.Random(rng_seed)
    for e in candidates:
        if is_bridge(g, e):
            report.trials += 1
            report.skipped += 1
            continue
        weightings = [g] + [_reweighted(g, e, rng) for _ in range(MONO_REWEIGHTS)]
        for gw in weightings:
            report.trials += 1
            outcome = _monotonicity_trial(router, gw, destination, e, direction)
            if outcome == "skip":
                report.skipped += 1
            elif outcome is not None:
                probe_value, bad_tree = outcome
                weights = gw.weight_map()
                weights[e] = probe_value
                report.violations.append(
                    Witness(
                        graph=g,
                        destination=destination,
                        transformation={
                            "kind": "set-weights",
                            "edge": list(e),
                            "direction": direction.value,
                            "weights": _encode_weights(weights),
                        },
                        expected=base,
                        actual=bad_tree,
                    )
                )
    return report


def _monotonicity_trial(router, gw, destination, e, direction):
    """None = pass, "skip" = untestable, else (probe value, including tree)."""
    magnitude = gw.max_abs_weight()
    sign = 1 if direction is Direction.UP else -1
    last = None
    for k in range(MONO_MAX_EXP + 1):
        probe = sign * (magnitude + 2**k)
        try:
            tree = router(set_edge_weight(gw, e, probe), destination)
        except NonPositiveWeight:
            return "skip"
        last = (probe, tree)
        if e not in tree.edge_set:
            extras = (probe + sign * 17, 2 * probe)
            for extra in extras:
                try:
                    above = router(set_edge_weight(gw, e, extra), destination)
                except NonPositiveWeight:
                    return "skip"
                if e in above.edge_set:
                    return (extra, above)
            return None
    return last


def check_first_hop(
    algo, g: WeightedGraph, destination: int, trials: int, rng_seed: int
) -> AxiomReport:
    """A node's first hop must survive reweighting that fixes its viable exits.

    For a sampled node v, the viable exits C are the neighbors whose tree path
    to the destination avoids v. All edges from v into C keep their weights;
    everything else is redrawn. Trials where the reweighted tree changes which
    neighbors are viable are skipped, since the premise no longer holds.
    """
    if trials < 1:
        raise InvariantViolation("need at least one trial")
    label, router = resolve_router(algo)
    report = AxiomReport(AxiomId.FIRST_HOP, label, rng_seed)
    base = router(g, destination)
    rng = random.Random(rng_seed)
    nodes = [v for v in range(g.n) if v != destination]
    for _ in range(trials):
        report.trials += 1
        v = rng.choice(nodes)
        viable = set(_avoiding_neighbors(base, v))
        kept = {edge_key(v, c) for c in viable}
        used = {g.weight(e) for e in kept}
        weights = {
            e: (w if e in kept else _fresh_weight(rng, used)) for e, w in g.weighted_edges()
        }
        g2 = WeightedGraph(g.n, weights)
        try:
            after = router(g2, destination)
        except NonPositiveWeight:
            report.skipped += 1
            continue
        if set(_avoiding_neighbors(after, v)) != viable:
            report.skipped += 1
            continue
        if after.parent_of(v) != base.parent_of(v):
            report.violations.append(
                Witness(
                    graph=g,
                    destination=destination,
                    transformation={
                        "kind": "reweight",
                        "node": v,
                        "weights": _encode_weights(weights),
                    },
                    expected=base.path_from(v),
                    actual=after.path_from(v),
                )
            )
    return report


def _cardinal_alpha(rng: random.Random) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-20, 20)
    return Fraction(num, rng.randint(1, 4))


def check_path_cardinal_invariance(
    algo, g: WeightedGraph, destination: int, samples: int, rng_seed: int
) -> AxiomReport:
    """On a one-cycle graph, adding the same amount to one private edge of
    each of a node's two paths must keep that node's routing choice."""
    if samples < 1:
        raise InvariantViolation("need at least one sample")
    label, router = resolve_router(algo)
    report = AxiomReport(AxiomId.PATH_CARDINAL_INVARIANCE, label, rng_seed)
    candidates = _two_path_nodes(g, destination)
    base = router(g, destination)
    rng = random.Random(rng_seed)
    for _ in range(samples):
        report.trials += 1
        v = rng.choice(candidates)
        p1, p2 = (
            Path.from_nodes(nodes) for nodes in iter_simple_paths(g, v, destination)
        )
        only1 = sorted(set(p1.edges) - set(p2.edges))
        only2 = sorted(set(p2.edges) - set(p1.edges))
        e1 = rng.choice(only1)
        e2 = rng.choice(only2)
        alpha = _cardinal_alpha(rng)
        weights = g.weight_map()
        weights[e1] += alpha
        weights[e2] += alpha
        g2 = WeightedGraph(g.n, weights)
        try:
            after = router(g2, destination)
        except NonPositiveWeight:
            report.skipped += 1
            continue
        expected = base.path_from(v)
        actual = after.path_from(v)
        if actual != expected:
            report.violations.append(
                Witness(
                    graph=g,
                    destination=destination,
                    transformation={
                        "kind": "add-to-edges",
                        "edges": [list(e1), list(e2)],
                        "alpha": format_weight(alpha),
                        "node": v,
                    },
                    expected=expected,
                    actual=actual,
                )
            )
    return report


def check_path_ordinal_invariance(
    algo,
    g: WeightedGraph,
    destination: int,
    samples: int,
    rng_seed: int,
    order_window: str = "both",
) -> AxiomReport:
    """Reweighting one non-extremal path edge without reordering must keep
    the node's routing choice.

    With order_window="both" (the conservative default) the new weight stays
    strictly between its neighbors in the sorted weights of both paths, so
    the full order is untouched. With "literal" it only refuses to drop below
    edges it used to dominate, which permits reorderings upward.
    """
    if samples < 1:
        raise InvariantViolation("need at least one sample")
    if order_window not in ("both", "literal"):
        raise InvariantViolation(f"unknown order window {order_window!r}")
    label, router = resolve_router(algo)
    report = AxiomReport(AxiomId.PATH_ORDINAL_INVARIANCE, label, rng_seed)
    candidates = _two_path_nodes(g, destination)
    base = router(g, destination)
    rng = random.Random(rng_seed)
    for _ in range(samples):
        report.trials += 1
        v = rng.choice(candidates)
        p1, p2 = (
            Path.from_nodes(nodes) for nodes in iter_simple_paths(g, v, destination)
        )
        union = sorted(set(p1.edges) | set(p2.edges))
        weights_union = [g.weight(e) for e in union]
        lo, hi = min(weights_union), max(weights_union)
        eligible = []
        for e in union:
            w = g.weight(e)
            if not (lo < w < hi):
                continue
            if order_window == "both" and any(
                g.weight(o) == w for o in union if o != e
            ):
                # a tied neighbor makes "keep the order" ambiguous
                continue
            eligible.append(e)
        if not eligible:
            report.skipped += 1
            continue
        e = rng.choice(eligible)
        w = g.weight(e)
        others = [g.weight(o) for o in union if o != e]
        below = [x for x in others if x < w]
        if order_window == "both":
            lower = max(below)
            upper = min(x for x in others if x > w)
            r = Fraction(rng.randint(1, 99), 100)
            new_w = lower + (upper - lower) * r
        else:
            lower = max(below) if below else w
            r = Fraction(rng.randint(0, 400), 10)
            new_w = lower + r
        g2 = set_edge_weight(g, e, new_w)
        try:
            after = router(g2, destination)
        except NonPositiveWeight:
            report.skipped += 1
            continue
        expected = base.path_from(v)
        actual = after.path_from(v)
        if actual != expected:
            report.violations.append(
                Witness(
                    graph=g,
                    destination=destination,
                    transformation={
                        "kind": "perturb-edge",
                        "edge": list(e),
                        "weight": format_weight(new_w),
                        "node": v,
                    },
                    expected=expected,
                    actual=actual,
                )
            )
    return report


# --- replay -----------------------------------------------------------------


def replay_witness(algo, witness: Witness) -> bool:
    """Recompute a witness from its transformation record.

    True only when the recomputed expected and actual outputs match the
    recorded ones exactly and the recomputation still violates the property.
    """
    label, router = resolve_router(algo)
    g, d, t = witness.graph, witness.destination, witness.transformation
    kind = t["kind"]
    if kind == "remove-edge":
        e = edge_key(*t["edge"])
        v = t["node"]
        expected: Outcome = router(g, d).path_from(v)
        actual: Outcome = router(remove_edge(g, e), d).path_from(v)
        violated = expected != actual
    elif kind in ("scale-weights", "shift-weights"):
        alpha = Fraction(t["alpha"])
        expected = router(g, d)
        if kind == "scale-weights":
            g2 = transform_weights(g, alpha, 0)
        else:
            g2 = transform_weights(g, 1, alpha)
        actual = router(g2, d)
        violated = expected.edge_set != actual.edge_set
    elif kind == "set-weights":
        e = edge_key(*t["edge"])
        g2 = WeightedGraph(g.n, _decode_weights(t["weights"]))
        expected = router(g, d)
        actual = router(g2, d)
        violated = e in actual.edge_set
    elif kind == "reweight":
        v = t["node"]
        g2 = WeightedGraph(g.n, _decode_weights(t["weights"]))
        base = router(g, d)
        after = router(g2, d)
        expected = base.path_from(v)
        actual = after.path_from(v)
        premise = set(_avoiding_neighbors(after, v)) == set(_avoiding_neighbors(base, v))
        violated = premise and after.parent_of(v) != base.parent_of(v)
    elif kind == "add-to-edges":
        v = t["node"]
        alpha = Fraction(t["alpha"])
        weights = g.weight_map()
        for raw in t["edges"]:
            weights[edge_key(*raw)] += alpha
        expected = router(g, d).path_from(v)
        actual = router(WeightedGraph(g.n, weights), d).path_from(v)
        violated = expected != actual
    elif kind == "perturb-edge":
        v = t["node"]
        e = edge_key(*t["edge"])
        g2 = set_edge_weight(g, e, Fraction(t["weight"]))
        expected = router(g, d).path_from(v)
        actual = router(g2, d).path_from(v)
        violated = expected != actual
    else:
        raise InvariantViolation(f"unknown transformation kind {kind!r}")
    return violated and expected == witness.expected and actual == witness.actual


# --- suites -----------------------------------------------------------------

# Unicyclic-only properties draw their instances from the unicyclic sub-corpus.
UNICYCLIC_AXIOMS = frozenset(
    {AxiomId.PATH_CARDINAL_INVARIANCE, AxiomId.PATH_ORDINAL_INVARIANCE}
)

_AXIOM_TAG = {
    AxiomId.ROBUSTNESS: 10,
    AxiomId.SCALE_INVARIANCE: 11,
    AxiomId.SHIFT_INVARIANCE: 12,
    AxiomId.MONOTONICITY: 13,
    AxiomId.INVERSE_MONOTONICITY: 14,
    AxiomId.FIRST_HOP: 15,
    AxiomId.PATH_CARDINAL_INVARIANCE: 16,
    AxiomId.PATH_ORDINAL_INVARIANCE: 17,
}


def run_checker(
    algo,
    axiom: AxiomId,
    g: WeightedGraph,
    destination: int,
    rng_seed: int,
    samples: int = 5,
    trials: int = 5,
) -> AxiomReport:
    """Dispatch a single checker with its natural parameters."""
    if axiom is AxiomId.ROBUSTNESS:
        return check_robustness(algo, g, destination)
    if axiom is AxiomId.SCALE_INVARIANCE:
        return check_scale_invariance(algo, g, destination, samples, rng_seed)
    if axiom is AxiomId.SHIFT_INVARIANCE:
        return check_shift_invariance(algo, g, destination, samples, rng_seed)
    if axiom is AxiomId.MONOTONICITY:
        return check_monotonicity(algo, g, destination, Direction.UP, rng_seed)
    if axiom is AxiomId.INVERSE_MONOTONICITY:
        return check_monotonicity(algo, g, destination, Direction.DOWN, rng_seed)
    if axiom is AxiomId.FIRST_HOP:
        return check_first_hop(algo, g, destination, trials, rng_seed)
    if axiom is AxiomId.PATH_CARDINAL_INVARIANCE:
        return check_path_cardinal_invariance(algo, g, destination, samples, rng_seed)
    if axiom is AxiomId.PATH_ORDINAL_INVARIANCE:
        return check_path_ordinal_invariance(algo, g, destination, samples, rng_seed)
    raise InvariantViolation(f"unknown axiom {axiom!r}")


def run_suite(
    algo,
    axioms: Sequence[AxiomId],
    corpus: CorpusSpec,
    rng_seed: int,
    unicyclic_corpus: CorpusSpec | None = None,
    samples: int = 5,
    trials: int = 5,
) -> list[AxiomReport]:
    """Run the requested checkers over seeded corpora and aggregate per axiom.

    General properties run over the main corpus plus the unicyclic sub-corpus
    when one is given; the two-path properties require the unicyclic corpus.
    Per-instance seeds derive from (rng_seed, axiom, corpus, index), so any
    single instance can be rerun in isolation. Instance-level checker errors
    are converted to skips rather than aborting the whole suite.
    """
    label, _ = resolve_router(algo)
    axioms = list(axioms)
    if any(a in UNICYCLIC_AXIOMS for a in axioms) and unicyclic_corpus is None:
        raise InfeasibleSpec("two-path checkers need a unicyclic corpus")
    general = [
        (g, instance_destination(corpus, i, g.n))
        for i, g in enumerate(corpus_graphs(corpus))
    ]
    unicyclic: list[tuple[WeightedGraph, int]] = []
    if unicyclic_corpus is not None:
        unicyclic = [
            (g, instance_destination(unicyclic_corpus, i, g.n))
            for i, g in enumerate(corpus_graphs(unicyclic_corpus))
        ]
    reports = []
    for axiom in axioms:
        report = AxiomReport(axiom, label, rng_seed)
        if axiom in UNICYCLIC_AXIOMS:
            pools = [(1, unicyclic)]
        else:
            pools = [(0, general), (1, unicyclic)]
        for pool_tag, pool in pools:
            for index, (g, destination) in enumerate(pool):
                sub_seed = derive_seed(rng_seed, _AXIOM_TAG[axiom], pool_tag, index)
                try:
                    one = run_checker(
                        algo, axiom, g, destination, sub_seed, samples=samples, trials=trials
                    )
                except RouteLabError:
                    report.trials += 1
                    report.skipped += 1
                    continue
                report.merge(one)
        reports.append(report)
    return reports
