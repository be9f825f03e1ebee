import json
from fractions import Fraction as F

import pytest

from routelab.axioms import AxiomId, replay_witness
from routelab.corpus import derive_seed
from routelab.errors import UnknownCase
from routelab.graph import WeightedGraph, parse_graph, set_edge_weight, transform_weights
from routelab.routing import AlgorithmId, mst_route, route, weakest_link_route
from routelab.tightness import (
    AXIOM_SETS,
    CaseStatus,
    case_to_json,
    grid_cells,
    run_grid,
    run_tightness,
    search_divergence,
    standard_corpus,
    standard_unicyclic_corpus,
)
from routelab.tightness import _build_hybrid  # noqa: PLC2701  unit-tested directly

EXPECTED_CELLS = [
    ("mst", "robustness"),
    ("mst", "scale-invariance"),
    ("mst", "shift-invariance"),
    ("mst", "monotonicity"),
    ("mst", "first-hop"),
    ("shortest-path", "robustness"),
    ("shortest-path", "scale-invariance"),
    ("shortest-path", "monotonicity"),
    ("shortest-path", "path-cardinal-invariance"),
    ("weakest-link", "robustness"),
    ("weakest-link", "scale-invariance"),
    ("weakest-link", "shift-invariance"),
    ("weakest-link", "inverse-monotonicity"),
    ("weakest-link", "path-ordinal-invariance"),
]


@pytest.fixture(scope="module")
def grid():
    cases = run_grid(standard_corpus(1), 1, standard_unicyclic_corpus(1))
    return {(c.target.value, c.dropped.value): c for c in cases}


def test_grid_enumerates_every_claimed_axiom():
    assert [(t.value, a.value) for t, a in grid_cells()] == EXPECTED_CELLS
    for target, axioms in AXIOM_SETS.items():
        for a in axioms:
            assert (target.value, a.value) in EXPECTED_CELLS


def test_invalid_cell_rejected():
    with pytest.raises(UnknownCase):
        run_tightness(AlgorithmId.MST, AxiomId.PATH_CARDINAL_INVARIANCE, standard_corpus(1), 1)


class TestDivergenceSearch:
    def test_identical_algorithms_never_diverge(self):
        assert search_divergence("mst", "mst", standard_corpus(1)) is None

    def test_mst_vs_weakest_link(self):
        found = search_divergence("mst", "weakest-link", standard_corpus(1))
        assert found is not None
        g, d = found
        assert mst_route(g, d).edge_set != weakest_link_route(g, d).edge_set

    def test_deterministic(self):
        a = search_divergence("mst", "shortest-path", standard_corpus(3))
        b = search_divergence("mst", "shortest-path", standard_corpus(3))
        assert a == b

    def test_textbook_divergence(self):
        # cheap-but-weak direct edge: total cost and bottleneck disagree
        g_wl = WeightedGraph(3, {(0, 1): F(5), (0, 2): F(1), (1, 2): F(2)})
        assert mst_route(g_wl, 2).sorted_edges() == ((0, 2), (1, 2))
        assert weakest_link_route(g_wl, 2).sorted_edges() == ((0, 1), (1, 2))


class TestNamedCells:
    """Cells where a classical construction witnesses the dropped axiom."""

    def test_drop_monotonicity_from_mst(self, grid):
        c = grid[("mst", "monotonicity")]
        assert c.status is CaseStatus.CONFIRMED
        assert c.alternative == "max-spanning-tree"
        assert c.retained_violations == 0
        assert c.witness is not None

    def test_drop_first_hop_from_mst(self, grid):
        c = grid[("mst", "first-hop")]
        assert c.status is CaseStatus.CONFIRMED
        assert c.alternative == "weakest-link"
        # the surviving monotonicity claim had to flip direction
        assert any("re-aimed" in n for n in c.notes)

    def test_drop_cardinal_from_shortest_path(self, grid):
        c = grid[("shortest-path", "path-cardinal-invariance")]
        assert c.status is CaseStatus.CONFIRMED
        assert c.alternative == "mst"

    def test_drop_ordinal_from_weakest_link(self, grid):
        c = grid[("weakest-link", "path-ordinal-invariance")]
        assert c.status is CaseStatus.CONFIRMED
        assert c.alternative == "mst"
        assert any("re-aimed" in n for n in c.notes)

    def test_drop_monotonicity_from_shortest_path_stays_open(self, grid):
        # longest-path routing cascades: early nodes' committed detours pin
        # later nodes' paths, so removing or reweighting edges far from a
        # node's own comparison still moves its route
        c = grid[("shortest-path", "monotonicity")]
        assert c.status is CaseStatus.UNCONFIRMED
        assert c.alternative == "longest-path"
        assert c.retained_violations > 0
        assert c.witness is not None  # divergence exists; retention fails

    def test_drop_inverse_monotonicity_from_weakest_link_stays_open(self, grid):
        c = grid[("weakest-link", "inverse-monotonicity")]
        assert c.status is CaseStatus.UNCONFIRMED
        assert c.alternative == "strongest-link:min-edge"
        assert c.retained_violations > 0
        # the default reading was tried first and reported on
        assert any("default reading" in n for n in c.notes)

    def test_monotonicity_notes_cover_both_directions(self, grid):
        for key in (("shortest-path", "monotonicity"), ("weakest-link", "inverse-monotonicity")):
            notes = " ".join(grid[key].notes)
            assert "up:" in notes and "down:" in notes


class TestFigureCells:
    FIGURE_KEYS = [
        ("mst", "robustness"),
        ("mst", "scale-invariance"),
        ("mst", "shift-invariance"),
        ("shortest-path", "robustness"),
        ("shortest-path", "scale-invariance"),
        ("weakest-link", "robustness"),
        ("weakest-link", "scale-invariance"),
        ("weakest-link", "shift-invariance"),
    ]

    def test_all_resolve_with_hybrids(self, grid):
        for key in self.FIGURE_KEYS:
            c = grid[key]
            assert c.status in (CaseStatus.CONFIRMED, CaseStatus.FIGURE_DEPENDENT)
            assert c.alternative == "searched"
            assert c.hybrid is not None
            assert c.witness is not None

    def test_confirmed_at_this_seed(self, grid):
        # frozen: every pattern-hybrid passed its retained suite on the
        # first attempt at seed 1
        for key in self.FIGURE_KEYS:
            assert grid[key].status is CaseStatus.CONFIRMED
            assert grid[key].retained_violations == 0

    def test_hybrid_json_rebuilds(self, grid):
        c = grid[("mst", "robustness")]
        assert sorted(c.hybrid) == ["orbit", "pattern", "target", "tree"]
        pattern, d = parse_graph(c.hybrid["pattern"])
        tree = frozenset(tuple(e) for e in c.hybrid["tree"])
        assert tree != mst_route(pattern, d).edge_set
        assert len(tree) == pattern.n - 1


class TestPatternHybrid:
    HY = _build_hybrid(AlgorithmId.MST, AxiomId.ROBUSTNESS, derive_seed(1, 50, 0, 0), 0)

    def test_diverges_on_its_pattern(self):
        hy = self.HY
        assert hy(hy.pattern, hy.destination).edge_set != mst_route(hy.pattern, hy.destination).edge_set

    def test_orbit_closure_under_linear_maps(self):
        # dropping robustness leaves scale and shift retained, so the match
        # must absorb exactly those transformations
        hy = self.HY
        assert hy.orbit == "linear"
        assert hy._matches(transform_weights(hy.pattern, F(3)))
        assert hy._matches(transform_weights(hy.pattern, F(3), F(7)))
        assert hy._matches(transform_weights(hy.pattern, F(1, 2), F(-1, 5)))

    def test_single_edge_tweak_leaves_orbit(self):
        hy = self.HY
        e = sorted(hy.pattern.weight_map())[0]
        tweaked = set_edge_weight(hy.pattern, e, hy.pattern.weight(e) + F(1, 3))
        assert not hy._matches(tweaked)
        assert hy(tweaked, hy.destination).edge_set == mst_route(tweaked, hy.destination).edge_set

    def test_label_names_target_and_orbit(self):
        assert self.HY.label == "mst+pattern[linear]"

    def test_shift_drop_gets_scale_orbit(self):
        hy = _build_hybrid(AlgorithmId.WEAKEST_LINK, AxiomId.SHIFT_INVARIANCE,
                           derive_seed(1, 50, 2, 2), 0)
        assert hy.orbit == "scale"
        assert hy._matches(transform_weights(hy.pattern, F(5)))
        assert not hy._matches(transform_weights(hy.pattern, F(1), F(3)))


class TestCaseJson:
    def test_schema(self, grid):
        c = grid[("mst", "monotonicity")]
        cj = case_to_json(c)
        assert sorted(cj) == [
            "alternative", "dropped", "notes", "retained",
            "status", "suite_reports", "target", "witness_graph",
        ]
        assert cj["status"] == "CONFIRMED"
        assert cj["target"] == "mst"
        assert cj["dropped"] == "monotonicity"
        g, d = parse_graph(cj["witness_graph"])
        assert route(c.target, g, d).edge_set != route(c.alternative, g, d).edge_set

    def test_hybrid_included_when_present(self, grid):
        cj = case_to_json(grid[("mst", "robustness")])
        assert "hybrid" in cj

    def test_serializable_and_deterministic(self, grid):
        text = json.dumps([case_to_json(c) for c in grid.values()], sort_keys=True)
        again = run_grid(standard_corpus(1), 1, standard_unicyclic_corpus(1))
        text2 = json.dumps([case_to_json(c) for c in again], sort_keys=True)
        assert text == text2


def test_retained_suite_witnesses_replay(grid):
    from routelab.routing import StrongestLinkReading, strongest_link_route

    def min_edge(g, d):
        return strongest_link_route(g, d, reading=StrongestLinkReading.MIN_EDGE)

    # every violation the retained suites recorded must reproduce
    checked = 0
    for c in grid.values():
        if c.hybrid is not None:
            continue
        router = min_edge if c.alternative == "strongest-link:min-edge" else c.alternative
        for rep in c.suite_reports:
            for w in rep.violations:
                assert replay_witness(router, w)
                checked += 1
    assert checked > 0  # the two open cells supply these
