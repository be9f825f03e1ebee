from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from routelab.corpus import (
    MAX_ENUM_NODES,
    CorpusSpec,
    TreeCriterion,
    UniformInt,
    UniformRational,
    certify_tree,
    corpus_graphs,
    derive_seed,
    enumerate_simple_paths,
    enumerate_spanning_trees,
    gen_connected,
    gen_unicyclic,
    instance_destination,
    kirchhoff_count,
)
from routelab.errors import InfeasibleSpec, TooLarge
from routelab.graph import WeightedGraph
from routelab.routing import mst_route, shortest_path_route, weakest_link_route

G_TRI = WeightedGraph(3, {(0, 1): F(1), (0, 2): F(3), (1, 2): F(1)})
G_WL = WeightedGraph(3, {(0, 1): F(5), (0, 2): F(1), (1, 2): F(2)})


class TestDeriveSeed:
    def test_deterministic(self):
        assert derive_seed(1, 2, 3) == derive_seed(1, 2, 3)

    def test_sensitive_to_every_part(self):
        base = derive_seed(1, 2, 3)
        assert derive_seed(1, 2, 4) != base
        assert derive_seed(2, 2, 3) != base
        assert derive_seed(1, 3, 3) != base

    def test_arity_matters(self):
        assert derive_seed(1, 2) != derive_seed(1, 2, 0)


class TestSpecValidation:
    def test_empty_node_range(self):
        with pytest.raises(InfeasibleSpec):
            gen_connected(CorpusSpec(graph_count=1, node_range=(5, 3)), 0)

    def test_node_floor(self):
        with pytest.raises(InfeasibleSpec):
            gen_connected(CorpusSpec(graph_count=1, node_range=(1, 5)), 0)

    def test_unicyclic_node_floor(self):
        # a unicyclic graph needs a cycle, hence three nodes
        with pytest.raises(InfeasibleSpec):
            gen_unicyclic(CorpusSpec(graph_count=1, node_range=(2, 2), unicyclic=True), 0)

    def test_density_bounds(self):
        for density in (F(0), F(2)):
            with pytest.raises(InfeasibleSpec):
                gen_connected(
                    CorpusSpec(graph_count=1, node_range=(4, 4), edge_density=density), 0
                )

    def test_distinct_weights_need_room(self):
        narrow = UniformRational(1, 2, 1)
        spec = CorpusSpec(
            graph_count=1, node_range=(9, 9), edge_density=F(1),
            weights=narrow, distinct_weights=True,
        )
        with pytest.raises(InfeasibleSpec):
            gen_connected(spec, 0)

    def test_zero_count_is_empty(self):
        assert corpus_graphs(CorpusSpec(graph_count=0, node_range=(3, 5))) == []


class TestGeneration:
    def test_deterministic_per_index(self):
        spec = CorpusSpec(graph_count=5, node_range=(5, 5), seed=3)
        assert gen_connected(spec, 0) == gen_connected(spec, 0)
        assert gen_connected(spec, 0) != gen_connected(spec, 1)

    def test_exact_node_count_and_density(self):
        spec = CorpusSpec(graph_count=1, node_range=(5, 5), seed=3)
        g = gen_connected(spec, 0)
        assert g.n == 5 and g.m == 6  # 3/5 of the 10 possible edges

    def test_full_density_is_complete(self):
        g = gen_connected(CorpusSpec(graph_count=1, node_range=(4, 4), edge_density=F(1)), 0)
        assert g.m == 6

    def test_distinct_weights_hold(self):
        spec = CorpusSpec(graph_count=10, node_range=(4, 7), seed=8)
        for g in corpus_graphs(spec):
            weights = list(g.weight_map().values())
            assert len(set(weights)) == len(weights)

    def test_node_range_respected(self):
        spec = CorpusSpec(graph_count=20, node_range=(3, 6), seed=5)
        assert all(3 <= g.n <= 6 for g in corpus_graphs(spec))

    def test_unicyclic_has_exactly_one_cycle(self):
        spec = CorpusSpec(graph_count=10, node_range=(3, 7), unicyclic=True, seed=4)
        for g in corpus_graphs(spec):
            assert g.m == g.n  # connected with n edges: exactly one cycle

    def test_corpus_length(self):
        spec = CorpusSpec(graph_count=7, node_range=(3, 5), seed=1)
        assert len(corpus_graphs(spec)) == 7

    def test_destination_in_range(self):
        spec = CorpusSpec(graph_count=30, node_range=(2, 6), seed=2)
        for i, g in enumerate(corpus_graphs(spec)):
            assert 0 <= instance_destination(spec, i, g.n) < g.n

    def test_integer_weights_distribution(self):
        spec = CorpusSpec(
            graph_count=5, node_range=(4, 4), weights=UniformInt(1, 50), seed=6
        )
        for g in corpus_graphs(spec):
            assert all(w.denominator == 1 for w in g.weight_map().values())


class TestEnumeration:
    def test_triangle_trees(self):
        trees = enumerate_spanning_trees(G_TRI)
        assert sorted(sorted(t) for t in trees) == [
            [(0, 1), (0, 2)],
            [(0, 1), (1, 2)],
            [(0, 2), (1, 2)],
        ]
        assert sorted(sum(G_TRI.weight(e) for e in t) for t in trees) == [2, 4, 4]

    def test_complete_graph_matches_cayley(self):
        k4 = WeightedGraph(4, {(u, v): F(u + v + 1) for u in range(4) for v in range(u + 1, 4)})
        assert len(enumerate_spanning_trees(k4)) == 16
        assert kirchhoff_count(k4) == 16

    def test_tree_graph_has_one_tree(self):
        chain = WeightedGraph(4, {(0, 1): F(1), (1, 2): F(1), (2, 3): F(1)})
        assert len(enumerate_spanning_trees(chain)) == 1
        assert kirchhoff_count(chain) == 1

    def test_size_guard(self):
        big = WeightedGraph(10, {(i, i + 1): F(1) for i in range(9)})
        with pytest.raises(TooLarge):
            enumerate_spanning_trees(big)
        # the determinant count has no such limit
        assert kirchhoff_count(big) == 1
        assert MAX_ENUM_NODES == 9

    def test_simple_paths_complete_graph(self):
        k4 = WeightedGraph(4, {(u, v): F(1) for u in range(4) for v in range(u + 1, 4)})
        paths = enumerate_simple_paths(k4, 0, 3)
        assert len(paths) == 5
        assert all(p.source == 0 and p.destination == 3 for p in paths)


class TestCertification:
    def test_accepts_each_optimum(self):
        assert certify_tree(mst_route(G_TRI, 2), TreeCriterion.MIN_TOTAL)
        assert certify_tree(shortest_path_route(G_TRI, 2), TreeCriterion.SHORTEST_ALL)
        assert certify_tree(weakest_link_route(G_WL, 2), TreeCriterion.MAXIMIN_ALL)

    def test_rejects_wrong_criterion(self):
        # the cheap tree routes node 0 over its weak direct edge
        assert not certify_tree(mst_route(G_WL, 2), TreeCriterion.MAXIMIN_ALL)
        # the strong tree pays 5 for an edge the cheap tree avoids
        assert not certify_tree(weakest_link_route(G_WL, 2), TreeCriterion.MIN_TOTAL)


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=40, deadline=None)
def test_enumeration_count_matches_determinant(seed):
    g = corpus_graphs(CorpusSpec(graph_count=1, node_range=(2, 6), seed=seed))[0]
    assert len(enumerate_spanning_trees(g)) == kirchhoff_count(g)


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=25, deadline=None)
def test_generated_graphs_certify(seed):
    spec = CorpusSpec(graph_count=1, node_range=(2, 6), seed=seed)
    g = corpus_graphs(spec)[0]
    d = instance_destination(spec, 0, g.n)
    assert certify_tree(mst_route(g, d), TreeCriterion.MIN_TOTAL)
    assert certify_tree(shortest_path_route(g, d), TreeCriterion.SHORTEST_ALL)
    assert certify_tree(weakest_link_route(g, d), TreeCriterion.MAXIMIN_ALL)
