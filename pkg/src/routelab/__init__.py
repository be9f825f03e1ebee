"""Routing trees, the invariance properties that characterize them, and the
oracles and corpora used to check both."""

from .errors import (
    BridgeRemoval,
    ForeignTree,
    InfeasibleSpec,
    InvariantViolation,
    NoEligibleEdge,
    NonPositiveScale,
    NonPositiveWeight,
    NotUnicyclic,
    ParseError,
    RouteLabError,
    TooLarge,
    UnknownCase,
    UnknownEdge,
)
from .graph import (
    Path,
    RoutingTree,
    WeightedGraph,
    edge_key,
    emit_dot,
    is_bridge,
    parse_graph,
    remove_edge,
    serialize_graph,
    set_edge_weight,
    transform_weights,
)
from .routing import (
    AlgorithmId,
    StrongestLinkReading,
    longest_path_route,
    max_spanning_tree_route,
    mst_route,
    route,
    shortest_path_route,
    strongest_link_route,
    weakest_link_route,
)
from .corpus import (
    CorpusSpec,
    TreeCriterion,
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
from .axioms import (
    AxiomId,
    AxiomReport,
    Direction,
    Witness,
    check_first_hop,
    check_monotonicity,
    check_path_cardinal_invariance,
    check_path_ordinal_invariance,
    check_robustness,
    check_scale_invariance,
    check_shift_invariance,
    replay_witness,
    report_to_json,
    run_checker,
    run_suite,
    witness_to_json,
)
from .tightness import (
    CaseStatus,
    TightnessCase,
    case_to_json,
    grid_cells,
    run_grid,
    run_tightness,
    search_divergence,
    standard_corpus,
    standard_unicyclic_corpus,
)

__version__ = "0.1.0"
