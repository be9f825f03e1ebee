"""The six routing functions, each mapping (graph, destination) to a tree.

All of them are deterministic: ties are broken by lexicographic edge identity
and, for the path-committing constructions, by lexicographic edge sequence.
"""

from __future__ import annotations

import heapq
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable

from .errors import InvariantViolation, NonPositiveWeight, TooLarge, UnknownCase
from .graph import EdgeKey, Path, RoutingTree, WeightedGraph, edge_key, iter_simple_paths

Router = Callable[[WeightedGraph, int], RoutingTree]

# Beyond this the path-committing constructions refuse to enumerate.
MAX_COMMIT_NODES = 12


class AlgorithmId(str, Enum):
    MST = "mst"
    SHORTEST_PATH = "shortest-path"
    WEAKEST_LINK = "weakest-link"
    MAX_SPANNING_TREE = "max-spanning-tree"
    LONGEST_PATH = "longest-path"
    STRONGEST_LINK = "strongest-link"


class StrongestLinkReading(str, Enum):
    """Which way the strongest-link path criterion is read.

    MAX_EDGE picks the path whose heaviest edge is largest (the default);
    MIN_EDGE picks the path whose lightest edge is smallest.
    """

    MAX_EDGE = "max-edge"
    MIN_EDGE = "min-edge"


class _DisjointSet:
    __slots__ = ("parent", "rank")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def _check_destination(g: WeightedGraph, destination: int) -> None:
    if not (0 <= destination < g.n):
        raise InvariantViolation(f"destination {destination} outside [0, {g.n})")


def _kruskal(g: WeightedGraph, destination: int, descending: bool) -> RoutingTree:
    _check_destination(g, destination)
    if descending:
        order = sorted(g.weighted_edges(), key=lambda ew: (-ew[1], ew[0]))
    else:
        order = sorted(g.weighted_edges(), key=lambda ew: (ew[1], ew[0]))
    dsu = _DisjointSet(g.n)
    chosen: list[EdgeKey] = []
    for e, _ in order:
        if dsu.union(*e):
            chosen.append(e)
            if len(chosen) == g.n - 1:
                break
    return RoutingTree(g, destination, chosen)


def mst_route(g: WeightedGraph, destination: int) -> RoutingTree:
    """Minimum total weight spanning tree (ascending Kruskal)."""
    return _kruskal(g, destination, descending=False)


def max_spanning_tree_route(g: WeightedGraph, destination: int) -> RoutingTree:
    """Maximum total weight spanning tree (descending Kruskal)."""
    return _kruskal(g, destination, descending=True)


def weakest_link_route(g: WeightedGraph, destination: int) -> RoutingTree:
    """Tree in which every node's path maximizes its bottleneck edge.

    A maximum spanning tree carries a maximin path for every pair, so this is
    the same descending Kruskal construction as max_spanning_tree_route; it
    keeps its own name because it plays a different role for callers.
    """
    return _kruskal(g, destination, descending=True)


def shortest_path_route(g: WeightedGraph, destination: int) -> RoutingTree:
    """Tree of minimum-total-weight paths to the destination.

    Requires strictly positive weights. Among equally short predecessors a
    node picks the neighbor minimizing (distance, node id).
    """
    _check_destination(g, destination)
    for e, w in g.weighted_edges():
        if w <= 0:
            raise NonPositiveWeight(f"edge {e} has non-positive weight {w}")
    dist: dict[int, Fraction] = {}
    heap: list[tuple[Fraction, int]] = [(Fraction(0), destination)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in dist:
            continue
        dist[u] = d
        for v in g.neighbors(u):
            if v not in dist:
                heapq.heappush(heap, (d + g.weight(edge_key(u, v)), v))
    edges = []
    for v in range(g.n):
        if v == destination:
            continue
        candidates = [
            c for c in g.neighbors(v) if dist[c] + g.weight(edge_key(v, c)) == dist[v]
        ]
        parent = min(candidates, key=lambda c: (dist[c], c))
        edges.append(edge_key(v, parent))
    return RoutingTree(g, destination, edges)


def _greedy_commit(
    g: WeightedGraph,
    destination: int,
    prefer: Callable[[tuple[int, ...], tuple[int, ...]], bool],
) -> RoutingTree:
    """Shared skeleton for the path-committing constructions.

    Nodes are processed in ascending id. Each uncommitted node picks its best
    simple path to the destination among those consistent with the parents
    fixed so far, then the whole path is committed. `prefer(a, b)` says
    whether candidate node-tuple a beats the incumbent b.
    """
    _check_destination(g, destination)
    if g.n > MAX_COMMIT_NODES:
        raise TooLarge(f"path commitment is limited to {MAX_COMMIT_NODES} nodes, got {g.n}")
    parent: dict[int, int | None] = {destination: None}
    for v in range(g.n):
        if v in parent:
            continue
        best: tuple[int, ...] | None = None
        for nodes in iter_simple_paths(g, v, destination):
            consistent = True
            for i in range(len(nodes) - 1):
                fixed = parent.get(nodes[i])
                if fixed is not None and fixed != nodes[i + 1]:
                    consistent = False
                    break
            if not consistent:
                continue
            if best is None or prefer(nodes, best):
                best = nodes
        # A consistent path always exists: walk to the committed region and
        # follow it, so `best` cannot be None on a connected graph.
        assert best is not None
        for i in range(len(best) - 1):
            if best[i] not in parent:
                parent[best[i]] = best[i + 1]
    edges = [edge_key(v, p) for v, p in parent.items() if p is not None]
    return RoutingTree(g, destination, edges)


def _edge_seq(nodes: tuple[int, ...]) -> tuple[EdgeKey, ...]:
    return tuple(edge_key(a, b) for a, b in zip(nodes, nodes[1:]))


def longest_path_route(g: WeightedGraph, destination: int) -> RoutingTree:
    """Greedy tree of maximum-total-weight simple paths.

    Per-node longest paths need not agree on a single tree, so earlier nodes
    (ascending id) win and later nodes choose among paths consistent with the
    commitments made so far. Ties fall to the lexicographically smaller edge
    sequence.
    """

    def prefer(cand: tuple[int, ...], best: tuple[int, ...]) -> bool:
        ct = sum(g.weight(e) for e in _edge_seq(cand))
        bt = sum(g.weight(e) for e in _edge_seq(best))
        if ct != bt:
            return ct > bt
        return _edge_seq(cand) < _edge_seq(best)

    return _greedy_commit(g, destination, prefer)


def strongest_link_route(
    g: WeightedGraph,
    destination: int,
    reading: StrongestLinkReading = StrongestLinkReading.MAX_EDGE,
) -> RoutingTree:
    """Greedy tree built around each path's extreme edge.

    Under the MAX_EDGE reading a node prefers the path whose heaviest edge is
    largest, tie-broken by larger bottleneck and then lexicographic edge
    sequence. The MIN_EDGE reading instead prefers the path whose lightest
    edge is smallest, with the mirrored tie-breaks.
    """

    if reading is StrongestLinkReading.MAX_EDGE:

        def prefer(cand: tuple[int, ...], best: tuple[int, ...]) -> bool:
            ce, be = _edge_seq(cand), _edge_seq(best)
            cmax = max(g.weight(e) for e in ce)
            bmax = max(g.weight(e) for e in be)
            if cmax != bmax:
                return cmax > bmax
            cmin = min(g.weight(e) for e in ce)
            bmin = min(g.weight(e) for e in be)
            if cmin != bmin:
                return cmin > bmin
            return ce < be

    else:

        def prefer(cand: tuple[int, ...], best: tuple[int, ...]) -> bool:
            ce, be = _edge_seq(cand), _edge_seq(best)
            cmin = min(g.weight(e) for e in ce)
            bmin = min(g.weight(e) for e in be)
            if cmin != bmin:
                return cmin < bmin
            cmax = max(g.weight(e) for e in ce)
            bmax = max(g.weight(e) for e in be)
            if cmax != bmax:
                return cmax < bmax
            return ce < be

    return _greedy_commit(g, destination, prefer)


ROUTERS: dict[AlgorithmId, Router] = {
    AlgorithmId.MST: mst_route,
    AlgorithmId.SHORTEST_PATH: shortest_path_route,
    AlgorithmId.WEAKEST_LINK: weakest_link_route,
    AlgorithmId.MAX_SPANNING_TREE: max_spanning_tree_route,
    AlgorithmId.LONGEST_PATH: longest_path_route,
    AlgorithmId.STRONGEST_LINK: strongest_link_route,
}


def resolve_router(algo) -> tuple[str, Router]:
    """Accept an AlgorithmId, its string value, or a bare callable.

    Returns a (label, callable) pair; the label names the algorithm in
    reports. Callables let the tightness machinery run pieced-together
    routing functions through the same checkers.
    """
    if isinstance(algo, AlgorithmId):
        return algo.value, ROUTERS[algo]
    if isinstance(algo, str):
        try:
            return algo, ROUTERS[AlgorithmId(algo)]
        except ValueError:
            raise UnknownCase(f"no routing algorithm named {algo!r}") from None
    label = getattr(algo, "label", None) or getattr(algo, "__name__", "custom")
    return label, algo


def route(algo, g: WeightedGraph, destination: int) -> RoutingTree:
    _, router = resolve_router(algo)
    return router(g, destination)
