"""Seeded graph generation and exhaustive certification oracles.

The oracles here deliberately share no code with the routing constructions
they certify: spanning trees and simple paths are enumerated outright, so a
certified tree is optimal against every alternative, not against another
implementation of the same idea.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

from .errors import InfeasibleSpec, InvariantViolation, TooLarge
from .graph import EdgeKey, Path, RoutingTree, WeightedGraph, edge_key, iter_simple_paths

# Exhaustive enumeration refuses larger instances.
MAX_ENUM_NODES = 9

_MASK64 = (1 << 64) - 1


def derive_seed(master: int, *parts: int) -> int:
    """Stable 64-bit sub-seed from a master seed and index parts.

    Avoids Python's hash() so the stream layout never depends on interpreter
    hashing. splitmix-style mixing keeps nearby indices uncorrelated.
    """
    h = master & _MASK64
    for p in parts:
        h = (h ^ ((p + 0x9E3779B97F4A7C15) & _MASK64)) & _MASK64
        h = (h * 0xBF58476D1CE4E5B9) & _MASK64
        h ^= h >> 27
        h = (h * 0x94D049BB133111EB) & _MASK64
        h ^= h >> 31
    return h


@dataclass(frozen=True)
class UniformInt:
    """Integer weights drawn uniformly from [lo, hi]."""

    lo: int
    hi: int

    def sample(self, rng: random.Random) -> Fraction:
        return Fraction(rng.randint(self.lo, self.hi))

    def token(self) -> str:
        return f"int:{self.lo}:{self.hi}"


@dataclass(frozen=True)
class UniformRational:
    """Rationals in [lo, hi]: a denominator up to max_den, then a numerator."""

    lo: int
    hi: int
    max_den: int

    def sample(self, rng: random.Random) -> Fraction:
        den = rng.randint(1, self.max_den)
        num = rng.randint(self.lo * den, self.hi * den)
        return Fraction(num, den)

    def token(self) -> str:
        return f"rat:{self.lo}:{self.hi}:{self.max_den}"


WeightDistribution = Union[UniformInt, UniformRational]


@dataclass(frozen=True)
class CorpusSpec:
    """Everything needed to regenerate a corpus instance by (seed, index)."""

    graph_count: int
    node_range: tuple[int, int]
    edge_density: Fraction = Fraction(3, 5)
    weights: WeightDistribution = UniformRational(1, 20, 7)
    distinct_weights: bool = True
    unicyclic: bool = False
    seed: int = 0

    def validate(self) -> None:
        lo, hi = self.node_range
        if self.graph_count < 0:
            raise InfeasibleSpec(f"negative graph count {self.graph_count}")
        if lo > hi:
            raise InfeasibleSpec(f"empty node range {self.node_range}")
        floor = 3 if self.unicyclic else 2
        if lo < floor:
            raise InfeasibleSpec(f"node range must start at {floor} or above, got {lo}")
        if not (0 < self.edge_density <= 1):
            raise InfeasibleSpec(f"edge density must lie in (0, 1], got {self.edge_density}")
        if isinstance(self.weights, UniformInt) and self.weights.lo > self.weights.hi:
            raise InfeasibleSpec("empty integer weight range")
        if isinstance(self.weights, UniformRational):
            if self.weights.lo > self.weights.hi or self.weights.max_den < 1:
                raise InfeasibleSpec("bad rational weight range")


def _sample_weight(spec: CorpusSpec, rng: random.Random, used: set[Fraction]) -> Fraction:
    if not spec.distinct_weights:
        return spec.weights.sample(rng)
    for _ in range(1000):
        w = spec.weights.sample(rng)
        if w not in used:
            used.add(w)
            return w
    raise InfeasibleSpec("weight distribution too narrow to keep weights distinct")


def _random_tree_edges(n: int, rng: random.Random) -> list[EdgeKey]:
    # Attach each new node to a uniformly chosen earlier one.
    return [edge_key(i, rng.randrange(i)) for i in range(1, n)]


def gen_connected(spec: CorpusSpec, index: int) -> WeightedGraph:
    """Deterministic connected graph number `index` of the corpus.

    A random spanning tree guarantees connectivity; extra edges are added to
    reach round(density * n*(n-1)/2) edges in total.
    """
    spec.validate()
    rng = random.Random(derive_seed(spec.seed, index, 0))
    n = rng.randint(*spec.node_range)
    pair_count = n * (n - 1) // 2
    # round-half-up in exact arithmetic
    target_m = int(spec.edge_density * pair_count + Fraction(1, 2))
    if target_m < n - 1:
        raise InfeasibleSpec(
            f"density {spec.edge_density} gives {target_m} edges, below the {n - 1} needed at n={n}"
        )
    tree = _random_tree_edges(n, rng)
    chosen = set(tree)
    extra_pool = sorted(
        edge_key(u, v) for u in range(n) for v in range(u + 1, n) if edge_key(u, v) not in chosen
    )
    chosen.update(rng.sample(extra_pool, target_m - len(chosen)))
    used: set[Fraction] = set()
    return WeightedGraph(n, {e: _sample_weight(spec, rng, used) for e in sorted(chosen)})


def gen_unicyclic(spec: CorpusSpec, index: int) -> WeightedGraph:
    """Deterministic connected graph with exactly one cycle (m == n)."""
    spec.validate()
    if spec.node_range[0] < 3:
        raise InfeasibleSpec("a unicyclic graph needs at least 3 nodes")
    rng = random.Random(derive_seed(spec.seed, index, 1))
    n = rng.randint(*spec.node_range)
    tree = _random_tree_edges(n, rng)
    chosen = set(tree)
    extra_pool = sorted(
        edge_key(u, v) for u in range(n) for v in range(u + 1, n) if edge_key(u, v) not in chosen
    )
    chosen.add(rng.choice(extra_pool))
    used: set[Fraction] = set()
    return WeightedGraph(n, {e: _sample_weight(spec, rng, used) for e in sorted(chosen)})


def corpus_graphs(spec: CorpusSpec) -> list[WeightedGraph]:
    gen = gen_unicyclic if spec.unicyclic else gen_connected
    return [gen(spec, i) for i in range(spec.graph_count)]


def instance_destination(spec: CorpusSpec, index: int, n: int) -> int:
    """Deterministic destination for corpus instance `index`."""
    return random.Random(derive_seed(spec.seed, index, 2)).randrange(n)


# --- exhaustive oracles ----------------------------------------------------


def _check_enum_bound(g: WeightedGraph) -> None:
    if g.n > MAX_ENUM_NODES:
        raise TooLarge(f"exhaustive enumeration is limited to {MAX_ENUM_NODES} nodes, got {g.n}")


def enumerate_spanning_trees(g: WeightedGraph) -> list[frozenset[EdgeKey]]:
    """All spanning trees as edge sets, in lexicographic include-first order."""
    _check_enum_bound(g)
    edges = list(g.edges)
    m = len(edges)
    need = g.n - 1
    out: list[frozenset[EdgeKey]] = []

    def components(chosen: list[EdgeKey], available_from: int) -> bool:
        # Can the remaining edges still connect everything?
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = g.n
        for u, v in chosen:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                count -= 1
        for e in edges[available_from:]:
            ru, rv = find(e[0]), find(e[1])
            if ru != rv:
                parent[ru] = rv
                count -= 1
        return count == 1

    def grow(idx: int, chosen: list[EdgeKey], dsu_parent: list[int]) -> None:
        if len(chosen) == need:
            out.append(frozenset(chosen))
            return
        if idx == m or len(chosen) + (m - idx) < need:
            return
        if not components(chosen, idx):
            return
        e = edges[idx]

        def find(px: list[int], x: int) -> int:
            while px[x] != x:
                px[x] = px[px[x]]
                x = px[x]
            return x

        ru, rv = find(dsu_parent, e[0]), find(dsu_parent, e[1])
        if ru != rv:
            nxt = list(dsu_parent)
            nxt[ru] = rv
            grow(idx + 1, chosen + [e], nxt)
        grow(idx + 1, chosen, dsu_parent)

    grow(0, [], list(range(g.n)))
    return out


def kirchhoff_count(g: WeightedGraph) -> int:
    """Spanning tree count via the matrix-tree determinant, exact integers."""
    n = g.n
    if n == 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    # Bareiss elimination on the destination-0 minor keeps everything integer.
    a = [row[1:] for row in lap[1:]]
    size = n - 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            # a row swap flips the determinant's sign; negating the row flips it back
            for j in range(size):
                a[k][j] = -a[k][j]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return a[size - 1][size - 1]


def enumerate_simple_paths(g: WeightedGraph, source: int, destination: int) -> list[Path]:
    """All simple paths source -> destination, depth-first order."""
    _check_enum_bound(g)
    return [Path.from_nodes(nodes) for nodes in iter_simple_paths(g, source, destination)]


class TreeCriterion(str, Enum):
    MIN_TOTAL = "min-total"
    SHORTEST_ALL = "shortest-all"
    MAXIMIN_ALL = "maximin-all"


def certify_tree(tree: RoutingTree, criterion: TreeCriterion) -> bool:
    """Check a tree's optimality claim against exhaustive enumeration."""
    g = tree.graph
    _check_enum_bound(g)
    if criterion is TreeCriterion.MIN_TOTAL:
        best = min(
            sum(g.weight(e) for e in t) for t in enumerate_spanning_trees(g)
        )
        return tree.total_weight() == best
    if criterion is TreeCriterion.SHORTEST_ALL:
        for v in range(g.n):
            if v == tree.destination:
                continue
            best = min(
                p.total_weight(g) for p in enumerate_simple_paths(g, v, tree.destination)
            )
            if tree.path_from(v).total_weight(g) != best:
                return False
        return True
    if criterion is TreeCriterion.MAXIMIN_ALL:
        for v in range(g.n):
            if v == tree.destination:
                continue
            best = max(
                p.bottleneck(g) for p in enumerate_simple_paths(g, v, tree.destination)
            )
            if tree.path_from(v).bottleneck(g) != best:
                return False
        return True
    raise InvariantViolation(f"unknown criterion {criterion!r}")
