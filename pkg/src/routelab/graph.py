"""Connected weighted graphs, destination-rooted trees, and simple paths.

Weights are exact rationals (fractions.Fraction) throughout; nothing in the
package ever rounds through floating point. Graphs and trees are immutable,
so every transformation returns a fresh object.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import (
    BridgeRemoval,
    ForeignTree,
    InvariantViolation,
    NonPositiveScale,
    ParseError,
    UnknownEdge,
)

EdgeKey = tuple[int, int]
WeightLike = Union[Fraction, int, str]


def as_weight(value: WeightLike) -> Fraction:
    """Coerce ints, Fractions, and strings like '3.7' or '-1/2' to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvariantViolation("weights must be rational numbers, not booleans")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvariantViolation(f"cannot read weight {value!r}: {exc}") from exc
    raise InvariantViolation(f"cannot use {type(value).__name__} as a weight")


def format_weight(w: Fraction) -> str:
    """Canonical text form: '5' for integers, 'p/q' otherwise."""
    return str(w)


def edge_key(u: int, v: int) -> EdgeKey:
    """Normalized undirected edge identity: endpoints sorted ascending."""
    if u == v:
        raise InvariantViolation(f"self-loop at node {u}")
    return (u, v) if u < v else (v, u)


class WeightedGraph:
    """A connected simple undirected graph with rational edge weights.

    Immutable after construction. Edges are identified by their sorted
    endpoint pair, and all iteration orders are lexicographic so that every
    downstream computation is independent of input ordering.
    """

    __slots__ = ("n", "_weights", "_adjacency", "_edges")

    def __init__(self, n: int, edges: Union[Mapping[EdgeKey, WeightLike], Iterable[tuple]]):
        if not isinstance(n, int) or n < 1:
            raise InvariantViolation(f"node count must be a positive integer, got {n!r}")
        if isinstance(edges, Mapping):
            triples = [(u, v, w) for (u, v), w in edges.items()]
        else:
            triples = [tuple(t) for t in edges]
        weights: dict[EdgeKey, Fraction] = {}
        for triple in triples:
            if len(triple) != 3:
                raise InvariantViolation(f"edge entries need (u, v, weight), got {triple!r}")
            u, v, w = triple
            if not isinstance(u, int) or not isinstance(v, int):
                raise InvariantViolation(f"edge endpoints must be integers, got ({u!r}, {v!r})")
            if not (0 <= u < n and 0 <= v < n):
                raise InvariantViolation(f"edge ({u}, {v}) leaves the node range [0, {n})")
            key = edge_key(u, v)
            if key in weights:
                raise InvariantViolation(f"parallel edge {key}")
            weights[key] = as_weight(w)
        self.n = n
        self._weights = {k: weights[k] for k in sorted(weights)}
        adjacency: list[list[int]] = [[] for _ in range(n)]
        for u, v in self._weights:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        self._edges = tuple(self._weights)
        if not self._is_connected():
            raise InvariantViolation("graph is not connected")

    def _is_connected(self) -> bool:
        seen = bytearray(self.n)
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v in self._adjacency[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    queue.append(v)
        return count == self.n

    @property
    def edges(self) -> tuple[EdgeKey, ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def weight(self, e: EdgeKey) -> Fraction:
        try:
            return self._weights[e]
        except KeyError:
            raise UnknownEdge(f"edge {e} not in graph") from None

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and edge_key(u, v) in self._weights

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def weight_map(self) -> dict[EdgeKey, Fraction]:
        return dict(self._weights)

    def weighted_edges(self) -> tuple[tuple[EdgeKey, Fraction], ...]:
        return tuple(self._weights.items())

    def max_abs_weight(self) -> Fraction:
        return max((abs(w) for w in self._weights.values()), default=Fraction(0))

    def min_weight(self) -> Fraction:
        return min(self._weights.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and self._weights == other._weights

    def __hash__(self):
        return hash((self.n, tuple(self._weights.items())))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Path:
    """A simple path as an ordered edge sequence from source to destination.

    The empty edge sequence is the trivial path, allowed only when source and
    destination coincide.
    """

    source: int
    destination: int
    edges: tuple[EdgeKey, ...]

    def __post_init__(self):
        if not self.edges:
            if self.source != self.destination:
                raise InvariantViolation("empty path needs source == destination")
            return
        seen = {self.source}
        current = self.source
        for e in self.edges:
            u, v = e
            if edge_key(u, v) != e:
                raise InvariantViolation(f"path edge {e} is not normalized")
            if current == u:
                current = v
            elif current == v:
                current = u
            else:
                raise InvariantViolation(f"edge {e} does not continue the path at node {current}")
            if current in seen:
                raise InvariantViolation(f"path revisits node {current}")
            seen.add(current)
        if current != self.destination:
            raise InvariantViolation(f"path ends at {current}, not {self.destination}")

    @classmethod
    def from_nodes(cls, nodes: Iterable[int]) -> "Path":
        seq = list(nodes)
        if not seq:
            raise InvariantViolation("a path needs at least one node")
        edges = tuple(edge_key(a, b) for a, b in zip(seq, seq[1:]))
        return cls(seq[0], seq[-1], edges)

    def nodes(self) -> tuple[int, ...]:
        out = [self.source]
        current = self.source
        for u, v in self.edges:
            current = v if current == u else u
            out.append(current)
        return tuple(out)

    def total_weight(self, g: WeightedGraph) -> Fraction:
        return sum((g.weight(e) for e in self.edges), Fraction(0))

    def bottleneck(self, g: WeightedGraph) -> Fraction:
        """Minimum edge weight along the path. Undefined for the trivial path."""
        if not self.edges:
            raise InvariantViolation("trivial path has no bottleneck")
        return min(g.weight(e) for e in self.edges)

    def max_weight(self, g: WeightedGraph) -> Fraction:
        if not self.edges:
            raise InvariantViolation("trivial path has no maximum edge")
        return max(g.weight(e) for e in self.edges)


class RoutingTree:
    """A spanning tree of a graph, oriented toward one destination node.

    Every node other than the destination has a unique first hop, and
    path_from walks the unique tree path to the destination.
    """

    __slots__ = ("graph", "destination", "edge_set", "_parent")

    def __init__(self, graph: WeightedGraph, destination: int, edges: Iterable[EdgeKey]):
        if not (0 <= destination < graph.n):
            raise InvariantViolation(f"destination {destination} outside [0, {graph.n})")
        edge_set = frozenset(edges)
        for e in edge_set:
            if e not in graph._weights:
                raise InvariantViolation(f"tree edge {e} not in graph")
        if len(edge_set) != graph.n - 1:
            raise InvariantViolation(
                f"spanning tree needs {graph.n - 1} edges, got {len(edge_set)}"
            )
        adjacency: dict[int, list[int]] = {v: [] for v in range(graph.n)}
        for u, v in edge_set:
            adjacency[u].append(v)
            adjacency[v].append(u)
        parent: dict[int, int | None] = {destination: None}
        queue = deque([destination])
        while queue:
            u = queue.popleft()
            for v in sorted(adjacency[u]):
                if v not in parent:
                    parent[v] = u
                    queue.append(v)
        if len(parent) != graph.n:
            raise InvariantViolation("tree edges do not span the graph")
        self.graph = graph
        self.destination = destination
        self.edge_set = edge_set
        self._parent = parent

    def parent_of(self, v: int) -> int | None:
        return self._parent[v]

    def first_hop(self, v: int) -> EdgeKey:
        if v == self.destination:
            raise InvariantViolation("destination has no first hop")
        return edge_key(v, self._parent[v])

    def path_from(self, v: int) -> Path:
        nodes = [v]
        while nodes[-1] != self.destination:
            nodes.append(self._parent[nodes[-1]])
        return Path.from_nodes(nodes)

    def sorted_edges(self) -> tuple[EdgeKey, ...]:
        return tuple(sorted(self.edge_set))

    def total_weight(self) -> Fraction:
        return sum((self.graph.weight(e) for e in self.edge_set), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RoutingTree):
            return NotImplemented
        return (
            self.graph == other.graph
            and self.destination == other.destination
            and self.edge_set == other.edge_set
        )

    def __hash__(self):
        return hash((self.graph, self.destination, self.edge_set))

    def __repr__(self) -> str:
        return f"RoutingTree(destination={self.destination}, edges={sorted(self.edge_set)})"


def is_bridge(g: WeightedGraph, e: EdgeKey) -> bool:
    """True when removing e disconnects the graph."""
    if e not in g._weights:
        raise UnknownEdge(f"edge {e} not in graph")
    u, v = e
    seen = {u}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b in g.neighbors(a):
            if (a, b) in (e, (e[1], e[0])) or edge_key(a, b) == e:
                continue
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return v not in seen


def remove_edge(g: WeightedGraph, e: EdgeKey) -> WeightedGraph:
    """Copy of g without edge e. Refuses to disconnect the graph."""
    if e not in g._weights:
        raise UnknownEdge(f"edge {e} not in graph")
    if is_bridge(g, e):
        raise BridgeRemoval(f"edge {e} is a bridge")
    weights = g.weight_map()
    del weights[e]
    return WeightedGraph(g.n, weights)


def transform_weights(g: WeightedGraph, scale: WeightLike = 1, shift: WeightLike = 0) -> WeightedGraph:
    """Map every weight w to scale * w + shift. The scale must be positive."""
    scale = as_weight(scale)
    shift = as_weight(shift)
    if scale <= 0:
        raise NonPositiveScale(f"scale must be positive, got {scale}")
    return WeightedGraph(g.n, {e: scale * w + shift for e, w in g.weighted_edges()})


def set_edge_weight(g: WeightedGraph, e: EdgeKey, w: WeightLike) -> WeightedGraph:
    """Copy of g with the weight of one existing edge replaced."""
    if e not in g._weights:
        raise UnknownEdge(f"edge {e} not in graph")
    weights = g.weight_map()
    weights[e] = as_weight(w)
    return WeightedGraph(g.n, weights)


def iter_simple_paths(g: WeightedGraph, source: int, destination: int) -> Iterator[tuple[int, ...]]:
    """Yield every simple path source -> destination as a node tuple.

    Depth-first order with neighbors visited ascending, so the enumeration
    order is deterministic. Exponential in the worst case; callers enforce
    their own size bounds.
    """
    if not (0 <= source < g.n and 0 <= destination < g.n):
        raise InvariantViolation("path endpoints outside the node range")
    if source == destination:
        yield (source,)
        return
    path = [source]
    on_path = {source}
    # Stack of neighbor iterators, mirrors the recursion of a plain DFS.
    stack: list[Iterator[int]] = [iter(g.neighbors(source))]
    while stack:
        try:
            nxt = next(stack[-1])
        except StopIteration:
            stack.pop()
            on_path.discard(path.pop())
            continue
        if nxt in on_path:
            continue
        if nxt == destination:
            yield tuple(path) + (destination,)
            continue
        path.append(nxt)
        on_path.add(nxt)
        stack.append(iter(g.neighbors(nxt)))


# --- text format -----------------------------------------------------------
#
# A graph file is line oriented:
#   '#' starts a comment line
#   header:  p route <n> <m> <destination>
#   then exactly m lines:  e <u> <v> <weight>
# Weights accept decimal ('3.7', read exactly) or rational ('37/10') forms.


def parse_graph(text: str) -> tuple[WeightedGraph, int]:
    """Read the text format and return (graph, destination)."""
    header: tuple[int, int, int] | None = None
    triples: list[tuple[int, int, Fraction]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if fields[0] != "p":
                raise ParseError(line_no, f"expected the 'p route' header, got {line!r}")
            if len(fields) != 5 or fields[1] != "route":
                raise ParseError(line_no, "header must be 'p route <n> <m> <destination>'")
            try:
                n, m, dest = int(fields[2]), int(fields[3]), int(fields[4])
            except ValueError:
                raise ParseError(line_no, "header fields must be integers") from None
            if n < 1 or m < 0:
                raise ParseError(line_no, f"invalid sizes n={n}, m={m}")
            header = (n, m, dest)
            continue
        if fields[0] != "e":
            raise ParseError(line_no, f"expected an 'e' edge line, got {line!r}")
        if len(fields) != 4:
            raise ParseError(line_no, "edge line must be 'e <u> <v> <weight>'")
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError(line_no, "edge endpoints must be integers") from None
        try:
            w = Fraction(fields[3])
        except (ValueError, ZeroDivisionError):
            raise ParseError(line_no, f"cannot read weight {fields[3]!r}") from None
        if len(triples) == header[1]:
            raise ParseError(line_no, f"more than the declared {header[1]} edges")
        triples.append((u, v, w))
    if header is None:
        raise ParseError(1, "missing 'p route' header")
    n, m, dest = header
    if len(triples) != m:
        raise ParseError(1, f"declared {m} edges but found {len(triples)}")
    if not (0 <= dest < n):
        raise InvariantViolation(f"destination {dest} outside [0, {n})")
    return WeightedGraph(n, triples), dest


def serialize_graph(g: WeightedGraph, destination: int) -> str:
    """Inverse of parse_graph: canonical text with edges in lexicographic order."""
    if not (0 <= destination < g.n):
        raise InvariantViolation(f"destination {destination} outside [0, {g.n})")
    lines = [f"p route {g.n} {g.m} {destination}"]
    for (u, v), w in g.weighted_edges():
        lines.append(f"e {u} {v} {format_weight(w)}")
    return "\n".join(lines) + "\n"


def emit_dot(g: WeightedGraph, tree: RoutingTree | None = None) -> str:
    """Graphviz text for the graph; tree edges bold, destination double-circled."""
    if tree is not None and tree.graph != g:
        raise ForeignTree("tree belongs to a different graph")
    lines = ["graph routing {", "  node [shape=circle];"]
    if tree is not None:
        lines.append(f"  {tree.destination} [shape=doublecircle];")
    for (u, v), w in g.weighted_edges():
        attrs = [f'label="{format_weight(w)}"']
        if tree is not None and (u, v) in tree.edge_set:
            attrs.append("style=bold")
            attrs.append("penwidth=2")
        lines.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
