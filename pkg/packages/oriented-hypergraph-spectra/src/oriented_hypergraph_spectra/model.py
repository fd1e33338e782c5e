from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

from .errors import (
    BadSignError,
    DuplicateIncidenceError,
    DuplicateLabelError,
    IndexOutOfRangeError,
    LengthMismatchError,
)

VertexId = int
EdgeId = int

SIGNS = (1, -1)


def check_sign(sign: int) -> int:
    # bool is an int subclass; True must not pass as +1
    if isinstance(sign, bool) or sign not in SIGNS:
        raise BadSignError(f"Incidence sign must be +1 or -1, got {sign!r}")
    return sign


@dataclass(frozen=True)
class Incidence:
    vertex: VertexId
    edge: EdgeId
    sign: int

    def __post_init__(self):
        check_sign(self.sign)

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.edge, self.vertex)

    def to_tuple(self) -> tuple[int, int, int]:
        return (self.vertex, self.edge, self.sign)


@dataclass(frozen=True)
class Adjacency:
    edge: EdgeId
    lo: VertexId
    hi: VertexId
    sign: int

    def contains(self, vertex: VertexId) -> bool:
        return vertex == self.lo or vertex == self.hi


@dataclass(frozen=True)
class VertexStats:
    degree: int
    adj_total: int
    adj_pos: int
    adj_neg: int
    neighbor_count: int

    @property
    def adj_net(self) -> int:
        return self.adj_pos - self.adj_neg


def _check_labels(labels: tuple[str, ...] | None, count: int, kind: str) -> None:
    if labels is None:
        return
    if len(labels) != count:
        raise LengthMismatchError(
            f"Expected {count} {kind} labels, got {len(labels)}"
        )
    if len(set(labels)) != len(labels):
        raise DuplicateLabelError(f"{kind.capitalize()} labels must be unique")


@dataclass(frozen=True)
class OrientedHypergraph:
    """A simple oriented hypergraph G = (H, sigma).

    Vertices and edges are the dense indices ``0..n-1`` and ``0..m-1``. The
    incidence tuple is kept sorted by (edge, vertex), so two graphs with the
    same incidences compare equal regardless of construction order. Labels are
    optional and take part in equality.
    """

    n: int
    m: int
    incidences: tuple[Incidence, ...]
    vertex_labels: tuple[str, ...] | None = None
    edge_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise IndexOutOfRangeError(
                f"Vertex and edge counts must be non-negative, got n={self.n}, m={self.m}"
            )

        seen: set[tuple[int, int]] = set()
        for inc in self.incidences:
            if not 0 <= inc.vertex < self.n:
                raise IndexOutOfRangeError(
                    f"Vertex index {inc.vertex} out of range for n={self.n}"
                )
            if not 0 <= inc.edge < self.m:
                raise IndexOutOfRangeError(
                    f"Edge index {inc.edge} out of range for m={self.m}"
                )
            if inc.sort_key in seen:
                raise DuplicateIncidenceError(
                    f"Vertex {inc.vertex} is incident to edge {inc.edge} more than once"
                )
            seen.add(inc.sort_key)

        _check_labels(self.vertex_labels, self.n, "vertex")
        _check_labels(self.edge_labels, self.m, "edge")

        object.__setattr__(
            self,
            "incidences",
            tuple(sorted(self.incidences, key=lambda inc: inc.sort_key)),
        )

    @cached_property
    def _by_edge(self) -> tuple[tuple[Incidence, ...], ...]:
        members: list[list[Incidence]] = [[] for _ in range(self.m)]
        for inc in self.incidences:
            members[inc.edge].append(inc)
        return tuple(tuple(group) for group in members)

    @cached_property
    def _by_vertex(self) -> tuple[tuple[Incidence, ...], ...]:
        members: list[list[Incidence]] = [[] for _ in range(self.n)]
        for inc in self.incidences:
            members[inc.vertex].append(inc)
        return tuple(tuple(group) for group in members)

    @cached_property
    def _sign_lookup(self) -> dict[tuple[int, int], int]:
        return {(inc.vertex, inc.edge): inc.sign for inc in self.incidences}

    def check_vertex(self, vertex: VertexId) -> None:
        if not 0 <= vertex < self.n:
            raise IndexOutOfRangeError(
                f"Vertex index {vertex} out of range for n={self.n}"
            )

    def check_edge(self, edge: EdgeId) -> None:
        if not 0 <= edge < self.m:
            raise IndexOutOfRangeError(f"Edge index {edge} out of range for m={self.m}")

    def vertex_label(self, vertex: VertexId) -> str:
        self.check_vertex(vertex)
        if self.vertex_labels is None:
            return f"v{vertex}"
        return self.vertex_labels[vertex]

    def edge_label(self, edge: EdgeId) -> str:
        self.check_edge(edge)
        if self.edge_labels is None:
            return f"e{edge}"
        return self.edge_labels[edge]

    def edge_members(self, edge: EdgeId) -> tuple[Incidence, ...]:
        self.check_edge(edge)
        return self._by_edge[edge]

    def vertex_incidences(self, vertex: VertexId) -> tuple[Incidence, ...]:
        self.check_vertex(vertex)
        return self._by_vertex[vertex]

    def sign(self, vertex: VertexId, edge: EdgeId) -> int:
        """sigma(v, e), or 0 when v is not incident to e."""
        return self._sign_lookup.get((vertex, edge), 0)

    def degree(self, vertex: VertexId) -> int:
        return len(self.vertex_incidences(vertex))

    def edge_size(self, edge: EdgeId) -> int:
        return len(self.edge_members(edge))

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(group) for group in self._by_vertex)

    def edge_sizes(self) -> tuple[int, ...]:
        return tuple(len(group) for group in self._by_edge)

    def neighbors(self, vertex: VertexId) -> frozenset[VertexId]:
        found: set[int] = set()
        for inc in self.vertex_incidences(vertex):
            found.update(other.vertex for other in self._by_edge[inc.edge])
        found.discard(vertex)
        return frozenset(found)

    def underlying(self) -> frozenset[tuple[VertexId, EdgeId]]:
        return frozenset((inc.vertex, inc.edge) for inc in self.incidences)

    def same_underlying(self, other: "OrientedHypergraph") -> bool:
        return (
            self.n == other.n
            and self.m == other.m
            and self.underlying() == other.underlying()
        )

    def same_orientation(self, other: "OrientedHypergraph") -> bool:
        """Structural equality: counts and signed incidences, labels ignored."""
        return (
            self.n == other.n
            and self.m == other.m
            and self.incidences == other.incidences
        )


def build(
    n: int,
    m: int,
    signed_incidences: Iterable[tuple[int, int, int]],
    vertex_labels: Sequence[str] | None = None,
    edge_labels: Sequence[str] | None = None,
) -> OrientedHypergraph:
    incidences = []
    for vertex, edge, sign in signed_incidences:
        if not 0 <= vertex < n:
            raise IndexOutOfRangeError(f"Vertex index {vertex} out of range for n={n}")
        if not 0 <= edge < m:
            raise IndexOutOfRangeError(f"Edge index {edge} out of range for m={m}")
        incidences.append(Incidence(vertex=vertex, edge=edge, sign=sign))

    return OrientedHypergraph(
        n=n,
        m=m,
        incidences=tuple(incidences),
        vertex_labels=tuple(vertex_labels) if vertex_labels is not None else None,
        edge_labels=tuple(edge_labels) if edge_labels is not None else None,
    )


def from_edges(
    n: int, edges: Sequence[Sequence[tuple[int, int]]]
) -> OrientedHypergraph:
    """Build from per-edge ``(vertex, sign)`` lists; edge j is ``edges[j]``."""
    triples = [
        (vertex, edge, sign)
        for edge, members in enumerate(edges)
        for vertex, sign in members
    ]
    return build(n, len(edges), triples)


@lru_cache(maxsize=1024)
def _adjacencies(graph: OrientedHypergraph) -> tuple[Adjacency, ...]:
    result = []
    for edge in range(graph.m):
        for a, b in combinations(graph.edge_members(edge), 2):
            result.append(
                Adjacency(edge=edge, lo=a.vertex, hi=b.vertex, sign=-a.sign * b.sign)
            )
    return tuple(result)


def adjacencies(graph: OrientedHypergraph) -> tuple[Adjacency, ...]:
    """The adjacency set, one record per (edge, unordered vertex pair).

    Ordered by edge, then lo, then hi; edge members are already vertex-sorted
    so ``combinations`` yields lo < hi.
    """
    return _adjacencies(graph)


def vertex_stats(graph: OrientedHypergraph, vertex: VertexId) -> VertexStats:
    graph.check_vertex(vertex)
    pos = neg = 0
    for adjacency in adjacencies(graph):
        if adjacency.contains(vertex):
            if adjacency.sign > 0:
                pos += 1
            else:
                neg += 1
    return VertexStats(
        degree=graph.degree(vertex),
        adj_total=pos + neg,
        adj_pos=pos,
        adj_neg=neg,
        neighbor_count=len(graph.neighbors(vertex)),
    )


def all_vertex_stats(graph: OrientedHypergraph) -> tuple[VertexStats, ...]:
    return tuple(vertex_stats(graph, v) for v in range(graph.n))


def is_linear(graph: OrientedHypergraph) -> bool:
    vertex_sets = [
        frozenset(inc.vertex for inc in graph.edge_members(e)) for e in range(graph.m)
    ]
    return all(len(a & b) <= 1 for a, b in combinations(vertex_sets, 2))


def is_k_uniform(graph: OrientedHypergraph, k: int) -> bool:
    return all(size == k for size in graph.edge_sizes())


def is_uniformly_oriented(graph: OrientedHypergraph) -> bool:
    return all(
        len({inc.sign for inc in graph.edge_members(e)}) <= 1 for e in range(graph.m)
    )


def max_degree(graph: OrientedHypergraph) -> int:
    return max(graph.degrees(), default=0)


def min_edge_size(graph: OrientedHypergraph) -> int:
    # 0 for an edgeless graph; callers needing an edge check m themselves
    return min(graph.edge_sizes(), default=0)
