from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .errors import BadSignError, LengthMismatchError
from .model import (
    EdgeId,
    Incidence,
    OrientedHypergraph,
    VertexId,
    check_sign,
)


@dataclass(frozen=True)
class SwitchingFunction:
    """A vertex-switching function zeta: V -> {+1, -1}."""

    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(self.signs))
        for sign in self.signs:
            check_sign(sign)

    def __len__(self) -> int:
        return len(self.signs)

    def __getitem__(self, vertex: VertexId) -> int:
        return self.signs[vertex]

    def __mul__(self, other: "SwitchingFunction") -> "SwitchingFunction":
        if len(self) != len(other):
            raise LengthMismatchError(
                f"Cannot compose switching functions of lengths {len(self)} and {len(other)}"
            )
        return SwitchingFunction(tuple(a * b for a, b in zip(self.signs, other.signs)))

    @classmethod
    def identity(cls, n: int) -> "SwitchingFunction":
        return cls((1,) * n)

    @classmethod
    def parse(cls, text: str) -> "SwitchingFunction":
        """Parse ``"+,-,+"`` (also accepts ``+1``, ``-1``, ``1``)."""
        tokens = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}
        signs = []
        for raw in text.split(","):
            token = raw.strip()
            if token not in tokens:
                raise BadSignError(f"Invalid switching sign {token!r}")
            signs.append(tokens[token])
        return cls(tuple(signs))


@dataclass(frozen=True)
class Deletion:
    graph: OrientedHypergraph
    index_map: Mapping[int, int]


def switch(graph: OrientedHypergraph, zeta: SwitchingFunction) -> OrientedHypergraph:
    if len(zeta) != graph.n:
        raise LengthMismatchError(
            f"Switching function has length {len(zeta)}, graph has {graph.n} vertices"
        )
    return OrientedHypergraph(
        n=graph.n,
        m=graph.m,
        incidences=tuple(
            Incidence(inc.vertex, inc.edge, zeta[inc.vertex] * inc.sign)
            for inc in graph.incidences
        ),
        vertex_labels=graph.vertex_labels,
        edge_labels=graph.edge_labels,
    )


def dual(graph: OrientedHypergraph) -> OrientedHypergraph:
    """Incidence dual: vertices and edges swap roles, signs are kept."""
    return OrientedHypergraph(
        n=graph.m,
        m=graph.n,
        incidences=tuple(
            Incidence(vertex=inc.edge, edge=inc.vertex, sign=inc.sign)
            for inc in graph.incidences
        ),
        vertex_labels=graph.edge_labels,
        edge_labels=graph.vertex_labels,
    )


def _dense_map(count: int, removed: int) -> dict[int, int]:
    return {
        old: (old if old < removed else old - 1)
        for old in range(count)
        if old != removed
    }


def weak_delete_vertex(graph: OrientedHypergraph, vertex: VertexId) -> Deletion:
    """Remove a vertex and its incidences; every edge survives, possibly shrunk."""
    graph.check_vertex(vertex)
    index_map = _dense_map(graph.n, vertex)
    labels = None
    if graph.vertex_labels is not None:
        labels = tuple(
            label for i, label in enumerate(graph.vertex_labels) if i != vertex
        )

    remaining = OrientedHypergraph(
        n=graph.n - 1,
        m=graph.m,
        incidences=tuple(
            Incidence(index_map[inc.vertex], inc.edge, inc.sign)
            for inc in graph.incidences
            if inc.vertex != vertex
        ),
        vertex_labels=labels,
        edge_labels=graph.edge_labels,
    )
    return Deletion(graph=remaining, index_map=index_map)


def weak_delete_edge(graph: OrientedHypergraph, edge: EdgeId) -> Deletion:
    graph.check_edge(edge)
    index_map = _dense_map(graph.m, edge)
    labels = None
    if graph.edge_labels is not None:
        labels = tuple(
            label for i, label in enumerate(graph.edge_labels) if i != edge
        )

    remaining = OrientedHypergraph(
        n=graph.n,
        m=graph.m - 1,
        incidences=tuple(
            Incidence(inc.vertex, index_map[inc.edge], inc.sign)
            for inc in graph.incidences
            if inc.edge != edge
        ),
        vertex_labels=graph.vertex_labels,
        edge_labels=labels,
    )
    return Deletion(graph=remaining, index_map=index_map)


def orient_uniformly(
    graph: OrientedHypergraph, edge_signs: Sequence[int]
) -> OrientedHypergraph:
    """Give every incidence of edge j the sign ``edge_signs[j]``.

    Ranging over all sign vectors yields exactly the uniformly oriented
    hypergraphs on the same underlying hypergraph.
    """
    if len(edge_signs) != graph.m:
        raise LengthMismatchError(
            f"Expected {graph.m} edge signs, got {len(edge_signs)}"
        )
    return OrientedHypergraph(
        n=graph.n,
        m=graph.m,
        incidences=tuple(
            Incidence(inc.vertex, inc.edge, edge_signs[inc.edge])
            for inc in graph.incidences
        ),
        vertex_labels=graph.vertex_labels,
        edge_labels=graph.edge_labels,
    )


def plus_orientation(graph: OrientedHypergraph) -> OrientedHypergraph:
    return orient_uniformly(graph, (1,) * graph.m)


def minus_orientation(graph: OrientedHypergraph) -> OrientedHypergraph:
    return orient_uniformly(graph, (-1,) * graph.m)
