"""Executable verdicts for the eigenvalue bounds and interlacing theorems.

Every public ``*_bound`` / ``*_interlacing`` function returns a
:class:`BoundReport`. The inequalities are theorems, so a report with
``holds=False`` on a valid input points at a bug in this package.
"""

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, pairwise
from typing import NamedTuple

import numpy as np
from loguru import logger

from .errors import (
    BadKError,
    DeletionBudgetError,
    EmptyVertexSetError,
    InternalIdentityError,
    LastVertexError,
    NoEdgesError,
    NoStarCenterError,
    NotLinearError,
    SmallEdgePresentError,
    UnknownBoundError,
)
from .linalg import Spectrum, SymmetricMatrix
from .matrices import adjacency_matrix, laplacian_matrix
from .model import (
    EdgeId,
    OrientedHypergraph,
    VertexId,
    all_vertex_stats,
    is_linear,
    is_uniformly_oriented,
    min_edge_size,
)
from .spectra import adjacency_spectrum, laplacian_spectrum, signless_laplacian_spectrum
from .transform import weak_delete_edge, weak_delete_vertex

VERDICT_TOLERANCE = 1e-8
DEFAULT_MOMENT_ORDERS = (1, 2, 3)
DEFAULT_MAX_DELETIONS = 64
# fixed seed so sampled interlacing checks are reproducible
DELETION_SAMPLE_SEED = 0


class Relation(str, Enum):
    LE = "<="
    INTERVAL = "interval"
    INTERLACING = "interlacing"
    IFF = "iff"
    CHAIN = "chain"


@dataclass(frozen=True)
class BoundReport:
    """Verdict of one bound on one hypergraph.

    ``lhs <= rhs`` for LE and CHAIN reports; for INTERVAL reports ``lhs`` and
    ``rhs`` are the interval endpoints and ``value`` the middle term. Skipped
    reports carry no numbers and count as holding.
    """

    name: str
    relation: Relation
    lhs: float | None
    rhs: float | None
    slack: float | None
    holds: bool
    context: str = ""
    value: float | None = None
    skipped: bool = False
    reason: str | None = None

    @classmethod
    def evaluate(
        cls,
        name: str,
        relation: Relation,
        lhs: float,
        rhs: float,
        slack: float,
        context: str = "",
        value: float | None = None,
    ) -> "BoundReport":
        scale = max(1.0, abs(lhs), abs(rhs))
        return cls(
            name=name,
            relation=relation,
            lhs=float(lhs),
            rhs=float(rhs),
            slack=float(slack),
            holds=slack >= -VERDICT_TOLERANCE * scale,
            context=context,
            value=None if value is None else float(value),
        )

    @classmethod
    def skip(
        cls, name: str, context: str, reason: str, relation: Relation | None = None
    ) -> "BoundReport":
        return cls(
            name=name,
            relation=relation or _RELATIONS[name],
            lhs=None,
            rhs=None,
            slack=None,
            holds=True,
            context=context,
            skipped=True,
            reason=reason,
        )

    @property
    def sort_key(self) -> tuple[str, str]:
        return (self.name, self.context)


def all_hold(reports: Iterable[BoundReport]) -> bool:
    return all(report.holds for report in reports)


def _top(spectrum: Spectrum) -> float:
    return spectrum.largest if spectrum.n else 0.0


def _bottom(spectrum: Spectrum) -> float:
    return spectrum.smallest if spectrum.n else 0.0


def _rho(spectrum: Spectrum) -> float:
    return max(abs(_top(spectrum)), abs(_bottom(spectrum)))


def _interval(
    name: str, lo: float, value: float, hi: float, context: str = ""
) -> BoundReport:
    return BoundReport.evaluate(
        name,
        Relation.INTERVAL,
        lhs=lo,
        rhs=hi,
        slack=min(value - lo, hi - value),
        context=context,
        value=value,
    )


def _moment(matrix: SymmetricMatrix, k: int) -> int:
    """1^T S^k 1 in exact integer arithmetic."""
    power = np.linalg.matrix_power(matrix.values.astype(object), k)
    return int(power.sum())


def _require_vertices(graph: OrientedHypergraph) -> None:
    if graph.n == 0:
        raise EmptyVertexSetError("Bound needs at least one vertex")


def _require_k(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise BadKError(f"Moment order must be a positive integer, got {k!r}")


def _require_linear(graph: OrientedHypergraph) -> None:
    if not is_linear(graph):
        raise NotLinearError("Bound requires a linear hypergraph")


def _require_deletable_vertex(graph: OrientedHypergraph, vertex: VertexId) -> None:
    if graph.n < 2:
        raise LastVertexError(
            f"Vertex interlacing needs at least two vertices, graph has {graph.n}"
        )
    graph.check_vertex(vertex)


def _require_delta_preconditions(graph: OrientedHypergraph) -> None:
    if graph.m == 0:
        raise NoEdgesError("The Delta+1 bound needs at least one edge")
    if min_edge_size(graph) < 2:
        raise SmallEdgePresentError("The Delta+1 bound needs every edge of size >= 2")


# Adjacency bounds


def adj_radius_bound(graph: OrientedHypergraph) -> BoundReport:
    """rho(A(G)) <= max_i a(v_i)."""
    rho = _rho(adjacency_spectrum(graph))
    bound = max((stats.adj_total for stats in all_vertex_stats(graph)), default=0)
    return BoundReport.evaluate(
        "adj_radius_bound", Relation.LE, lhs=rho, rhs=bound, slack=bound - rho
    )


def adj_mean_net_bound(graph: OrientedHypergraph) -> BoundReport:
    """lambda_n(A) <= mean net adjacency <= lambda_1(A)."""
    _require_vertices(graph)
    spectrum = adjacency_spectrum(graph)
    mean = sum(stats.adj_net for stats in all_vertex_stats(graph)) / graph.n
    return _interval(
        "adj_mean_net_bound", spectrum.smallest, mean, spectrum.largest
    )


def adj_moment_bound(graph: OrientedHypergraph, k: int) -> BoundReport:
    """Rayleigh quotient of A^k at the all-ones vector.

    Odd k: lambda_n^k <= 1^T A^k 1 / n <= lambda_1^k.
    Even k: only the upper side 1^T A^k 1 / n <= rho(A)^k is asserted.
    """
    _require_k(k)
    _require_vertices(graph)
    spectrum = adjacency_spectrum(graph)
    value = _moment(adjacency_matrix(graph), k) / graph.n
    context = f"k={k}"
    if k % 2:
        return _interval(
            "adj_moment_bound",
            spectrum.smallest**k,
            value,
            spectrum.largest**k,
            context=context,
        )
    top = _rho(spectrum) ** k
    return BoundReport.evaluate(
        "adj_moment_bound",
        Relation.LE,
        lhs=value,
        rhs=top,
        slack=top - value,
        context=context,
        value=value,
    )


def _interlacing_slack(parent: Spectrum, child: Spectrum, same_order: bool) -> float:
    gaps = []
    for k in range(1, parent.n):
        gaps.append(child[k - 1] - parent[k])
        gaps.append(parent[k - 1] - child[k - 1])
    if same_order and parent.n:
        gaps.append(parent[-1] - child[-1])
    return min(gaps, default=0.0)


def _interlacing_report(
    name: str, parent: Spectrum, child: Spectrum, same_order: bool, context: str
) -> BoundReport:
    return BoundReport.evaluate(
        name,
        Relation.INTERLACING,
        lhs=_rho(child),
        rhs=_rho(parent),
        slack=_interlacing_slack(parent, child, same_order),
        context=context,
    )


def adj_vertex_interlacing(graph: OrientedHypergraph, vertex: VertexId) -> BoundReport:
    """lambda_{k+1}(A(G)) <= lambda_k(A(G \\ v)) <= lambda_k(A(G)), k = 1..n-1."""
    _require_deletable_vertex(graph, vertex)
    child = weak_delete_vertex(graph, vertex).graph
    return _interlacing_report(
        "adj_vertex_interlacing",
        adjacency_spectrum(graph),
        adjacency_spectrum(child),
        same_order=False,
        context=f"delete vertex {graph.vertex_label(vertex)}",
    )


# Laplacian bounds


def lap_vertex_interlacing(graph: OrientedHypergraph, vertex: VertexId) -> BoundReport:
    _require_deletable_vertex(graph, vertex)
    child = weak_delete_vertex(graph, vertex).graph
    return _interlacing_report(
        "lap_vertex_interlacing",
        laplacian_spectrum(graph),
        laplacian_spectrum(child),
        same_order=False,
        context=f"delete vertex {graph.vertex_label(vertex)}",
    )


def lap_edge_interlacing(graph: OrientedHypergraph, edge: EdgeId) -> BoundReport:
    """L(G \\ e) = L(G) - h_e h_e^T keeps order n, so lambda_n is compared too."""
    if graph.m == 0:
        raise NoEdgesError("Edge interlacing needs at least one edge")
    graph.check_edge(edge)
    child = weak_delete_edge(graph, edge).graph
    return _interlacing_report(
        "lap_edge_interlacing",
        laplacian_spectrum(graph),
        laplacian_spectrum(child),
        same_order=True,
        context=f"delete edge {graph.edge_label(edge)}",
    )


def lap_gersgorin_bound(graph: OrientedHypergraph) -> BoundReport:
    top = _top(laplacian_spectrum(graph))
    bound = max(
        (stats.degree + stats.adj_total for stats in all_vertex_stats(graph)),
        default=0,
    )
    return BoundReport.evaluate(
        "lap_gersgorin_bound", Relation.LE, lhs=top, rhs=bound, slack=bound - top
    )


def lap_uniform_upper_bound(graph: OrientedHypergraph) -> BoundReport:
    """lambda_1(L(G)) <= lambda_1(L(U)) for any uniform orientation U of a linear G."""
    _require_linear(graph)
    top = _top(laplacian_spectrum(graph))
    uniform_top = _top(signless_laplacian_spectrum(graph))
    return BoundReport.evaluate(
        "lap_uniform_upper_bound",
        Relation.LE,
        lhs=top,
        rhs=uniform_top,
        slack=uniform_top - top,
    )


def lap_nonneg_iff_uniform(graph: OrientedHypergraph) -> BoundReport:
    """L(G) >= 0 entrywise exactly when every edge is uniformly oriented.

    lhs and rhs are the two truth values as 1.0/0.0; slack is -1 on mismatch.
    """
    _require_linear(graph)
    nonnegative = bool(np.all(laplacian_matrix(graph).values >= 0))
    uniform = is_uniformly_oriented(graph)
    return BoundReport.evaluate(
        "lap_nonneg_iff_uniform",
        Relation.IFF,
        lhs=float(nonnegative),
        rhs=float(uniform),
        slack=0.0 if nonnegative == uniform else -1.0,
        context=f"nonnegative={nonnegative}, uniformly oriented={uniform}",
    )


def star_center(graph: OrientedHypergraph) -> VertexId:
    """Lowest-index maximum-degree vertex whose edges meet pairwise only in it.

    Around such a vertex the Delta+1 reduction ends in a star. Without one the
    bound can fail: three 3-edges {v,a,b}, {v,a,c}, {v,b,c} signed so that
    their incidence columns are orthogonal give lambda_1 = 3 < Delta + 1.
    """
    _require_delta_preconditions(graph)
    degrees = graph.degrees()
    delta = max(degrees)
    for vertex, degree in enumerate(degrees):
        if degree != delta:
            continue
        others = [
            frozenset(inc.vertex for inc in graph.edge_members(i.edge)) - {vertex}
            for i in graph.vertex_incidences(vertex)
        ]
        if all(len(a & b) == 0 for a, b in combinations(others, 2)):
            return vertex
    raise NoStarCenterError(
        "The Delta+1 bound needs a maximum-degree vertex whose edges share no "
        "other vertex"
    )


def lap_delta_lower_bound(graph: OrientedHypergraph) -> BoundReport:
    center = star_center(graph)
    delta = graph.degree(center)
    top = _top(laplacian_spectrum(graph))
    return BoundReport.evaluate(
        "lap_delta_lower_bound",
        Relation.LE,
        lhs=delta + 1,
        rhs=top,
        slack=top - (delta + 1),
        context=f"max degree {delta} at {graph.vertex_label(center)}",
    )


def _delete_vertices(
    graph: OrientedHypergraph, vertices: Iterable[VertexId], keep: VertexId
) -> tuple[OrientedHypergraph, VertexId]:
    doomed = sorted(set(vertices), reverse=True)
    # descending order leaves the indices still to be deleted untouched
    for vertex in doomed:
        graph = weak_delete_vertex(graph, vertex).graph
    return graph, keep - sum(1 for vertex in doomed if vertex < keep)


def reduce_to_star(
    graph: OrientedHypergraph,
) -> tuple[OrientedHypergraph, OrientedHypergraph, OrientedHypergraph, VertexId]:
    """Shrink G to a star around :func:`star_center`.

    Returns ``(g1, g2, g3, center)`` where g1 drops every edge missing the
    center, g2 drops the vertices left isolated, and g3 drops |e| - 2 of the
    lowest-index degree-1 non-center vertices from each edge. ``center`` is the
    center's index in g3.
    """
    center = star_center(graph)

    g1 = graph
    for edge in reversed(range(graph.m)):
        if graph.sign(center, edge) == 0:
            g1 = weak_delete_edge(g1, edge).graph

    isolated = [vertex for vertex, degree in enumerate(g1.degrees()) if degree == 0]
    g2, center = _delete_vertices(g1, isolated, center)

    leaves: list[VertexId] = []
    for edge in range(g2.m):
        members = g2.edge_members(edge)
        spare = [
            inc.vertex
            for inc in members
            if inc.vertex != center and g2.degree(inc.vertex) == 1
        ]
        leaves.extend(spare[: len(members) - 2])
    g3, center = _delete_vertices(g2, leaves, center)

    logger.debug(
        f"Star reduction: n {graph.n} -> {g1.n} -> {g2.n} -> {g3.n}, "
        f"m {graph.m} -> {g1.m}"
    )
    if not is_star(g3, center):
        logger.error(f"Reduction around vertex {center} did not end in a star")
        raise InternalIdentityError("Delta+1 reduction did not produce a star")
    return g1, g2, g3, center


def is_star(graph: OrientedHypergraph, center: VertexId) -> bool:
    """Every edge is {center, leaf} and every leaf lies in exactly one edge."""
    if graph.n != graph.m + 1:
        return False
    return all(
        graph.edge_size(edge) == 2 and graph.sign(center, edge) != 0
        for edge in range(graph.m)
    ) and all(graph.degree(v) == 1 for v in range(graph.n) if v != center)


def lap_delta_reduction_chain(graph: OrientedHypergraph) -> BoundReport:
    """Delta + 1 = lambda_1(L(G3)) <= lambda_1(L(G2)) <= lambda_1(L(G1)) <= lambda_1(L(G)).

    G3 is a signed star, switching equivalent to the all-positive one, so the
    first link is an equality. ``value`` is lambda_1(L(G3)).
    """
    g1, g2, g3, center = reduce_to_star(graph)
    label = graph.vertex_label(star_center(graph))
    delta = g3.m
    chain = [
        float(delta + 1),
        _top(laplacian_spectrum(g3)),
        _top(laplacian_spectrum(g2)),
        _top(laplacian_spectrum(g1)),
        _top(laplacian_spectrum(graph)),
    ]
    # the equality at the star counts in both directions
    slacks = [chain[0] - chain[1], *(b - a for a, b in pairwise(chain))]
    return BoundReport.evaluate(
        "lap_delta_reduction_chain",
        Relation.CHAIN,
        lhs=chain[0],
        rhs=chain[-1],
        slack=min(slacks),
        context=f"star on {g3.n} vertices around {label}",
        value=chain[1],
    )


def lap_mean_bound(graph: OrientedHypergraph) -> BoundReport:
    """lambda_n(L) <= (1/n) sum_j (d_j - a+-(v_j)) <= lambda_1(L)."""
    _require_vertices(graph)
    spectrum = laplacian_spectrum(graph)
    stats = all_vertex_stats(graph)
    mean = sum(s.degree - s.adj_net for s in stats) / graph.n
    return _interval("lap_mean_bound", spectrum.smallest, mean, spectrum.largest)


def lap_moment_bound(graph: OrientedHypergraph, k: int) -> BoundReport:
    _require_k(k)
    _require_vertices(graph)
    spectrum = laplacian_spectrum(graph)
    value = _moment(laplacian_matrix(graph), k) / graph.n
    return _interval(
        "lap_moment_bound",
        spectrum.smallest**k,
        value,
        spectrum.largest**k,
        context=f"k={k}",
    )


_RELATIONS: dict[str, Relation] = {
    "adj_radius_bound": Relation.LE,
    "adj_mean_net_bound": Relation.INTERVAL,
    "adj_moment_bound": Relation.INTERVAL,
    "adj_vertex_interlacing": Relation.INTERLACING,
    "lap_vertex_interlacing": Relation.INTERLACING,
    "lap_edge_interlacing": Relation.INTERLACING,
    "lap_gersgorin_bound": Relation.LE,
    "lap_uniform_upper_bound": Relation.LE,
    "lap_nonneg_iff_uniform": Relation.IFF,
    "lap_delta_lower_bound": Relation.LE,
    "lap_delta_reduction_chain": Relation.CHAIN,
    "lap_mean_bound": Relation.INTERVAL,
    "lap_moment_bound": Relation.INTERVAL,
}

BOUND_NAMES: tuple[str, ...] = tuple(_RELATIONS)

_PRECONDITION_ERRORS = (
    DeletionBudgetError,
    EmptyVertexSetError,
    LastVertexError,
    NoEdgesError,
    NoStarCenterError,
    NotLinearError,
    SmallEdgePresentError,
)


def _over_budget(kind: str, max_deletions: int) -> BoundReport:
    raise DeletionBudgetError(
        f"no {kind} deletions fit within max_deletions={max_deletions}"
    )


class Check(NamedTuple):
    name: str
    context: str
    run: Callable[[], BoundReport]
    relation: Relation | None = None


def _deletion_targets(
    graph: OrientedHypergraph, max_deletions: int
) -> tuple[list[VertexId], list[EdgeId]]:
    vertices, edges = list(range(graph.n)), list(range(graph.m))
    if graph.n + graph.m <= max_deletions:
        return vertices, edges

    rng = np.random.Generator(np.random.PCG64(DELETION_SAMPLE_SEED))
    vertex_budget = min(graph.n, max_deletions // 2)
    edge_budget = min(graph.m, max_deletions - vertex_budget)
    sampled_vertices = rng.choice(graph.n, size=vertex_budget, replace=False)
    sampled_edges = rng.choice(graph.m, size=edge_budget, replace=False)
    logger.info(
        f"Sampling {vertex_budget}/{graph.n} vertex and {edge_budget}/{graph.m} "
        f"edge deletions for interlacing checks"
    )
    return (
        sorted(int(v) for v in sampled_vertices),
        sorted(int(e) for e in sampled_edges),
    )


def _checks(
    graph: OrientedHypergraph,
    moment_orders: Sequence[int],
    max_deletions: int,
) -> list[Check]:
    vertices, edges = _deletion_targets(graph, max_deletions)
    checks: list[Check] = [
        Check("adj_radius_bound", "", lambda: adj_radius_bound(graph)),
        Check("adj_mean_net_bound", "", lambda: adj_mean_net_bound(graph)),
        Check("lap_gersgorin_bound", "", lambda: lap_gersgorin_bound(graph)),
        Check("lap_uniform_upper_bound", "", lambda: lap_uniform_upper_bound(graph)),
        Check("lap_nonneg_iff_uniform", "", lambda: lap_nonneg_iff_uniform(graph)),
        Check("lap_delta_lower_bound", "", lambda: lap_delta_lower_bound(graph)),
        Check("lap_delta_reduction_chain", "", lambda: lap_delta_reduction_chain(graph)),
        Check("lap_mean_bound", "", lambda: lap_mean_bound(graph)),
    ]
    for k in moment_orders:
        checks.append(
            Check(
                "adj_moment_bound",
                f"k={k}",
                lambda k=k: adj_moment_bound(graph, k),
                Relation.INTERVAL if k % 2 else Relation.LE,
            )
        )
        checks.append(
            Check("lap_moment_bound", f"k={k}", lambda k=k: lap_moment_bound(graph, k))
        )

    if graph.n < 2:
        checks.append(
            Check("adj_vertex_interlacing", "", lambda: adj_vertex_interlacing(graph, 0))
        )
        checks.append(
            Check("lap_vertex_interlacing", "", lambda: lap_vertex_interlacing(graph, 0))
        )
    if graph.n >= 2 and not vertices:
        for name in ("adj_vertex_interlacing", "lap_vertex_interlacing"):
            checks.append(
                Check(name, "", lambda: _over_budget("vertex", max_deletions))
            )
    for v in vertices if graph.n >= 2 else []:
        context = f"delete vertex {graph.vertex_label(v)}"
        checks.append(
            Check(
                "adj_vertex_interlacing",
                context,
                lambda v=v: adj_vertex_interlacing(graph, v),
            )
        )
        checks.append(
            Check(
                "lap_vertex_interlacing",
                context,
                lambda v=v: lap_vertex_interlacing(graph, v),
            )
        )

    if graph.m == 0:
        checks.append(
            Check("lap_edge_interlacing", "", lambda: lap_edge_interlacing(graph, 0))
        )
    if graph.m > 0 and not edges:
        checks.append(
            Check(
                "lap_edge_interlacing",
                "",
                lambda: _over_budget("edge", max_deletions),
            )
        )
    for e in edges:
        checks.append(
            Check(
                "lap_edge_interlacing",
                f"delete edge {graph.edge_label(e)}",
                lambda e=e: lap_edge_interlacing(graph, e),
            )
        )
    return checks


def verify_all(
    graph: OrientedHypergraph,
    moment_orders: Sequence[int] = DEFAULT_MOMENT_ORDERS,
    max_deletions: int = DEFAULT_MAX_DELETIONS,
    only: str | None = None,
) -> list[BoundReport]:
    """Run every bound on ``graph``, sorted by (name, context).

    Precondition failures become skip records instead of raising. When
    ``n + m`` exceeds ``max_deletions`` the interlacing checks run on a
    reproducible sample of vertices and edges; a family whose sample comes
    out empty is reported as a skip.
    """
    if only is not None and only not in _RELATIONS:
        raise UnknownBoundError(
            f"Unknown bound {only!r}; expected one of {', '.join(BOUND_NAMES)}"
        )
    for k in moment_orders:
        _require_k(k)
    if max_deletions < 0:
        raise DeletionBudgetError(f"max_deletions must be >= 0, got {max_deletions}")

    reports = []
    for check in _checks(graph, moment_orders, max_deletions):
        if only is not None and check.name != only:
            continue
        try:
            report = check.run()
        except _PRECONDITION_ERRORS as exc:
            logger.debug(f"Skipping {check.name} {check.context}: {exc}")
            report = BoundReport.skip(
                check.name, check.context, str(exc), relation=check.relation
            )
        if not report.holds:
            logger.warning(
                f"Bound violated: {report.name} {report.context} "
                f"(lhs={report.lhs}, rhs={report.rhs}, slack={report.slack})"
            )
        reports.append(report)

    reports.sort(key=lambda report: report.sort_key)
    logger.info(
        f"Verified {len(reports)} bounds on n={graph.n}, m={graph.m}: "
        f"{'all hold' if all_hold(reports) else 'violations found'}"
    )
    return reports
