from dataclasses import dataclass

import numpy as np
from loguru import logger
from numpy.typing import ArrayLike

from .errors import InternalIdentityError, ShapeMismatchError
from .linalg import DenseMatrix, SymmetricMatrix, frobenius_norm, gram
from .model import OrientedHypergraph, adjacencies
from .transform import SwitchingFunction, plus_orientation


@dataclass(frozen=True)
class MatrixBundle:
    incidence: DenseMatrix
    adjacency: SymmetricMatrix
    degree: SymmetricMatrix
    laplacian: SymmetricMatrix

    def as_dict(self) -> dict[str, DenseMatrix]:
        return {
            "H": self.incidence,
            "A": self.adjacency,
            "D": self.degree,
            "L": self.laplacian,
        }


def incidence_matrix(graph: OrientedHypergraph) -> DenseMatrix:
    """H(G): n x m with eta_ij = sigma(v_i, e_j), zero off the incidences."""
    values = np.zeros((graph.n, graph.m), dtype=np.int64)
    for inc in graph.incidences:
        values[inc.vertex, inc.edge] = inc.sign
    return DenseMatrix(values)


def adjacency_matrix(graph: OrientedHypergraph) -> SymmetricMatrix:
    values = np.zeros((graph.n, graph.n), dtype=np.int64)
    for adjacency in adjacencies(graph):
        values[adjacency.lo, adjacency.hi] += adjacency.sign
        values[adjacency.hi, adjacency.lo] += adjacency.sign
    return SymmetricMatrix(values)


def degree_matrix(graph: OrientedHypergraph) -> SymmetricMatrix:
    return SymmetricMatrix(np.diag(np.asarray(graph.degrees(), dtype=np.int64)))


def switching_matrix(zeta: SwitchingFunction) -> SymmetricMatrix:
    return SymmetricMatrix(np.diag(np.asarray(zeta.signs, dtype=np.int64)))


def bundle(graph: OrientedHypergraph) -> MatrixBundle:
    """Assemble H, A, D and L, checking L = D - A = H H^T exactly."""
    incidence = incidence_matrix(graph)
    adjacency = adjacency_matrix(graph)
    degree = degree_matrix(graph)
    laplacian = SymmetricMatrix(degree.values - adjacency.values)

    if laplacian != gram(incidence):
        logger.error(
            f"D - A disagrees with H H^T for graph with n={graph.n}, m={graph.m}"
        )
        raise InternalIdentityError("L(G) = D(G) - A(G) = H(G) H(G)^T does not hold")

    return MatrixBundle(
        incidence=incidence,
        adjacency=adjacency,
        degree=degree,
        laplacian=laplacian,
    )


def laplacian_matrix(graph: OrientedHypergraph) -> SymmetricMatrix:
    return bundle(graph).laplacian


def laplacian_quadratic_form(graph: OrientedHypergraph, x: ArrayLike) -> float:
    """x^T L(G) x evaluated edge by edge as sum_e (sum_{v in e} sigma(v,e) x_v)^2."""
    vector = np.asarray(x, dtype=np.float64)
    if vector.shape != (graph.n,):
        raise ShapeMismatchError(
            f"Vector of shape {vector.shape} does not match {graph.n} vertices"
        )
    total = 0.0
    for edge in range(graph.m):
        edge_sum = sum(inc.sign * vector[inc.vertex] for inc in graph.edge_members(edge))
        total += float(edge_sum) ** 2
    return total


def hypergraph_adjacency(graph: OrientedHypergraph) -> SymmetricMatrix:
    """A(H) := A(H, +1); the orientation of ``graph`` is ignored."""
    return adjacency_matrix(plus_orientation(graph))


def hypergraph_laplacian(graph: OrientedHypergraph) -> SymmetricMatrix:
    """L(H) := L(H, +1), the common Laplacian of every uniform orientation."""
    return laplacian_matrix(plus_orientation(graph))


def quadratic_form_tolerance(laplacian: SymmetricMatrix, x: ArrayLike) -> float:
    vector = np.asarray(x, dtype=np.float64)
    return 1e-10 * max(1.0, float(vector @ vector) * frobenius_norm(laplacian))
