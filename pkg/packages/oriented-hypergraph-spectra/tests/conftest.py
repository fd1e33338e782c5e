import math

import numpy as np
import pytest
from oriented_hypergraph_spectra import GeneratorConfig, OrientedHypergraph, from_edges
from oriented_hypergraph_spectra.oracle import random_instance

SWEEP_SIZE = 200
SWEEP_SEED = 20240611
SWEEP_P_NEGATIVE = (0.0, 0.3, 0.5)

EXAMPLE_LAPLACIAN = [
    [2, 1, 1, 0],
    [1, 2, 1, 0],
    [1, 1, 3, 1],
    [0, 0, 1, 1],
]
EXAMPLE_DUAL_LAPLACIAN = [
    [2, 1, 1, 1],
    [1, 2, 1, 0],
    [1, 1, 2, 1],
    [1, 0, 1, 2],
]
EXAMPLE_SPECTRUM = (
    (5 + math.sqrt(17)) / 2,
    2.0,
    1.0,
    (5 - math.sqrt(17)) / 2,
)


def sweep_configs() -> list[GeneratorConfig]:
    rng = np.random.Generator(np.random.PCG64(SWEEP_SEED))
    configs = []
    for i in range(SWEEP_SIZE):
        n = int(rng.integers(1, 8, endpoint=True))
        m = int(rng.integers(0, 8, endpoint=True))
        size_max = min(5, n)
        size_min = int(rng.integers(0, size_max, endpoint=True))
        configs.append(
            GeneratorConfig(
                seed=SWEEP_SEED + i,
                n=n,
                m=m,
                edge_size_min=size_min,
                edge_size_max=size_max,
                p_negative=SWEEP_P_NEGATIVE[i % len(SWEEP_P_NEGATIVE)],
            )
        )
    return configs


@pytest.fixture
def worked_example() -> OrientedHypergraph:
    """Four vertices, edges {v0,v2}, {v0,v1}, {v1,v2}, {v2,v3}, all incidences +1."""
    return from_edges(
        4,
        [
            [(0, 1), (2, 1)],
            [(0, 1), (1, 1)],
            [(1, 1), (2, 1)],
            [(2, 1), (3, 1)],
        ],
    )


@pytest.fixture
def single_edge() -> OrientedHypergraph:
    return from_edges(2, [[(0, 1), (1, 1)]])


@pytest.fixture
def single_edge_mixed() -> OrientedHypergraph:
    return from_edges(2, [[(0, 1), (1, -1)]])


@pytest.fixture
def empty_graph() -> OrientedHypergraph:
    return OrientedHypergraph(n=0, m=0, incidences=())


@pytest.fixture
def cancelling_pair() -> OrientedHypergraph:
    # parallel 2-edges whose adjacency signs cancel
    return from_edges(2, [[(0, 1), (1, 1)], [(0, 1), (1, -1)]])


@pytest.fixture
def fano_like() -> OrientedHypergraph:
    """A linear 3-uniform hypergraph with mixed signs."""
    return from_edges(
        6,
        [
            [(0, 1), (1, -1), (2, 1)],
            [(0, -1), (3, 1), (4, 1)],
            [(2, 1), (4, -1), (5, -1)],
            [(1, 1), (3, 1), (5, 1)],
        ],
    )


@pytest.fixture(scope="session")
def sweep() -> list[OrientedHypergraph]:
    return [random_instance(cfg) for cfg in sweep_configs()]


@pytest.fixture
def make_star():
    """Factory for the star on delta + 1 vertices with center 0."""

    def build_star(delta: int, sign: int = 1) -> OrientedHypergraph:
        return from_edges(
            delta + 1, [[(0, sign), (leaf, sign)] for leaf in range(1, delta + 1)]
        )

    return build_star


@pytest.fixture
def example_laplacian() -> list[list[int]]:
    return EXAMPLE_LAPLACIAN


@pytest.fixture
def example_dual_laplacian() -> list[list[int]]:
    return EXAMPLE_DUAL_LAPLACIAN


@pytest.fixture
def example_spectrum() -> tuple[float, ...]:
    return EXAMPLE_SPECTRUM
