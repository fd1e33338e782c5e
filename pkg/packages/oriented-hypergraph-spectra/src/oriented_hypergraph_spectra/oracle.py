"""Brute-force ground truth used by the tests and the ``hunt`` command.

Random instances come from numpy's PCG64 bit generator seeded with the
configured 64-bit seed. Search trial ``i`` draws its two instance seeds from
``SeedSequence(seed).spawn(trials)[i]``, so results do not depend on how many
worker threads run the trials.
"""

import math
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from itertools import product

import numpy as np
from loguru import logger

from .errors import (
    BadConfigError,
    DifferentUnderlyingError,
    InternalIdentityError,
    TooLargeError,
)
from .linalg import Spectrum, SymmetricMatrix, frobenius_norm
from .model import Incidence, OrientedHypergraph
from .spectra import is_laplacian_cospectral, same_nonzero_laplacian_spectrum
from .transform import SwitchingFunction, dual, orient_uniformly, switch

SWITCHING_SEARCH_LIMIT = 24
SANITY_TOLERANCE = 1e-8
SEED_BOUND = 2**64


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    n: int
    m: int
    edge_size_min: int
    edge_size_max: int
    p_negative: float

    def __post_init__(self):
        if not 0 <= self.seed < SEED_BOUND:
            raise BadConfigError(
                f"Seed must be a 64-bit unsigned integer, got {self.seed}"
            )
        if self.n < 0 or self.m < 0:
            raise BadConfigError(
                f"Counts must be non-negative, got n={self.n}, m={self.m}"
            )
        if not 0 <= self.edge_size_min <= self.edge_size_max <= self.n:
            raise BadConfigError(
                f"Edge sizes must satisfy 0 <= min <= max <= n, got "
                f"min={self.edge_size_min}, max={self.edge_size_max}, n={self.n}"
            )
        if not (math.isfinite(self.p_negative) and 0.0 <= self.p_negative <= 1.0):
            raise BadConfigError(
                f"p_negative must lie in [0, 1], got {self.p_negative}"
            )

    def with_seed(self, seed: int) -> "GeneratorConfig":
        return replace(self, seed=seed)


@dataclass(frozen=True)
class SwitchWitness:
    found: bool
    zeta: SwitchingFunction | None = None


class FindKind(str, Enum):
    LAPLACIAN = "laplacian"
    NONZERO_LAPLACIAN = "nonzero-laplacian"


@dataclass(frozen=True)
class CospectralFind:
    first: OrientedHypergraph
    second: OrientedHypergraph
    kind: FindKind
    switching_equivalent: bool
    dual_related: bool
    trial: int = 0


def _generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_instance(cfg: GeneratorConfig) -> OrientedHypergraph:
    rng = _generator(cfg.seed)
    incidences = []
    for edge in range(cfg.m):
        size = int(rng.integers(cfg.edge_size_min, cfg.edge_size_max, endpoint=True))
        members = sorted(int(v) for v in rng.choice(cfg.n, size=size, replace=False))
        for vertex in members:
            sign = -1 if rng.random() < cfg.p_negative else 1
            incidences.append(Incidence(vertex, edge, sign))
    return OrientedHypergraph(n=cfg.n, m=cfg.m, incidences=tuple(incidences))


def random_switching(n: int, seed: int) -> SwitchingFunction:
    bits = _generator(seed).integers(0, 2, size=n)
    return SwitchingFunction(tuple(1 - 2 * int(bit) for bit in bits))


def random_uniform_orientation(
    graph: OrientedHypergraph, seed: int
) -> OrientedHypergraph:
    bits = _generator(seed).integers(0, 2, size=graph.m)
    return orient_uniformly(graph, [1 - 2 * int(bit) for bit in bits])


def switching_equivalent(
    first: OrientedHypergraph,
    second: OrientedHypergraph,
    limit: int = SWITCHING_SEARCH_LIMIT,
) -> SwitchWitness:
    """Exhaustive search over all 2^n switching functions.

    Candidates are tried with +1 before -1 at every position, so the witness
    returned is the first in that lexicographic order.
    """
    if not first.same_underlying(second):
        raise DifferentUnderlyingError(
            "Switching equivalence needs the same underlying hypergraph"
        )
    if first.n > limit:
        raise TooLargeError(
            f"Exhaustive switching search is capped at {limit} vertices, got {first.n}"
        )

    # incidences of both graphs are sorted by (edge, vertex), so they pair up
    pairs = [
        (a.vertex, a.sign * b.sign)
        for a, b in zip(first.incidences, second.incidences)
    ]
    for signs in product((1, -1), repeat=first.n):
        if all(signs[vertex] == ratio for vertex, ratio in pairs):
            zeta = SwitchingFunction(signs)
            if not switch(first, zeta).same_orientation(second):
                logger.error(f"Switching witness {signs} failed re-verification")
                raise InternalIdentityError("Switching witness does not reproduce G2")
            return SwitchWitness(found=True, zeta=zeta)
    return SwitchWitness(found=False)


def _equivalent_if_searchable(
    first: OrientedHypergraph, second: OrientedHypergraph, limit: int
) -> bool:
    if not first.same_underlying(second) or first.n > limit:
        return False
    return switching_equivalent(first, second, limit).found


def classify_pair(
    first: OrientedHypergraph,
    second: OrientedHypergraph,
    trial: int = 0,
    limit: int = SWITCHING_SEARCH_LIMIT,
) -> CospectralFind | None:
    """Classify a Laplacian cospectral pair, or return None when it is not one.

    Orders that differ are compared on their nonzero Laplacian spectra.
    """
    if first.n == second.n:
        if not is_laplacian_cospectral(first, second):
            return None
        kind = FindKind.LAPLACIAN
    else:
        if not same_nonzero_laplacian_spectrum(first, second):
            return None
        kind = FindKind.NONZERO_LAPLACIAN

    return CospectralFind(
        first=first,
        second=second,
        kind=kind,
        switching_equivalent=_equivalent_if_searchable(first, second, limit),
        dual_related=_equivalent_if_searchable(dual(first), second, limit),
        trial=trial,
    )


def _trial_seeds(seed: int, trials: int) -> list[tuple[int, int]]:
    children = np.random.SeedSequence(seed).spawn(trials)
    seeds = []
    for child in children:
        first, second = child.generate_state(2, dtype=np.uint64)
        seeds.append((int(first), int(second)))
    return seeds


def cospectral_pair_search(
    cfg: GeneratorConfig,
    trials: int,
    partner: GeneratorConfig | None = None,
    include_dual_related: bool = False,
    workers: int = 1,
) -> list[CospectralFind]:
    """Sample instance pairs and keep the Laplacian cospectral ones.

    Switching-equivalent pairs are always dropped; dual-related pairs only
    unless ``include_dual_related``. No isomorphism filtering is done, so
    relabelled copies of one hypergraph show up as finds.
    """
    if trials < 0:
        raise BadConfigError(f"Trial count must be non-negative, got {trials}")
    if workers < 1:
        raise BadConfigError(f"Worker count must be positive, got {workers}")
    second_cfg = partner if partner is not None else cfg
    seeds = _trial_seeds(cfg.seed, trials)

    def run(trial: int) -> CospectralFind | None:
        seed_a, seed_b = seeds[trial]
        return classify_pair(
            random_instance(cfg.with_seed(seed_a)),
            random_instance(second_cfg.with_seed(seed_b)),
            trial=trial,
        )

    if workers == 1:
        finds = _keep(map(run, range(trials)), include_dual_related)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            finds = _keep(pool.map(run, range(trials)), include_dual_related)

    logger.info(f"Cospectral search: {len(finds)} finds in {trials} trials")
    return finds


def _keep(
    results: Iterable[CospectralFind | None], include_dual_related: bool
) -> list[CospectralFind]:
    finds = []
    for find in results:
        if find is None or find.switching_equivalent:
            continue
        if find.dual_related and not include_dual_related:
            continue
        finds.append(find)
    return finds


def _closed_form(values: np.ndarray) -> list[float]:
    """Eigenvalues of a symmetric matrix of order <= 3 from the characteristic polynomial."""
    n = values.shape[0]
    if n == 0:
        return []
    if n == 1:
        return [float(values[0, 0])]
    if n == 2:
        a, b, d = values[0, 0], values[0, 1], values[1, 1]
        mid = (a + d) / 2.0
        radius = math.hypot((a - d) / 2.0, b)
        return [mid + radius, mid - radius]

    off = values[0, 1] ** 2 + values[0, 2] ** 2 + values[1, 2] ** 2
    if off == 0.0:
        return sorted(np.diag(values).tolist(), reverse=True)
    q = float(np.trace(values)) / 3.0
    p = math.sqrt((float(np.sum((np.diag(values) - q) ** 2)) + 2.0 * off) / 6.0)
    r = float(np.linalg.det((values - q * np.eye(3)) / p)) / 2.0
    phi = math.acos(min(1.0, max(-1.0, r))) / 3.0
    largest = q + 2.0 * p * math.cos(phi)
    smallest = q + 2.0 * p * math.cos(phi + 2.0 * math.pi / 3.0)
    return [largest, 3.0 * q - largest - smallest, smallest]


def spectrum_sanity(matrix: SymmetricMatrix, spectrum: Spectrum) -> bool:
    """Independent checks on an eigensolver result; False on any violation."""
    if matrix.order != spectrum.n:
        logger.warning(
            f"Spectrum of order {spectrum.n} given for a matrix of order {matrix.order}"
        )
        return False

    values = matrix.values.astype(np.float64)
    eigenvalues = spectrum.as_array()
    norm = frobenius_norm(matrix)
    tol = SANITY_TOLERANCE * max(1.0, norm)
    failures = []

    if abs(float(eigenvalues.sum()) - float(np.trace(values))) > tol:
        failures.append("trace")
    if abs(float(eigenvalues @ eigenvalues) - norm**2) > tol:
        failures.append("frobenius")

    centers = np.diag(values)
    radii = np.abs(values).sum(axis=1) - np.abs(centers)
    for eigenvalue in eigenvalues:
        if not np.any(np.abs(eigenvalue - centers) <= radii + tol):
            failures.append("gersgorin")
            break

    if matrix.order <= 3:
        expected = _closed_form(values)
        if any(abs(a - b) > tol for a, b in zip(expected, eigenvalues)):
            failures.append("closed-form")

    if failures:
        logger.warning(
            f"Spectrum sanity failed ({', '.join(failures)}) for order {matrix.order}"
        )
        return False
    return True
