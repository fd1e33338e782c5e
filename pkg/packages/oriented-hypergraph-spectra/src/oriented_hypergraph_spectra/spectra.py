from dataclasses import dataclass
from functools import lru_cache

from loguru import logger

from .errors import NotPositiveSemidefiniteError, OrderMismatchError
from .linalg import Spectrum, frobenius_norm, spectral_radius, sym_eigenvalues
from .matrices import adjacency_matrix, laplacian_matrix
from .model import OrientedHypergraph
from .transform import plus_orientation

SPECTRUM_TOLERANCE = 1e-8


@dataclass(frozen=True)
class SpectrumPair:
    adjacency: Spectrum
    laplacian: Spectrum

    def __post_init__(self):
        if self.adjacency.n != self.laplacian.n:
            raise OrderMismatchError(
                f"Adjacency spectrum has order {self.adjacency.n}, "
                f"Laplacian spectrum has order {self.laplacian.n}"
            )


def _radius(spectrum: Spectrum) -> float:
    return spectral_radius(spectrum) if spectrum.n else 0.0


def default_tolerance(*spectra: Spectrum) -> float:
    return SPECTRUM_TOLERANCE * max([1.0, *(_radius(s) for s in spectra)])


@lru_cache(maxsize=2048)
def adjacency_spectrum(graph: OrientedHypergraph) -> Spectrum:
    return sym_eigenvalues(adjacency_matrix(graph))


@lru_cache(maxsize=2048)
def laplacian_spectrum(graph: OrientedHypergraph) -> Spectrum:
    """Laplacian eigenvalues with the round-off band just below zero clamped to 0."""
    laplacian = laplacian_matrix(graph)
    spectrum = sym_eigenvalues(laplacian)
    band = SPECTRUM_TOLERANCE * max(1.0, frobenius_norm(laplacian))
    if spectrum.n and spectrum.smallest < -band:
        logger.error(
            f"Laplacian eigenvalue {spectrum.smallest:.3e} below -{band:.1e}"
        )
        raise NotPositiveSemidefiniteError(
            f"Laplacian has eigenvalue {spectrum.smallest!r} below the PSD band"
        )
    return Spectrum(tuple(0.0 if value < 0.0 else value for value in spectrum))


def signless_laplacian_spectrum(graph: OrientedHypergraph) -> Spectrum:
    """Spectrum of L(+H), shared by every uniform orientation of the hypergraph."""
    return laplacian_spectrum(plus_orientation(graph))


def spectrum_pair(graph: OrientedHypergraph) -> SpectrumPair:
    return SpectrumPair(
        adjacency=adjacency_spectrum(graph),
        laplacian=laplacian_spectrum(graph),
    )


def is_cospectral(
    first: Spectrum, second: Spectrum, tol: float | None = None
) -> bool:
    if first.n != second.n:
        raise OrderMismatchError(
            f"Cannot compare spectra of orders {first.n} and {second.n}"
        )
    if tol is None:
        tol = default_tolerance(first, second)
    return all(abs(a - b) <= tol for a, b in zip(first, second))


def nonzero_spectrum(spectrum: Spectrum, tol: float | None = None) -> Spectrum:
    if tol is None:
        tol = default_tolerance(spectrum)
    return Spectrum(tuple(value for value in spectrum if abs(value) > tol))


def zero_multiplicity(spectrum: Spectrum, tol: float | None = None) -> int:
    return spectrum.n - nonzero_spectrum(spectrum, tol).n


def same_nonzero_laplacian_spectrum(
    first: OrientedHypergraph,
    second: OrientedHypergraph,
    tol: float | None = None,
) -> bool:
    a = laplacian_spectrum(first)
    b = laplacian_spectrum(second)
    if tol is None:
        tol = default_tolerance(a, b)
    a_nonzero = nonzero_spectrum(a, tol)
    b_nonzero = nonzero_spectrum(b, tol)
    if a_nonzero.n != b_nonzero.n:
        return False
    return is_cospectral(a_nonzero, b_nonzero, tol)


def is_adjacency_cospectral(
    first: OrientedHypergraph, second: OrientedHypergraph, tol: float | None = None
) -> bool:
    return is_cospectral(adjacency_spectrum(first), adjacency_spectrum(second), tol)


def is_laplacian_cospectral(
    first: OrientedHypergraph, second: OrientedHypergraph, tol: float | None = None
) -> bool:
    return is_cospectral(laplacian_spectrum(first), laplacian_spectrum(second), tol)
