"""Dense real matrices and a cyclic Jacobi eigensolver for symmetric ones.

Integer matrices (incidence, adjacency, degree, Laplacian) keep an int64
dtype so products and identities are exact; conversion to float happens only
inside the eigensolver's private working copy.
"""

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np
from loguru import logger
from numpy.typing import ArrayLike, NDArray

from .errors import (
    EigenResidualError,
    EmptySpectrumError,
    NoConvergenceError,
    NonFiniteEntryError,
    NotSymmetricError,
    ShapeMismatchError,
    UnsortedSpectrumError,
)

OFF_DIAGONAL_TOLERANCE = 1e-12
MAX_SWEEPS = 100
RESIDUAL_TOLERANCE = 1e-8


def _frozen_array(values: ArrayLike) -> NDArray:
    array = np.array(values)
    if array.dtype.kind == "b":
        array = array.astype(np.int64)
    elif array.dtype.kind in "iu":
        array = array.astype(np.int64, copy=False)
    elif array.dtype.kind == "f":
        array = array.astype(np.float64, copy=False)
        if not np.all(np.isfinite(array)):
            raise NonFiniteEntryError("Matrix entries must be finite")
    else:
        raise ShapeMismatchError(f"Unsupported matrix dtype {array.dtype}")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    values: NDArray

    def __post_init__(self):
        array = _frozen_array(self.values)
        if array.ndim != 2:
            raise ShapeMismatchError(
                f"Matrix must be two-dimensional, got shape {array.shape}"
            )
        object.__setattr__(self, "values", array)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(
            np.array_equal(self.values, other.values)
        )

    __hash__ = None  # type: ignore[assignment]

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    @property
    def cols(self) -> int:
        return self.values.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_integral(self) -> bool:
        return self.values.dtype.kind == "i"

    def entry(self, row: int, col: int) -> float | int:
        return self.values[row, col].item()

    def to_lists(self) -> list[list[int]] | list[list[float]]:
        return self.values.tolist()

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "DenseMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64))


@dataclass(frozen=True, eq=False)
class SymmetricMatrix(DenseMatrix):
    def __post_init__(self):
        super().__post_init__()
        if self.rows != self.cols:
            raise ShapeMismatchError(
                f"Symmetric matrix must be square, got shape {self.shape}"
            )
        if not np.array_equal(self.values, self.values.T):
            raise NotSymmetricError("Matrix is not exactly symmetric")

    @property
    def order(self) -> int:
        return self.rows

    @classmethod
    def from_upper(cls, values: ArrayLike) -> "SymmetricMatrix":
        """Keep the upper triangle and mirror it below the diagonal."""
        array = np.array(values)
        upper = np.triu(array)
        return cls(upper + np.triu(array, 1).T)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "SymmetricMatrix":
        return cls(np.zeros((rows, rows if cols is None else cols), dtype=np.int64))


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset, labelled descending: values[0] is lambda_1."""

    values: tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if any(a < b for a, b in zip(values, values[1:])):
            raise UnsortedSpectrumError(
                "Spectrum values must be sorted in descending order"
            )
        object.__setattr__(self, "values", values)

    @classmethod
    def from_values(cls, values: Iterable[float]) -> "Spectrum":
        array = np.asarray(list(values), dtype=np.float64)
        order = np.argsort(-array, kind="stable")
        return cls(tuple(array[order].tolist()))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def largest(self) -> float:
        if not self.values:
            raise EmptySpectrumError("Empty spectrum has no largest eigenvalue")
        return self.values[0]

    @property
    def smallest(self) -> float:
        if not self.values:
            raise EmptySpectrumError("Empty spectrum has no smallest eigenvalue")
        return self.values[-1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    def __getitem__(self, index: int) -> float:
        return self.values[index]

    def as_array(self) -> NDArray[np.float64]:
        return np.asarray(self.values, dtype=np.float64)


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    spectrum: Spectrum
    # column i is the eigenvector for spectrum[i]
    vectors: NDArray[np.float64]
    sweeps: int


def _as_symmetric(matrix: DenseMatrix) -> SymmetricMatrix:
    if isinstance(matrix, SymmetricMatrix):
        return matrix
    return SymmetricMatrix(matrix.values)


def matmul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    if a.cols != b.rows:
        raise ShapeMismatchError(f"Cannot multiply {a.shape} by {b.shape}")
    return DenseMatrix(a.values @ b.values)


def transpose(a: DenseMatrix) -> DenseMatrix:
    return DenseMatrix(a.values.T)


def gram(a: DenseMatrix) -> SymmetricMatrix:
    """A @ A.T, symmetric by construction."""
    return SymmetricMatrix.from_upper(a.values @ a.values.T)


def gram_dual(a: DenseMatrix) -> SymmetricMatrix:
    """A.T @ A, symmetric by construction."""
    return SymmetricMatrix.from_upper(a.values.T @ a.values)


def frobenius_norm(a: DenseMatrix) -> float:
    return float(np.linalg.norm(a.values.astype(np.float64)))


def principal_submatrix(s: SymmetricMatrix, keep: Sequence[int]) -> SymmetricMatrix:
    index = np.asarray(keep, dtype=np.intp)
    return SymmetricMatrix(s.values[np.ix_(index, index)])


def quadratic_form(s: SymmetricMatrix, x: ArrayLike) -> float:
    vector = np.asarray(x, dtype=np.float64)
    if vector.shape != (s.order,):
        raise ShapeMismatchError(
            f"Vector of shape {vector.shape} does not match matrix order {s.order}"
        )
    return float(vector @ s.values.astype(np.float64) @ vector)


def spectral_radius(spectrum: Spectrum) -> float:
    if spectrum.n == 0:
        raise EmptySpectrumError("Spectral radius of an empty spectrum is undefined")
    return max(abs(spectrum.largest), abs(spectrum.smallest))


def gersgorin_radius(s: SymmetricMatrix) -> float:
    """max_i sum_j |s_ij|, the radius of a disc holding every eigenvalue."""
    if s.order == 0:
        return 0.0
    return float(np.abs(s.values.astype(np.float64)).sum(axis=1).max())


def _off_diagonal_norm(a: NDArray[np.float64]) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(a: NDArray[np.float64], v: NDArray[np.float64], p: int, q: int) -> None:
    apq = a[p, q]
    if apq == 0.0:
        return
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    t = 1.0 / (abs(theta) + math.hypot(theta, 1.0))
    if theta < 0.0:
        t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q


def sym_eigen(
    matrix: DenseMatrix,
    tolerance: float = OFF_DIAGONAL_TOLERANCE,
    max_sweeps: int = MAX_SWEEPS,
) -> EigenDecomposition:
    """Cyclic-by-row Jacobi diagonalization.

    Stops once the off-diagonal Frobenius norm is at most
    ``tolerance * max(1, ||S||_F)``. Every returned pair satisfies
    ``||S v - lambda v|| <= 1e-8 * max(1, ||S||_F)``.
    """
    s = _as_symmetric(matrix)
    n = s.order
    original = s.values.astype(np.float64)
    work = original.copy()
    vectors = np.eye(n)
    scale = max(1.0, float(np.linalg.norm(original)))
    threshold = tolerance * scale

    sweeps = 0
    while _off_diagonal_norm(work) > threshold:
        if sweeps == max_sweeps:
            raise NoConvergenceError(
                f"Jacobi did not converge within {max_sweeps} sweeps "
                f"(off-diagonal norm {_off_diagonal_norm(work):.3e}, n={n})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(work, vectors, p, q)
        sweeps += 1

    eigenvalues = np.diag(work).copy()
    residuals = np.linalg.norm(original @ vectors - vectors * eigenvalues, axis=0)
    worst = float(residuals.max(initial=0.0))
    if worst > RESIDUAL_TOLERANCE * scale:
        raise EigenResidualError(
            f"Eigenpair residual {worst:.3e} exceeds {RESIDUAL_TOLERANCE * scale:.3e}"
        )

    logger.debug(f"Jacobi converged in {sweeps} sweeps (n={n}, residual={worst:.2e})")

    order = np.argsort(-eigenvalues, kind="stable")
    return EigenDecomposition(
        spectrum=Spectrum(tuple(eigenvalues[order].tolist())),
        vectors=vectors[:, order],
        sweeps=sweeps,
    )


def sym_eigenvalues(matrix: DenseMatrix) -> Spectrum:
    return sym_eigen(matrix).spectrum
