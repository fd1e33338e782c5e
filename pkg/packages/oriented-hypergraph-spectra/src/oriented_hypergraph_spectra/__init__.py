__version__ = "0.1.0"

from .bounds import BOUND_NAMES, BoundReport, Relation, all_hold, verify_all
from .linalg import DenseMatrix, EigenDecomposition, Spectrum, SymmetricMatrix, sym_eigen
from .matrices import MatrixBundle, bundle, laplacian_matrix
from .model import Incidence, OrientedHypergraph, build, from_edges
from .oracle import (
    CospectralFind,
    GeneratorConfig,
    SwitchWitness,
    cospectral_pair_search,
    random_instance,
    switching_equivalent,
)
from .spectra import SpectrumPair, adjacency_spectrum, laplacian_spectrum, spectrum_pair
from .transform import Deletion, SwitchingFunction, dual, switch

__all__ = [
    "OrientedHypergraph",
    "Incidence",
    "build",
    "from_edges",
    "SwitchingFunction",
    "Deletion",
    "switch",
    "dual",
    "DenseMatrix",
    "SymmetricMatrix",
    "Spectrum",
    "EigenDecomposition",
    "sym_eigen",
    "MatrixBundle",
    "bundle",
    "laplacian_matrix",
    "SpectrumPair",
    "adjacency_spectrum",
    "laplacian_spectrum",
    "spectrum_pair",
    "BoundReport",
    "Relation",
    "BOUND_NAMES",
    "all_hold",
    "verify_all",
    "GeneratorConfig",
    "SwitchWitness",
    "CospectralFind",
    "random_instance",
    "switching_equivalent",
    "cospectral_pair_search",
]
