class HypergraphSpectraError(Exception):
    pass


# Structure


class DuplicateIncidenceError(HypergraphSpectraError, ValueError):
    pass


class BadSignError(HypergraphSpectraError, ValueError):
    pass


class IndexOutOfRangeError(HypergraphSpectraError, ValueError):
    pass


class DuplicateLabelError(HypergraphSpectraError, ValueError):
    pass


class LengthMismatchError(HypergraphSpectraError, ValueError):
    pass


# Linear algebra


class ShapeMismatchError(HypergraphSpectraError, ValueError):
    pass


class NotSymmetricError(HypergraphSpectraError, ValueError):
    pass


class NonFiniteEntryError(HypergraphSpectraError, ValueError):
    pass


class NoConvergenceError(HypergraphSpectraError):
    pass


class EigenResidualError(HypergraphSpectraError):
    pass


class EmptySpectrumError(HypergraphSpectraError, ValueError):
    pass


class OrderMismatchError(HypergraphSpectraError, ValueError):
    pass


class UnsortedSpectrumError(HypergraphSpectraError, ValueError):
    pass


class InternalIdentityError(HypergraphSpectraError):
    """Raised when an identity that holds by construction fails; always a bug."""


class NotPositiveSemidefiniteError(HypergraphSpectraError):
    pass


# Bound preconditions


class EmptyVertexSetError(HypergraphSpectraError, ValueError):
    pass


class BadKError(HypergraphSpectraError, ValueError):
    pass


class LastVertexError(HypergraphSpectraError, ValueError):
    pass


class NoEdgesError(HypergraphSpectraError, ValueError):
    pass


class NotLinearError(HypergraphSpectraError, ValueError):
    pass


class SmallEdgePresentError(HypergraphSpectraError, ValueError):
    pass


class NoStarCenterError(HypergraphSpectraError, ValueError):
    """No maximum-degree vertex has edges meeting pairwise only in that vertex."""


class UnknownBoundError(HypergraphSpectraError, ValueError):
    pass


class DeletionBudgetError(HypergraphSpectraError, ValueError):
    pass


# Oracle


class BadConfigError(HypergraphSpectraError, ValueError):
    pass


class DifferentUnderlyingError(HypergraphSpectraError, ValueError):
    pass


class TooLargeError(HypergraphSpectraError, ValueError):
    pass
