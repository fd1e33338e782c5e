from .document import EdgeEntry, HypergraphDocument, IncidenceEntry
from .reports import (
    BoundReportModel,
    CospectralFindReport,
    CospectralVerdict,
    MatricesReport,
    SpectrumReport,
    SwitchWitnessReport,
)

__all__ = [
    "EdgeEntry",
    "HypergraphDocument",
    "IncidenceEntry",
    "BoundReportModel",
    "CospectralFindReport",
    "CospectralVerdict",
    "MatricesReport",
    "SpectrumReport",
    "SwitchWitnessReport",
]
