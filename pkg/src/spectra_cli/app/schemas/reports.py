from pydantic import BaseModel, Field, RootModel

from .document import HypergraphDocument


class MatricesReport(RootModel[dict[str, list[list[int]]]]):
    """Requested matrices keyed by H, A, D, L"""


class SpectrumReport(BaseModel):
    """Eigenvalues of one matrix, largest first"""

    matrix: str = Field(..., description="adjacency or laplacian")
    values: list[float] = Field(..., description="Eigenvalues in descending order")


class CospectralVerdict(BaseModel):
    """Result of comparing the spectra of two documents"""

    matrix: str = Field(..., description="adjacency or laplacian")
    nonzero: bool = Field(..., description="Whether only nonzero eigenvalues were compared")
    cospectral: bool = Field(..., description="Whether the compared spectra agree")
    first: list[float] = Field(..., description="Compared spectrum of the first document")
    second: list[float] = Field(
        ..., description="Compared spectrum of the second document"
    )


class SwitchWitnessReport(BaseModel):
    """Switching function taking the first document to the second"""

    found: bool = Field(..., description="Whether a witness exists")
    zeta: list[int] | None = Field(None, description="Witness signs per vertex")


class BoundReportModel(BaseModel):
    """One bound verdict"""

    name: str
    relation: str
    context: str
    holds: bool
    skipped: bool
    lhs: float | None = None
    rhs: float | None = None
    value: float | None = None
    slack: float | None = None
    reason: str | None = None


class CospectralFindReport(BaseModel):
    """One line of hunt output"""

    trial: int = Field(..., description="Trial index within the search")
    kind: str = Field(..., description="laplacian or nonzero-laplacian")
    switching_equivalent: bool
    dual_related: bool
    first_spectrum: list[float] = Field(..., description="Laplacian spectrum of first")
    second_spectrum: list[float] = Field(
        ..., description="Laplacian spectrum of second"
    )
    first: HypergraphDocument
    second: HypergraphDocument
