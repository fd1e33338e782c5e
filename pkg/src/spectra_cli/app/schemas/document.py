from pydantic import BaseModel, ConfigDict, Field, StrictInt


class IncidenceEntry(BaseModel):
    """One signed vertex-edge incidence inside an edge"""

    model_config = ConfigDict(extra="forbid")

    v: str = Field(..., description="Label of the incident vertex")
    sign: StrictInt = Field(..., description="Incidence sign, +1 or -1")


class EdgeEntry(BaseModel):
    """An edge with its signed incidences"""

    model_config = ConfigDict(extra="forbid")

    label: str = Field(..., description="Edge label, unique within the document")
    incidences: list[IncidenceEntry] = Field(
        ..., description="Incidences sorted by vertex index in canonical form"
    )


class HypergraphDocument(BaseModel):
    """File format of an oriented hypergraph"""

    model_config = ConfigDict(extra="forbid")

    vertices: list[str] = Field(..., description="Vertex labels in index order")
    edges: list[EdgeEntry] = Field(..., description="Edges in index order")
