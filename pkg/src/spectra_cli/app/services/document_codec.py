import re
import sys
from pathlib import Path

from loguru import logger
from oriented_hypergraph_spectra import OrientedHypergraph, build
from oriented_hypergraph_spectra.errors import DuplicateLabelError
from pydantic import ValidationError

from ..schemas import EdgeEntry, HypergraphDocument, IncidenceEntry
from .domain import DocumentSyntaxError, SchemaError, UsageError

_POSITION = re.compile(r"line (\d+) column (\d+)")
STDIN_PATH = "-"


def _location(loc: tuple[int | str, ...]) -> str:
    return ".".join(str(part) for part in loc) or "document"


class DocumentCodec:
    """Converts between the JSON document format and OrientedHypergraph.

    Indices follow document order. Serialization is canonical: fixed key
    order, incidences sorted by (edge, vertex), two-space indentation and a
    trailing newline.
    """

    def load(self, text: bytes) -> HypergraphDocument:
        try:
            decoded = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise DocumentSyntaxError(f"Invalid UTF-8 at byte {e.start}") from e

        try:
            return HypergraphDocument.model_validate_json(decoded)
        except ValidationError as e:
            first = e.errors()[0]
            if first["type"] == "json_invalid":
                detail = first.get("ctx", {}).get("error", first["msg"])
                match = _POSITION.search(detail)
                if match:
                    raise DocumentSyntaxError(
                        f"Invalid JSON: {detail}",
                        line=int(match.group(1)),
                        column=int(match.group(2)),
                    ) from e
                raise DocumentSyntaxError(f"Invalid JSON: {detail}") from e
            raise SchemaError(first["msg"], location=_location(first["loc"])) from e

    def from_document(self, document: HypergraphDocument) -> OrientedHypergraph:
        index: dict[str, int] = {}
        for i, label in enumerate(document.vertices):
            if label in index:
                raise DuplicateLabelError(f"Duplicate vertex label {label!r}")
            index[label] = i

        triples = []
        for j, edge in enumerate(document.edges):
            for k, entry in enumerate(edge.incidences):
                if entry.v not in index:
                    raise SchemaError(
                        f"Unknown vertex label {entry.v!r}",
                        location=f"edges.{j}.incidences.{k}.v",
                    )
                triples.append((index[entry.v], j, entry.sign))

        return build(
            n=len(document.vertices),
            m=len(document.edges),
            signed_incidences=triples,
            vertex_labels=document.vertices,
            edge_labels=[edge.label for edge in document.edges],
        )

    def parse(self, text: bytes) -> OrientedHypergraph:
        return self.from_document(self.load(text))

    def to_document(self, graph: OrientedHypergraph) -> HypergraphDocument:
        return HypergraphDocument(
            vertices=[graph.vertex_label(i) for i in range(graph.n)],
            edges=[
                EdgeEntry(
                    label=graph.edge_label(j),
                    incidences=[
                        IncidenceEntry(v=graph.vertex_label(inc.vertex), sign=inc.sign)
                        for inc in graph.edge_members(j)
                    ],
                )
                for j in range(graph.m)
            ],
        )

    def serialize(self, graph: OrientedHypergraph) -> bytes:
        return (self.to_document(graph).model_dump_json(indent=2) + "\n").encode("utf-8")

    def read(self, path: str | Path) -> OrientedHypergraph:
        if str(path) == STDIN_PATH:
            logger.debug("Reading document from stdin")
            return self.parse(sys.stdin.buffer.read())

        try:
            text = Path(path).read_bytes()
        except OSError as e:
            raise UsageError(f"Cannot read {path}: {e.strerror}") from e
        logger.debug(f"Read {len(text)} bytes from {path}")
        return self.parse(text)
