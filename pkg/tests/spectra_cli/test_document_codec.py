import io
import sys

import pytest
from oriented_hypergraph_spectra import dual, from_edges, laplacian_matrix
from oriented_hypergraph_spectra.errors import (
    BadSignError,
    DuplicateIncidenceError,
    DuplicateLabelError,
)

from src.spectra_cli.app.services.domain import (
    DocumentSyntaxError,
    SchemaError,
    UsageError,
)
from tests.shared_fixtures import DOCUMENT_NAMES, SharedDocumentFixtures

SINGLE_EDGE = (
    b'{"vertices":["a","b"],"edges":[{"label":"e","incidences":'
    b'[{"v":"a","sign":1},{"v":"b","sign":1}]}]}'
)

EXAMPLE_LAPLACIAN = [
    [2, 1, 1, 0],
    [1, 2, 1, 0],
    [1, 1, 3, 1],
    [0, 0, 1, 1],
]


def single_edge_with_sign(sign: str) -> bytes:
    return SINGLE_EDGE.replace(b'"b","sign":1', b'"b","sign":' + sign.encode())


class TestParse:
    def test_single_edge(self, codec):
        graph = codec.parse(SINGLE_EDGE)

        assert (graph.n, graph.m) == (2, 1)
        assert [inc.to_tuple() for inc in graph.incidences] == [(0, 0, 1), (1, 0, 1)]
        assert graph.vertex_label(1) == "b"
        assert graph.edge_label(0) == "e"

    def test_example_fixture_laplacian(self, load_graph):
        graph = load_graph("worked_example.json")

        assert laplacian_matrix(graph).to_lists() == EXAMPLE_LAPLACIAN

    def test_zero_sign(self, codec):
        with pytest.raises(BadSignError):
            codec.parse(single_edge_with_sign("0"))

    @pytest.mark.parametrize("sign", ['"1"', "true", "1.0"])
    def test_sign_must_be_an_integer(self, codec, sign):
        with pytest.raises(SchemaError) as exc_info:
            codec.parse(single_edge_with_sign(sign))

        assert exc_info.value.location == "edges.0.incidences.1.sign"

    def test_missing_field(self, codec):
        with pytest.raises(SchemaError) as exc_info:
            codec.parse(b'{"vertices": []}')

        assert exc_info.value.location == "edges"

    def test_unknown_key(self, codec):
        with pytest.raises(SchemaError, match="weights"):
            codec.parse(b'{"vertices": [], "edges": [], "weights": []}')

    def test_top_level_must_be_an_object(self, codec):
        with pytest.raises(SchemaError) as exc_info:
            codec.parse(b"[]")

        assert exc_info.value.location == "document"

    def test_invalid_json_carries_position(self, codec):
        with pytest.raises(DocumentSyntaxError) as exc_info:
            codec.parse(b'{\n  "vertices": [,]\n}')

        assert exc_info.value.line == 2
        assert exc_info.value.column is not None

    def test_invalid_utf8(self, codec):
        with pytest.raises(DocumentSyntaxError, match="byte 0"):
            codec.parse(b"\xff{}")

    def test_unknown_vertex_label(self, codec):
        text = SINGLE_EDGE.replace(b'{"v":"b"', b'{"v":"z"')

        with pytest.raises(SchemaError, match="'z'") as exc_info:
            codec.parse(text)

        assert exc_info.value.location == "edges.0.incidences.1.v"

    def test_duplicate_vertex_label(self, codec):
        with pytest.raises(DuplicateLabelError):
            codec.parse(b'{"vertices": ["a", "a"], "edges": []}')

    def test_duplicate_edge_label(self, codec):
        text = (
            b'{"vertices": [], "edges": [{"label": "e", "incidences": []},'
            b' {"label": "e", "incidences": []}]}'
        )

        with pytest.raises(DuplicateLabelError):
            codec.parse(text)

    def test_duplicate_incidence(self, codec):
        text = SINGLE_EDGE.replace(b'{"v":"b","sign":1}', b'{"v":"a","sign":-1}')

        with pytest.raises(DuplicateIncidenceError):
            codec.parse(text)


class TestSerialize:
    @pytest.mark.parametrize("name", DOCUMENT_NAMES)
    def test_fixtures_round_trip_byte_identical(self, codec, name):
        text = SharedDocumentFixtures.load(name)

        assert codec.serialize(codec.parse(text)) == text

    def test_output_is_canonical(self, codec):
        scrambled = (
            b'{"edges": [{"incidences": [{"sign": -1, "v": "c"}, {"v": "a", "sign": 1},'
            b' {"v": "b", "sign": 1}], "label": "e"}], "vertices": ["a", "b", "c"]}'
        )

        assert codec.serialize(codec.parse(scrambled)) == SharedDocumentFixtures.load(
            "e3mixed.json"
        )

    def test_dual_swaps_labels(self, codec, load_graph):
        serialized = codec.serialize(dual(load_graph("worked_example.json")))

        assert serialized == SharedDocumentFixtures.load("worked_example_dual.json")

    def test_default_labels(self, codec):
        graph = from_edges(2, [[(1, -1)]])

        document = codec.to_document(graph)

        assert document.vertices == ["v0", "v1"]
        assert document.edges[0].label == "e0"
        assert document.edges[0].incidences[0].v == "v1"

    def test_empty_graph(self, codec):
        graph = codec.parse(b'{"vertices": [], "edges": []}')

        assert codec.serialize(graph) == b'{\n  "vertices": [],\n  "edges": []\n}\n'

    def test_stable_across_runs(self, codec, load_graph):
        graph = load_graph("star4.json")

        assert codec.serialize(graph) == codec.serialize(graph)


class TestRead:
    def test_reads_file(self, codec, fixture_path):
        assert codec.read(fixture_path("e2pp.json")).n == 2

    def test_missing_file(self, codec, tmp_path):
        with pytest.raises(UsageError, match="Cannot read"):
            codec.read(tmp_path / "absent.json")

    def test_reads_stdin(self, codec, mocker):
        stdin = io.TextIOWrapper(io.BytesIO(SharedDocumentFixtures.load("e3mixed.json")))
        mocker.patch.object(sys, "stdin", stdin)

        assert codec.read("-").n == 3
