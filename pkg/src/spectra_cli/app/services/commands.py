from collections.abc import Sequence

from loguru import logger
from oriented_hypergraph_spectra import (
    BoundReport,
    CospectralFind,
    GeneratorConfig,
    OrientedHypergraph,
    Spectrum,
    SwitchingFunction,
    all_hold,
    bundle,
    cospectral_pair_search,
    dual,
    random_instance,
    switch,
    switching_equivalent,
    verify_all,
)
from oriented_hypergraph_spectra.spectra import (
    adjacency_spectrum,
    default_tolerance,
    is_cospectral,
    laplacian_spectrum,
    nonzero_spectrum,
)
from oriented_hypergraph_spectra.transform import weak_delete_edge, weak_delete_vertex
from pydantic import TypeAdapter

from ..core.config import Settings
from ..schemas import (
    BoundReportModel,
    CospectralFindReport,
    CospectralVerdict,
    MatricesReport,
    SpectrumReport,
    SwitchWitnessReport,
)
from .document_codec import DocumentCodec
from .domain import CommandResult, ExitCode, MatrixKind, OutputFormat, UsageError

MATRIX_KEYS = ("H", "A", "D", "L")
_REPORT_LIST = TypeAdapter(list[BoundReportModel])


class CommandService:
    """Runs one subcommand on parsed hypergraphs and renders its output."""

    def __init__(self, codec: DocumentCodec, settings: Settings):
        self.codec = codec
        self.settings = settings

    @property
    def digits(self) -> int:
        return self.settings.FLOAT_SIGNIFICANT_DIGITS

    def round_float(self, value: float) -> float:
        # adding 0.0 turns -0.0 into 0.0
        return float(f"{value:.{self.digits}g}") + 0.0

    def format_float(self, value: float) -> str:
        return f"{self.round_float(value):.{self.digits}g}"

    def _rounded(self, spectrum: Spectrum) -> list[float]:
        return [self.round_float(value) for value in spectrum]

    def _optional(self, value: float | None) -> float | None:
        return None if value is None else self.round_float(value)

    def _document_output(self, graph: OrientedHypergraph) -> CommandResult:
        return CommandResult(self.codec.serialize(graph).decode("utf-8"))

    def _spectrum(self, graph: OrientedHypergraph, matrix: MatrixKind) -> Spectrum:
        if matrix == MatrixKind.ADJACENCY:
            return adjacency_spectrum(graph)
        return laplacian_spectrum(graph)

    def matrices(
        self,
        graph: OrientedHypergraph,
        which: str = "all",
        output_format: OutputFormat = OutputFormat.TEXT,
    ) -> CommandResult:
        all_matrices = bundle(graph).as_dict()
        keys = MATRIX_KEYS if which == "all" else (which,)
        if any(key not in all_matrices for key in keys):
            raise UsageError(f"Unknown matrix {which!r}, expected one of H, A, D, L, all")

        if output_format == OutputFormat.JSON:
            report = MatricesReport({key: all_matrices[key].to_lists() for key in keys})
            return CommandResult(report.model_dump_json(indent=2) + "\n")

        lines = []
        for key in keys:
            matrix = all_matrices[key]
            lines.append(f"{key} ({matrix.rows}x{matrix.cols}):")
            rows = matrix.to_lists()
            width = max((len(str(x)) for row in rows for x in row), default=1)
            lines.extend(" ".join(f"{x:>{width}}" for x in row) for row in rows)
        return CommandResult("\n".join(lines) + "\n")

    def spectrum(
        self,
        graph: OrientedHypergraph,
        matrix: MatrixKind = MatrixKind.LAPLACIAN,
        output_format: OutputFormat = OutputFormat.TEXT,
    ) -> CommandResult:
        spectrum = self._spectrum(graph, matrix)
        if output_format == OutputFormat.JSON:
            report = SpectrumReport(matrix=matrix.value, values=self._rounded(spectrum))
            return CommandResult(report.model_dump_json(indent=2) + "\n")
        return CommandResult("".join(f"{self.format_float(x)}\n" for x in spectrum))

    def dual(self, graph: OrientedHypergraph) -> CommandResult:
        return self._document_output(dual(graph))

    def switch(self, graph: OrientedHypergraph, zeta: str) -> CommandResult:
        return self._document_output(switch(graph, SwitchingFunction.parse(zeta)))

    def delete_vertex(self, graph: OrientedHypergraph, label: str) -> CommandResult:
        labels = [graph.vertex_label(i) for i in range(graph.n)]
        if label not in labels:
            raise UsageError(f"Unknown vertex label {label!r}")
        return self._document_output(weak_delete_vertex(graph, labels.index(label)).graph)

    def delete_edge(self, graph: OrientedHypergraph, label: str) -> CommandResult:
        labels = [graph.edge_label(j) for j in range(graph.m)]
        if label not in labels:
            raise UsageError(f"Unknown edge label {label!r}")
        return self._document_output(weak_delete_edge(graph, labels.index(label)).graph)

    def _report_model(self, report: BoundReport) -> BoundReportModel:
        return BoundReportModel(
            name=report.name,
            relation=report.relation.value,
            context=report.context,
            holds=report.holds,
            skipped=report.skipped,
            lhs=self._optional(report.lhs),
            rhs=self._optional(report.rhs),
            value=self._optional(report.value),
            slack=self._optional(report.slack),
            reason=report.reason,
        )

    def _report_line(self, report: BoundReport) -> str:
        if report.skipped:
            return f"SKIP  {report.name}  {report.context}  ({report.reason})"
        verdict = "HOLDS" if report.holds else "FAILS"
        return (
            f"{verdict} {report.name}  {report.context}  "
            f"lhs={self.format_float(report.lhs)} rhs={self.format_float(report.rhs)} "
            f"slack={self.format_float(report.slack)}"
        )

    def verify(
        self,
        graph: OrientedHypergraph,
        only: str | None = None,
        moment_orders: Sequence[int] | None = None,
        output_format: OutputFormat = OutputFormat.JSON,
    ) -> CommandResult:
        orders = tuple(moment_orders or self.settings.DEFAULT_MOMENT_ORDERS)
        reports = verify_all(
            graph,
            moment_orders=orders,
            max_deletions=self.settings.INTERLACING_DELETION_LIMIT,
            only=only,
        )
        exit_code = ExitCode.OK if all_hold(reports) else ExitCode.VIOLATION

        if output_format == OutputFormat.TEXT:
            output = "".join(f"{self._report_line(r)}\n" for r in reports)
        else:
            models = [self._report_model(report) for report in reports]
            output = _REPORT_LIST.dump_json(models, indent=2).decode("utf-8") + "\n"
        return CommandResult(output, exit_code)

    def cospectral(
        self,
        first: OrientedHypergraph,
        second: OrientedHypergraph,
        matrix: MatrixKind = MatrixKind.LAPLACIAN,
        nonzero: bool = False,
    ) -> CommandResult:
        a, b = self._spectrum(first, matrix), self._spectrum(second, matrix)
        tol = default_tolerance(a, b)
        if nonzero:
            a, b = nonzero_spectrum(a, tol), nonzero_spectrum(b, tol)

        verdict = CospectralVerdict(
            matrix=matrix.value,
            nonzero=nonzero,
            cospectral=a.n == b.n and is_cospectral(a, b, tol),
            first=self._rounded(a),
            second=self._rounded(b),
        )
        return CommandResult(verdict.model_dump_json(indent=2) + "\n")

    def switch_equiv(
        self, first: OrientedHypergraph, second: OrientedHypergraph
    ) -> CommandResult:
        witness = switching_equivalent(
            first, second, limit=self.settings.SWITCHING_SEARCH_LIMIT
        )
        report = SwitchWitnessReport(
            found=witness.found,
            zeta=list(witness.zeta.signs) if witness.zeta is not None else None,
        )
        return CommandResult(report.model_dump_json(indent=2) + "\n")

    def random(self, cfg: GeneratorConfig) -> CommandResult:
        return self._document_output(random_instance(cfg))

    def _find_report(self, find: CospectralFind) -> CospectralFindReport:
        return CospectralFindReport(
            trial=find.trial,
            kind=find.kind.value,
            switching_equivalent=find.switching_equivalent,
            dual_related=find.dual_related,
            first_spectrum=self._rounded(laplacian_spectrum(find.first)),
            second_spectrum=self._rounded(laplacian_spectrum(find.second)),
            first=self.codec.to_document(find.first),
            second=self.codec.to_document(find.second),
        )

    def hunt(
        self,
        cfg: GeneratorConfig,
        trials: int,
        partner: GeneratorConfig | None = None,
        include_dual_related: bool = False,
        workers: int | None = None,
    ) -> CommandResult:
        finds = cospectral_pair_search(
            cfg,
            trials,
            partner=partner,
            include_dual_related=include_dual_related,
            workers=workers or self.settings.HUNT_WORKERS,
        )
        logger.info(f"Hunt produced {len(finds)} finds")
        lines = [self._find_report(find).model_dump_json() for find in finds]
        return CommandResult("".join(f"{line}\n" for line in lines))
