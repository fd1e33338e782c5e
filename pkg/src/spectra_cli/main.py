import argparse
import sys
from collections.abc import Sequence
from dataclasses import replace

from loguru import logger
from oriented_hypergraph_spectra import BOUND_NAMES, GeneratorConfig
from oriented_hypergraph_spectra.errors import HypergraphSpectraError

from .app.core.config import Settings, get_settings
from .app.core.dependencies import get_command_service
from .app.services.domain import (
    CliError,
    CommandResult,
    ExitCode,
    MatrixKind,
    OutputFormat,
    UsageError,
)


class CliArgumentParser(argparse.ArgumentParser):
    """Reports bad flags as UsageError so they map to exit code 1."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def configure_logging(settings: Settings) -> None:
    logger.remove()
    logger.add(sys.stderr, level=settings.LOG_LEVEL)
    if settings.absolute_log_file is not None:
        logger.add(settings.absolute_log_file, level=settings.LOG_LEVEL)


def _add_generator_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, required=True, help="64-bit PRNG seed")
    parser.add_argument("--n", type=int, required=True, help="Number of vertices")
    parser.add_argument("--m", type=int, required=True, help="Number of edges")
    parser.add_argument("--size-min", type=int, default=2, help="Smallest edge size")
    parser.add_argument("--size-max", type=int, default=3, help="Largest edge size")
    parser.add_argument(
        "--p-neg", type=float, default=0.5, help="Probability of a -1 incidence"
    )


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog="hyperspec",
        description="Matrices, spectra and eigenvalue bounds of oriented hypergraphs.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    formats = [f.value for f in OutputFormat]
    kinds = [k.value for k in MatrixKind]

    matrices = commands.add_parser("matrices", help="Print H, A, D and L")
    matrices.add_argument("file")
    matrices.add_argument("--which", choices=["H", "A", "D", "L", "all"], default="all")
    matrices.add_argument("--format", choices=formats, default=OutputFormat.TEXT.value)

    spectrum = commands.add_parser("spectrum", help="Print eigenvalues, largest first")
    spectrum.add_argument("file")
    spectrum.add_argument("--matrix", choices=kinds, default=MatrixKind.LAPLACIAN.value)
    spectrum.add_argument("--format", choices=formats, default=OutputFormat.TEXT.value)

    dual = commands.add_parser("dual", help="Print the incidence dual")
    dual.add_argument("file")

    switch = commands.add_parser("switch", help="Apply a switching function")
    switch.add_argument("file")
    switch.add_argument(
        "--zeta",
        required=True,
        help="Comma-separated signs in vertex order; write --zeta=-,+ when it starts with -",
    )

    delete_vertex = commands.add_parser("delete-vertex", help="Weakly delete a vertex")
    delete_vertex.add_argument("file")
    delete_vertex.add_argument("--v", required=True, dest="label")

    delete_edge = commands.add_parser("delete-edge", help="Weakly delete an edge")
    delete_edge.add_argument("file")
    delete_edge.add_argument("--e", required=True, dest="label")

    verify = commands.add_parser("verify", help="Check every eigenvalue bound")
    verify.add_argument("file")
    verify.add_argument("--only", choices=BOUND_NAMES)
    verify.add_argument(
        "--k", type=int, action="append", dest="moment_orders", help="Moment order"
    )
    verify.add_argument("--format", choices=formats, default=OutputFormat.JSON.value)

    cospectral = commands.add_parser("cospectral", help="Compare two spectra")
    cospectral.add_argument("first")
    cospectral.add_argument("second")
    cospectral.add_argument("--matrix", choices=kinds, default=MatrixKind.LAPLACIAN.value)
    cospectral.add_argument("--nonzero", action="store_true")

    switch_equiv = commands.add_parser(
        "switch-equiv", help="Search for a switching function between two documents"
    )
    switch_equiv.add_argument("first")
    switch_equiv.add_argument("second")

    random = commands.add_parser("random", help="Print a seeded random instance")
    _add_generator_flags(random)

    hunt = commands.add_parser("hunt", help="Search for cospectral pairs")
    _add_generator_flags(hunt)
    hunt.add_argument("--trials", type=int, required=True)
    hunt.add_argument("--partner-n", type=int, help="Vertex count of the second instance")
    hunt.add_argument("--partner-m", type=int, help="Edge count of the second instance")
    hunt.add_argument("--include-dual", action="store_true")
    hunt.add_argument("--workers", type=int)

    return parser


def _generator_config(args: argparse.Namespace) -> GeneratorConfig:
    return GeneratorConfig(
        seed=args.seed,
        n=args.n,
        m=args.m,
        edge_size_min=args.size_min,
        edge_size_max=args.size_max,
        p_negative=args.p_neg,
    )


def _partner_config(
    args: argparse.Namespace, cfg: GeneratorConfig
) -> GeneratorConfig | None:
    if args.partner_n is None and args.partner_m is None:
        return None
    return replace(
        cfg,
        n=cfg.n if args.partner_n is None else args.partner_n,
        m=cfg.m if args.partner_m is None else args.partner_m,
    )


def run(args: argparse.Namespace) -> CommandResult:
    service = get_command_service()
    read = service.codec.read

    match args.command:
        case "matrices":
            return service.matrices(read(args.file), args.which, OutputFormat(args.format))
        case "spectrum":
            return service.spectrum(
                read(args.file), MatrixKind(args.matrix), OutputFormat(args.format)
            )
        case "dual":
            return service.dual(read(args.file))
        case "switch":
            return service.switch(read(args.file), args.zeta)
        case "delete-vertex":
            return service.delete_vertex(read(args.file), args.label)
        case "delete-edge":
            return service.delete_edge(read(args.file), args.label)
        case "verify":
            return service.verify(
                read(args.file),
                only=args.only,
                moment_orders=args.moment_orders,
                output_format=OutputFormat(args.format),
            )
        case "cospectral":
            return service.cospectral(
                read(args.first), read(args.second), MatrixKind(args.matrix), args.nonzero
            )
        case "switch-equiv":
            return service.switch_equiv(read(args.first), read(args.second))
        case "random":
            return service.random(_generator_config(args))
        case "hunt":
            cfg = _generator_config(args)
            return service.hunt(
                cfg,
                args.trials,
                partner=_partner_config(args, cfg),
                include_dual_related=args.include_dual,
                workers=args.workers,
            )
    raise UsageError(f"Unknown command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    configure_logging(get_settings())

    try:
        args = build_parser().parse_args(argv)
        logger.info(f"Running {args.command}")
        result = run(args)
    except (CliError, ValueError) as e:
        logger.debug(f"Input error: {e!r}")
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.INPUT_ERROR
    except HypergraphSpectraError as e:
        logger.opt(exception=True).error(f"Command failed: {e}")
        return ExitCode.INPUT_ERROR

    sys.stdout.write(result.output)
    if result.exit_code == ExitCode.VIOLATION:
        logger.warning("At least one bound is violated")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
