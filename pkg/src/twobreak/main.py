"""Entrypoint for the ``twobreak`` command line."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from .config import settings
from .handlers.circle import router as circle_router
from .handlers.distance import router as distance_router
from .handlers.generate import router as generate_router
from .handlers.mcps import router as mcps_router
from .handlers.oracle import router as oracle_router
from .handlers.router import CommandContext, render
from .logging import setup_logging
from .services.circle import CircleError
from .services.colored_cost import ColoringError, ZeroCostError
from .services.genome import DcjError, GenomeError
from .services.genome_mcps import BreakpointStructureError
from .services.graph import GraphError, InstanceCapError
from .services.hardness import ReductionError
from .services.scenario import ScenarioError
from .services.simple_cycle import SimpleCycleError
from .utils.assignment import AssignmentError
from .utils.formats import FormatError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CAP = 2

_DOMAIN_ERRORS = (
    AssignmentError,
    BreakpointStructureError,
    CircleError,
    ColoringError,
    DcjError,
    FormatError,
    GenomeError,
    GraphError,
    ReductionError,
    ScenarioError,
    SimpleCycleError,
    ValueError,
    ZeroCostError,
)


def _positive(raw: str) -> int:
    value = int(raw)
    if value < 1:
        msg = f"pozitif bir tam sayı bekleniyordu: {raw}"
        raise argparse.ArgumentTypeError(msg)
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twobreak",
        description="Renkli 2-break ve DCJ senaryoları: uzaklık, maliyet, tutumlu senaryolar.",
    )
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--cap", type=_positive, help="Kesin aramalar için kenar sınırı")
    parser.add_argument("--jobs", type=_positive, help="Ağırlık tablosu için süreç sayısı")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING, ...")

    subparsers = parser.add_subparsers(dest="command", required=True)
    distance_router.register(subparsers)
    mcps_router.register(subparsers)
    circle_router.register(subparsers)
    oracle_router.register(subparsers)
    generate_router.register(subparsers)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code."""

    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID

    setup_logging(args.log_level or settings.log_level, settings.log_directory)
    context = CommandContext(settings=settings, cap=args.cap, jobs=args.jobs or settings.jobs)

    try:
        result = args.handler(args, context)
    except InstanceCapError as exc:
        logger.error("%s: %s", args.command, exc)
        print(f"twobreak: {exc}", file=sys.stderr)
        return EXIT_CAP
    except _DOMAIN_ERRORS as exc:
        logger.error("%s: %s", args.command, exc)
        print(f"twobreak: {exc}", file=sys.stderr)
        return EXIT_INVALID

    sys.stdout.write(render(result, args.format))
    return EXIT_OK


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    try:
        main()
    except KeyboardInterrupt:
        pass
