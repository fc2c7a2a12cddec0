"""
Command-line front end.

    rosenaukawahara simulate <config>
    rosenaukawahara converge <config> --axis spatial|temporal --levels 0.8,0.4,0.2,0.1
    rosenaukawahara exact-info <config> [--branch plus|minus]
    rosenaukawahara energy-audit <config> [--every 20]
    rosenaukawahara property-check [--seed S] [--samples N] [--size M]
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence, TextIO

from ..errors import AnsatzError, ConfigParseError, NumericalFailure, RosenauKawaharaError
from ..structures.ansatz_kinds import AnsatzBranch
from ..structures.exit_codes import ExitCode
from ..structures.refinement_axis import RefinementAxis
from .commands import (
    DEFAULT_AUDIT_EVERY,
    cmd_converge,
    cmd_energy_audit,
    cmd_exact_info,
    cmd_property_check,
    cmd_simulate,
)
from .config import parse_config
from .simulation import resolve_branch

logger = logging.getLogger(__name__)


def _levels(text: str) -> List[float]:
    try:
        levels = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"invalid level list {text!r}") from error
    if not levels:
        raise argparse.ArgumentTypeError("at least one level is needed")
    return levels


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rosenaukawahara",
        description="Conservative finite-difference solver for the generalized "
        "Rosenau-Kawahara-RLW equation",
    )
    parser.add_argument(
        "--log-level",
        default="INFO",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging verbosity (default: INFO)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    simulate = commands.add_parser("simulate", help="Run one simulation")
    simulate.add_argument("config", help="Configuration file")

    converge = commands.add_parser("converge", help="Run a mesh refinement study")
    converge.add_argument("config", help="Configuration file")
    converge.add_argument(
        "--axis", required=True, choices=[axis.value for axis in RefinementAxis]
    )
    converge.add_argument(
        "--levels", required=True, type=_levels, help="Comma-separated h or tau values"
    )
    converge.add_argument("--workers", type=int, default=1, help="Levels run concurrently")

    exact = commands.add_parser("exact-info", help="Print the solitary-wave parameters")
    exact.add_argument("config", help="Configuration file")
    exact.add_argument(
        "--branch",
        choices=[branch.value for branch in AnsatzBranch],
        default=None,
        help="Root of the wavenumber formula (default: the config branch)",
    )

    audit = commands.add_parser("energy-audit", help="Tabulate the discrete energy")
    audit.add_argument("config", help="Configuration file")
    audit.add_argument(
        "--every", type=float, default=DEFAULT_AUDIT_EVERY, help="Sampling period"
    )

    check = commands.add_parser("property-check", help="Run the randomized property suites")
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--samples", type=int, default=200)
    check.add_argument("--size", type=int, default=64, help="Cells M of the random grids")
    return parser


def _dispatch(args: argparse.Namespace, out: TextIO) -> ExitCode:
    if args.command == "property-check":
        results = cmd_property_check(args.seed, args.samples, args.size, out=out)
        return (
            ExitCode.SUCCESS
            if all(result.passed for result in results)
            else ExitCode.PROPERTY_FAILURE
        )

    config = parse_config(args.config)
    if args.command == "simulate":
        cmd_simulate(config, out=out)
    elif args.command == "converge":
        cmd_converge(
            config, RefinementAxis(args.axis), args.levels, workers=args.workers, out=out
        )
    elif args.command == "exact-info":
        branch = AnsatzBranch(args.branch) if args.branch else resolve_branch(config)
        cmd_exact_info(config.params, branch, out=out)
    else:
        cmd_energy_audit(config, every=args.every, out=out)
    return ExitCode.SUCCESS


def main(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout) -> int:
    """
    Entry point.

    Returns:
        0 on success, 1 for usage or configuration errors, 2 for numerical
        failures, 3 when a property suite fails
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return ExitCode.SUCCESS if error.code == 0 else ExitCode.USAGE_ERROR

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logging.captureWarnings(True)

    try:
        return _dispatch(args, out)
    except (ConfigParseError, AnsatzError) as error:
        print(f"error: {error}", file=sys.stderr)
        return ExitCode.USAGE_ERROR
    except NumericalFailure as error:
        print(f"numerical failure: {error}", file=sys.stderr)
        return ExitCode.NUMERICAL_FAILURE
    except (RosenauKawaharaError, ValueError) as error:
        print(f"error: {error}", file=sys.stderr)
        return ExitCode.USAGE_ERROR
