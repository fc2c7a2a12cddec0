"""
Harness Commands

One function per CLI subcommand. Each writes its artifacts, prints a short
report to ``out`` and returns its result; exceptions propagate to the CLI,
which maps them to exit codes.
"""

import asyncio
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Union

from ..diagnostics.energy_diagnostics import drift, energy_table
from ..exact.exact_solutions import classify_branches, residual_oracle, solve_ansatz
from ..structures.ansatz_kinds import AnsatzBranch
from ..structures.refinement_axis import RefinementAxis
from ..types.mesh_types import (
    AnsatzSolution,
    ConvergenceTable,
    EnergyRecord,
    Scalar,
    SchemeParams,
    SimOutput,
)
from .config import RunConfig
from .convergence import ConvergenceStudy
from .csv_artifacts import (
    solution_filename,
    write_convergence,
    write_energy,
    write_solution,
)
from .property_suite import PropertySuite, SuiteResult
from .simulation import execute, final_errors, prepare

logger = logging.getLogger(__name__)

# Sampling period of the energy audit
DEFAULT_AUDIT_EVERY = 20.0


def _format_rate(rate: Optional[Scalar]) -> str:
    return "-" if rate is None else f"{rate:.3f}"


def cmd_simulate(config: RunConfig, out: TextIO = sys.stdout) -> SimOutput:
    """
    Runs one simulation and writes its artifacts to ``config.out_dir``.

    Files:
        solution_<t>.csv for every snapshot, energy.csv, summary.txt
    """
    simulation = prepare(config)
    output = execute(simulation)
    out_dir = Path(config.out_dir)
    for t, U in output.snapshots:
        write_solution(out_dir / solution_filename(t), U)
    write_energy(out_dir / "energy.csv", output.energy_series)

    lines = [
        f"M = {config.M}, h = {config.h!r}, tau = {config.tau!r}, N = {config.N}",
        f"final time = {config.realized_T!r}",
        f"E0 = {output.energy_series[0].E!r}",
        f"energy drift = {drift(output.energy_series):.3e}",
    ]
    if output.bootstrap_report is not None:
        lines.append(
            f"bootstrap iterations = {output.bootstrap_report.iterations}, "
            f"residual = {output.bootstrap_report.residual:.3e}"
        )
    report = final_errors(simulation, output)
    if report is not None:
        lines.append(f"l2 error = {report.l2_error!r}")
        lines.append(f"max error = {report.max_error!r}")
    summary = "\n".join(lines) + "\n"
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "summary.txt").write_text(summary, encoding="utf-8")
    out.write(summary)
    return output


def cmd_converge(
    config: RunConfig,
    axis: RefinementAxis,
    levels: Sequence[Scalar],
    workers: int = 1,
    out: TextIO = sys.stdout,
) -> ConvergenceTable:
    """
    Runs a refinement ladder and writes ``convergence_<axis>.csv``.

    Args:
        config: Base configuration; fixes the parameter that is not refined
        axis: Spatial (levels are h) or temporal (levels are tau)
        levels: The ladder, coarsest first
        workers: Levels run at the same time
        out: Report stream
    """
    study = ConvergenceStudy(config, axis).set_levels(levels).set_workers(workers)
    table = asyncio.run(study.run_async())
    write_convergence(Path(config.out_dir) / f"convergence_{axis.value}.csv", table)

    name = "h" if axis is RefinementAxis.SPATIAL else "tau"
    out.write(f"{name:>8} {'l2 error':>12} {'rate':>7} {'max error':>12} {'rate':>7}\n")
    for row in table.rows:
        out.write(
            f"{row.param:>8g} {row.l2_error:>12.4e} {_format_rate(row.l2_rate):>7} "
            f"{row.max_error:>12.4e} {_format_rate(row.max_rate):>7}\n"
        )
    return table


def cmd_property_check(
    seed: int = 0, samples: int = 200, size: int = 64, out: TextIO = sys.stdout
) -> List[SuiteResult]:
    """Runs every property suite and prints one pass/fail line per suite."""
    results = PropertySuite(seed=seed, samples=samples, size=size).run()
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        out.write(
            f"{status} {result.name}: worst {result.worst:.3e} "
            f"(tolerance {result.tolerance:.0e}, {result.checks} checks)\n"
        )
    return results


def cmd_exact_info(
    params: SchemeParams, branch: AnsatzBranch, out: TextIO = sys.stdout
) -> AnsatzSolution:
    """
    Prints the ansatz parameters of one branch and their residuals.

    The branch is classified even when its amplitude has no real value; A is
    then reported as undefined and the residuals are skipped.
    """
    kinds = classify_branches(params)
    solution = solve_ansatz(params, branch)
    plus, minus = solution.Bsq_roots
    out.write(
        f"eta = {solution.eta!r}\n"
        f"B^2 roots: plus = {plus!r} ({kinds[AnsatzBranch.PLUS].value}), "
        f"minus = {minus!r} ({kinds[AnsatzBranch.MINUS].value})\n"
        f"branch = {branch.value}, kind = {solution.kind.value}\n"
        f"B^2 = {solution.Bsq!r}\n"
        f"B0 = {solution.B0!r}\n"
        f"v = {solution.v!r}\n"
    )
    if solution.A is None:
        out.write(f"A = undefined ({solution.amplitude_note})\n")
        return solution
    residuals = residual_oracle(solution, params)
    out.write(
        f"A = {solution.A!r}\n"
        f"residuals = {residuals[0]:.3e}, {residuals[1]:.3e}, {residuals[2]:.3e}\n"
    )
    return solution


def cmd_energy_audit(
    config: RunConfig,
    every: Scalar = DEFAULT_AUDIT_EVERY,
    out: TextIO = sys.stdout,
) -> List[EnergyRecord]:
    """
    Runs a simulation and writes the sampled energy rows to ``energy_audit.csv``.

    Returns:
        The rows at 0.5 tau and at k*every - tau/2
    """
    output = execute(prepare(config))
    rows = energy_table(output.energy_series, every)
    target: Union[str, Path] = Path(config.out_dir) / "energy_audit.csv"
    write_energy(target, rows)
    for record in rows:
        out.write(f"{record.time:>10.4g} {record.E!r}\n")
    out.write(f"drift = {drift(output.energy_series):.3e}\n")
    return rows
