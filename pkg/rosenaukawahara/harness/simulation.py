"""
Simulation setup shared by the harness commands.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ..diagnostics.energy_diagnostics import error_report
from ..errors import ConfigParseError
from ..exact.exact_solutions import (
    as_exact_solution,
    default_branch,
    initial_condition,
    solve_ansatz,
)
from ..mesh.mesh_ops import zeros
from ..solvers.scheme import run
from ..structures.ansatz_kinds import AnsatzBranch, AnsatzKind
from ..types.mesh_types import (
    AnsatzSolution,
    ErrorReport,
    ExactSolution,
    Grid,
    MeshFn,
    SimOutput,
)
from .config import RunConfig
from .csv_artifacts import read_solution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Simulation:
    """A configuration with its grid, initial level and, when known, exact solution."""

    config: RunConfig
    grid: Grid
    U0: MeshFn
    ansatz: Optional[AnsatzSolution] = None

    @property
    def exact(self) -> Optional[ExactSolution]:
        return as_exact_solution(self.ansatz) if self.ansatz is not None else None


def resolve_branch(config: RunConfig) -> AnsatzBranch:
    """Branch named in the config, or the unique solitary one for ``auto``."""
    if config.branch == "auto":
        return default_branch(config.params)
    return AnsatzBranch(config.branch)


def prepare(config: RunConfig) -> Simulation:
    """
    Builds the grid and the initial level of a configuration.

    Raises:
        ConfigParseError: If the initial-condition source is unusable
        AnsatzError: If the ansatz has no solitary solution for these coefficients
    """
    grid = config.grid()
    if config.initial == "zero":
        return Simulation(config=config, grid=grid, U0=zeros(grid))
    if config.initial == "ansatz":
        ansatz = solve_ansatz(config.params, resolve_branch(config))
        if ansatz.kind is not AnsatzKind.SOLITARY:
            raise ConfigParseError(
                "branch", f"{config.branch} branch gives a {ansatz.kind.value} wave"
            )
        return Simulation(
            config=config, grid=grid, U0=initial_condition(ansatz, grid), ansatz=ansatz
        )
    return Simulation(config=config, grid=grid, U0=read_solution(config.initial, grid))


def execute(simulation: Simulation, verify_residual: bool = False) -> SimOutput:
    """Runs the scheme on a prepared simulation."""
    config = simulation.config
    return run(
        simulation.U0,
        config.params,
        simulation.grid,
        config.time_grid(),
        snapshot_stride=config.snapshot_stride,
        bootstrap_tol=config.bootstrap_tol,
        bootstrap_max_iter=config.bootstrap_max_iter,
        verify_residual=verify_residual,
    )


def final_errors(simulation: Simulation, output: SimOutput) -> Optional[ErrorReport]:
    """Errors of the last level against the exact solution at the realized time."""
    exact = simulation.exact
    if exact is None or output.final_state is None:
        return None
    t, U = output.final_state
    return error_report(U, exact, t)
