"""
Energy and Error Diagnostics

Discrete energy functional of the three-level scheme, error norms against an
exact solution, and conservation reporting.
"""

import logging
import math
from typing import List, Sequence, Tuple

import numpy as np

from ..errors import EmptySeriesError, GridMismatchError
from ..mesh.mesh_ops import apply_diff, difference_norm, norm_l2, norm_max, sample
from ..structures.diff_op_kind import DiffOpKind
from ..types.mesh_types import (
    EnergyRecord,
    ErrorReport,
    ExactSolution,
    Grid,
    MeshFn,
    Scalar,
    Time,
)

logger = logging.getLogger(__name__)


def quadratic_form(U: MeshFn, alpha: Scalar, lam: Scalar) -> Scalar:
    """||U||^2 + alpha ||U_x||^2 + lam ||U_{x xbar}||^2."""
    return (
        norm_l2(U) ** 2
        + alpha * difference_norm(DiffOpKind.FORWARD, U) ** 2
        + lam * difference_norm(DiffOpKind.SECOND, U) ** 2
    )


def discrete_energy(U_n: MeshFn, U_np1: MeshFn, alpha: Scalar, lam: Scalar) -> Scalar:
    """
    Discrete energy E^n of two consecutive levels.

    Args:
        U_n: Level n
        U_np1: Level n + 1
        alpha: Coefficient of the first-difference norm
        lam: Coefficient of the second-difference norm

    Returns:
        (Q(U^{n+1}) + Q(U^n)) / 2 with Q the quadratic form above

    Raises:
        GridMismatchError: If the levels live on different grids
    """
    if U_n.grid != U_np1.grid:
        raise GridMismatchError(f"Grids differ: {U_n.grid} vs {U_np1.grid}")
    return 0.5 * (quadratic_form(U_np1, alpha, lam) + quadratic_form(U_n, alpha, lam))


def sup_norms(U: MeshFn) -> Tuple[Scalar, Scalar]:
    """(||U||_inf, ||U_x||_inf) over i = 1 ... M-1."""
    return norm_max(U), norm_max(apply_diff(DiffOpKind.FORWARD, U, project=False))


def exact_energy(
    exact: ExactSolution, grid: Grid, t: Time, alpha: Scalar, lam: Scalar
) -> Scalar:
    """Energy E(t) of an exact solution, via the quadratic form of its samples."""
    return quadratic_form(sample(grid, lambda x: exact(x, t)), alpha, lam)


def error_report(U: MeshFn, exact: ExactSolution, t: Time) -> ErrorReport:
    """
    Errors of U against u(., t) over the interior nodes i = 1 ... M-1.

    Args:
        U: Numerical solution
        exact: Vectorized exact solution u(x, t)
        t: Time the solution belongs to

    Returns:
        L2 and max norms of u - U
    """
    grid = U.grid
    x = grid.nodes[2 : grid.M + 1]
    error = np.asarray(exact(x, t), dtype=np.float64) - U.interior
    return ErrorReport(
        time=t,
        l2_error=math.sqrt(grid.h * float(np.dot(error, error))),
        max_error=float(np.max(np.abs(error))) if error.size else 0.0,
    )


def drift(series: Sequence[EnergyRecord]) -> Scalar:
    """
    Largest relative departure max_n |E^n - E^0| / |E^0|.

    Raises:
        EmptySeriesError: If the series is empty
    """
    if not series:
        raise EmptySeriesError("Energy series is empty")
    reference = series[0].E
    deviation = max(abs(record.E - reference) for record in series)
    if reference == 0.0:
        return 0.0 if deviation == 0.0 else math.inf
    return deviation / abs(reference)


def energy_table(series: Sequence[EnergyRecord], every: Time) -> List[EnergyRecord]:
    """
    Rows of an energy audit: the first record and those at t = k*every - tau/2.

    Args:
        series: Energy records at midpoint times (n + 1/2) tau
        every: Sampling period S of the audit

    Returns:
        The selected records, in time order
    """
    if not series:
        raise EmptySeriesError("Energy series is empty")
    if len(series) == 1:
        return [series[0]]
    tau = series[1].time - series[0].time
    rows = [series[0]]
    for record in series[1:]:
        # (n + 1) tau is a multiple of every
        level_end = record.time + 0.5 * tau
        ratio = level_end / every
        if abs(ratio - round(ratio)) < 1e-9 * max(1.0, ratio):
            rows.append(record)
    return rows
