"""
Three-Level Linearly Implicit Scheme

Assembles and solves one step of the conservative three-level scheme for the
generalized Rosenau-Kawahara-RLW equation

    u_t - alpha u_xxt + lam u_xxxxt + a u_x + b u^m u_x + c u_xxx - nu u_xxxxx = 0

with homogeneous boundary conditions, the nonlinear Crank-Nicolson bootstrap
for the first level, and the driver that records energy and max norms.

Unknowns are the values at i = 2 ... M-2 (array slice [3:M]); the other
entries of every level are the forced zeros of Z0h.

Both solves are written for the increment against the older level, so the
mass operator, whose entries grow like lam / (tau h^4), only ever acts on a
small vector and the right-hand side carries no cancelling mass term:

    three-level:  (1/(2 tau) mass + spatial(., P)) D = -2 spatial(U^{n-1}, P),
                  U^{n+1} = U^{n-1} + D
    bootstrap:    (1/tau mass + spatial(., Q)) D = -2 spatial(U^0, Q),
                  V = U^0 + D
"""

import logging
import time
from typing import Optional, Tuple

import numpy as np

from ..diagnostics.energy_diagnostics import discrete_energy, sup_norms
from ..errors import BootstrapNonConvergenceError, NotInZ0hError, StepResidualError
from ..linalg.banded_linalg import BandedMatrix, lu_factor, solve
from ..mesh.mesh_ops import in_z0h, stencil_values
from ..structures.diff_op_kind import DiffOpKind
from ..structures.stencil_coefficients import StencilHelper
from ..types.mesh_types import (
    BootstrapReport,
    EnergyRecord,
    Grid,
    MeshFn,
    Scalar,
    SchemeParams,
    SimOutput,
    SimState,
    SupNormRecord,
    TimeGrid,
    Vector,
)

logger = logging.getLogger(__name__)

# Half-bandwidth of the assembled matrix (reach of the fifth difference)
BANDWIDTH = 3

DEFAULT_BOOTSTRAP_TOL = 1e-12
DEFAULT_BOOTSTRAP_MAX_ITER = 50

# Pointwise residual bound of a verified step, relative to the row magnitude
STEP_RESIDUAL_TOLERANCE = 1e-9

EPSILON = float(np.finfo(np.float64).eps)


def nonlinear_coefficient(values: Vector, m: int) -> Vector:
    """Pointwise field P = values^m."""
    return np.power(values, m)


def _beta(p: SchemeParams) -> Scalar:
    return p.b / (2.0 * (p.m + 2))


def mass_operator(U: MeshFn, p: SchemeParams) -> Vector:
    """(I - alpha Second + lam Fourth) U on raw stencil values."""
    h = U.grid.h
    return (
        U.values
        - p.alpha * stencil_values(DiffOpKind.SECOND, U.values, h)
        + p.lam * stencil_values(DiffOpKind.FOURTH, U.values, h)
    )


def spatial_operator(U: MeshFn, P: Vector, p: SchemeParams) -> Vector:
    """
    Linearized spatial part of the scheme.

    Args:
        U: Mesh function the operator acts on
        P: Frozen nonlinear coefficient field, one value per node
        p: Equation coefficients

    Returns:
        1/2 (a Central + c Third - nu Fifth) U + beta (P Central(U) + Central(P U))
        with beta = b / (2(m + 2)), on raw stencil values
    """
    h = U.grid.h
    u = U.values
    linear = 0.5 * (
        p.a * stencil_values(DiffOpKind.CENTRAL, u, h)
        + p.c * stencil_values(DiffOpKind.THIRD, u, h)
        - p.nu * stencil_values(DiffOpKind.FIFTH, u, h)
    )
    nonlinear = P * stencil_values(DiffOpKind.CENTRAL, u, h) + stencil_values(
        DiffOpKind.CENTRAL, P * u, h
    )
    return linear + _beta(p) * nonlinear


def _unknowns(grid: Grid) -> slice:
    return slice(3, grid.M)


def _assemble(P: Vector, p: SchemeParams, g: Grid, time_weight: Scalar) -> BandedMatrix:
    """time_weight * mass_operator + spatial_operator(., P) on the unknowns."""
    n = g.M - 3
    h = g.h
    matrix = BandedMatrix.zeros(n, BANDWIDTH, BANDWIDTH)
    band = matrix.band

    def add(kind: DiffOpKind, factor: Scalar) -> None:
        for offset, weight in StencilHelper.get_weights(kind, h).items():
            band[:, offset + BANDWIDTH] += factor * weight

    band[:, BANDWIDTH] += time_weight
    add(DiffOpKind.SECOND, -time_weight * p.alpha)
    add(DiffOpKind.FOURTH, time_weight * p.lam)
    add(DiffOpKind.CENTRAL, 0.5 * p.a)
    add(DiffOpKind.THIRD, 0.5 * p.c)
    add(DiffOpKind.FIFTH, -0.5 * p.nu)

    # P_i U_x^ + (P U)_x^ at row i: the diagonal terms cancel
    beta = _beta(p)
    P_i = P[3 : g.M]
    P_right = P[4 : g.M + 1]
    P_left = P[2 : g.M - 1]
    band[:, BANDWIDTH + 1] += beta * (P_i + P_right) / (2.0 * h)
    band[:, BANDWIDTH - 1] -= beta * (P_i + P_left) / (2.0 * h)

    # columns of the eliminated boundary unknowns
    for offset in range(1, BANDWIDTH + 1):
        band[:offset, BANDWIDTH - offset] = 0.0
        band[n - offset :, BANDWIDTH + offset] = 0.0
    return matrix


def assemble_lhs(U_n: MeshFn, p: SchemeParams, g: Grid, tau: Scalar) -> BandedMatrix:
    """
    Matrix of the three-level step for the unknown U^{n+1}.

    Args:
        U_n: Current level, supplies the frozen field P = (U^n)^m
        p: Equation coefficients
        g: Grid
        tau: Time step

    Returns:
        Banded matrix of size M-3 with kl = ku = 3
    """
    return _assemble(nonlinear_coefficient(U_n.values, p.m), p, g, 1.0 / (2.0 * tau))


def _rhs(U_prev: MeshFn, P: Vector, p: SchemeParams, g: Grid, time_weight: Scalar) -> Vector:
    full = time_weight * mass_operator(U_prev, p) - spatial_operator(U_prev, P, p)
    return full[_unknowns(g)]


def assemble_rhs(
    U_prev: MeshFn, U_n: MeshFn, p: SchemeParams, g: Grid, tau: Scalar
) -> Vector:
    """
    Right-hand side of the three-level step on the unknowns i = 2 ... M-2.

    Returns:
        (1/(2 tau)) mass(U^{n-1}) - spatial(U^{n-1}, (U^n)^m)
    """
    return _rhs(U_prev, nonlinear_coefficient(U_n.values, p.m), p, g, 1.0 / (2.0 * tau))


def embed(g: Grid, unknowns: Vector) -> MeshFn:
    """Mesh function in Z0h carrying ``unknowns`` at i = 2 ... M-2."""
    values = np.zeros(g.size)
    values[_unknowns(g)] = unknowns
    return MeshFn(g, values)


def require_z0h(U: MeshFn, name: str) -> None:
    """
    Checks that a time level lies in Z0h.

    Raises:
        NotInZ0hError: If U does not vanish at i = -1, 0, 1, M-1, M, M+1
    """
    if not in_z0h(U):
        M = U.grid.M
        ends = np.concatenate((U.values[:3], U.values[M:]))
        raise NotInZ0hError(
            f"{name} violates the boundary conditions: values at i = -1, 0, 1, "
            f"M-1, M, M+1 are {ends.tolist()}; build it with sample() or project_z0h()"
        )


def _increment_rhs(U_prev: MeshFn, P: Vector, p: SchemeParams, g: Grid) -> Vector:
    return -2.0 * spatial_operator(U_prev, P, p)[_unknowns(g)]


def _check_residual(
    matrix: BandedMatrix, D: MeshFn, P: Vector, p: SchemeParams, time_weight: Scalar, rhs: Vector
) -> None:
    g = D.grid
    applied = time_weight * mass_operator(D, p) + spatial_operator(D, P, p)
    residual = np.abs(applied[_unknowns(g)] - rhs)
    row_scale = np.maximum(1.0, np.abs(matrix.band).sum(axis=1))
    bound = STEP_RESIDUAL_TOLERANCE * (1.0 + float(np.max(np.abs(D.values)))) * row_scale
    worst = int(np.argmax(residual / bound))
    if residual[worst] > bound[worst]:
        raise StepResidualError(
            f"Step residual {residual[worst]:.3e} at unknown {worst} exceeds {bound[worst]:.3e}"
        )


def rounding_floor(matrix: BandedMatrix, time_weight: Scalar, increment: Vector) -> Scalar:
    """
    Change between two Picard iterates that rounding alone can produce:
    eps * ||A||_inf / time_weight * ||D||_inf.

    The spatial part is skew, so (A x, x) >= time_weight ||x||^2 and
    ||A^{-1}|| <= 1 / time_weight.
    """
    row_sum = float(np.max(np.abs(matrix.band).sum(axis=1)))
    return EPSILON * row_sum / time_weight * float(np.max(np.abs(increment), initial=0.0))


def three_level_step(
    state: SimState,
    p: SchemeParams,
    g: Grid,
    tau: Scalar,
    verify_residual: bool = False,
) -> MeshFn:
    """
    Advances (U^{n-1}, U^n) to U^{n+1}.

    Args:
        state: The two current levels
        p: Equation coefficients
        g: Grid
        tau: Time step
        verify_residual: Substitute the result back into the scheme equations

    Returns:
        U^{n+1} in Z0h

    Raises:
        NotInZ0hError: If either level violates the boundary conditions
        SingularSystemError: If the step matrix is singular
        StepResidualError: If verification is on and the residual is too large
    """
    require_z0h(state.U_prev, "U^{n-1}")
    require_z0h(state.U_curr, "U^n")
    P = nonlinear_coefficient(state.U_curr.values, p.m)
    time_weight = 1.0 / (2.0 * tau)
    matrix = _assemble(P, p, g, time_weight)
    rhs = _increment_rhs(state.U_prev, P, p, g)
    increment = embed(g, solve(lu_factor(matrix), rhs))
    if verify_residual:
        _check_residual(matrix, increment, P, p, time_weight, rhs)
    return state.U_prev + increment


def bootstrap_crank_nicolson(
    U0: MeshFn,
    p: SchemeParams,
    g: Grid,
    tau: Scalar,
    tol: Scalar = DEFAULT_BOOTSTRAP_TOL,
    max_iter: int = DEFAULT_BOOTSTRAP_MAX_ITER,
) -> Tuple[MeshFn, int, Scalar]:
    """
    Computes U^1 from the nonlinear Crank-Nicolson scheme by Picard iteration.

    Each iterate freezes Q = ((V^k + U^0)/2)^m and solves
    (1/tau) mass(V) + spatial(V, Q) = (1/tau) mass(U^0) - spatial(U^0, Q)
    for the increment D = V - U^0.

    The iteration stops when ||V^{k+1} - V^k||_inf < tol, or when that change
    stops decreasing while it already lies below the rounding floor of the
    system (see ``rounding_floor``). On fine meshes the floor sits far above
    an absolute tol such as 1e-12.

    Args:
        U0: Initial level in Z0h
        p: Equation coefficients
        g: Grid
        tau: Time step
        tol: Absolute stopping tolerance on the change between iterates
        max_iter: Largest number of iterates

    Returns:
        (U^1, iterations used, final residual)

    Raises:
        NotInZ0hError: If U0 violates the boundary conditions
        BootstrapNonConvergenceError: If neither criterion is met within max_iter
    """
    require_z0h(U0, "U^0")
    time_weight = 1.0 / tau
    increment = np.zeros(g.M - 3)
    residual = float("inf")
    for iteration in range(1, max_iter + 1):
        current = U0.values[_unknowns(g)] + 0.5 * increment
        Q = np.zeros(g.size)
        Q[_unknowns(g)] = nonlinear_coefficient(current, p.m)
        matrix = _assemble(Q, p, g, time_weight)
        following = solve(lu_factor(matrix), _increment_rhs(U0, Q, p, g))
        previous_residual = residual
        residual = float(np.max(np.abs(following - increment), initial=0.0))
        floor = rounding_floor(matrix, time_weight, following)
        logger.debug(
            "Picard iterate %d: residual %.3e, rounding floor %.3e", iteration, residual, floor
        )
        increment = following
        if residual < tol:
            return U0 + embed(g, increment), iteration, residual
        if residual >= previous_residual and residual <= floor:
            logger.info(
                "Bootstrap stagnated at the rounding floor after %d iterates: "
                "residual %.3e <= %.3e (tol=%g)",
                iteration,
                residual,
                floor,
                tol,
            )
            return U0 + embed(g, increment), iteration, residual

    logger.error(
        "Bootstrap did not converge: %d iterates, residual %.3e, tau=%g",
        max_iter,
        residual,
        tau,
    )
    raise BootstrapNonConvergenceError(
        f"Picard iteration for U^1 stalled at residual {residual:.3e} after "
        f"{max_iter} iterates (tol={tol:g}); reduce tau",
        iterations=max_iter,
        residual=residual,
    )


def _should_snapshot(n: int, N: int, stride: int) -> bool:
    return n == 0 or n == N or (stride > 0 and n % stride == 0)


def run(
    U0: MeshFn,
    p: SchemeParams,
    g: Grid,
    tg: TimeGrid,
    snapshot_stride: int = 0,
    bootstrap_tol: Scalar = DEFAULT_BOOTSTRAP_TOL,
    bootstrap_max_iter: int = DEFAULT_BOOTSTRAP_MAX_ITER,
    verify_residual: bool = False,
) -> SimOutput:
    """
    Runs the bootstrap and N-1 three-level steps.

    Args:
        U0: Initial level in Z0h
        p: Equation coefficients
        g: Grid
        tg: Time grid
        snapshot_stride: Keep every stride-th level besides the first and the last
            (0 keeps only those two)
        bootstrap_tol: Picard stopping tolerance
        bootstrap_max_iter: Picard iteration limit
        verify_residual: Verify every three-level step

    Returns:
        Snapshots, E^n at (n + 1/2) tau for n = 0 ... N-1, max norms of every
        level, the bootstrap report and the final state
    """
    started = time.perf_counter()
    tau, N = tg.tau, tg.N
    output = SimOutput()

    def record_level(n: int, U: MeshFn) -> None:
        u_max, ux_max = sup_norms(U)
        output.sup_norm_series.append(SupNormRecord(time=n * tau, u_max=u_max, ux_max=ux_max))
        if _should_snapshot(n, N, snapshot_stride):
            output.snapshots.append((n * tau, U))

    record_level(0, U0)
    U1, iterations, residual = bootstrap_crank_nicolson(
        U0, p, g, tau, bootstrap_tol, bootstrap_max_iter
    )
    output.bootstrap_report = BootstrapReport(iterations=iterations, residual=residual)
    logger.debug("Bootstrap converged in %d iterates (residual %.3e)", iterations, residual)
    output.energy_series.append(
        EnergyRecord(time=0.5 * tau, E=discrete_energy(U0, U1, p.alpha, p.lam))
    )
    record_level(1, U1)

    state = SimState(n=1, U_prev=U0, U_curr=U1)
    for n in range(1, N):
        following = three_level_step(state, p, g, tau, verify_residual)
        output.energy_series.append(
            EnergyRecord(
                time=(n + 0.5) * tau,
                E=discrete_energy(state.U_curr, following, p.alpha, p.lam),
            )
        )
        record_level(n + 1, following)
        state = SimState(n=n + 1, U_prev=state.U_curr, U_curr=following)
        logger.debug("Step %d/%d, E=%.15g", n + 1, N, output.energy_series[-1].E)

    output.final_state = (N * tau, state.U_curr)
    energies = [record.E for record in output.energy_series]
    reference: Optional[Scalar] = energies[0] if energies[0] != 0.0 else None
    logger.info(
        "Run finished: M=%d, N=%d, tau=%g, E0=%.15g, drift=%.3e, %.2fs",
        g.M,
        N,
        tau,
        energies[0],
        max(abs(E - energies[0]) for E in energies) / reference if reference else 0.0,
        time.perf_counter() - started,
    )
    return output
