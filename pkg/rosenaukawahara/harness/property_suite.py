"""
Property Suite

Randomized checks of the discrete identities the scheme rests on: summation
by parts, skew symmetry of the odd differences, the norm identities, the
uniqueness identity of the step operator, agreement with a dense solve, and
the algebraic residuals of the reference solitary waves.

Every check reports a normalized residual; a suite passes when its worst
residual stays within the suite tolerance.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

import numpy as np

from ..diagnostics.energy_diagnostics import quadratic_form
from ..exact.exact_solutions import residual_oracle, solve_ansatz
from ..mesh.mesh_ops import (
    apply_diff,
    build_grid,
    difference_norm,
    inner_product,
    norm_forward_second,
    norm_l2,
    stencil_values,
)
from ..profiles.experiment_profile_registry import ExperimentProfileRegistry
from ..solvers.scheme import (
    assemble_lhs,
    bootstrap_crank_nicolson,
    embed,
    mass_operator,
    spatial_operator,
    three_level_step,
)
from ..structures.ansatz_kinds import AnsatzBranch
from ..structures.diff_op_kind import DiffOpKind
from ..types.mesh_types import Grid, MeshFn, Scalar, SchemeParams, SimState

logger = logging.getLogger(__name__)

# Grid spacing of the randomized suites
SUITE_SPACING = 0.5

# Largest M of the dense-oracle comparison
DENSE_ORACLE_MAX_CELLS = 16


@dataclass(frozen=True)
class SuiteResult:
    """Outcome of one suite."""

    name: str
    passed: bool
    worst: Scalar
    tolerance: Scalar
    checks: int


def _relative(value: Scalar, scale: Scalar) -> Scalar:
    """Two-sided deviation |value| / scale."""
    return abs(value) / scale if scale > 0.0 else abs(value)


def _excess(value: Scalar, bound: Scalar) -> Scalar:
    """One-sided violation of value <= bound, relative to bound."""
    over = value - bound
    return max(0.0, over / bound if bound > 0.0 else over)


def _raw(kind: DiffOpKind, U: MeshFn) -> MeshFn:
    return apply_diff(kind, U, project=False)


class PropertySuite:
    """
    Randomized invariant suites.

    Args:
        seed: Seed of the random generator; equal seeds give equal reports
        samples: Random draws per suite
        size: Number of cells M of the randomized grids
    """

    def __init__(self, seed: int = 0, samples: int = 200, size: int = 64) -> None:
        if samples < 1:
            raise ValueError(f"samples must be at least 1, got {samples}")
        self.seed = seed
        self.samples = samples
        self.grid = build_grid(0.0, size * SUITE_SPACING, size)
        self.rng = np.random.default_rng(seed)

    # name -> (method name, tolerance)
    SUITES: Dict[str, Tuple[str, Scalar]] = {
        "summation_by_parts": ("check_summation_by_parts", 1e-12),
        "skew_symmetry": ("check_skew_symmetry", 1e-12),
        "second_difference_norm": ("check_second_difference_norm", 1e-14),
        "central_difference_bound": ("check_central_difference_bound", 1e-14),
        "nonlinear_skew": ("check_nonlinear_skew", 1e-12),
        "uniqueness_identity": ("check_uniqueness_identity", 1e-12),
        "dense_step_oracle": ("check_dense_step_oracle", 1e-11),
        "bootstrap_quadratic_form": ("check_bootstrap_quadratic_form", 1e-10),
        "ansatz_residuals": ("check_ansatz_residuals", 1e-13),
    }

    def random_z0h(self, grid: Grid, amplitude: Scalar = 1.0) -> MeshFn:
        """Uniform random values at i = 2 ... M-2, zeros elsewhere."""
        return embed(grid, self.rng.uniform(-amplitude, amplitude, grid.M - 3))

    def random_params(self) -> SchemeParams:
        return SchemeParams(
            a=float(self.rng.uniform(-1.0, 1.0)),
            b=float(self.rng.uniform(-1.0, 1.0)),
            c=float(self.rng.uniform(-1.0, 1.0)),
            alpha=float(self.rng.uniform(0.5, 1.5)),
            lam=float(self.rng.uniform(0.5, 1.5)),
            nu=float(self.rng.uniform(-1.0, 1.0)),
            m=int(self.rng.integers(1, 5)),
        )

    def check_summation_by_parts(self) -> List[Scalar]:
        """
        (U_x^, V) = -(U, V_x^), (U_x, V) = -(U, V_xbar), (U_xxbar, V) = -(U_x, V_x)
        and (U, U_xxxbarxbar) = ||U_xxbar||^2.
        """
        residuals = []
        for _ in range(self.samples):
            U, V = self.random_z0h(self.grid), self.random_z0h(self.grid)
            U_x, V_x = _raw(DiffOpKind.FORWARD, U), _raw(DiffOpKind.FORWARD, V)
            pairs = (
                (_raw(DiffOpKind.CENTRAL, U), V, U, _raw(DiffOpKind.CENTRAL, V)),
                (U_x, V, U, _raw(DiffOpKind.BACKWARD, V)),
                (_raw(DiffOpKind.SECOND, U), V, U_x, V_x),
            )
            for left, right, other_left, other_right in pairs:
                total = inner_product(left, right) + inner_product(other_left, other_right)
                scale = norm_l2(left) * norm_l2(right) + norm_l2(other_left) * norm_l2(other_right)
                residuals.append(_relative(total, scale))
            fourth = inner_product(U, _raw(DiffOpKind.FOURTH, U))
            second = difference_norm(DiffOpKind.SECOND, U) ** 2
            residuals.append(_relative(fourth - second, second))
        return residuals

    def check_skew_symmetry(self) -> List[Scalar]:
        """(U_x^, U) = (U_xxbarx^, U) = (U_xxxbarxbarx^, U) = 0."""
        residuals = []
        for _ in range(self.samples):
            U = self.random_z0h(self.grid)
            for kind in (DiffOpKind.CENTRAL, DiffOpKind.THIRD, DiffOpKind.FIFTH):
                DU = _raw(kind, U)
                residuals.append(_relative(inner_product(DU, U), norm_l2(DU) * norm_l2(U)))
        return residuals

    def check_second_difference_norm(self) -> List[Scalar]:
        """||U_xx|| = ||U_xxbar||."""
        residuals = []
        for _ in range(self.samples):
            U = self.random_z0h(self.grid)
            reference = difference_norm(DiffOpKind.SECOND, U)
            residuals.append(_relative(norm_forward_second(U) - reference, reference))
        return residuals

    def check_central_difference_bound(self) -> List[Scalar]:
        """||U_x^|| <= ||U_x||; the residual is the relative excess, zero when it holds."""
        residuals = []
        for _ in range(self.samples):
            U = self.random_z0h(self.grid)
            central = difference_norm(DiffOpKind.CENTRAL, U)
            forward = difference_norm(DiffOpKind.FORWARD, U)
            residuals.append(_excess(central, forward))
        return residuals

    def check_nonlinear_skew(self) -> List[Scalar]:
        """(U^m V_x^ + (U^m V)_x^, V) = 0."""
        residuals = []
        h = self.grid.h
        for _ in range(self.samples):
            U, V = self.random_z0h(self.grid), self.random_z0h(self.grid)
            P = U.values ** int(self.rng.integers(1, 5))
            first = P * stencil_values(DiffOpKind.CENTRAL, V.values, h)
            second = stencil_values(DiffOpKind.CENTRAL, P * V.values, h)
            term = MeshFn(self.grid, first + second)
            scale = (
                norm_l2(MeshFn(self.grid, first)) + norm_l2(MeshFn(self.grid, second))
            ) * norm_l2(V)
            residuals.append(_relative(inner_product(term, V), scale))
        return residuals

    def check_uniqueness_identity(self) -> List[Scalar]:
        """(L W, W) = (1/(2 tau)) (||W||^2 + alpha ||W_x||^2 + lam ||W_xxbar||^2)."""
        residuals = []
        grid = self.grid
        for _ in range(self.samples):
            p = self.random_params()
            tau = float(self.rng.uniform(0.01, 1.0))
            W = self.random_z0h(grid)
            matrix = assemble_lhs(self.random_z0h(grid), p, grid, tau)
            w = W.values[3 : grid.M]
            applied = matrix.matvec(w)
            expected = quadratic_form(W, p.alpha, p.lam) / (2.0 * tau)
            scale = grid.h * float(np.abs(w) @ np.abs(matrix.to_dense()) @ np.abs(w))
            residuals.append(_relative(grid.h * float(w @ applied) - expected, scale))
        return residuals

    def dense_step(self, state: SimState, p: SchemeParams, grid: Grid, tau: Scalar) -> np.ndarray:
        """U^{n+1} on the unknowns from a dense matrix built column by column."""
        n = grid.M - 3
        P = state.U_curr.values ** p.m
        weight = 1.0 / (2.0 * tau)
        unknowns = slice(3, grid.M)
        dense = np.empty((n, n))
        for column in range(n):
            unit = embed(grid, np.eye(n)[column])
            applied = weight * mass_operator(unit, p) + spatial_operator(unit, P, p)
            dense[:, column] = applied[unknowns]
        rhs = weight * mass_operator(state.U_prev, p) - spatial_operator(state.U_prev, P, p)
        return np.linalg.solve(dense, rhs[unknowns])

    def check_dense_step_oracle(self) -> List[Scalar]:
        """Banded step equals a dense direct solve on small grids."""
        residuals = []
        for sample in range(self.samples):
            M = 8 + sample % (DENSE_ORACLE_MAX_CELLS - 7)
            grid = build_grid(0.0, M * SUITE_SPACING, M)
            p = self.random_params()
            tau = float(self.rng.uniform(0.05, 0.5))
            state = SimState(n=1, U_prev=self.random_z0h(grid), U_curr=self.random_z0h(grid))
            banded = three_level_step(state, p, grid, tau).values[3:M]
            dense = self.dense_step(state, p, grid, tau)
            scale = max(1.0, float(np.max(np.abs(dense))))
            residuals.append(float(np.max(np.abs(banded - dense))) / scale)
        return residuals

    def check_bootstrap_quadratic_form(self) -> List[Scalar]:
        """The Picard bootstrap keeps ||U||^2 + alpha ||U_x||^2 + lam ||U_xxbar||^2."""
        residuals = []
        for _ in range(max(1, self.samples // 20)):
            p = self.random_params()
            U0 = self.random_z0h(self.grid, amplitude=0.5)
            U1, _, _ = bootstrap_crank_nicolson(U0, p, self.grid, 0.05)
            before = quadratic_form(U0, p.alpha, p.lam)
            residuals.append(_relative(quadratic_form(U1, p.alpha, p.lam) - before, before))
        return residuals

    def check_ansatz_residuals(self) -> List[Scalar]:
        """Algebraic residuals of the solitary waves of the reference experiments."""
        residuals: List[Scalar] = []
        for name in ExperimentProfileRegistry.PROFILES:
            p = ExperimentProfileRegistry.scheme_params(name)
            solution = solve_ansatz(p, AnsatzBranch.MINUS)
            residuals.extend(residual_oracle(solution, p))
        return residuals

    def run_suite(self, name: str) -> SuiteResult:
        """
        Runs one suite by name.

        Raises:
            KeyError: If the suite is unknown
        """
        method, tolerance = self.SUITES[name]
        check: Callable[[], List[Scalar]] = getattr(self, method)
        residuals = check()
        worst = max(residuals) if residuals else 0.0
        passed = bool(math.isfinite(worst) and worst <= tolerance)
        logger.log(
            logging.INFO if passed else logging.ERROR,
            "%s: worst residual %.3e (tolerance %.0e) over %d checks",
            name,
            worst,
            tolerance,
            len(residuals),
        )
        return SuiteResult(
            name=name, passed=passed, worst=worst, tolerance=tolerance, checks=len(residuals)
        )

    def run(self) -> List[SuiteResult]:
        """Runs every suite in registry order."""
        return [self.run_suite(name) for name in self.SUITES]
