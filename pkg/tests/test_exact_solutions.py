"""
Test the travelling-wave ansatz against closed forms and the wave equation.
"""

from dataclasses import replace

import mpmath
import numpy as np
import pytest

from rosenaukawahara.errors import (
    AmplitudeUndefinedError,
    AnsatzError,
    BoundaryViolationWarning,
    ComplexCaseError,
    DegenerateDenominatorError,
    WrongKindError,
)
from rosenaukawahara.exact.exact_solutions import (
    as_exact_solution,
    classify_branches,
    default_branch,
    eval_solitary,
    initial_condition,
    ode_residual,
    quadratic_residual,
    residual_oracle,
    solve_ansatz,
)
from rosenaukawahara.mesh.mesh_ops import build_grid, grid_from_spacing, norm_max
from rosenaukawahara.structures.ansatz_kinds import AnsatzBranch, AnsatzKind
from rosenaukawahara.types.mesh_types import AnsatzSolution, SchemeParams

from .test_helpers import EXAMPLE1, EXAMPLE2

mpmath.mp.dps = 40

# alpha a + c and lam c - nu alpha of opposite sign, beating (lam a + nu)^2
COMPLEX = SchemeParams(a=-0.9, b=1.0, c=9.5, alpha=10.0, lam=1.0, nu=1.0, m=2)


@pytest.fixture
def wave1() -> AnsatzSolution:
    return solve_ansatz(EXAMPLE1, AnsatzBranch.MINUS)


@pytest.fixture
def wave2() -> AnsatzSolution:
    return solve_ansatz(EXAMPLE2, AnsatzBranch.MINUS)


class TestClosedForms:
    """Test suite for the ansatz parameters of the two reference waves."""

    def test_quadratic_nonlinearity(self, wave1: AnsatzSolution) -> None:
        sqrt = mpmath.sqrt
        Bsq = (5 - sqrt(37)) / 16
        v = -(20 * Bsq + 2) / (20 * Bsq + 1)
        peak = mpmath.mpf(3) / 4 * (sqrt(370) - 5 * sqrt(10)) / sqrt(5 * sqrt(37) - 29)

        assert wave1.kind is AnsatzKind.SOLITARY
        assert wave1.eta == -2.0
        assert wave1.Bsq == pytest.approx(float(Bsq), rel=1e-14)
        assert wave1.B0 == pytest.approx(float(sqrt(-Bsq)), rel=1e-14)
        assert wave1.v == pytest.approx(float(v), rel=1e-13)
        assert wave1.v == pytest.approx(1.8293, abs=1e-4)
        assert wave1.A == pytest.approx(float(peak), rel=1e-13)
        assert wave1.A == pytest.approx(2.1597, abs=1e-3)

    def test_quartic_nonlinearity(self, wave2: AnsatzSolution) -> None:
        sqrt = mpmath.sqrt
        B0 = sqrt(sqrt(127) - 10) / 3
        v = (118 - 10 * sqrt(127)) / (10 * sqrt(127) - 109)
        # A^4 = 120 B^4 (lam v + nu)
        peak = mpmath.root(120 * B0**4 * (v + 1), 4)

        assert wave2.kind is AnsatzKind.SOLITARY
        assert wave2.eta == -1.0
        assert wave2.B0 == pytest.approx(float(B0), rel=1e-13)
        assert wave2.v == pytest.approx(float(v), rel=1e-13)
        assert wave2.A == pytest.approx(float(peak), rel=1e-13)

    def test_should_keep_both_roots(self, wave1: AnsatzSolution) -> None:
        plus, minus = wave1.Bsq_roots

        assert minus == wave1.Bsq
        assert plus > 0.0 > minus
        assert quadratic_residual(EXAMPLE1, plus) <= 1e-14
        assert quadratic_residual(EXAMPLE1, minus) <= 1e-14

    @pytest.mark.parametrize("params", [EXAMPLE1, EXAMPLE2])
    def test_should_satisfy_balance_equations(self, params: SchemeParams) -> None:
        solution = solve_ansatz(params, AnsatzBranch.MINUS)

        assert max(residual_oracle(solution, params)) <= 1e-13

    def test_perturbed_speed_should_break_balance(self, wave1: AnsatzSolution) -> None:
        perturbed = replace(wave1, v=wave1.v * (1.0 + 1e-4))

        assert max(residual_oracle(perturbed, EXAMPLE1)) > 1e-5

    def test_odd_power_should_allow_negative_amplitude(self) -> None:
        params = replace(EXAMPLE1, b=-1.0, m=1)

        solution = solve_ansatz(params, default_branch(params))

        assert solution.eta == -4.0
        assert solution.A < 0.0
        assert max(residual_oracle(solution, params)) <= 1e-13


class TestBranches:
    """Test suite for branch classification and failure cases."""

    def test_should_classify_reference_branches(self) -> None:
        kinds = classify_branches(EXAMPLE1)

        assert kinds == {
            AnsatzBranch.PLUS: AnsatzKind.PERIODIC,
            AnsatzBranch.MINUS: AnsatzKind.SOLITARY,
        }
        assert default_branch(EXAMPLE1) is AnsatzBranch.MINUS
        assert default_branch(EXAMPLE2) is AnsatzBranch.MINUS

    def test_negative_discriminant_should_be_complex(self) -> None:
        assert set(classify_branches(COMPLEX).values()) == {AnsatzKind.COMPLEX_CASE}
        with pytest.raises(ComplexCaseError, match="Discriminant"):
            solve_ansatz(COMPLEX, AnsatzBranch.MINUS)
        with pytest.raises(AnsatzError, match="exactly one solitary branch"):
            default_branch(COMPLEX)

    def test_should_reject_degenerate_denominator(self) -> None:
        # lam c == nu alpha
        params = replace(EXAMPLE1, c=1.0)

        with pytest.raises(DegenerateDenominatorError):
            solve_ansatz(params, AnsatzBranch.MINUS)
        with pytest.raises(DegenerateDenominatorError):
            classify_branches(params)

    def test_missing_nonlinearity_should_leave_amplitude_undefined(self) -> None:
        solution = solve_ansatz(replace(EXAMPLE1, b=0.0), AnsatzBranch.MINUS)

        assert solution.kind is AnsatzKind.SOLITARY
        assert solution.A is None
        with pytest.raises(AmplitudeUndefinedError, match="b = 0"):
            eval_solitary(solution, np.zeros(3), 0.0)

    def test_even_power_should_leave_negative_amplitude_power_undefined(self) -> None:
        params = replace(EXAMPLE1, b=-1.0)

        solution = solve_ansatz(params, AnsatzBranch.MINUS)

        assert solution.A is None
        assert solution.v == pytest.approx(solve_ansatz(EXAMPLE1, AnsatzBranch.MINUS).v)
        with pytest.raises(AmplitudeUndefinedError, match="even m=2"):
            initial_condition(solution, build_grid(-40.0, 40.0, 80))
        with pytest.raises(AmplitudeUndefinedError, match="even m=2"):
            as_exact_solution(solution)
        with pytest.raises(AmplitudeUndefinedError, match="even m=2"):
            residual_oracle(solution, params)

    def test_periodic_branch_should_be_classified_but_not_evaluated(self) -> None:
        periodic = solve_ansatz(EXAMPLE1, AnsatzBranch.PLUS)

        assert periodic.kind is AnsatzKind.PERIODIC
        assert periodic.Bsq == periodic.Bsq_roots[0] > 0.0
        assert periodic.B0 == pytest.approx(np.sqrt(periodic.Bsq))
        # A^2 < 0 on this branch
        assert periodic.A is None
        assert "even m=2" in (periodic.amplitude_note or "")
        with pytest.raises(WrongKindError):
            eval_solitary(periodic, np.zeros(3), 0.0)
        with pytest.raises(WrongKindError):
            as_exact_solution(periodic)


class TestSolitaryProfile:
    """Test suite for the evaluated pulse."""

    def test_should_be_symmetric_about_crest(self, wave1: AnsatzSolution) -> None:
        xi = np.linspace(0.0, 30.0, 61)
        t = 3.0

        np.testing.assert_allclose(
            eval_solitary(wave1, wave1.v * t + xi, t),
            eval_solitary(wave1, wave1.v * t - xi, t),
            rtol=1e-13,
        )

    def test_should_travel_at_wave_speed(self, wave2: AnsatzSolution) -> None:
        x = np.linspace(-20.0, 20.0, 81)
        exact = as_exact_solution(wave2)

        np.testing.assert_allclose(
            exact(x, 5.0), exact(x - 5.0 * wave2.v, 0.0), rtol=1e-12, atol=1e-300
        )

    def test_should_not_overflow_far_from_crest(self, wave1: AnsatzSolution) -> None:
        values = eval_solitary(wave1, np.array([-1e4, 1e4]), 0.0)

        assert np.all(np.isfinite(values))
        assert np.all(values == 0.0)

    @pytest.mark.parametrize("params", [EXAMPLE1, EXAMPLE2])
    def test_difference_residual_should_vanish_at_second_order(
        self, params: SchemeParams
    ) -> None:
        solution = solve_ansatz(params, AnsatzBranch.MINUS)
        xi = np.linspace(-10.0, 10.0, 41)

        coarse = np.max(np.abs(ode_residual(solution, params, xi, 0.04)))
        fine = np.max(np.abs(ode_residual(solution, params, xi, 0.02)))

        assert fine < 1e-3
        assert coarse / fine > 3.0


class TestInitialCondition:
    """Test suite for the sampled initial level."""

    def test_peak_should_equal_amplitude(self, wave1: AnsatzSolution) -> None:
        # x = 0 is node 50
        grid = grid_from_spacing(-40.0, 200.0, 0.8)

        U0 = initial_condition(wave1, grid)

        assert norm_max(U0) == pytest.approx(wave1.A, rel=1e-14)
        assert U0.at(50) == pytest.approx(wave1.A, rel=1e-14)
        assert U0.at(0) == 0.0
        assert U0.at(grid.M) == 0.0

    def test_should_warn_when_domain_is_too_small(self, wave1: AnsatzSolution) -> None:
        with pytest.warns(BoundaryViolationWarning, match="enlarge the domain"):
            initial_condition(wave1, build_grid(-5.0, 5.0, 20))

    def test_periodic_branch_should_be_rejected(self) -> None:
        periodic = solve_ansatz(EXAMPLE1, AnsatzBranch.PLUS)

        with pytest.raises(WrongKindError):
            initial_condition(periodic, build_grid(-5.0, 5.0, 20))
