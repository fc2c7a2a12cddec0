"""
Test the grid, Z0h and difference operators.
"""

import numpy as np
import pytest
import sympy
from hypothesis import given, settings

from rosenaukawahara.errors import (
    GridMismatchError,
    GridTooCoarseError,
    InvalidDomainError,
    MeshError,
)
from rosenaukawahara.mesh.mesh_ops import (
    apply_diff,
    build_grid,
    difference_norm,
    grid_from_spacing,
    in_z0h,
    inner_product,
    norm_forward_second,
    norm_l2,
    norm_max,
    project_z0h,
    sample,
    zeros,
)
from rosenaukawahara.solvers.scheme import embed
from rosenaukawahara.structures.diff_op_kind import DiffOpKind
from rosenaukawahara.types.mesh_types import Grid, MeshFn

from .test_helpers import SMALL_GRID, unknown_values


def _z0h(values: np.ndarray) -> MeshFn:
    return embed(SMALL_GRID, values)


def _raw(kind: DiffOpKind, U: MeshFn) -> MeshFn:
    return apply_diff(kind, U, project=False)


class TestGrid:
    """Test suite for grid construction."""

    def test_should_build_uniform_grid_with_fictitious_points(self) -> None:
        grid = build_grid(-40.0, 200.0, 300)

        assert grid.h == pytest.approx(0.8)
        assert grid.size == 303
        assert grid.nodes[0] == pytest.approx(-40.8)
        assert grid.nodes[-1] == pytest.approx(200.8)
        assert grid.position(0) == -40.0

    def test_should_reject_empty_domain(self) -> None:
        with pytest.raises(InvalidDomainError, match="Empty domain"):
            build_grid(1.0, 1.0, 10)

    def test_should_reject_too_few_cells(self) -> None:
        with pytest.raises(GridTooCoarseError, match="M=7"):
            build_grid(0.0, 1.0, 7)

    def test_should_accept_minimum_grid(self) -> None:
        assert build_grid(0.0, 1.0, 8).M == 8

    def test_should_derive_cells_from_spacing(self) -> None:
        assert grid_from_spacing(-40.0, 200.0, 0.1).M == 2400
        assert grid_from_spacing(-40.0, 200.0, 0.005).M == 48000

    def test_should_reject_spacing_that_does_not_divide_domain(self) -> None:
        with pytest.raises(InvalidDomainError, match="does not divide"):
            grid_from_spacing(0.0, 1.0, 0.3)

    def test_should_reject_non_positive_spacing(self) -> None:
        with pytest.raises(InvalidDomainError, match="positive"):
            grid_from_spacing(0.0, 1.0, 0.0)


class TestZ0h:
    """Test suite for the boundary-zero space."""

    @pytest.fixture
    def grid(self) -> Grid:
        return build_grid(0.0, 1.0, 10)

    def test_should_force_six_boundary_entries_to_zero(self, grid: Grid) -> None:
        U = project_z0h(MeshFn(grid, np.ones(grid.size)))

        for i in (-1, 0, 1, 9, 10, 11):
            assert U.at(i) == 0.0
        assert all(U.at(i) == 1.0 for i in range(2, 9))
        assert in_z0h(U)

    def test_should_detect_nonzero_boundary_value(self, grid: Grid) -> None:
        values = np.zeros(grid.size)
        values[grid.M] = 1e-30  # i = M - 1
        assert not in_z0h(MeshFn(grid, values))

    def test_should_sample_and_project(self, grid: Grid) -> None:
        U = sample(grid, lambda x: 1.0 + x)

        assert in_z0h(U)
        assert U.at(5) == pytest.approx(1.5)

    def test_should_leave_input_untouched(self, grid: Grid) -> None:
        values = np.ones(grid.size)
        project_z0h(MeshFn(grid, values))
        assert np.all(values == 1.0)

    def test_should_reject_values_of_wrong_length(self, grid: Grid) -> None:
        # M + 1 values: the fictitious points are missing
        with pytest.raises(MeshError, match="needs 13 values"):
            MeshFn(grid, np.zeros(grid.M + 1))

    def test_should_broadcast_constant_samples(self, grid: Grid) -> None:
        U = sample(grid, lambda x: 2.0)

        assert in_z0h(U)
        assert U.interior[1:-1] == pytest.approx(np.full(grid.M - 3, 2.0))


class TestDifferenceOperators:
    """Test suite for the stencils against symbolic derivatives."""

    x = sympy.Symbol("x")

    @pytest.mark.parametrize(
        "kind, order, degree",
        [
            (DiffOpKind.FORWARD, 1, 1),
            (DiffOpKind.BACKWARD, 1, 1),
            (DiffOpKind.CENTRAL, 1, 2),
            (DiffOpKind.SECOND, 2, 3),
            (DiffOpKind.THIRD, 3, 4),
            (DiffOpKind.FOURTH, 4, 5),
            (DiffOpKind.FIFTH, 5, 6),
        ],
    )
    def test_should_be_exact_on_polynomials(
        self, kind: DiffOpKind, order: int, degree: int
    ) -> None:
        grid = build_grid(0.0, 2.0, 20)
        polynomial = sum((k + 1) * self.x**k for k in range(degree + 1))
        value = sympy.lambdify(self.x, polynomial, "numpy")
        derivative = sympy.lambdify(self.x, sympy.diff(polynomial, self.x, order), "numpy")
        result = _raw(kind, MeshFn(grid, value(grid.nodes)))

        # i = 2 ... M-2: every stencil fits
        inner = slice(3, grid.M)
        np.testing.assert_allclose(
            result.values[inner], derivative(grid.nodes[inner]), rtol=1e-7, atol=1e-6
        )

    def test_central_difference_should_be_second_order(self) -> None:
        errors = []
        for M in (40, 80):
            grid = build_grid(0.0, 2.0, M)
            result = _raw(DiffOpKind.CENTRAL, MeshFn(grid, np.sin(grid.nodes)))
            inner = slice(3, grid.M)
            errors.append(np.max(np.abs(result.values[inner] - np.cos(grid.nodes[inner]))))

        assert np.log2(errors[0] / errors[1]) == pytest.approx(2.0, abs=0.05)

    def test_should_project_result_by_default(self) -> None:
        grid = build_grid(0.0, 1.0, 10)
        U = MeshFn(grid, np.ones(grid.size))

        assert in_z0h(apply_diff(DiffOpKind.SECOND, U))


class TestInnerProductAndNorms:
    """Test suite for the discrete inner product, norms and their identities."""

    def test_should_sum_interior_only(self) -> None:
        grid = build_grid(0.0, 1.0, 10)
        U = MeshFn(grid, np.ones(grid.size))

        # i = 1 ... 9
        assert inner_product(U, U) == pytest.approx(0.9)
        assert norm_max(MeshFn(grid, np.arange(grid.size, dtype=float))) == 10.0

    def test_should_reject_mismatched_grids(self) -> None:
        with pytest.raises(GridMismatchError):
            inner_product(zeros(build_grid(0.0, 1.0, 10)), zeros(build_grid(0.0, 1.0, 12)))

    def test_zero_function_should_have_zero_norms(self) -> None:
        U = zeros(SMALL_GRID)

        assert norm_l2(U) == 0.0
        assert norm_max(U) == 0.0
        assert norm_forward_second(U) == 0.0

    @settings(max_examples=200, deadline=None)
    @given(unknown_values(), unknown_values())
    def test_summation_by_parts(self, u: np.ndarray, v: np.ndarray) -> None:
        U, V = _z0h(u), _z0h(v)
        scale = 1.0 + norm_l2(U) * norm_l2(V) * 10.0

        central = inner_product(_raw(DiffOpKind.CENTRAL, U), V) + inner_product(
            U, _raw(DiffOpKind.CENTRAL, V)
        )
        forward = inner_product(_raw(DiffOpKind.FORWARD, U), V) + inner_product(
            U, _raw(DiffOpKind.BACKWARD, V)
        )
        second = inner_product(_raw(DiffOpKind.SECOND, U), V) + inner_product(
            _raw(DiffOpKind.FORWARD, U), _raw(DiffOpKind.FORWARD, V)
        )

        assert abs(central) <= 1e-12 * scale
        assert abs(forward) <= 1e-12 * scale
        assert abs(second) <= 1e-12 * scale * 10.0

    @settings(max_examples=200, deadline=None)
    @given(unknown_values())
    def test_fourth_difference_should_give_second_difference_norm(self, u: np.ndarray) -> None:
        U = _z0h(u)

        expected = difference_norm(DiffOpKind.SECOND, U) ** 2
        assert inner_product(U, _raw(DiffOpKind.FOURTH, U)) == pytest.approx(
            expected, rel=1e-12, abs=1e-12
        )

    @settings(max_examples=200, deadline=None)
    @given(unknown_values())
    def test_odd_differences_should_be_skew(self, u: np.ndarray) -> None:
        U = _z0h(u)

        for kind in (DiffOpKind.CENTRAL, DiffOpKind.THIRD, DiffOpKind.FIFTH):
            DU = _raw(kind, U)
            assert abs(inner_product(DU, U)) <= 1e-12 * (1.0 + norm_l2(DU) * norm_l2(U))

    @settings(max_examples=200, deadline=None)
    @given(unknown_values())
    def test_forward_second_norm_should_equal_centered(self, u: np.ndarray) -> None:
        U = _z0h(u)

        assert norm_forward_second(U) == pytest.approx(
            difference_norm(DiffOpKind.SECOND, U), rel=1e-13, abs=1e-12
        )

    @settings(max_examples=200, deadline=None)
    @given(unknown_values())
    def test_central_norm_should_not_exceed_forward_norm(self, u: np.ndarray) -> None:
        U = _z0h(u)

        assert difference_norm(DiffOpKind.CENTRAL, U) <= difference_norm(
            DiffOpKind.FORWARD, U
        ) * (1.0 + 1e-14) + 1e-150

    def test_difference_norm_should_keep_values_next_to_boundary(self) -> None:
        # U_x at i = 1 is U_2 / h; projecting would lose it
        grid = SMALL_GRID
        U = MeshFn(grid, np.zeros(grid.size))
        U.values[3] = 1.0  # i = 2

        assert difference_norm(DiffOpKind.FORWARD, U) ** 2 == pytest.approx(2.0 / grid.h)
