"""
Mesh Operations

Uniform grid construction, the space Z0h of mesh functions vanishing at
i = -1, 0, 1, M-1, M, M+1, the composite difference operators, and the
discrete inner product and norms.
"""

import logging
import math
from typing import Callable

import numpy as np

from ..errors import GridMismatchError, GridTooCoarseError, InvalidDomainError
from ..structures.diff_op_kind import DiffOpKind
from ..structures.stencil_coefficients import StencilHelper
from ..types.mesh_types import Grid, MeshFn, Position, Scalar, Vector

logger = logging.getLogger(__name__)

MIN_CELLS = 8


def build_grid(x_left: Position, x_right: Position, M: int) -> Grid:
    """
    Builds the uniform grid x_i = x_left + i*h, i = -1 ... M+1.

    Args:
        x_left: Left end of the domain
        x_right: Right end of the domain
        M: Number of cells

    Returns:
        The grid

    Raises:
        InvalidDomainError: If x_left >= x_right
        GridTooCoarseError: If M < 8
    """
    if not x_left < x_right:
        raise InvalidDomainError(
            f"Empty domain: x_left={x_left} must be below x_right={x_right}"
        )
    if M < MIN_CELLS:
        raise GridTooCoarseError(f"M={M} cells, at least {MIN_CELLS} are needed")
    return Grid(
        x_left=float(x_left),
        x_right=float(x_right),
        M=int(M),
        h=(x_right - x_left) / M,
    )


def grid_from_spacing(x_left: Position, x_right: Position, h: Scalar) -> Grid:
    """
    Builds a uniform grid from a requested spacing.

    Raises:
        InvalidDomainError: If h is not positive or does not divide the domain
        GridTooCoarseError: If the resulting M < 8
    """
    if h <= 0:
        raise InvalidDomainError(f"Spacing must be positive, got h={h}")
    length = x_right - x_left
    M = round(length / h)
    if M < 1 or not math.isclose(M * h, length, rel_tol=1e-9):
        raise InvalidDomainError(
            f"Spacing h={h} does not divide [{x_left}, {x_right}]"
        )
    return build_grid(x_left, x_right, M)


def zeros(grid: Grid) -> MeshFn:
    """The zero mesh function."""
    return MeshFn(grid, np.zeros(grid.size))


def _check_same_grid(U: MeshFn, V: MeshFn) -> None:
    if U.grid != V.grid:
        raise GridMismatchError(f"Grids differ: {U.grid} vs {V.grid}")


def project_z0h(U: MeshFn) -> MeshFn:
    """Copy of U with the six boundary and fictitious entries forced to zero."""
    values = U.values.copy()
    M = U.grid.M
    # array positions of i = -1, 0, 1 and M-1, M, M+1
    values[:3] = 0.0
    values[M:] = 0.0
    return MeshFn(U.grid, values)


def in_z0h(U: MeshFn) -> bool:
    """True if U vanishes exactly at i = -1, 0, 1, M-1, M, M+1."""
    M = U.grid.M
    return bool(np.all(U.values[:3] == 0.0) and np.all(U.values[M:] == 0.0))


def sample(grid: Grid, func: Callable[[Vector], Vector]) -> MeshFn:
    """Evaluates a vectorized function at every node and projects to Z0h."""
    values = np.broadcast_to(np.asarray(func(grid.nodes), dtype=np.float64), grid.nodes.shape)
    return project_z0h(MeshFn(grid, values.copy()))


def stencil_values(kind: DiffOpKind, values: Vector, h: Scalar) -> Vector:
    """
    Raw stencil values of ``kind`` on a node array.

    Entries where the stencil does not fit inside -1 ... M+1 are zero; no
    projection is applied.
    """
    size = values.shape[0]
    low, high = StencilHelper.get_reach(kind)
    start, stop = -low, size - high
    result = np.zeros(size)
    for offset, weight in StencilHelper.get_weights(kind, h).items():
        result[start:stop] += weight * values[start + offset : stop + offset]
    return result


def apply_diff(kind: DiffOpKind, U: MeshFn, project: bool = True) -> MeshFn:
    """
    Applies a difference operator pointwise.

    Args:
        kind: Operator to apply
        U: Mesh function, normally in Z0h
        project: Force the result back into Z0h (default). The raw stencil
            values are needed when the result enters a norm.

    Returns:
        The differenced mesh function
    """
    result = MeshFn(U.grid, stencil_values(kind, U.values, U.grid.h))
    return project_z0h(result) if project else result


def inner_product(U: MeshFn, V: MeshFn) -> Scalar:
    """
    (U, V) = h * sum_{i=1}^{M-1} U_i V_i.

    Raises:
        GridMismatchError: If U and V live on different grids
    """
    _check_same_grid(U, V)
    return U.grid.h * float(np.dot(U.interior, V.interior))


def norm_l2(U: MeshFn) -> Scalar:
    """||U|| = sqrt((U, U))."""
    return math.sqrt(inner_product(U, U))


def norm_max(U: MeshFn) -> Scalar:
    """||U||_inf = max_{1<=i<=M-1} |U_i|."""
    interior = U.interior
    return float(np.max(np.abs(interior))) if interior.size else 0.0


def difference_norm(kind: DiffOpKind, U: MeshFn) -> Scalar:
    """||D U|| with D applied without projection, summed over i = 1 ... M-1."""
    return norm_l2(apply_diff(kind, U, project=False))


def norm_forward_second(U: MeshFn) -> Scalar:
    """
    ||U_xx|| with U_xx,i = (U_{i+2} - 2U_{i+1} + U_i)/h^2.

    Summed over i = 0 ... M-2, the index set of U_{x xbar} shifted by one, so
    that ||U_xx|| equals ||U_{x xbar}|| for U in Z0h.
    """
    h = U.grid.h
    M = U.grid.M
    u = U.values
    # array position k holds i = k - 1, so i = 0 ... M-2 is k = 1 ... M-1
    second = (u[3 : M + 2] - 2.0 * u[2 : M + 1] + u[1:M]) / (h * h)
    return math.sqrt(h * float(np.dot(second, second)))
