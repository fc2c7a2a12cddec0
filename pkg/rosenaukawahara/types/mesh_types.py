"""
Basic numerical type definitions.

This module provides the value types shared by the mesh, solver, diagnostics,
exact-solution and harness packages.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, List, Optional, Tuple

import numpy as np
import numpy.typing as npt

from ..errors import InvalidParametersError, MeshError
from ..structures.ansatz_kinds import AnsatzKind
from ..structures.refinement_axis import RefinementAxis


# Basic type aliases
Position = float
Time = float
Scalar = float
Vector = npt.NDArray[np.float64]

# u(x, t) evaluated on an array of positions
ExactSolution = Callable[[Vector, Time], Vector]


@dataclass(frozen=True)
class Grid:
    """Uniform mesh on [x_left, x_right] with one fictitious point per end."""

    x_left: Position
    x_right: Position
    M: int
    h: Scalar

    @cached_property
    def nodes(self) -> Vector:
        """Positions x_i = x_left + i*h for i = -1 ... M+1."""
        return self.x_left + np.arange(-1, self.M + 2, dtype=np.float64) * self.h

    @property
    def size(self) -> int:
        """Number of stored nodes, fictitious points included."""
        return self.M + 3

    def position(self, i: int) -> Position:
        """Position of node i (i may be -1 or M+1)."""
        return self.x_left + i * self.h


@dataclass(frozen=True, eq=False)
class MeshFn:
    """
    Mesh function; ``values[k]`` holds the value at node i = k - 1.

    Raw difference results are mesh functions too, so construction does not
    force the Z0h zeros. Time levels must lie in Z0h: build them with
    ``sample``, ``project_z0h`` or ``embed``. The solver rejects any other
    level with NotInZ0hError.
    """

    grid: Grid
    values: Vector

    def __post_init__(self) -> None:
        if np.shape(self.values) != (self.grid.size,):
            raise MeshError(
                f"Mesh function needs {self.grid.size} values for M={self.grid.M}, "
                f"got shape {np.shape(self.values)}"
            )

    def at(self, i: int) -> Scalar:
        """Value at node index i, -1 <= i <= M+1."""
        return float(self.values[i + 1])

    @property
    def interior(self) -> Vector:
        """Values at i = 1 ... M-1, the range of inner products and norms."""
        return self.values[2 : self.grid.M + 1]

    def __add__(self, other: "MeshFn") -> "MeshFn":
        return MeshFn(self.grid, self.values + other.values)

    def __sub__(self, other: "MeshFn") -> "MeshFn":
        return MeshFn(self.grid, self.values - other.values)

    def scaled(self, factor: Scalar) -> "MeshFn":
        """Return factor * self."""
        return MeshFn(self.grid, factor * self.values)


@dataclass(frozen=True)
class SchemeParams:
    """Coefficients of u_t + a u_x + b u^m u_x + c u_xxx - alpha u_xxt
    + lam u_xxxxt - nu u_xxxxx = 0."""

    a: Scalar
    b: Scalar
    c: Scalar
    alpha: Scalar
    lam: Scalar
    nu: Scalar
    m: int

    def __post_init__(self) -> None:
        if self.alpha <= 0:
            raise InvalidParametersError(f"alpha must be positive, got {self.alpha}")
        if self.lam <= 0:
            raise InvalidParametersError(f"lambda must be positive, got {self.lam}")
        if isinstance(self.m, bool) or int(self.m) != self.m or self.m < 1:
            raise InvalidParametersError(f"m must be a positive integer, got {self.m}")
        object.__setattr__(self, "m", int(self.m))


@dataclass(frozen=True)
class TimeGrid:
    """Uniform time levels t_n = n*tau, n = 0 ... N."""

    tau: Scalar
    N: int

    def __post_init__(self) -> None:
        if self.tau <= 0:
            raise InvalidParametersError(f"tau must be positive, got {self.tau}")
        if self.N < 1:
            raise InvalidParametersError(f"N must be at least 1, got {self.N}")

    @property
    def T(self) -> Time:
        return self.N * self.tau


@dataclass(frozen=True)
class SimState:
    """Two consecutive time levels U^{n-1}, U^n."""

    n: int
    U_prev: MeshFn
    U_curr: MeshFn


@dataclass(frozen=True)
class BootstrapReport:
    """Outcome of the Picard iteration for U^1."""

    iterations: int
    residual: Scalar


@dataclass(frozen=True)
class EnergyRecord:
    """Discrete energy E^n at the midpoint time (n + 1/2) tau."""

    time: Time
    E: Scalar


@dataclass(frozen=True)
class SupNormRecord:
    """Max norms of U^n and U^n_x at t_n."""

    time: Time
    u_max: Scalar
    ux_max: Scalar


@dataclass
class SimOutput:
    """Everything recorded by one simulation run."""

    snapshots: List[Tuple[Time, MeshFn]] = field(default_factory=list)
    energy_series: List[EnergyRecord] = field(default_factory=list)
    sup_norm_series: List[SupNormRecord] = field(default_factory=list)
    bootstrap_report: Optional[BootstrapReport] = None
    final_state: Optional[Tuple[Time, MeshFn]] = None


@dataclass(frozen=True)
class ErrorReport:
    """Discrete L2 and max errors against an exact solution."""

    time: Time
    l2_error: Scalar
    max_error: Scalar


@dataclass(frozen=True)
class AnsatzSolution:
    """Parameters of a cosine-power travelling wave u = A cos^eta(B(x - v t))."""

    eta: Scalar
    Bsq_roots: Tuple[Scalar, Scalar]
    Bsq: Scalar
    kind: AnsatzKind
    # sqrt(-B^2) on the solitary branch, sqrt(B^2) otherwise
    B0: Scalar
    v: Scalar
    # None when A^m has no real root; amplitude_note says why
    A: Optional[Scalar]
    amplitude_note: Optional[str] = None


@dataclass(frozen=True)
class ConvergenceRow:
    """One level of a refinement ladder; rates are None on the first row."""

    param: Scalar
    l2_error: Scalar
    max_error: Scalar
    l2_rate: Optional[Scalar] = None
    max_rate: Optional[Scalar] = None


@dataclass
class ConvergenceTable:
    """Errors and observed orders along a refinement ladder."""

    axis: RefinementAxis
    rows: List[ConvergenceRow] = field(default_factory=list)
