"""
Types package initialization.
"""

from .mesh_types import (
    # Basic types
    Position,
    Time,
    Scalar,
    Vector,
    ExactSolution,
    # Mesh
    Grid,
    MeshFn,
    # Scheme
    SchemeParams,
    TimeGrid,
    SimState,
    BootstrapReport,
    SimOutput,
    # Diagnostics
    EnergyRecord,
    SupNormRecord,
    ErrorReport,
    # Exact solutions
    AnsatzSolution,
    # Harness
    ConvergenceRow,
    ConvergenceTable,
)

__all__ = [
    "Position",
    "Time",
    "Scalar",
    "Vector",
    "ExactSolution",
    "Grid",
    "MeshFn",
    "SchemeParams",
    "TimeGrid",
    "SimState",
    "BootstrapReport",
    "SimOutput",
    "EnergyRecord",
    "SupNormRecord",
    "ErrorReport",
    "AnsatzSolution",
    "ConvergenceRow",
    "ConvergenceTable",
]
