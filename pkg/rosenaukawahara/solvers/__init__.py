"""
Solvers package initialization.
"""

from .scheme import (
    mass_operator,
    spatial_operator,
    assemble_lhs,
    assemble_rhs,
    three_level_step,
    bootstrap_crank_nicolson,
    run,
)

__all__ = [
    "mass_operator",
    "spatial_operator",
    "assemble_lhs",
    "assemble_rhs",
    "three_level_step",
    "bootstrap_crank_nicolson",
    "run",
]
