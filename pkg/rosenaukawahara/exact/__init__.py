"""
Exact solutions package initialization.
"""

from .exact_solutions import (
    solve_ansatz,
    classify_branches,
    default_branch,
    eval_solitary,
    as_exact_solution,
    residual_oracle,
    quadratic_residual,
    ode_residual,
    initial_condition,
)

__all__ = [
    "solve_ansatz",
    "classify_branches",
    "default_branch",
    "eval_solitary",
    "as_exact_solution",
    "residual_oracle",
    "quadratic_residual",
    "ode_residual",
    "initial_condition",
]
