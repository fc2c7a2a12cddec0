"""
Diagnostics package initialization.
"""

from .energy_diagnostics import (
    quadratic_form,
    discrete_energy,
    sup_norms,
    exact_energy,
    error_report,
    drift,
    energy_table,
)

__all__ = [
    "quadratic_form",
    "discrete_energy",
    "sup_norms",
    "exact_energy",
    "error_report",
    "drift",
    "energy_table",
]
