"""
Refinement Axis

Which mesh parameter a convergence study refines.
"""

from enum import Enum


class RefinementAxis(Enum):
    """Enum for the refinement axes of a convergence study."""

    SPATIAL = "spatial"
    TEMPORAL = "temporal"
