"""
Mesh package initialization.
"""

from .mesh_ops import (
    build_grid,
    grid_from_spacing,
    zeros,
    project_z0h,
    in_z0h,
    sample,
    stencil_values,
    apply_diff,
    inner_product,
    norm_l2,
    norm_max,
    difference_norm,
    norm_forward_second,
)

__all__ = [
    "build_grid",
    "grid_from_spacing",
    "zeros",
    "project_z0h",
    "in_z0h",
    "sample",
    "stencil_values",
    "apply_diff",
    "inner_product",
    "norm_l2",
    "norm_max",
    "difference_norm",
    "norm_forward_second",
]
