"""
Stencil Coefficients

Maps each difference operator to its fixed stencil. The weights are given for
h = 1; the helper scales them by h^-order.
"""

from typing import Dict, Tuple

from .diff_op_kind import DiffOpKind

# offset -> weight, for unit spacing
StencilWeights = Dict[int, float]


STENCIL_COEFFICIENTS: Dict[DiffOpKind, StencilWeights] = {
    DiffOpKind.FORWARD: {0: -1.0, 1: 1.0},
    DiffOpKind.BACKWARD: {-1: -1.0, 0: 1.0},
    DiffOpKind.CENTRAL: {-1: -0.5, 1: 0.5},
    DiffOpKind.SECOND: {-1: 1.0, 0: -2.0, 1: 1.0},
    DiffOpKind.THIRD: {-2: -0.5, -1: 1.0, 1: -1.0, 2: 0.5},
    DiffOpKind.FOURTH: {-2: 1.0, -1: -4.0, 0: 6.0, 1: -4.0, 2: 1.0},
    DiffOpKind.FIFTH: {
        -3: -0.5,
        -2: 2.0,
        -1: -2.5,
        1: 2.5,
        2: -2.0,
        3: 0.5,
    },
}

# Power of h in the denominator
STENCIL_ORDERS: Dict[DiffOpKind, int] = {
    DiffOpKind.FORWARD: 1,
    DiffOpKind.BACKWARD: 1,
    DiffOpKind.CENTRAL: 1,
    DiffOpKind.SECOND: 2,
    DiffOpKind.THIRD: 3,
    DiffOpKind.FOURTH: 4,
    DiffOpKind.FIFTH: 5,
}


class StencilHelper:
    """Helper class to look up scaled stencils."""

    @staticmethod
    def get_weights(kind: DiffOpKind, h: float) -> StencilWeights:
        """Get the stencil weights of ``kind`` scaled for spacing ``h``."""
        scale = h ** -STENCIL_ORDERS[kind]
        return {
            offset: weight * scale
            for offset, weight in STENCIL_COEFFICIENTS[kind].items()
        }

    @staticmethod
    def get_reach(kind: DiffOpKind) -> Tuple[int, int]:
        """Get the (lowest, highest) offset touched by the stencil."""
        offsets = STENCIL_COEFFICIENTS[kind].keys()
        return min(offsets), max(offsets)
