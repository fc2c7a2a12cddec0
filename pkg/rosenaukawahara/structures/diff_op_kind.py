"""
Difference Operator Kinds

Defines the composite difference operators used on the uniform mesh.
"""

from enum import Enum


class DiffOpKind(Enum):
    """Enum for all difference operators of the scheme."""

    # First order
    FORWARD = "x"
    BACKWARD = "xbar"
    CENTRAL = "xhat"

    # Higher order
    SECOND = "x xbar"
    THIRD = "x xbar xhat"
    FOURTH = "xx xbar xbar"
    FIFTH = "xx xbar xbar xhat"
