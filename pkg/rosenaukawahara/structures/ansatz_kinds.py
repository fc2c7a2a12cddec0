"""
Ansatz Branches and Kinds

Classification of the sine-cosine travelling-wave solutions.
"""

from enum import Enum


class AnsatzBranch(Enum):
    """Sign chosen in front of the square root of the wavenumber formula."""

    PLUS = "plus"
    MINUS = "minus"


class AnsatzKind(Enum):
    """Kind of travelling wave produced by a branch."""

    # B^2 < 0: sech-power pulse
    SOLITARY = "Solitary"
    # B^2 > 0: cosine-power wave, classified only
    PERIODIC = "Periodic"
    # negative discriminant, complex parameters
    COMPLEX_CASE = "ComplexCase"
