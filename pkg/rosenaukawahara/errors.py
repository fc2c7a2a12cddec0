"""
Exception hierarchy for the rosenaukawahara package.

Validation failures derive from ``ValueError`` so callers that only guard
against bad input keep working; numerical failures derive from
``ArithmeticError``.
"""

from typing import Optional


class RosenauKawaharaError(Exception):
    """Base class for every error raised by this package."""


# Mesh


class MeshError(RosenauKawaharaError, ValueError):
    """Invalid grid or mesh function."""


class InvalidDomainError(MeshError):
    """The interval is empty or the spacing does not divide it."""


class GridTooCoarseError(MeshError):
    """Fewer than 8 cells; the fifth-order stencil needs interior room."""


class GridMismatchError(MeshError):
    """Two mesh functions live on different grids."""


class NotInZ0hError(MeshError):
    """A time level does not vanish at the boundary and fictitious nodes."""


# Banded linear algebra


class BandIndexError(RosenauKawaharaError, IndexError):
    """An entry outside the stored band was written."""


class DimensionMismatchError(RosenauKawaharaError, ValueError):
    """Vector length does not match the matrix dimension."""


# Scheme and parameters


class InvalidParametersError(RosenauKawaharaError, ValueError):
    """Equation coefficients or time grid violate their invariants."""


class NumericalFailure(RosenauKawaharaError, ArithmeticError):
    """A solve could not produce a trustworthy result."""


class SingularSystemError(NumericalFailure):
    """Zero pivot found while factoring a banded matrix."""

    def __init__(self, message: str, pivot_index: Optional[int] = None) -> None:
        super().__init__(message)
        self.pivot_index = pivot_index


class BootstrapNonConvergenceError(NumericalFailure):
    """Picard iteration for the first time level did not converge."""

    def __init__(self, message: str, iterations: int, residual: float) -> None:
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual


class StepResidualError(NumericalFailure):
    """A computed time level does not satisfy the scheme equations."""


# Diagnostics


class EmptySeriesError(RosenauKawaharaError, ValueError):
    """An energy series with no records was supplied."""


# Exact solutions


class AnsatzError(RosenauKawaharaError, ValueError):
    """The travelling-wave ansatz has no usable real solution."""


class DegenerateDenominatorError(AnsatzError):
    """lambda*c == nu*alpha, the wavenumber formula divides by zero."""


class ComplexCaseError(AnsatzError):
    """Negative discriminant: the ansatz parameters are complex."""


class AmplitudeUndefinedError(AnsatzError):
    """The amplitude root is not real (even power with negative bracket)."""


class VelocityPoleError(AnsatzError):
    """The wave speed formula divides by zero."""


class WrongKindError(AnsatzError):
    """Operation requires a solitary solution but got another kind."""


# Harness


class ConfigParseError(RosenauKawaharaError, ValueError):
    """A run configuration could not be parsed or validated."""

    def __init__(self, key: str, message: str) -> None:
        super().__init__(f"{key}: {message}")
        self.key = key


class BoundaryViolationWarning(UserWarning):
    """The sampled initial profile has not decayed at the domain ends."""
