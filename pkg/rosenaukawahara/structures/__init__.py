"""
Structures package initialization.
"""

from .diff_op_kind import DiffOpKind
from .stencil_coefficients import (
    STENCIL_COEFFICIENTS,
    STENCIL_ORDERS,
    StencilHelper,
    StencilWeights,
)
from .ansatz_kinds import AnsatzBranch, AnsatzKind
from .refinement_axis import RefinementAxis
from .exit_codes import ExitCode
from .experiment_profile import (
    CoefficientSet,
    EnergyStudy,
    ExperimentProfile,
    RefinementStudy,
)

__all__ = [
    "DiffOpKind",
    "STENCIL_COEFFICIENTS",
    "STENCIL_ORDERS",
    "StencilHelper",
    "StencilWeights",
    "AnsatzBranch",
    "AnsatzKind",
    "RefinementAxis",
    "ExitCode",
    "CoefficientSet",
    "EnergyStudy",
    "ExperimentProfile",
    "RefinementStudy",
]
