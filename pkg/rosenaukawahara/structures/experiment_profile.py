"""
Experiment Profile.

Shape of a named experiment: equation coefficients, domain, and the reference
values of its refinement and energy studies.
"""

from typing import List, TypedDict


class CoefficientSet(TypedDict):
    """Coefficients of the equation, config key names except lam."""

    a: float
    b: float
    c: float
    alpha: float
    lam: float  # config key "lambda"
    nu: float
    m: int


class RefinementStudy(TypedDict):
    """A refinement ladder with the fixed parameter and reference errors."""

    x_left: float
    x_right: float
    T: float
    fixed: float
    levels: List[float]
    l2_errors: List[float]
    max_errors: List[float]


class EnergyStudy(TypedDict):
    """A long run whose discrete energy is audited."""

    x_left: float
    x_right: float
    h: float
    tau: float
    T: float
    every: float
    times: List[float]
    energies: List[float]


class ExperimentProfile(TypedDict):
    """Named experiment."""

    description: str
    coefficients: CoefficientSet
    branch: str
    spatial: RefinementStudy
    temporal: RefinementStudy
    energy: EnergyStudy
