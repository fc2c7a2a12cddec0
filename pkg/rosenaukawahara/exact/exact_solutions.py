"""
Exact Travelling-Wave Solutions

Sine-cosine ansatz u = A cos^eta(B xi), xi = x - v t, for the generalized
Rosenau-Kawahara-RLW equation. Balancing powers gives eta = -4/m; the remaining
algebraic system fixes B^2, v and A. A negative B^2 turns the cosine power into
the solitary pulse u = A sech^{4/m}(B0 xi) with B0 = sqrt(-B^2).
"""

import logging
import math
import warnings
from typing import Dict, Optional, Tuple

import numpy as np

from ..errors import (
    AmplitudeUndefinedError,
    AnsatzError,
    BoundaryViolationWarning,
    ComplexCaseError,
    DegenerateDenominatorError,
    VelocityPoleError,
    WrongKindError,
)
from ..mesh.mesh_ops import project_z0h
from ..structures.ansatz_kinds import AnsatzBranch, AnsatzKind
from ..types.mesh_types import (
    AnsatzSolution,
    ExactSolution,
    Grid,
    MeshFn,
    Scalar,
    SchemeParams,
    Time,
    Vector,
)

logger = logging.getLogger(__name__)

# |u| allowed at the domain ends of a sampled initial condition
BOUNDARY_TOLERANCE = 1e-8

# Relative size below which a denominator counts as zero
DEGENERACY_TOLERANCE = 1e-14


def _eta_factors(m: int) -> Tuple[Scalar, Scalar, Scalar]:
    """(eta, eta^2 - 2 eta + 2, eta^2 (eta - 2)^2)."""
    eta = -4.0 / m
    return eta, eta * eta - 2.0 * eta + 2.0, eta * eta * (eta - 2.0) ** 2


def _is_zero(value: Scalar, *scales: Scalar) -> bool:
    return abs(value) <= DEGENERACY_TOLERANCE * max((abs(s) for s in scales), default=0.0)


def _wavenumber_roots(p: SchemeParams) -> Tuple[Scalar, Scalar, Scalar]:
    """
    Returns (eta, discriminant, denominator) of the B^2 formula.

    Raises:
        DegenerateDenominatorError: If lam*c == nu*alpha
    """
    eta, K, D = _eta_factors(p.m)
    leading = p.lam * p.c - p.nu * p.alpha
    if leading == 0.0 or _is_zero(leading, p.lam * p.c, p.nu * p.alpha):
        raise DegenerateDenominatorError(
            f"lambda*c = {p.lam * p.c} equals nu*alpha = {p.nu * p.alpha}; "
            "the wavenumber formula is undefined"
        )
    discriminant = (p.lam * p.a + p.nu) ** 2 * K * K + leading * (
        p.alpha * p.a + p.c
    ) * D
    return eta, discriminant, leading * D


def _kind_of(Bsq: Scalar) -> AnsatzKind:
    return AnsatzKind.SOLITARY if Bsq < 0.0 else AnsatzKind.PERIODIC


def _Bsq_pair(p: SchemeParams) -> Tuple[Scalar, Scalar, Scalar]:
    """(eta, plus root, minus root); raises ComplexCaseError for a negative discriminant."""
    eta, discriminant, denominator = _wavenumber_roots(p)
    if discriminant < 0.0:
        raise ComplexCaseError(
            f"Discriminant {discriminant:.6g} < 0: the ansatz parameters are complex"
        )
    _, K, _ = _eta_factors(p.m)
    centre = (p.lam * p.a + p.nu) * K
    root = math.sqrt(discriminant)
    return eta, (centre + root) / denominator, (centre - root) / denominator


def classify_branches(p: SchemeParams) -> Dict[AnsatzBranch, AnsatzKind]:
    """
    Kind of wave each branch produces.

    Returns:
        Branch -> kind; both branches are ComplexCase for a negative discriminant

    Raises:
        DegenerateDenominatorError: If lam*c == nu*alpha
    """
    try:
        _, plus, minus = _Bsq_pair(p)
    except ComplexCaseError:
        return {branch: AnsatzKind.COMPLEX_CASE for branch in AnsatzBranch}
    return {AnsatzBranch.PLUS: _kind_of(plus), AnsatzBranch.MINUS: _kind_of(minus)}


def default_branch(p: SchemeParams) -> AnsatzBranch:
    """
    The branch giving a solitary wave.

    Raises:
        AnsatzError: If both or neither branch is solitary
    """
    kinds = classify_branches(p)
    solitary = [branch for branch, kind in kinds.items() if kind is AnsatzKind.SOLITARY]
    if len(solitary) != 1:
        described = ", ".join(f"{b.value}: {k.value}" for b, k in kinds.items())
        raise AnsatzError(
            f"Expected exactly one solitary branch, found {len(solitary)} ({described}); "
            "choose the branch explicitly"
        )
    return solitary[0]


def solve_ansatz(p: SchemeParams, branch: AnsatzBranch) -> AnsatzSolution:
    """
    Solves the algebraic system of the cosine ansatz.

    Args:
        p: Equation coefficients
        branch: Sign in front of the square root of the B^2 formula

    Returns:
        eta, both B^2 roots, the chosen root and its kind, B0, v and A. A is
        None, with the reason in ``amplitude_note``, when b = 0 or when m is
        even and A^m is negative; evaluating such a solution raises
        AmplitudeUndefinedError.

    Raises:
        DegenerateDenominatorError: If lam*c == nu*alpha
        ComplexCaseError: If the discriminant is negative
        VelocityPoleError: If 2 lam B^2 (eta^2 - 2 eta + 2) + alpha vanishes
    """
    eta, plus, minus = _Bsq_pair(p)
    _, K, _ = _eta_factors(p.m)
    Bsq = plus if branch is AnsatzBranch.PLUS else minus
    kind = _kind_of(Bsq)

    velocity_denominator = 2.0 * p.lam * Bsq * K + p.alpha
    if _is_zero(velocity_denominator, 2.0 * p.lam * Bsq * K, p.alpha):
        raise VelocityPoleError(
            f"Wave speed undefined: 2*lambda*B^2*K + alpha = {velocity_denominator:.3e}"
        )
    v = -(2.0 * p.nu * Bsq * K + p.c) / velocity_denominator

    A, note = _amplitude(p, eta, Bsq, v)
    solution = AnsatzSolution(
        eta=eta,
        Bsq_roots=(plus, minus),
        Bsq=Bsq,
        kind=kind,
        B0=math.sqrt(abs(Bsq)),
        v=v,
        A=A,
        amplitude_note=note,
    )
    logger.debug("Ansatz %s branch: %s", branch.value, solution)
    return solution


def _amplitude(
    p: SchemeParams, eta: Scalar, Bsq: Scalar, v: Scalar
) -> Tuple[Optional[Scalar], Optional[str]]:
    """Real m-th root of A^m, or (None, reason)."""
    if p.b == 0.0:
        return None, "b = 0: the amplitude is not determined"
    bracket = (
        (p.m + 1)
        / p.b
        * Bsq
        * Bsq
        * eta
        * (eta - 1.0)
        * (eta - 2.0)
        * (eta - 3.0)
        * (p.lam * v + p.nu)
    )
    if p.m % 2 == 0 and bracket < 0.0:
        return None, f"A^{p.m} = {bracket:.6g} < 0 has no real root for even m={p.m}"
    return math.copysign(abs(bracket) ** (1.0 / p.m), bracket), None


def _require_amplitude(s: AnsatzSolution) -> Scalar:
    if s.A is None:
        raise AmplitudeUndefinedError(s.amplitude_note or "the amplitude is undefined")
    return s.A


def _sech(z: Vector) -> Vector:
    decay = np.exp(-np.abs(z))
    return 2.0 * decay / (1.0 + decay * decay)


def eval_solitary(s: AnsatzSolution, x: Vector, t: Time) -> Vector:
    """
    u(x, t) = A sech^{-eta}(B0 (x - v t)).

    Raises:
        WrongKindError: If s is not a solitary solution
        AmplitudeUndefinedError: If A has no real value
    """
    A = _require_evaluable(s)
    xi = np.asarray(x, dtype=np.float64) - s.v * t
    return A * _sech(s.B0 * xi) ** (-s.eta)


def _require_evaluable(s: AnsatzSolution) -> Scalar:
    if s.kind is not AnsatzKind.SOLITARY:
        raise WrongKindError(f"Only solitary solutions can be evaluated, got {s.kind.value}")
    return _require_amplitude(s)


def as_exact_solution(s: AnsatzSolution) -> ExactSolution:
    """The solitary wave as a function of (x, t)."""
    _require_evaluable(s)
    return lambda x, t: eval_solitary(s, x, t)


def _normalized(terms: Tuple[Scalar, ...]) -> Scalar:
    scale = max(abs(term) for term in terms)
    return abs(math.fsum(terms)) / scale if scale > 0.0 else 0.0


def residual_oracle(s: AnsatzSolution, p: SchemeParams) -> Tuple[Scalar, Scalar, Scalar]:
    """
    Residuals of the three balance equations of the ansatz, each divided by
    its largest term.

    Returns:
        (amplitude balance, wave-speed balance, linear balance)

    Raises:
        AmplitudeUndefinedError: If A has no real value
    """
    eta, Bsq, v, A = s.eta, s.Bsq, s.v, _require_amplitude(s)
    _, K, _ = _eta_factors(p.m)
    dispersion = p.lam * v + p.nu
    rlw = v * p.alpha + p.c
    amplitude = (
        p.b * A ** (p.m + 1) / (p.m + 1),
        -A * Bsq * Bsq * eta * (eta - 1.0) * (eta - 2.0) * (eta - 3.0) * dispersion,
    )
    speed = (
        A * Bsq * rlw * eta * (eta - 1.0),
        2.0 * A * Bsq * Bsq * eta * (eta - 1.0) * K * dispersion,
    )
    linear = (
        (p.a - v) * A,
        -A * Bsq * rlw * eta * eta,
        -A * Bsq * Bsq * eta**4 * dispersion,
    )
    return _normalized(amplitude), _normalized(speed), _normalized(linear)


def quadratic_residual(p: SchemeParams, Bsq: Scalar) -> Scalar:
    """
    Normalized residual of the quadratic in s = B^2 whose roots are the two
    branches: (lam c - nu alpha) D s^2 - 2 K (lam a + nu) s - (alpha a + c) = 0.
    """
    _, K, D = _eta_factors(p.m)
    return _normalized(
        (
            (p.lam * p.c - p.nu * p.alpha) * D * Bsq * Bsq,
            -2.0 * K * (p.lam * p.a + p.nu) * Bsq,
            -(p.alpha * p.a + p.c),
        )
    )


def ode_residual(s: AnsatzSolution, p: SchemeParams, xi: Vector, d: Scalar) -> Vector:
    """
    Residual of the once-integrated travelling-wave equation

        (a - v) u + b/(m+1) u^{m+1} + (v alpha + c) u'' - (lam v + nu) u'''' = 0

    with the derivatives replaced by central differences of step d.
    """
    xi = np.asarray(xi, dtype=np.float64)

    def profile(shift: Scalar) -> Vector:
        return eval_solitary(s, xi + shift, 0.0)

    u = profile(0.0)
    second = (profile(d) - 2.0 * u + profile(-d)) / d**2
    fourth = (
        profile(2.0 * d) - 4.0 * profile(d) + 6.0 * u - 4.0 * profile(-d) + profile(-2.0 * d)
    ) / d**4
    return (
        (p.a - s.v) * u
        + p.b / (p.m + 1) * u ** (p.m + 1)
        + (s.v * p.alpha + p.c) * second
        - (p.lam * s.v + p.nu) * fourth
    )


def initial_condition(s: AnsatzSolution, g: Grid) -> MeshFn:
    """
    Samples the solitary wave at t = 0 and forces the Z0h zeros.

    Raises:
        WrongKindError: If s is not a solitary solution
        AmplitudeUndefinedError: If A has no real value

    Warns:
        BoundaryViolationWarning: If |u| exceeds 1e-8 at either end of the domain
    """
    values = eval_solitary(s, g.nodes, 0.0)
    ends = np.abs(eval_solitary(s, np.array([g.x_left, g.x_right]), 0.0))
    if np.any(ends > BOUNDARY_TOLERANCE):
        logger.warning(
            "Solitary wave has not decayed at the domain ends: |u| = %.3e, %.3e",
            ends[0],
            ends[1],
        )
        warnings.warn(
            f"|u(x_left, 0)| = {ends[0]:.3e}, |u(x_right, 0)| = {ends[1]:.3e} exceed "
            f"{BOUNDARY_TOLERANCE:g}; enlarge the domain",
            BoundaryViolationWarning,
            stacklevel=2,
        )
    return project_z0h(MeshFn(g, values))
