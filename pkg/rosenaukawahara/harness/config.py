"""
Run Configuration

Flat ``key = value`` configuration files, one assignment per line, ``#``
starting a comment. A ``profile`` key pulls coefficients and domain from the
experiment registry; explicit keys override it.
"""

import logging
import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable, Dict, Optional, Union

from ..errors import ConfigParseError, MeshError
from ..mesh.mesh_ops import MIN_CELLS, build_grid, grid_from_spacing
from ..profiles.experiment_profile_registry import ExperimentProfileRegistry
from ..types.mesh_types import Grid, Scalar, SchemeParams, TimeGrid

logger = logging.getLogger(__name__)

COEFFICIENT_KEYS = ("a", "b", "c", "alpha", "lambda", "nu", "m")

KNOWN_KEYS = frozenset(
    (
        "x_left",
        "x_right",
        "M",
        "h",
        "tau",
        "N",
        "T",
        *COEFFICIENT_KEYS,
        "initial",
        "branch",
        "snapshot_stride",
        "out_dir",
        "bootstrap_tol",
        "bootstrap_max_iter",
        "profile",
    )
)

BRANCHES = ("auto", "plus", "minus")

# Slack allowed when T is compared with a whole number of steps
TIME_SLACK = 1e-9


@dataclass(frozen=True)
class RunConfig:
    """A validated run configuration; resolution and time step are resolved."""

    x_left: float
    x_right: float
    M: int
    tau: float
    N: int
    T: float
    params: SchemeParams
    initial: str = "ansatz"
    branch: str = "auto"
    snapshot_stride: int = 0
    out_dir: str = "output"
    bootstrap_tol: float = 1e-12
    bootstrap_max_iter: int = 50
    profile: Optional[str] = None

    @property
    def h(self) -> Scalar:
        return (self.x_right - self.x_left) / self.M

    @property
    def realized_T(self) -> Scalar:
        """Final time actually reached, N * tau."""
        return self.N * self.tau

    def grid(self) -> Grid:
        return build_grid(self.x_left, self.x_right, self.M)

    def time_grid(self) -> TimeGrid:
        return TimeGrid(tau=self.tau, N=self.N)

    def with_spacing(self, h: Scalar) -> "RunConfig":
        """
        Copy with a new spatial step.

        Raises:
            ConfigParseError: If h does not divide the domain
        """
        try:
            grid = grid_from_spacing(self.x_left, self.x_right, h)
        except MeshError as error:
            raise ConfigParseError("h", str(error)) from error
        return replace(self, M=grid.M)

    def with_time_step(self, tau: Scalar) -> "RunConfig":
        """Copy with a new time step and the step count it implies for T."""
        return replace(self, tau=tau, N=steps_for(self.T, tau))


def steps_for(T: Scalar, tau: Scalar) -> int:
    """
    Number of steps reaching T with step tau; rounds up when tau does not
    divide T and logs the realized final time.
    """
    ratio = T / tau
    N = max(1, math.ceil(ratio - TIME_SLACK * max(1.0, ratio)))
    if abs(N * tau - T) > TIME_SLACK * max(1.0, T):
        logger.warning(
            "tau=%g does not divide T=%g; running N=%d steps to t=%.12g", tau, T, N, N * tau
        )
    return N


def _tokenize(text: str) -> Dict[str, str]:
    entries: Dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigParseError(f"line {number}", f"expected 'key = value', got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in KNOWN_KEYS:
            raise ConfigParseError(key, "unknown key")
        if key in entries:
            raise ConfigParseError(key, "given more than once")
        if not value:
            raise ConfigParseError(key, "empty value")
        entries[key] = value
    return entries


def _number(entries: Dict[str, str], key: str) -> float:
    try:
        value = float(entries[key])
    except ValueError as error:
        raise ConfigParseError(key, f"not a number: {entries[key]!r}") from error
    if not math.isfinite(value):
        raise ConfigParseError(key, f"not finite: {entries[key]!r}")
    return value


def _integer(entries: Dict[str, str], key: str) -> int:
    try:
        return int(entries[key])
    except ValueError as error:
        raise ConfigParseError(key, f"not an integer: {entries[key]!r}") from error


def _require(entries: Dict[str, str], key: str, reader: Callable[[Dict[str, str], str], float]) -> float:
    if key not in entries:
        raise ConfigParseError(key, "missing required key")
    return reader(entries, key)


def _one_of(entries: Dict[str, str], first: str, second: str) -> str:
    present = [key for key in (first, second) if key in entries]
    if not present:
        raise ConfigParseError(first, f"missing required key (or give {second})")
    if len(present) == 2:
        raise ConfigParseError(second, f"conflicts with {first}; give only one")
    return present[0]


def _apply_profile(entries: Dict[str, str]) -> Dict[str, str]:
    name = entries.get("profile")
    if name is None:
        return entries
    try:
        coefficients = ExperimentProfileRegistry.get_coefficients(name)
    except KeyError as error:
        raise ConfigParseError("profile", str(error.args[0])) from error
    inherited = {
        "a": coefficients["a"],
        "b": coefficients["b"],
        "c": coefficients["c"],
        "alpha": coefficients["alpha"],
        "lambda": coefficients["lam"],
        "nu": coefficients["nu"],
        "m": coefficients["m"],
    }
    defaults = {key: repr(value) for key, value in inherited.items()}
    if name in ExperimentProfileRegistry.PROFILES:
        profile = ExperimentProfileRegistry.get_profile(name)
        defaults["x_left"] = repr(profile["spatial"]["x_left"])
        defaults["x_right"] = repr(profile["spatial"]["x_right"])
        defaults["branch"] = profile["branch"]
    return {**defaults, **entries}


def parse_config_text(text: str) -> RunConfig:
    """
    Parses and validates a configuration.

    Args:
        text: Configuration file contents

    Returns:
        The resolved configuration

    Raises:
        ConfigParseError: Naming the offending key
    """
    entries = _apply_profile(_tokenize(text))

    x_left = _require(entries, "x_left", _number)
    x_right = _require(entries, "x_right", _number)
    if not x_left < x_right:
        raise ConfigParseError("x_right", f"must exceed x_left={x_left}")

    if _one_of(entries, "M", "h") == "M":
        M = _integer(entries, "M")
        if M < MIN_CELLS:
            raise ConfigParseError("M", f"{M} cells, at least {MIN_CELLS} are needed")
    else:
        try:
            M = grid_from_spacing(x_left, x_right, _number(entries, "h")).M
        except MeshError as error:
            raise ConfigParseError("h", str(error)) from error

    T = _require(entries, "T", _number)
    if T <= 0:
        raise ConfigParseError("T", f"must be positive, got {T}")
    if _one_of(entries, "tau", "N") == "tau":
        tau = _number(entries, "tau")
        if tau <= 0:
            raise ConfigParseError("tau", f"must be positive, got {tau}")
        N = steps_for(T, tau)
    else:
        N = _integer(entries, "N")
        if N < 1:
            raise ConfigParseError("N", f"must be at least 1, got {N}")
        tau = T / N

    coefficients = {key: _require(entries, key, _number) for key in COEFFICIENT_KEYS[:-1]}
    for key in ("alpha", "lambda"):
        if coefficients[key] <= 0:
            raise ConfigParseError(key, f"must be positive, got {coefficients[key]}")
    m = int(_require(entries, "m", _integer))
    if m < 1:
        raise ConfigParseError("m", f"must be a positive integer, got {m}")
    params = SchemeParams(
        a=coefficients["a"],
        b=coefficients["b"],
        c=coefficients["c"],
        alpha=coefficients["alpha"],
        lam=coefficients["lambda"],
        nu=coefficients["nu"],
        m=m,
    )

    branch = entries.get("branch", "auto")
    if branch not in BRANCHES:
        raise ConfigParseError("branch", f"expected one of {', '.join(BRANCHES)}, got {branch!r}")

    snapshot_stride = _integer(entries, "snapshot_stride") if "snapshot_stride" in entries else 0
    if snapshot_stride < 0:
        raise ConfigParseError("snapshot_stride", "must not be negative")
    bootstrap_tol = _number(entries, "bootstrap_tol") if "bootstrap_tol" in entries else 1e-12
    if bootstrap_tol <= 0:
        raise ConfigParseError("bootstrap_tol", "must be positive")
    bootstrap_max_iter = (
        _integer(entries, "bootstrap_max_iter") if "bootstrap_max_iter" in entries else 50
    )
    if bootstrap_max_iter < 1:
        raise ConfigParseError("bootstrap_max_iter", "must be at least 1")

    return RunConfig(
        x_left=x_left,
        x_right=x_right,
        M=M,
        tau=tau,
        N=N,
        T=T,
        params=params,
        initial=entries.get("initial", "ansatz"),
        branch=branch,
        snapshot_stride=snapshot_stride,
        out_dir=entries.get("out_dir", "output"),
        bootstrap_tol=bootstrap_tol,
        bootstrap_max_iter=bootstrap_max_iter,
        profile=entries.get("profile"),
    )


def parse_config(path: Union[str, Path]) -> RunConfig:
    """
    Reads and parses a UTF-8 configuration file.

    Raises:
        ConfigParseError: If the file cannot be read or is invalid
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as error:
        raise ConfigParseError("config", f"cannot read {path}: {error.strerror}") from error
    return parse_config_text(text)
