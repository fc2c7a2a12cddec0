"""
Harness package initialization.
"""

from .config import RunConfig, parse_config, parse_config_text
from .convergence import ConvergenceStudy, observed_rate, with_rates
from .property_suite import PropertySuite, SuiteResult
from .commands import (
    cmd_simulate,
    cmd_converge,
    cmd_property_check,
    cmd_exact_info,
    cmd_energy_audit,
)
from .cli import main

__all__ = [
    "RunConfig",
    "parse_config",
    "parse_config_text",
    "ConvergenceStudy",
    "observed_rate",
    "with_rates",
    "PropertySuite",
    "SuiteResult",
    "cmd_simulate",
    "cmd_converge",
    "cmd_property_check",
    "cmd_exact_info",
    "cmd_energy_audit",
    "main",
]
