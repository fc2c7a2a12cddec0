"""
Profiles package initialization.
"""

from .experiment_profile_registry import ExperimentProfileRegistry

__all__ = ["ExperimentProfileRegistry"]
