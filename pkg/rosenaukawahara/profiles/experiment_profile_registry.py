"""
Experiment Profile Registry.

Reference experiments for the solitary-wave tests and named coefficient
presets for the special cases of the equation.
"""

from typing import Dict, List

from ..structures.experiment_profile import CoefficientSet, ExperimentProfile
from ..types.mesh_types import SchemeParams


class ExperimentProfileRegistry:
    """Registry for experiment profiles and coefficient presets."""

    PROFILES: Dict[str, ExperimentProfile] = {
        "example1": {
            "description": "Quadratic nonlinearity (m=2), sech^2 solitary wave",
            "coefficients": {
                "a": 1.0,
                "b": 1.0,
                "c": 2.0,
                "alpha": 1.0,
                "lam": 1.0,
                "nu": 1.0,
                "m": 2,
            },
            "branch": "minus",
            "spatial": {
                "x_left": -40.0,
                "x_right": 200.0,
                "T": 10.0,
                "fixed": 0.005,  # tau
                "levels": [0.8, 0.4, 0.2, 0.1],
                "l2_errors": [2.66e-1, 6.650e-2, 1.666e-2, 4.209e-3],
                "max_errors": [1.032e-1, 2.570e-2, 6.460e-3, 1.631e-3],
            },
            "temporal": {
                "x_left": -40.0,
                "x_right": 200.0,
                "T": 10.0,
                "fixed": 0.005,  # h
                "levels": [0.8, 0.4, 0.2, 0.1],
                "l2_errors": [1.523, 3.812e-1, 9.711e-2, 2.442e-2],
                "max_errors": [6.060e-1, 1.540e-1, 3.910e-2, 9.820e-3],
            },
            "energy": {
                "x_left": -40.0,
                "x_right": 240.0,
                "h": 0.1,
                "tau": 0.1,
                "T": 100.0,
                "every": 20.0,
                "times": [0.05, 19.95, 39.95, 59.95, 79.95, 99.95],
                "energies": [
                    25.451405792697514,
                    25.451405792693116,
                    25.451405792447929,
                    25.451405792214793,
                    25.451405791920855,
                    25.451405792207414,
                ],
            },
        },
        "example2": {
            "description": "Quartic nonlinearity (m=4), sech solitary wave",
            "coefficients": {
                "a": 1.0,
                "b": 1.0,
                "c": 2.0,
                "alpha": 1.0,
                "lam": 1.0,
                "nu": 1.0,
                "m": 4,
            },
            "branch": "minus",
            "spatial": {
                "x_left": -40.0,
                "x_right": 200.0,
                "T": 10.0,
                "fixed": 0.005,
                "levels": [0.8, 0.4, 0.2, 0.1],
                "l2_errors": [1.543e-1, 3.790e-2, 9.440e-3, 2.366e-3],
                "max_errors": [5.839e-2, 1.446e-2, 3.599e-3, 9.011e-4],
            },
            "temporal": {
                "x_left": -40.0,
                "x_right": 200.0,
                "T": 10.0,
                "fixed": 0.005,
                "levels": [0.8, 0.4, 0.2, 0.1],
                "l2_errors": [4.582e-1, 8.633e-2, 2.124e-2, 5.263e-3],
                "max_errors": [2.029e-1, 3.843e-2, 9.447e-3, 2.330e-3],
            },
            "energy": {
                "x_left": -40.0,
                "x_right": 240.0,
                "h": 0.1,
                "tau": 0.1,
                "T": 100.0,
                "every": 20.0,
                "times": [0.05, 19.95, 39.95, 59.95, 79.95, 99.95],
                "energies": [
                    13.565665615099391,
                    13.565665614771643,
                    13.565665614965912,
                    13.565665614937172,
                    13.565665614960499,
                    13.565665614998375,
                ],
            },
        },
    }

    # Special cases of the equation; no exact solution is attached
    PRESETS: Dict[str, CoefficientSet] = {
        # u_t - u_xxt + u_xxxxt + u_x + 2 u u_x = 0
        "rosenau_rlw": {
            "a": 1.0,
            "b": 2.0,
            "c": 0.0,
            "alpha": 1.0,
            "lam": 1.0,
            "nu": 0.0,
            "m": 1,
        },
        # Rosenau-RLW with a general power nonlinearity
        "generalized_rosenau_rlw": {
            "a": 1.0,
            "b": 1.0,
            "c": 0.0,
            "alpha": 1.0,
            "lam": 1.0,
            "nu": 0.0,
            "m": 3,
        },
    }

    @classmethod
    def names(cls) -> List[str]:
        """Names accepted by ``profile = ...``, experiments first."""
        return list(cls.PROFILES) + list(cls.PRESETS)

    @classmethod
    def get_profile(cls, name: str) -> ExperimentProfile:
        """
        Look up an experiment profile.

        Raises:
            KeyError: If no experiment has this name
        """
        if name not in cls.PROFILES:
            raise KeyError(f"Unknown experiment profile: {name}")
        return cls.PROFILES[name]

    @classmethod
    def get_coefficients(cls, name: str) -> CoefficientSet:
        """
        Coefficients of an experiment or a preset.

        Raises:
            KeyError: If the name is unknown
        """
        if name in cls.PROFILES:
            return cls.PROFILES[name]["coefficients"]
        if name in cls.PRESETS:
            return cls.PRESETS[name]
        raise KeyError(f"Unknown profile or preset: {name}; known: {', '.join(cls.names())}")

    @classmethod
    def scheme_params(cls, name: str) -> SchemeParams:
        """SchemeParams built from a named coefficient set."""
        coefficients = cls.get_coefficients(name)
        return SchemeParams(
            a=coefficients["a"],
            b=coefficients["b"],
            c=coefficients["c"],
            alpha=coefficients["alpha"],
            lam=coefficients["lam"],
            nu=coefficients["nu"],
            m=coefficients["m"],
        )
