"""
Linear algebra package initialization.
"""

from .banded_linalg import BandedMatrix, BandedLU, lu_factor, solve

__all__ = ["BandedMatrix", "BandedLU", "lu_factor", "solve"]
