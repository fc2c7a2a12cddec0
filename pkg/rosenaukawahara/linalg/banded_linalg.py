"""
Banded Linear Algebra

Row-wise band storage, LU factorization with partial pivoting and solve. The
factorization itself is delegated to LAPACK (``gbtrf``/``gbtrs``) through
``scipy.linalg.lapack``; this module owns the storage conventions, the band
discipline and the singular-pivot check.
"""

import logging
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy.linalg import lapack

from ..errors import BandIndexError, DimensionMismatchError, SingularSystemError
from ..types.mesh_types import Scalar, Vector

logger = logging.getLogger(__name__)

# Relative threshold below which a pivot counts as zero
SINGULAR_PIVOT_TOLERANCE = 1e-14


@dataclass
class BandedMatrix:
    """
    Square banded matrix; entry (r, c) is stored at band[r, c - r + kl].

    Cells of ``band`` that map outside the matrix (the top-left and
    bottom-right corners) are never read.
    """

    n: int
    kl: int
    ku: int
    band: npt.NDArray[np.float64]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DimensionMismatchError(f"Dimension must be positive, got n={self.n}")
        if not 0 <= self.kl < self.n:
            raise DimensionMismatchError(f"kl={self.kl} must satisfy 0 <= kl < n={self.n}")
        if not 0 <= self.ku < self.n:
            raise DimensionMismatchError(f"ku={self.ku} must satisfy 0 <= ku < n={self.n}")
        expected = (self.n, self.kl + self.ku + 1)
        if self.band.shape != expected:
            raise DimensionMismatchError(
                f"Band storage has shape {self.band.shape}, expected {expected}"
            )

    @classmethod
    def zeros(cls, n: int, kl: int, ku: int) -> "BandedMatrix":
        """An all-zero n x n matrix with the given bandwidths."""
        return cls(n=n, kl=kl, ku=ku, band=np.zeros((n, kl + ku + 1)))

    @classmethod
    def from_dense(cls, dense: npt.NDArray[np.float64], kl: int, ku: int) -> "BandedMatrix":
        """
        Copies the band of a dense square matrix.

        Raises:
            DimensionMismatchError: If the matrix is not square
            BandIndexError: If a nonzero lies outside the band
        """
        dense = np.asarray(dense, dtype=np.float64)
        n = dense.shape[0]
        if dense.ndim != 2 or dense.shape[1] != n:
            raise DimensionMismatchError(f"Matrix must be square, got {dense.shape}")
        matrix = cls.zeros(n, kl, ku)
        rows, cols = np.nonzero(dense)
        outside = (cols - rows > ku) | (rows - cols > kl)
        if np.any(outside):
            r, c = rows[outside][0], cols[outside][0]
            raise BandIndexError(f"Entry ({r}, {c}) lies outside the band kl={kl}, ku={ku}")
        for offset in range(-kl, ku + 1):
            diagonal = np.diagonal(dense, offset)
            if offset >= 0:
                matrix.band[: n - offset, offset + kl] = diagonal
            else:
                matrix.band[-offset:, offset + kl] = diagonal
        return matrix

    def _in_band(self, r: int, c: int) -> bool:
        return -self.kl <= c - r <= self.ku

    def _check_index(self, r: int, c: int) -> None:
        if not (0 <= r < self.n and 0 <= c < self.n):
            raise IndexError(f"Entry ({r}, {c}) outside a {self.n} x {self.n} matrix")

    def get(self, r: int, c: int) -> Scalar:
        """Entry (r, c); zero outside the band."""
        self._check_index(r, c)
        if not self._in_band(r, c):
            return 0.0
        return float(self.band[r, c - r + self.kl])

    def set(self, r: int, c: int, value: Scalar) -> None:
        """
        Sets entry (r, c).

        Raises:
            BandIndexError: If (r, c) lies outside the band
        """
        self._check_index(r, c)
        if not self._in_band(r, c):
            raise BandIndexError(
                f"Entry ({r}, {c}) lies outside the band kl={self.kl}, ku={self.ku}"
            )
        self.band[r, c - r + self.kl] = value

    def diagonal_band(self, offset: int) -> npt.NDArray[np.float64]:
        """View of the stored entries (r, r + offset) for valid r."""
        column = self.band[:, offset + self.kl]
        return column[: self.n - offset] if offset >= 0 else column[-offset:]

    def to_dense(self) -> npt.NDArray[np.float64]:
        dense = np.zeros((self.n, self.n))
        for offset in range(-self.kl, self.ku + 1):
            rows = np.arange(max(0, -offset), min(self.n, self.n - offset))
            dense[rows, rows + offset] = self.diagonal_band(offset)
        return dense

    def matvec(self, x: Vector) -> Vector:
        """A @ x computed from the band."""
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.n,):
            raise DimensionMismatchError(f"Vector of length {x.shape} for n={self.n}")
        y = np.zeros(self.n)
        for offset in range(-self.kl, self.ku + 1):
            rows = np.arange(max(0, -offset), min(self.n, self.n - offset))
            y[rows] += self.diagonal_band(offset) * x[rows + offset]
        return y

    def max_abs(self) -> Scalar:
        """max |A_rc| over the entries that belong to the matrix."""
        largest = 0.0
        for offset in range(-self.kl, self.ku + 1):
            diagonal = self.diagonal_band(offset)
            if diagonal.size:
                largest = max(largest, float(np.max(np.abs(diagonal))))
        return largest

    def to_lapack(self) -> npt.NDArray[np.float64]:
        """
        LAPACK ``gbtrf`` layout: shape (2*kl + ku + 1, n), entry (r, c) at
        [kl + ku + r - c, c]; the first kl rows are left for pivoting fill.
        """
        ab = np.zeros((2 * self.kl + self.ku + 1, self.n), order="F")
        for offset in range(-self.kl, self.ku + 1):
            rows = np.arange(max(0, -offset), min(self.n, self.n - offset))
            ab[self.kl + self.ku - offset, rows + offset] = self.diagonal_band(offset)
        return ab


@dataclass(frozen=True)
class BandedLU:
    """
    LU factors with partial pivoting in LAPACK band layout.

    ``factors`` has kl + (kl + ku) + 1 rows: U occupies the top kl + ku + 1
    rows including the pivoting fill, the multipliers of L the bottom kl.
    """

    n: int
    kl: int
    ku: int
    factors: npt.NDArray[np.float64]
    pivots: npt.NDArray[np.int32]


def lu_factor(matrix: BandedMatrix) -> BandedLU:
    """
    Factors a banded matrix with partial pivoting.

    Args:
        matrix: The banded matrix

    Returns:
        The factorization

    Raises:
        SingularSystemError: If a pivot is zero to within 1e-14 * max|A|
    """
    ab = matrix.to_lapack()
    (gbtrf,) = lapack.get_lapack_funcs(("gbtrf",), (ab,))
    factors, pivots, info = gbtrf(ab, matrix.kl, matrix.ku, overwrite_ab=True)
    if info < 0:
        raise ValueError(f"gbtrf rejected argument {-info}")

    threshold = SINGULAR_PIVOT_TOLERANCE * matrix.max_abs()
    diagonal = np.abs(factors[matrix.kl + matrix.ku, :])
    small = np.nonzero(diagonal <= threshold)[0]
    if info > 0 or small.size:
        index = int(small[0]) if small.size else info - 1
        logger.error(
            "Singular banded system: n=%d, pivot %d = %.3e, max|A| = %.3e",
            matrix.n,
            index,
            float(diagonal[index]),
            matrix.max_abs(),
        )
        raise SingularSystemError(
            f"Zero pivot at row {index} of a {matrix.n} x {matrix.n} banded system",
            pivot_index=index,
        )
    return BandedLU(
        n=matrix.n, kl=matrix.kl, ku=matrix.ku, factors=factors, pivots=pivots
    )


def solve(factorization: BandedLU, rhs: Vector) -> Vector:
    """
    Solves A x = rhs from a factorization of A.

    Raises:
        DimensionMismatchError: If rhs does not have length n
    """
    rhs = np.asarray(rhs, dtype=np.float64)
    if rhs.shape != (factorization.n,):
        raise DimensionMismatchError(
            f"Right-hand side of shape {rhs.shape} for a system of size {factorization.n}"
        )
    (gbtrs,) = lapack.get_lapack_funcs(("gbtrs",), (factorization.factors,))
    x, info = gbtrs(
        factorization.factors,
        factorization.kl,
        factorization.ku,
        rhs.copy(),
        factorization.pivots,
    )
    if info != 0:
        raise ValueError(f"gbtrs rejected argument {-info}")
    return np.asarray(x, dtype=np.float64)
