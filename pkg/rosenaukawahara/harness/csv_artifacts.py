"""
CSV Artifacts

Writers for solution, energy and convergence files and the reader that turns a
solution file back into an initial condition. Floats are written with
``repr``, the shortest decimal that round-trips.
"""

import csv
import logging
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

import numpy as np

from ..errors import ConfigParseError
from ..mesh.mesh_ops import project_z0h
from ..types.mesh_types import ConvergenceTable, EnergyRecord, Grid, MeshFn, Scalar, Time

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

SOLUTION_HEADER = ["x", "u"]
ENERGY_HEADER = ["t", "E"]
CONVERGENCE_HEADER = ["param", "l2_err", "max_err", "l2_rate", "max_rate"]


def format_float(value: Optional[Scalar]) -> str:
    """Shortest round-trip decimal; empty for a missing value."""
    return "" if value is None else repr(float(value))


def solution_filename(t: Time) -> str:
    """solution_<t>.csv with t in compact decimal form."""
    return f"solution_{t:.10g}.csv"


def _write_rows(path: PathLike, header: List[str], rows: Iterable[Sequence[str]]) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    logger.debug("Wrote %s", target)
    return target


def write_solution(path: PathLike, U: MeshFn) -> Path:
    """Writes every stored node, fictitious points included, as x,u rows."""
    return _write_rows(
        path,
        SOLUTION_HEADER,
        ((format_float(x), format_float(u)) for x, u in zip(U.grid.nodes, U.values)),
    )


def write_energy(path: PathLike, series: Sequence[EnergyRecord]) -> Path:
    return _write_rows(
        path,
        ENERGY_HEADER,
        ((format_float(record.time), format_float(record.E)) for record in series),
    )


def write_convergence(path: PathLike, table: ConvergenceTable) -> Path:
    return _write_rows(
        path,
        CONVERGENCE_HEADER,
        (
            (
                format_float(row.param),
                format_float(row.l2_error),
                format_float(row.max_error),
                format_float(row.l2_rate),
                format_float(row.max_rate),
            )
            for row in table.rows
        ),
    )


def read_solution(path: PathLike, grid: Grid) -> MeshFn:
    """
    Reads a solution file written for ``grid`` as a mesh function.

    Args:
        path: CSV file with an x,u header
        grid: Grid the values must belong to

    Returns:
        The values, projected to Z0h

    Raises:
        ConfigParseError: If the file is unreadable or does not match the grid
    """
    try:
        with Path(path).open(encoding="utf-8", newline="") as handle:
            rows = list(csv.reader(handle))
    except OSError as error:
        raise ConfigParseError("initial", f"cannot read {path}: {error.strerror}") from error
    if not rows or [cell.strip() for cell in rows[0]] != SOLUTION_HEADER:
        raise ConfigParseError("initial", f"{path} does not start with an x,u header")
    body = [row for row in rows[1:] if row]
    if len(body) != grid.size:
        raise ConfigParseError(
            "initial", f"{path} has {len(body)} nodes, the grid has {grid.size}"
        )
    try:
        data = np.array([[float(x), float(u)] for x, u in body], dtype=np.float64)
    except ValueError as error:
        raise ConfigParseError("initial", f"{path} holds a non-numeric entry") from error
    if not np.allclose(data[:, 0], grid.nodes, rtol=0.0, atol=1e-9 * max(1.0, grid.h)):
        raise ConfigParseError("initial", f"node positions in {path} do not match the grid")
    return project_z0h(MeshFn(grid, data[:, 1].copy()))
