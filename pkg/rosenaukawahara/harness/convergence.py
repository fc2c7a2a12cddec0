"""
Convergence Study

Runs a refinement ladder along one axis and tabulates errors and observed
orders. Levels are independent and are off-loaded to a thread pool; the rows
come back in ladder order.
"""

import asyncio
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from ..errors import ConfigParseError
from ..structures.refinement_axis import RefinementAxis
from ..types.mesh_types import ConvergenceRow, ConvergenceTable, Scalar
from .config import RunConfig
from .simulation import execute, final_errors, prepare

logger = logging.getLogger(__name__)


def observed_rate(
    coarse_param: Scalar, fine_param: Scalar, coarse_error: Scalar, fine_error: Scalar
) -> Optional[Scalar]:
    """
    log(e_coarse / e_fine) / log(p_coarse / p_fine); log2 of the error ratio
    for halved meshes. None when an error vanishes or the parameters coincide.
    """
    if coarse_error <= 0.0 or fine_error <= 0.0 or coarse_param == fine_param:
        return None
    return math.log(coarse_error / fine_error) / math.log(coarse_param / fine_param)


def with_rates(axis: RefinementAxis, rows: Sequence[ConvergenceRow]) -> ConvergenceTable:
    """Table whose rows from the second on carry rates against their predecessor."""
    table = ConvergenceTable(axis=axis)
    for index, row in enumerate(rows):
        if index == 0:
            table.rows.append(ConvergenceRow(row.param, row.l2_error, row.max_error))
            continue
        previous = rows[index - 1]
        table.rows.append(
            ConvergenceRow(
                param=row.param,
                l2_error=row.l2_error,
                max_error=row.max_error,
                l2_rate=observed_rate(previous.param, row.param, previous.l2_error, row.l2_error),
                max_rate=observed_rate(
                    previous.param, row.param, previous.max_error, row.max_error
                ),
            )
        )
    return table


class ConvergenceStudy:
    """
    Builder for a mesh refinement study.

    The base configuration fixes the domain, coefficients, T and the parameter
    that is not refined.
    """

    def __init__(self, config: RunConfig, axis: RefinementAxis) -> None:
        if config.initial != "ansatz":
            raise ConfigParseError(
                "initial", "convergence studies measure errors against the ansatz"
            )
        self.config = config
        self.axis = axis
        self.levels: List[Scalar] = []
        self.workers = 1

    def set_levels(self, levels: Sequence[Scalar]) -> "ConvergenceStudy":
        """
        Sets the ladder of h (spatial) or tau (temporal) values.

        Raises:
            ValueError: If the ladder is empty or holds a non-positive value
        """
        if not levels:
            raise ValueError("A convergence study needs at least one level")
        if any(level <= 0 for level in levels):
            raise ValueError(f"Levels must be positive, got {list(levels)}")
        self.levels = [float(level) for level in levels]
        return self

    def set_workers(self, workers: int) -> "ConvergenceStudy":
        if workers < 1:
            raise ValueError(f"workers must be at least 1, got {workers}")
        self.workers = workers
        return self

    def level_config(self, level: Scalar) -> RunConfig:
        """Base configuration refined to one level of the ladder."""
        if self.axis is RefinementAxis.SPATIAL:
            return self.config.with_spacing(level)
        return self.config.with_time_step(level)

    def run_level(self, level: Scalar) -> ConvergenceRow:
        """Runs one level and measures its errors at the realized final time."""
        simulation = prepare(self.level_config(level))
        report = final_errors(simulation, execute(simulation))
        assert report is not None
        logger.info(
            "%s level %g: l2=%.4e max=%.4e at t=%g",
            self.axis.value,
            level,
            report.l2_error,
            report.max_error,
            report.time,
        )
        return ConvergenceRow(param=level, l2_error=report.l2_error, max_error=report.max_error)

    async def run_async(self) -> ConvergenceTable:
        """
        Runs every level, at most ``workers`` at a time.

        Returns:
            The table in ladder order with observed rates
        """
        if not self.levels:
            raise ValueError("No levels set; call set_levels first")
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            rows = await asyncio.gather(
                *(loop.run_in_executor(pool, self.run_level, level) for level in self.levels)
            )
        return with_rates(self.axis, rows)
