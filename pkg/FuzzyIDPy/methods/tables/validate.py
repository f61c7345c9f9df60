import typing
from typing import Iterable, Union

from ...types import (
    ConditionalTable, FuzzyDistribution, FuzzyProbability, JointTable, ValidationReport
)

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy

COMPLEMENT_TOLERANCE = 1e-6

Table = Union[FuzzyDistribution, ConditionalTable, JointTable]


class Validate:
    """Check the normalization and spread constraints of tables."""

    def validate(self: "FuzzyIDPy", table: Table, location: str = None) -> ValidationReport:
        """List every violated constraint of a table.

        A distribution (and every row of a conditional table, and a joint
        table as a whole) must have means summing to 1 and supports that
        leave room for a consistent perturbation: the lower ends sum to at
        most 1 and the upper ends to at least 1. A binary distribution must
        be a complement pair.

        Parameters:
            table (:obj:`FuzzyDistribution` | :obj:`ConditionalTable` | :obj:`JointTable`):
                The table to check.

            location (``str``, optional):
                Prefix for violation locations; defaults to the node name.

        Returns:
            :obj:`ValidationReport`: Empty when the table is valid.

        Example:
            .. code-block:: python

                engine = FuzzyIDPy()
                report = engine.validate(distribution)
                for violation in report:
                    print(violation)
        """
        report = ValidationReport()
        if isinstance(table, FuzzyDistribution):
            self._check_cells(report, location or table.space.name, list(table.probabilities))
        elif isinstance(table, ConditionalTable):
            name = location or table.child.name
            for config in table.configurations():
                if config not in table.rows:
                    report.add(f"{name}{list(config)}", "missing-row", "no distribution for this parent configuration")
                    continue
                self._check_cells(report, f"{name}{list(config)}", list(table.rows[config].probabilities))
        elif isinstance(table, JointTable):
            name = location or ",".join(table.names)
            missing = [config for config in table.configurations() if config not in table.cells]
            for config in missing:
                report.add(f"{name}{list(config)}", "missing-cell", "no probability for this configuration")
            self._check_cells(report, name, list(table.cells.values()))
        else:
            report.add(str(location or "table"), "unknown-table", f"cannot validate {type(table).__name__}")
        if not report.is_valid:
            self.logger.debug(f"Table {location or ''} has {len(report)} violations")
        return report

    def _check_cells(self, report: ValidationReport, location: str, cells: Iterable[FuzzyProbability]) -> None:
        cells = list(cells)
        total = sum(p.mean for p in cells)
        if abs(total - 1.0) > self.tolerance:
            report.add(location, "mean-sum", f"means sum to {total:.10g}, expected 1")
        low = sum(p.support[0] for p in cells)
        high = sum(p.support[1] for p in cells)
        if low > 1.0 + self.tolerance or high < 1.0 - self.tolerance:
            report.add(
                location, "spread-feasibility",
                f"supports sum to [{low:.10g}, {high:.10g}], which excludes 1"
            )
        if len(cells) == 2:
            first, second = cells
            expected = first.complement()
            gaps = (
                abs(expected.mean - second.mean),
                abs(expected.left_nominal - second.left_nominal),
                abs(expected.right_nominal - second.right_nominal)
            )
            if max(gaps) > COMPLEMENT_TOLERANCE:
                report.add(
                    location, "complement-pair",
                    f"{second.to_display()} is not the complement of {first.to_display()}"
                )
