import typing
from dataclasses import replace
from typing import Mapping

from ...types import FuzzyValue, InfluenceDiagram, SensitivityReport
from ..transforms.helpers import Evidence

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class Sensitivity:
    """Decision sensitivity reports."""

    def sensitivity_report(
        self: "FuzzyIDPy",
        expected: Mapping[str, FuzzyValue],
        objective: str = None
    ) -> SensitivityReport:
        """Sensitivity of a choice among fuzzy expected values.

        Parameters:
            expected (``dict``):
                Alternative to fuzzy expected value, at least two.

            objective (``str``, optional):
                ``"minimize"`` or ``"maximize"``; defaults to the client's.

        Returns:
            :obj:`SensitivityReport`: alpha*, the crossings, dominance verdicts
            and the overlap diagnostic.
        """
        expected = dict(expected)
        reference, crossings = self.crossings(expected, objective)
        alpha_star = max((c.alpha for c in crossings), default=0.0)
        dominance = {
            f"{first}<={second}": self.deterministic_dominance(expected[first], expected[second])
            for first in expected for second in expected if first != second
        }
        rival = self._rival(expected, reference)
        overlap = self.overlap_possibility(expected[reference], expected[rival])
        self.logger.info(f"alpha* = {alpha_star:.4f} against {reference}, possibility {1.0 - alpha_star:.4f}")
        return SensitivityReport(expected, reference, crossings, alpha_star, dominance, overlap)

    def sensitivity(
        self: "FuzzyIDPy",
        diagram: InfluenceDiagram,
        evidence: Evidence = None,
        difference: bool = False,
        grid_n: int = None,
        objective: str = None
    ) -> SensitivityReport:
        """Solve the decision and report how sensitive the choice is.

        Parameters:
            diagram (:obj:`InfluenceDiagram`):
                A decision diagram.

            evidence (``dict``, optional):
                Observed outcomes.

            difference (``bool``, optional):
                Also run the difference check of the chosen alternative against
                its closest rival on the oracle grid.

            grid_n (``int``, optional):
                Oracle lattice size for the difference check.

            objective (``str``, optional):
                ``"minimize"`` or ``"maximize"``; defaults to the client's.

        Returns:
            :obj:`SensitivityReport`: The report.

        Example:
            .. code-block:: python

                engine = FuzzyIDPy()
                diagram = engine.parse_file("assembly_decision.fid.json")
                report = engine.sensitivity(diagram, {"S": "S0"})
                print(report.alpha_star, report.possibility)
        """
        policy = self.decide(diagram, evidence, objective)
        report = self.sensitivity_report(policy.expected, policy.objective)
        if not difference:
            return report
        rival = self._rival(policy.expected, report.reference)
        check = self.difference_dominance(diagram, dict(policy.evidence), report.reference, rival, grid_n)
        return replace(report, difference=check)

    @staticmethod
    def _rival(expected: Mapping[str, FuzzyValue], reference: str) -> str:
        others = [name for name in expected if name != reference]
        return min(others, key=lambda name: abs(expected[name].mean - expected[reference].mean))
