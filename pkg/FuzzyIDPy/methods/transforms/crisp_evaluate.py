import typing
from typing import Dict

from ... import crisp
from ...types import InfluenceDiagram, Query
from .helpers import Evidence, check_evidence

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class CrispEvaluate:
    """Point estimates."""

    def crisp_evaluate(
        self: "FuzzyIDPy",
        diagram: InfluenceDiagram,
        query: Query = None,
        evidence: Evidence = None
    ) -> Dict[str, float]:
        """Point estimates by joint enumeration over the table means.

        With a ``query`` this is the crisp posterior of its target; without
        one it is the crisp expected value of every alternative of the
        decision given ``evidence``. The algorithm shares nothing with the
        transformation engine, which makes it the reference for its means.

        Returns:
            ``dict``: Outcome (or alternative) to its point estimate.
        """
        if query is not None:
            check_evidence(diagram, query.evidence)
            return crisp.posterior(diagram, query)
        return crisp.expected_costs(diagram, check_evidence(diagram, evidence))
