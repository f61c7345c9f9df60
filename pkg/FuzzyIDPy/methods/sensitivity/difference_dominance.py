import typing

import numpy as np

from ... import crisp
from ...errors import QueryError
from ...types import MIXED, NEGATIVE, POSITIVE, DifferenceDominance, InfluenceDiagram
from ..transforms.helpers import Evidence, check_evidence

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class DifferenceDominanceCheck:
    """Sign of a cost difference over consistent perturbations."""

    def difference_dominance(
        self: "FuzzyIDPy",
        diagram: InfluenceDiagram,
        evidence: Evidence,
        first: str,
        second: str,
        grid_n: int = None,
        bins: int = None
    ) -> DifferenceDominance:
        """Whether ``cost(first) - cost(second)`` keeps one sign for every consistent perturbation.

        The two alternatives are evaluated on the same crisp diagram for
        every oracle configuration, so the difference respects the coupling
        between them that separate fuzzy expected values lose.

        Parameters:
            diagram (:obj:`InfluenceDiagram`):
                A decision diagram.

            evidence (``dict``):
                Observed outcomes.

            first, second (``str``):
                Alternatives of the decision node.

            grid_n (``int``, optional):
                Oracle lattice size; defaults to ``oracle_grid``.

            bins (``int``, optional):
                Bins of the difference curve; defaults to ``oracle_bins``.

        Returns:
            :obj:`DifferenceDominance`: ``"negative"`` when ``first`` is always
            cheaper, ``"positive"`` when it is always dearer, ``"mixed"``
            otherwise, with the sampled difference curve.

        Example:
            .. code-block:: python

                engine = FuzzyIDPy()
                diagram = engine.parse_file("assembly_decision.fid.json")
                result = engine.difference_dominance(diagram, {"S": "S0"}, "D_L", "D_IO", grid_n=21)
                print(result.verdict)   # mixed
        """
        decisions = diagram.decision_nodes
        if len(decisions) != 1:
            raise QueryError(f"Expected exactly one decision node, found {len(decisions)}")
        for alternative in (first, second):
            decisions[0].space.index(alternative)
        value = diagram.value_node
        if value is None:
            raise QueryError("The diagram has no value node")
        given = check_evidence(diagram, evidence)
        names = crisp.relevant_nodes(diagram, [value.name, *given])

        def functional(tables):
            costs = crisp.expected_costs(diagram, given, tables)
            return np.asarray(costs[first], dtype=float) - np.asarray(costs[second], dtype=float)

        grid_n = self._grid(grid_n)
        values, memberships = self._sweep(diagram, functional, grid_n, names)
        curve = self._bin(values, memberships, bins or self.oracle_bins, grid_n)

        possible = np.isfinite(values) & (memberships > 0.0)
        if possible.any() and np.all(values[possible] > 0.0):
            verdict = POSITIVE
        elif possible.any() and np.all(values[possible] < 0.0):
            verdict = NEGATIVE
        else:
            verdict = MIXED
        self.logger.info(f"cost({first}) - cost({second}) is {verdict} over {int(possible.sum())} configurations")
        return DifferenceDominance(first, second, verdict, curve)
