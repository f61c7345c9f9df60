import typing

import networkx as nx

from ...derivation import WorkingDiagram
from ...errors import QueryError, TransformationError
from ...types import CHANCE, MAXIMIZE, MINIMIZE, InfluenceDiagram, Policy
from .helpers import Evidence, check_evidence

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class Decide:
    """Decision solving."""

    def decide(self: "FuzzyIDPy", diagram: InfluenceDiagram, evidence: Evidence = None, objective: str = None) -> Policy:
        """Fuzzy expected value of every alternative of the decision.

        Chance parents of the value node are absorbed deepest first, each
        after reversing its arcs into chance children; leftover chance nodes
        that are not observed are summed out. The value node is then read at
        the evidence for each alternative.

        Parameters:
            diagram (:obj:`InfluenceDiagram`):
                A diagram with one decision and a value node.

            evidence (``dict``, optional):
                Observed outcomes; must fix every informational parent of the
                decision and must not name a descendant of it.

            objective (``str``, optional):
                ``"minimize"`` or ``"maximize"``; defaults to the client's.

        Returns:
            :obj:`Policy`: Expected values, the chosen alternative and op counts.

        Example:
            .. code-block:: python

                engine = FuzzyIDPy()
                diagram = engine.parse_file("assembly_decision.fid.json")
                policy = engine.decide(diagram, {"S": "S0"})
                print(policy.chosen, policy.expected["D_L"])
        """
        objective = objective or self.objective
        if objective not in (MINIMIZE, MAXIMIZE):
            raise ValueError(f"Objective must be {MINIMIZE!r} or {MAXIMIZE!r}, got {objective!r}")
        value = diagram.value_node
        if value is None:
            raise TransformationError("The diagram has no value node to decide on")
        decisions = diagram.decision_nodes
        if len(decisions) != 1:
            raise TransformationError(
                f"Exactly one decision node is supported, found {[d.name for d in decisions]}"
            )
        decision = decisions[0]
        given = check_evidence(diagram, evidence)
        for name in given:
            if not diagram.node(name).is_chance:
                raise QueryError(f"Evidence on {name} is not an observation of a chance node")
        missing = [p for p in decision.parents if p not in given]
        if missing:
            raise QueryError(f"Evidence must fix the informational parents {missing} of {decision.name}")
        later = sorted(set(given) & nx.descendants(diagram.graph, decision.name))
        if later:
            raise QueryError(f"{later} are observed after {decision.name} is made")

        work = WorkingDiagram.lift(diagram)
        keep = set(given)
        while True:
            self._remove_barren(work, keep | {decision.name})
            parents = [
                name for name in work.nodes[value.name].parents
                if work.nodes[name].kind == CHANCE and name not in keep
            ]
            if parents:
                self._sum_out(work, work.latest(parents))
                continue
            others = [name for name in work.chance_names() if name not in keep]
            if not others:
                break
            self._sum_out(work, work.latest(others))

        extremizer = self._extremizer(work.space)
        node = work.nodes[value.name]
        expected = {}
        for alternative in decision.space.labels:
            assignment = dict(given)
            assignment[decision.name] = alternative
            result = extremizer.fuzzy_value(node.cells[work.key(node.parents, assignment)])
            if result is None:
                raise QueryError(f"The evidence {given} has probability zero")
            expected[alternative] = result

        pick = min if objective == MINIMIZE else max
        chosen = pick(expected, key=lambda alt: expected[alt].mean)
        counter = work.counter.scaled(3).merge(extremizer.counter)
        self.logger.info(
            f"Decided {decision.name}={chosen} given {given}: "
            + ", ".join(f"{alt} {val}" for alt, val in expected.items())
        )
        return Policy(decision.name, chosen, expected, tuple(given.items()), objective, counter)
