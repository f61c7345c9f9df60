import typing
from typing import Tuple

from ...derivation import WorkingDiagram
from ...errors import QueryError
from ...types import CHANCE, DECISION, FuzzyDistribution, InfluenceDiagram, OpCounter, Query
from .helpers import check_evidence

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class Infer:
    """Posterior inference."""

    def infer(self: "FuzzyIDPy", diagram: InfluenceDiagram, query: Query) -> FuzzyDistribution:
        """Posterior fuzzy distribution of the query target given its evidence.

        Decisions fixed by the evidence are instantiated, the value node and
        barren nodes are dropped, every other chance node is summed out
        (deepest first), and the arcs from the target into its remaining
        children are reversed. The answer is the target's row at the evidence.

        Parameters:
            diagram (:obj:`InfluenceDiagram`):
                The diagram.

            query (:obj:`Query`):
                Target and evidence.

        Returns:
            :obj:`FuzzyDistribution`: The posterior.

        Raises:
            QueryError: For an invalid query, a decision that influences the
            answer without being fixed, or evidence of probability zero.

        Example:
            .. code-block:: python

                engine = FuzzyIDPy()
                diagram = engine.parse_file("assembly_inference.fid.json")
                posterior = engine.infer(diagram, Query("IO", {"S": "S0"}))
                print(posterior["IO0"])   # ([0.66], 0.1680672269, 0.5075630252)
        """
        distribution, _ = self.solve_query(diagram, query)
        return distribution

    def solve_query(self: "FuzzyIDPy", diagram: InfluenceDiagram, query: Query) -> Tuple[FuzzyDistribution, OpCounter]:
        """Like :meth:`infer`, also returning the fuzzy op counts."""
        if query.target not in diagram or not diagram.node(query.target).is_chance:
            raise QueryError(f"Query target {query.target!r} is not a chance node")
        given = check_evidence(diagram, query.evidence)

        work = WorkingDiagram.lift(diagram)
        for name, label in given.items():
            if work.nodes[name].kind == DECISION:
                work.instantiate(name, label)
        value = work.value_name()
        if value is not None:
            work.remove(value)

        keep = {query.target} | set(given)
        self._remove_barren(work, keep)
        stray = [name for name, node in work.nodes.items() if node.kind == DECISION]
        if stray:
            raise QueryError(f"{query}: decisions {stray} influence the answer and must be fixed in the evidence")

        while True:
            candidates = [name for name in work.chance_names() if name not in keep]
            if not candidates:
                break
            self._sum_out(work, work.latest(candidates))
            self._remove_barren(work, keep)

        for child in work.in_topological_order(work.children(query.target)):
            self._reverse(work, query.target, child)

        target = work.nodes[query.target]
        row = target.cells[work.key(target.parents, given)]
        extremizer = self._extremizer(work.space)
        if work.mean_row(extremizer, row) is None:
            raise QueryError(f"{query}: the evidence has probability zero")
        distribution = FuzzyDistribution(target.space, tuple(extremizer.fuzzy_probability(term) for term in row))

        counter = work.counter.scaled(3).merge(extremizer.counter)
        self.logger.info(f"Answered {query} with {work.counter.multiplications} crisp multiplications")
        return distribution, counter

    def _remove_barren(self: "FuzzyIDPy", work: WorkingDiagram, keep) -> None:
        while True:
            barren = [
                name for name, node in work.nodes.items()
                if name not in keep and node.kind in (CHANCE, DECISION) and not work.children(name)
            ]
            if not barren:
                return
            for name in barren:
                work.remove(name)
                self.logger.debug(f"Removed barren node {name}")
