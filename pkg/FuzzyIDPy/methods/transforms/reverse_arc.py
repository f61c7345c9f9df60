import typing
from typing import Tuple

from ...derivation import WorkingDiagram
from ...errors import TransformationError
from ...types import InfluenceDiagram
from ..diagrams.reversible import check_reversible

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class ReverseArc:
    """Arc reversal."""

    def reverse_arc(self: "FuzzyIDPy", diagram: InfluenceDiagram, arc: Tuple[str, str]) -> InfluenceDiagram:
        """Reverse a chance-to-chance arc by Bayes' rule.

        Both nodes end up with the union of their parents; the tail also gains
        the head as a parent. The new tables are exact crisp expressions over
        the original fuzzy rows, materialized by constrained extremization.

        Parameters:
            diagram (:obj:`InfluenceDiagram`):
                The diagram.

            arc (``tuple``):
                ``(tail, head)``; must pass :meth:`reversible`.

        Returns:
            :obj:`InfluenceDiagram`: The transformed diagram. Its ``derivation``
            keeps the symbolic state and the op counts.

        Example:
            .. code-block:: python

                engine = FuzzyIDPy()
                diagram = engine.parse_file("assembly_inference.fid.json")
                reversed_ = engine.reverse_arc(diagram, ("IO", "S"))
                print(reversed_.node("IO").table.row(("L0", "S0")))
        """
        tail, head = arc
        work = WorkingDiagram.lift(diagram)
        self._reverse(work, tail, head)
        return self._materialize(work, diagram)

    def _reverse(self: "FuzzyIDPy", work: WorkingDiagram, tail: str, head: str) -> None:
        ok, reason = check_reversible(work.graph(), tail, head)
        if not ok:
            raise TransformationError(f"Cannot reverse {tail}->{head}: {reason}")

        source, target = work.nodes[tail], work.nodes[head]
        head_parents = [p for p in target.parents if p != tail]
        union = list(source.parents) + [p for p in head_parents if p not in source.parents]
        build = work.builder

        head_cells, tail_cells = {}, {}
        for config in work.configurations(union):
            assignment = dict(zip(union, config))
            prior = source.cells[work.key(source.parents, assignment)]
            joint = []
            for x, label in enumerate(source.labels):
                assignment[tail] = label
                likelihood = target.cells[work.key(target.parents, assignment)]
                joint.append([build.mul(likelihood[y], prior[x]) for y in range(len(target.labels))])
            marginal = [
                build.add(*(joint[x][y] for x in range(len(source.labels))))
                for y in range(len(target.labels))
            ]
            head_cells[config] = marginal
            for y, label in enumerate(target.labels):
                tail_cells[config + (label,)] = [
                    build.div(joint[x][y], marginal[y]) for x in range(len(source.labels))
                ]

        target.parents, target.cells = union, head_cells
        source.parents, source.cells = union + [head], tail_cells
        source.touched = target.touched = True
        work.history.append(f"reverse {tail}->{head}")
        self.logger.info(f"Reversed arc {tail}->{head}; {head} now given {union}")
