import typing

from ...derivation import WorkingDiagram
from ...errors import TransformationError
from ...types import CHANCE, DECISION, InfluenceDiagram

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class SumOutChance:
    """Chance node removal."""

    def sum_out_chance(self: "FuzzyIDPy", diagram: InfluenceDiagram, node: str) -> InfluenceDiagram:
        """Remove a chance node by fuzzy expectation over its outcomes.

        A barren node is simply deleted. Otherwise the arcs to every chance
        child but the last (in topological order) are reversed and the node is
        summed into the last child. When the value node is a child, all arcs
        to chance children are reversed and the node is absorbed into the
        value node.

        Parameters:
            diagram (:obj:`InfluenceDiagram`):
                The diagram.

            node (``str``):
                A chance node without decision children.

        Returns:
            :obj:`InfluenceDiagram`: The diagram without ``node``.
        """
        work = WorkingDiagram.lift(diagram)
        self._sum_out(work, node)
        return self._materialize(work, diagram)

    def _sum_out(self: "FuzzyIDPy", work: WorkingDiagram, name: str) -> None:
        node = work.node(name)
        if node.kind != CHANCE:
            raise TransformationError(f"{name} is a {node.kind} node, only chance nodes can be summed out")
        children = work.children(name)
        decisions = [c for c in children if work.nodes[c].kind == DECISION]
        if decisions:
            raise TransformationError(f"{name} is observed before decisions {decisions} and cannot be summed out")
        chance = work.in_topological_order([c for c in children if work.nodes[c].kind == CHANCE])
        value = work.value_name()

        if value in children:
            for child in chance:
                self._reverse(work, name, child)
            self._absorb(work, name)
            return
        if not chance:
            work.remove(name)
            self.logger.info(f"Removed barren node {name}")
            return
        for child in chance[:-1]:
            self._reverse(work, name, child)
        self._sum_into(work, name, chance[-1])

    def _sum_into(self: "FuzzyIDPy", work: WorkingDiagram, name: str, child: str) -> None:
        node, target = work.nodes[name], work.nodes[child]
        kept = [p for p in target.parents if p != name]
        union = kept + [p for p in node.parents if p not in kept]
        build = work.builder

        cells = {}
        for config in work.configurations(union):
            assignment = dict(zip(union, config))
            prior = node.cells[work.key(node.parents, assignment)]
            rows = []
            for label in node.labels:
                assignment[name] = label
                rows.append(target.cells[work.key(target.parents, assignment)])
            cells[config] = [
                build.add(*(build.mul(rows[x][y], prior[x]) for x in range(len(node.labels))))
                for y in range(len(target.labels))
            ]

        target.parents, target.cells, target.touched = union, cells, True
        del work.nodes[name]
        work.history.append(f"sum {name} into {child}")
        self.logger.info(f"Summed {name} out into {child}")
