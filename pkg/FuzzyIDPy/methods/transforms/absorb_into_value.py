import typing

from ...derivation import WorkingDiagram
from ...errors import TransformationError
from ...types import CHANCE, InfluenceDiagram

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class AbsorbIntoValue:
    """Expectation into the value node."""

    def absorb_into_value(self: "FuzzyIDPy", diagram: InfluenceDiagram, node: str) -> InfluenceDiagram:
        """Replace the value node's dependence on ``node`` by its expectation.

        Arcs from ``node`` to chance children are reversed first, so the
        value node is its only child. The value node inherits the parents of
        ``node`` and its entries become fuzzy expected values.

        Parameters:
            diagram (:obj:`InfluenceDiagram`):
                The diagram.

            node (``str``):
                A chance parent of the value node.

        Returns:
            :obj:`InfluenceDiagram`: The diagram without ``node``.
        """
        work = WorkingDiagram.lift(diagram)
        value = work.value_name()
        item = work.node(node)
        if value is None or item.kind != CHANCE or node not in work.nodes[value].parents:
            raise TransformationError(f"{node} is not a chance parent of the value node")
        self._sum_out(work, node)
        return self._materialize(work, diagram)

    def _absorb(self: "FuzzyIDPy", work: WorkingDiagram, name: str) -> None:
        node = work.nodes[name]
        value = work.nodes[work.value_name()]
        others = [c for c in work.children(name) if c != value.name]
        if others:
            raise TransformationError(f"{name} still has children {others} besides the value node")
        kept = [p for p in value.parents if p != name]
        union = kept + [p for p in node.parents if p not in kept]
        build = work.builder

        cells = {}
        for config in work.configurations(union):
            assignment = dict(zip(union, config))
            prior = node.cells[work.key(node.parents, assignment)]
            terms = []
            for x, label in enumerate(node.labels):
                assignment[name] = label
                terms.append(build.mul(value.cells[work.key(value.parents, assignment)], prior[x]))
            cells[config] = build.add(*terms)

        value.parents, value.cells, value.touched = union, cells, True
        del work.nodes[name]
        work.history.append(f"absorb {name}")
        self.logger.info(f"Absorbed {name} into {value.name}; value now given {union}")
