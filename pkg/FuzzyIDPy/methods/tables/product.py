import typing

from ...errors import TableError
from ...types import ConditionalTable, FuzzyDistribution, JointTable

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class Product:
    """Product rule."""

    def product(self: "FuzzyIDPy", conditional: ConditionalTable, marginal: FuzzyDistribution) -> JointTable:
        """Joint table of a child and its single parent.

        Cell ``(x, y)`` is the fuzzy product of ``P(x | y)`` and ``P(y)``, so the
        means follow the crisp chain rule exactly.

        Parameters:
            conditional (:obj:`ConditionalTable`):
                Table of the child given exactly one parent.

            marginal (:obj:`FuzzyDistribution`):
                Distribution of that parent.

        Returns:
            :obj:`JointTable`: Cells keyed ``(child outcome, parent outcome)``.
        """
        if len(conditional.parents) != 1 or conditional.parents[0] != marginal.space:
            raise TableError(
                f"Cannot multiply the table of {conditional.child.name} given {list(conditional.parent_names)} "
                f"by a distribution over {marginal.space.name}"
            )
        cells = {}
        for parent_label, parent_probability in marginal.items():
            row = conditional.row((parent_label,))
            for child_label, child_probability in row.items():
                cells[(child_label, parent_label)] = self.binary_arith("mul", child_probability, parent_probability)
        self.logger.debug(f"Product of {conditional.child.name} and {marginal.space.name}: {len(cells)} cells")
        return JointTable((conditional.child, marginal.space), cells)
