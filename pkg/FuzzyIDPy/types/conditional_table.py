import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, Tuple

from ..errors import TableError
from .fuzzy_distribution import FuzzyDistribution
from .outcome_space import OutcomeSpace

Configuration = Tuple[str, ...]


def configurations(spaces) -> Iterator[Configuration]:
    """All joint configurations of ``spaces`` in declaration order."""
    return itertools.product(*(space.labels for space in spaces))


@dataclass(frozen=True)
class ConditionalTable:
    """Fuzzy distribution of a child node for every configuration of its parents.

    A node without parents has a single row keyed by the empty configuration.

    Parameters:
        child (:obj:`OutcomeSpace`):
            The node the distributions are over.

        parents (``tuple``):
            Parent outcome spaces in declared order.

        rows (``dict``):
            Parent configuration (tuple of labels) to :obj:`FuzzyDistribution`.
    """

    child: OutcomeSpace
    parents: Tuple[OutcomeSpace, ...]
    rows: Dict[Configuration, FuzzyDistribution]

    def __post_init__(self):
        object.__setattr__(self, "parents", tuple(self.parents))
        rows = {}
        for config, row in self.rows.items():
            config = (config,) if isinstance(config, str) else tuple(config)
            if len(config) != len(self.parents):
                raise TableError(
                    f"Row {config} of {self.child.name} does not match parents {self.parent_names}"
                )
            if row.space != self.child:
                raise TableError(f"Row {config} of {self.child.name} is over {row.space.name}")
            rows[config] = row
        object.__setattr__(self, "rows", rows)

    @classmethod
    def marginal(cls, distribution: FuzzyDistribution) -> "ConditionalTable":
        """Wrap an unconditional distribution."""
        return cls(distribution.space, (), {(): distribution})

    @property
    def parent_names(self) -> Tuple[str, ...]:
        return tuple(space.name for space in self.parents)

    def configurations(self) -> Iterator[Configuration]:
        return configurations(self.parents)

    def row(self, config) -> FuzzyDistribution:
        config = (config,) if isinstance(config, str) else tuple(config)
        try:
            return self.rows[config]
        except KeyError:
            raise TableError(
                f"No row {config} in the table of {self.child.name} given {list(self.parent_names)}"
            )

    def __iter__(self):
        return iter(self.rows.items())

    def to_dict(self) -> Dict[str, str]:
        """Flatten to ``{"outcome,parent,...": triplet}`` keys."""
        out = {}
        for config in self.configurations():
            if config not in self.rows:
                continue
            for label, probability in self.rows[config].items():
                out[",".join((label,) + config)] = probability.to_display()
        return out
