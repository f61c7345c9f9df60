from dataclasses import dataclass
from typing import Dict, Tuple

from ..errors import TableError
from .conditional_table import Configuration, configurations
from .fuzzy_probability import FuzzyProbability
from .outcome_space import OutcomeSpace


@dataclass(frozen=True)
class JointTable:
    """Fuzzy probability of every joint configuration of several nodes.

    Parameters:
        spaces (``tuple``):
            Outcome spaces, the order of the configuration keys.

        cells (``dict``):
            Configuration to :obj:`FuzzyProbability`.
    """

    spaces: Tuple[OutcomeSpace, ...]
    cells: Dict[Configuration, FuzzyProbability]

    def __post_init__(self):
        object.__setattr__(self, "spaces", tuple(self.spaces))
        for config in self.cells:
            if len(config) != len(self.spaces):
                raise TableError(f"Cell {config} does not match spaces {self.names}")

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(space.name for space in self.spaces)

    def configurations(self):
        return configurations(self.spaces)

    def __getitem__(self, config) -> FuzzyProbability:
        try:
            return self.cells[tuple(config)]
        except KeyError:
            raise TableError(f"No cell {tuple(config)} in joint table over {self.names}")

    def marginal_means(self, name: str) -> Dict[str, float]:
        """Crisp marginal of one space from the cell means."""
        axis = self.names.index(name)
        totals = {label: 0.0 for label in self.spaces[axis].labels}
        for config, cell in self.cells.items():
            totals[config[axis]] += cell.mean
        return totals

    def to_dict(self) -> Dict[str, str]:
        return {",".join(config): cell.to_display() for config, cell in self.cells.items()}
