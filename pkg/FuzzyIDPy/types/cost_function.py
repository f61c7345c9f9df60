from dataclasses import dataclass
from typing import Dict, Tuple

from ..errors import TableError
from .conditional_table import Configuration, configurations
from .fuzzy_value import FuzzyValue
from .outcome_space import OutcomeSpace


@dataclass(frozen=True)
class CostFunction:
    """Value of the value node for every configuration of its parents.

    Costs read from a diagram file are crisp; after chance nodes are absorbed
    the entries become fuzzy expected values.

    Parameters:
        parents (``tuple``):
            Parent outcome spaces (chance outcomes or decision alternatives).

        entries (``dict``):
            Parent configuration to :obj:`FuzzyValue`.
    """

    parents: Tuple[OutcomeSpace, ...]
    entries: Dict[Configuration, FuzzyValue]

    def __post_init__(self):
        object.__setattr__(self, "parents", tuple(self.parents))
        entries = {}
        for config, value in self.entries.items():
            config = (config,) if isinstance(config, str) else tuple(config)
            if len(config) != len(self.parents):
                raise TableError(f"Cost entry {config} does not match parents {self.parent_names}")
            if not isinstance(value, FuzzyValue):
                value = FuzzyValue.crisp(float(value))
            entries[config] = value
        object.__setattr__(self, "entries", entries)

    @property
    def parent_names(self) -> Tuple[str, ...]:
        return tuple(space.name for space in self.parents)

    def configurations(self):
        return configurations(self.parents)

    def missing(self):
        """Parent configurations without a cost."""
        return [config for config in self.configurations() if config not in self.entries]

    def cost(self, config) -> FuzzyValue:
        config = (config,) if isinstance(config, str) else tuple(config)
        try:
            return self.entries[config]
        except KeyError:
            raise TableError(f"No cost for configuration {config} of {list(self.parent_names)}")

    def to_dict(self) -> dict:
        out = {}
        for config in self.configurations():
            if config in self.entries:
                value = self.entries[config]
                out[",".join(config)] = value.mean if value.is_crisp else value.to_display()
        return out
