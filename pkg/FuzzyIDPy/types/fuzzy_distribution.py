from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Tuple

from ..errors import TableError
from .fuzzy_probability import FuzzyProbability
from .outcome_space import OutcomeSpace


@dataclass(frozen=True)
class FuzzyDistribution:
    """One fuzzy probability per outcome of a node.

    Parameters:
        space (:obj:`OutcomeSpace`):
            The outcomes.

        probabilities (``tuple``):
            One :obj:`FuzzyProbability` per outcome, in label order.
    """

    space: OutcomeSpace
    probabilities: Tuple[FuzzyProbability, ...]

    def __post_init__(self):
        probabilities = tuple(self.probabilities)
        object.__setattr__(self, "probabilities", probabilities)
        if len(probabilities) != len(self.space):
            raise TableError(
                f"Distribution of {self.space.name} has {len(probabilities)} entries "
                f"for {len(self.space)} outcomes"
            )

    @classmethod
    def from_mapping(cls, space: OutcomeSpace, entries: Mapping[str, object]) -> "FuzzyDistribution":
        """Build from ``{label: triplet | FuzzyProbability | number}``; missing labels are crisp 0."""
        unknown = set(entries) - set(space.labels)
        if unknown:
            raise TableError(f"Unknown outcomes {sorted(unknown)} for node {space.name}")
        return cls(space, tuple(
            FuzzyProbability._parse(entries[label]) if label in entries else FuzzyProbability.crisp(0.0)
            for label in space.labels
        ))

    @classmethod
    def crisp(cls, space: OutcomeSpace, means) -> "FuzzyDistribution":
        return cls(space, tuple(FuzzyProbability.crisp(m) for m in means))

    def __getitem__(self, label: str) -> FuzzyProbability:
        return self.probabilities[self.space.index(label)]

    def __iter__(self) -> Iterator[str]:
        return iter(self.space.labels)

    def items(self):
        return zip(self.space.labels, self.probabilities)

    @property
    def means(self) -> Tuple[float, ...]:
        return tuple(p.mean for p in self.probabilities)

    @property
    def is_crisp(self) -> bool:
        return all(p.is_crisp for p in self.probabilities)

    def to_dict(self) -> Dict[str, str]:
        return {label: p.to_display() for label, p in self.items()}
