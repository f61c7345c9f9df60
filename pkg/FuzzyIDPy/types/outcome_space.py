from dataclasses import dataclass
from typing import Tuple

from ..errors import TableError


@dataclass(frozen=True)
class OutcomeSpace:
    """The ordered outcomes of one node.

    Parameters:
        name (``str``):
            Node name.

        labels (``tuple``):
            Distinct outcome labels, at least two.
    """

    name: str
    labels: Tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) < 2:
            raise TableError(f"Node {self.name} needs at least two outcomes, got {list(labels)}")
        if len(set(labels)) != len(labels):
            raise TableError(f"Node {self.name} has duplicate outcome labels {list(labels)}")
        # table and cost keys are split on "," and stripped
        bad = [label for label in labels if not label or "," in label or label != label.strip()]
        if bad:
            raise TableError(f"Node {self.name} has outcome labels {bad} that are empty or hold commas or outer whitespace")

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label) -> bool:
        return label in self.labels

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise TableError(f"Unknown outcome {label!r} for node {self.name}; expected one of {list(self.labels)}")
