from dataclasses import dataclass, field
from typing import Dict, Tuple

from .fuzzy_value import FuzzyValue
from .op_counter import OpCounter

MINIMIZE = "minimize"
MAXIMIZE = "maximize"


@dataclass(frozen=True)
class Policy:
    """Solved decision: fuzzy expected value per alternative and the chosen one.

    Parameters:
        decision (``str``):
            Decision node.

        chosen (``str``):
            Alternative with the best mean expected value.

        expected (``dict``):
            Alternative to :obj:`FuzzyValue` expected value.

        evidence (``tuple``):
            ``(node, outcome)`` pairs the decision was solved for.

        objective (``str``):
            ``"minimize"`` or ``"maximize"``.

        op_counter (:obj:`OpCounter`):
            Arithmetic performed while solving.
    """

    decision: str
    chosen: str
    expected: Dict[str, FuzzyValue]
    evidence: Tuple[Tuple[str, str], ...] = ()
    objective: str = MINIMIZE
    op_counter: OpCounter = field(default_factory=OpCounter, compare=False)

    @property
    def alternatives(self) -> Tuple[str, ...]:
        return tuple(self.expected)

    def to_dict(self) -> dict:
        return {
            "decision": self.decision,
            "chosen": self.chosen,
            "objective": self.objective,
            "given": dict(self.evidence),
            "expected": {alt: value.to_dict() for alt, value in self.expected.items()},
            "op_counter": self.op_counter.to_dict()
        }
