from dataclasses import dataclass, field
from typing import List


@dataclass(frozen=True)
class Violation:
    """One violated invariant.

    Parameters:
        location (``str``):
            Node, row or cell the problem was found in.

        rule (``str``):
            Short rule name (``mean-sum``, ``spread-feasibility``, ``complement-pair``, ...).

        detail (``str``):
            Human readable explanation.
    """

    location: str
    rule: str
    detail: str

    def __str__(self) -> str:
        return f"{self.location}: {self.rule}: {self.detail}"


@dataclass
class ValidationReport:
    """Result of validating a table or diagram; empty means valid."""

    violations: List[Violation] = field(default_factory=list)

    def add(self, location: str, rule: str, detail: str) -> None:
        self.violations.append(Violation(location, rule, detail))

    def extend(self, other: "ValidationReport") -> None:
        self.violations.extend(other.violations)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def rules(self) -> List[str]:
        return [v.rule for v in self.violations]

    def __len__(self) -> int:
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def to_dict(self) -> dict:
        return {
            "valid": self.is_valid,
            "violations": [
                {"location": v.location, "rule": v.rule, "detail": v.detail}
                for v in self.violations
            ]
        }
