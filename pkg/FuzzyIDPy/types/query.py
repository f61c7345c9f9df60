from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

from ..errors import QueryError


@dataclass(frozen=True)
class Query:
    """Posterior query: the fuzzy distribution of ``target`` given ``evidence``.

    Parameters:
        target (``str``):
            Chance node whose distribution is wanted.

        evidence (``tuple``):
            ``(node, outcome)`` pairs; nodes must differ from the target.
    """

    target: str
    evidence: Tuple[Tuple[str, str], ...] = field(default_factory=tuple)

    def __post_init__(self):
        evidence = self.evidence
        if isinstance(evidence, Mapping):
            evidence = tuple(evidence.items())
        evidence = tuple((str(n), str(o)) for n, o in evidence)
        names = [n for n, _ in evidence]
        if len(set(names)) != len(names):
            raise QueryError(f"Evidence names a node twice: {names}")
        if self.target in names:
            raise QueryError(f"Target {self.target} cannot also be evidence")
        object.__setattr__(self, "evidence", evidence)

    @property
    def given(self) -> Dict[str, str]:
        return dict(self.evidence)

    def to_dict(self) -> dict:
        return {"target": self.target, "given": self.given}

    def __str__(self) -> str:
        if not self.evidence:
            return f"FP({self.target})"
        given = ", ".join(f"{n}={o}" for n, o in self.evidence)
        return f"FP({self.target} | {given})"
