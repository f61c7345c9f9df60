import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Tuple, Union

from ..errors import QueryError

_NAME = r"[A-Za-z_][\w/.\-]*"
_EXPR_RE = re.compile(
    rf"^\s*(?P<kind>[PE])\s*\(\s*(?P<node>{_NAME})\s*=\s*(?P<outcome>{_NAME}|\d[\w.\-]*)"
    rf"\s*(?:\|\s*(?P<given>[^)]*))?\)\s*$"
)
_ASSIGN_RE = re.compile(rf"^\s*(?P<node>{_NAME})\s*=\s*(?P<outcome>[\w/.\-]+)\s*$")


@dataclass(frozen=True)
class ProbabilityExpr:
    """Posterior probability of one outcome, ``P(T=t | N=o, ...)``.

    Parameters:
        target (``str``):
            Target chance node.

        outcome (``str``):
            Outcome of the target.

        evidence (``tuple``):
            ``(node, outcome)`` pairs.
    """

    target: str
    outcome: str
    evidence: Tuple[Tuple[str, str], ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        return _render("P", self.target, self.outcome, self.evidence)


@dataclass(frozen=True)
class CostExpr:
    """Expected value of one decision alternative, ``E(D=d | N=o, ...)``.

    Parameters:
        decision (``str``):
            Decision node.

        alternative (``str``):
            Alternative of the decision.

        evidence (``tuple``):
            ``(node, outcome)`` pairs.
    """

    decision: str
    alternative: str
    evidence: Tuple[Tuple[str, str], ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        return _render("E", self.decision, self.alternative, self.evidence)


def _render(kind: str, node: str, outcome: str, evidence) -> str:
    text = f"{kind}({node}={outcome}"
    if evidence:
        text += " | " + ", ".join(f"{n}={o}" for n, o in evidence)
    return text + ")"


def parse_assignments(items: Union[str, Iterable[str]]) -> Dict[str, str]:
    """Parse ``N=o`` assignments.

    Parameters:
        items (``str`` | ``list``):
            Either a comma separated string or a list of ``N=o`` strings.

    Returns:
        ``dict``: node name to outcome label, in the given order.
    """
    if isinstance(items, str):
        items = [part for part in items.split(",") if part.strip()]

    assignments: Dict[str, str] = {}
    for item in items:
        match = _ASSIGN_RE.match(item)
        if not match:
            raise QueryError(f"Malformed assignment {item!r}, expected NODE=OUTCOME")
        node = match.group("node")
        if node in assignments:
            raise QueryError(f"Node {node} assigned twice")
        assignments[node] = match.group("outcome")
    return assignments


def parse_expression(text: str) -> Union[ProbabilityExpr, CostExpr]:
    """Parse a query expression used by ``plot`` and ``check``.

    Example:
        .. code-block:: python

            parse_expression("P(IO=IO0 | S=S0)")
            parse_expression("E(D=D_L | S=S0)")
    """
    match = _EXPR_RE.match(text or "")
    if not match:
        raise QueryError(f"Malformed query expression {text!r}")

    evidence = tuple(parse_assignments(match.group("given") or "").items())
    if match.group("kind") == "P":
        return ProbabilityExpr(match.group("node"), match.group("outcome"), evidence)
    return CostExpr(match.group("node"), match.group("outcome"), evidence)
