from typing import Dict, Iterable, Mapping, Tuple, Union

from ...errors import QueryError
from ...types import InfluenceDiagram

Evidence = Union[Mapping[str, str], Iterable[Tuple[str, str]], None]


def check_evidence(diagram: InfluenceDiagram, evidence: Evidence) -> Dict[str, str]:
    """Evidence as a ``{node: outcome}`` dict, every node and outcome checked."""
    if evidence is None:
        return {}
    pairs = list(evidence.items()) if isinstance(evidence, Mapping) else list(evidence)
    given = {}
    for name, outcome in pairs:
        if name in given:
            raise QueryError(f"Evidence names {name} twice")
        if name not in diagram:
            raise QueryError(f"Evidence names unknown node {name!r}")
        node = diagram.node(name)
        if node.is_value:
            raise QueryError(f"The value node {name} cannot be observed")
        if outcome not in node.space:
            raise QueryError(f"Unknown outcome {outcome!r} for {name}; expected one of {list(node.space.labels)}")
        given[name] = outcome
    return given
