import typing
from typing import Tuple

import networkx as nx

from ...errors import StructureError
from ...types import CHANCE, InfluenceDiagram

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


def check_reversible(graph: nx.DiGraph, tail: str, head: str) -> Tuple[bool, str]:
    """Whether arc ``tail -> head`` of ``graph`` (with a ``kind`` node attribute) can be reversed."""
    if not graph.has_edge(tail, head):
        raise StructureError(f"Unknown arc {tail}->{head}", [f"unknown arc {tail}->{head}"])
    for end in (tail, head):
        kind = graph.nodes[end].get("kind")
        if kind != CHANCE:
            return False, f"{end} is a {kind} node; arcs to and from decision and value nodes cannot be reversed"
    reduced = graph.copy()
    reduced.remove_edge(tail, head)
    if nx.has_path(reduced, tail, head):
        path = nx.shortest_path(reduced, tail, head)
        return False, f"another directed path {' -> '.join(path)} would close a cycle"
    return True, "both ends are chance nodes and the arc is the only path"


class Reversible:
    """Arc reversal preconditions."""

    def reversible(self: "FuzzyIDPy", diagram: InfluenceDiagram, arc: Tuple[str, str]) -> Tuple[bool, str]:
        """Check whether an arc can be reversed.

        Parameters:
            diagram (:obj:`InfluenceDiagram`):
                The diagram.

            arc (``tuple``):
                ``(tail, head)``.

        Returns:
            ``tuple``: ``(reversible, reason)``.

        Raises:
            StructureError: If the arc is not in the diagram.
        """
        tail, head = arc
        return check_reversible(diagram.graph, tail, head)
