from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from ..errors import StructureError
from .conditional_table import ConditionalTable
from .cost_function import CostFunction
from .outcome_space import OutcomeSpace

CHANCE = "chance"
DECISION = "decision"
VALUE = "value"
NODE_KINDS = (CHANCE, DECISION, VALUE)


@dataclass(frozen=True)
class NodeSpec:
    """Name, kind and outcomes of a node before it is wired into a diagram.

    Parameters:
        name (``str``):
            Node name.

        kind (``str``):
            ``"chance"``, ``"decision"`` or ``"value"``.

        outcomes (``tuple``, optional):
            Outcome labels (chance) or alternatives (decision). Empty for the value node.
    """

    name: str
    kind: str
    outcomes: Tuple[str, ...] = ()


@dataclass(frozen=True)
class Node:
    """A node of a validated influence diagram.

    Parameters:
        name (``str``):
            Node name.

        kind (``str``):
            ``"chance"``, ``"decision"`` or ``"value"``.

        space (:obj:`OutcomeSpace`, optional):
            Outcomes or alternatives; ``None`` for the value node.

        parents (``tuple``):
            Parent names in declared order.

        table (:obj:`ConditionalTable`, optional):
            Table of a chance node.

        costs (:obj:`CostFunction`, optional):
            Cost function of the value node.
    """

    name: str
    kind: str
    space: Optional[OutcomeSpace] = None
    parents: Tuple[str, ...] = ()
    table: Optional[ConditionalTable] = None
    costs: Optional[CostFunction] = None

    @property
    def is_chance(self) -> bool:
        return self.kind == CHANCE

    @property
    def is_decision(self) -> bool:
        return self.kind == DECISION

    @property
    def is_value(self) -> bool:
        return self.kind == VALUE


@dataclass(frozen=True)
class InfluenceDiagram:
    """A validated influence diagram.

    Instances are built by ``build_validate`` or ``parse_file`` and are never
    modified; transformations return new diagrams.

    Parameters:
        nodes (``tuple``):
            The nodes in declaration order.

        derivation (optional):
            Symbolic working state kept by transformations so that chained
            transformations stay composite. Ignored by equality.
    """

    nodes: Tuple[Node, ...]
    derivation: Any = field(default=None, compare=False, repr=False)

    @cached_property
    def _by_name(self) -> Dict[str, Node]:
        return {node.name: node for node in self.nodes}

    @cached_property
    def graph(self) -> nx.DiGraph:
        """The diagram as a networkx directed graph with a ``kind`` node attribute."""
        graph = nx.DiGraph()
        for node in self.nodes:
            graph.add_node(node.name, kind=node.kind)
        graph.add_edges_from(self.arcs)
        return graph

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(node.name for node in self.nodes)

    @property
    def arcs(self) -> Tuple[Tuple[str, str], ...]:
        return tuple((parent, node.name) for node in self.nodes for parent in node.parents)

    def node(self, name: str) -> Node:
        try:
            return self._by_name[name]
        except KeyError:
            raise StructureError(f"Unknown node {name!r}", [f"unknown node {name!r}"])

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def space(self, name: str) -> OutcomeSpace:
        return self.node(name).space

    def children(self, name: str) -> List[str]:
        return [node.name for node in self.nodes if name in node.parents]

    @property
    def chance_nodes(self) -> List[Node]:
        return [node for node in self.nodes if node.is_chance]

    @property
    def decision_nodes(self) -> List[Node]:
        return [node for node in self.nodes if node.is_decision]

    @property
    def value_node(self) -> Optional[Node]:
        for node in self.nodes:
            if node.is_value:
                return node
        return None

    def parts(self):
        """``(nodes, arcs, tables, costs)`` as accepted by ``build_validate``."""
        specs = [NodeSpec(node.name, node.kind, node.space.labels if node.space else ()) for node in self.nodes]
        tables = {node.name: node.table for node in self.nodes if node.is_chance}
        value = self.value_node
        return specs, list(self.arcs), tables, value.costs if value is not None else None

    def with_derivation(self, derivation) -> "InfluenceDiagram":
        return InfluenceDiagram(self.nodes, derivation)

    def __str__(self) -> str:
        return f"InfluenceDiagram({len(self.nodes)} nodes, {len(self.arcs)} arcs)"
