"""Symbolic working state shared by the transformations.

A :class:`WorkingDiagram` mirrors an :obj:`InfluenceDiagram` but its cells
are terms over the parameters of the original fuzzy rows. Transformations
rewrite the terms; fuzzy numbers are only produced when a result is
materialized, so chained transformations never compound interval growth.
"""
import copy
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

import networkx as nx

from .errors import QueryError, TransformationError
from .extremizer import Extremizer
from .parameters import ParameterSpace
from .terms import TermBuilder
from .types import (
    CHANCE, DECISION, VALUE,
    ConditionalTable, CostFunction, FuzzyDistribution,
    InfluenceDiagram, Node, OpCounter, OutcomeSpace, configurations
)

log = logging.getLogger(__name__)

Configuration = Tuple[str, ...]


@dataclass
class WorkingNode:
    """A node whose cells are terms.

    Chance nodes map each parent configuration to one term per outcome;
    the value node maps each parent configuration to a single term.
    """

    name: str
    kind: str
    space: Optional[OutcomeSpace]
    parents: List[str]
    cells: Dict[Configuration, object] = field(default_factory=dict)
    touched: bool = False

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.space.labels if self.space is not None else ()


class WorkingDiagram:
    """Mutable symbolic copy of a diagram.

    Parameters:
        nodes (``dict``):
            Name to :obj:`WorkingNode`, in declaration order.

        space (:obj:`ParameterSpace`):
            The parameter blocks of the original fuzzy rows.

        counter (:obj:`OpCounter`, optional):
            Crisp arithmetic of every term created so far.
    """

    def __init__(self, nodes: Dict[str, WorkingNode], space: ParameterSpace, counter: OpCounter = None):
        self.nodes = nodes
        self.space = space
        self.counter = counter if counter is not None else OpCounter()
        self.builder = TermBuilder(self.counter)
        self.history: List[str] = []
        self.fuzzy_counter: Optional[OpCounter] = None

    @classmethod
    def lift(cls, diagram: InfluenceDiagram) -> "WorkingDiagram":
        """Symbolic copy of ``diagram``, continuing its derivation when it has one."""
        if isinstance(diagram.derivation, WorkingDiagram):
            return diagram.derivation.copy()
        space = ParameterSpace()
        work = cls({}, space)
        for node in diagram.nodes:
            item = WorkingNode(node.name, node.kind, node.space, list(node.parents))
            if node.is_chance:
                for config, row in node.table.rows.items():
                    item.cells[config] = space.register(node.name, config, row, work.builder)
            elif node.is_value:
                for config, value in node.costs.entries.items():
                    if not value.is_crisp:
                        raise TransformationError(
                            f"Value node {node.name} has fuzzy costs but no derivation to continue"
                        )
                    item.cells[config] = work.builder.const(value.mean)
            work.nodes[node.name] = item
        return work

    def copy(self) -> "WorkingDiagram":
        nodes = {name: copy.copy(node) for name, node in self.nodes.items()}
        for node in nodes.values():
            node.parents = list(node.parents)
            node.cells = dict(node.cells)
            node.touched = False
        work = WorkingDiagram(nodes, self.space, OpCounter())
        work.history = list(self.history)
        return work

    def node(self, name: str) -> WorkingNode:
        try:
            return self.nodes[name]
        except KeyError:
            raise TransformationError(f"Node {name!r} is not in the diagram")

    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for node in self.nodes.values():
            graph.add_node(node.name, kind=node.kind)
        for node in self.nodes.values():
            graph.add_edges_from((parent, node.name) for parent in node.parents)
        return graph

    def children(self, name: str) -> List[str]:
        return [node.name for node in self.nodes.values() if name in node.parents]

    def chance_names(self) -> List[str]:
        return [node.name for node in self.nodes.values() if node.kind == CHANCE]

    def value_name(self) -> Optional[str]:
        for node in self.nodes.values():
            if node.kind == VALUE:
                return node.name
        return None

    def in_topological_order(self, names) -> List[str]:
        declared = list(self.nodes)
        order = {
            name: i for i, name in
            enumerate(nx.lexicographical_topological_sort(self.graph(), key=declared.index))
        }
        return sorted(names, key=order.__getitem__)

    def latest(self, names) -> Optional[str]:
        """The candidate deepest in the graph, earliest declared among ties."""
        names = list(names)
        if not names:
            return None
        generation = {}
        for depth, layer in enumerate(nx.topological_generations(self.graph())):
            for name in layer:
                generation[name] = depth
        declared = list(self.nodes)
        return min(names, key=lambda n: (-generation[n], declared.index(n)))

    def configurations(self, parents: List[str]) -> Iterator[Configuration]:
        return configurations([self.nodes[p].space for p in parents])

    @staticmethod
    def key(parents: List[str], assignment: Mapping[str, str]) -> Configuration:
        return tuple(assignment[p] for p in parents)

    def remove(self, name: str) -> None:
        del self.nodes[name]
        self.history.append(f"remove {name}")

    def instantiate(self, name: str, label: str) -> None:
        """Fix a decision node to one alternative and delete it."""
        decision = self.node(name)
        if label not in decision.space:
            raise QueryError(f"Unknown alternative {label!r} for decision {name}")
        for child in self.children(name):
            node = self.nodes[child]
            position = node.parents.index(name)
            node.cells = {
                config[:position] + config[position + 1:]: cells
                for config, cells in node.cells.items() if config[position] == label
            }
            node.parents.pop(position)
            node.touched = True
        del self.nodes[name]
        self.history.append(f"instantiate {name}={label}")

    def mean_row(self, extremizer: Extremizer, row) -> Optional[List[float]]:
        """Means of a chance row, ``None`` when the row is conditioned on a zero-probability event."""
        means = [extremizer.mean(term) for term in row]
        if any(math.isnan(m) for m in means) or sum(means) < 0.5:
            return None
        return means

    def materialize_row(self, extremizer: Extremizer, node: WorkingNode, config: Configuration) -> FuzzyDistribution:
        row = node.cells[config]
        if self.mean_row(extremizer, row) is None:
            log.warning(
                f"Row {node.name}{list(config)} is conditioned on a zero-probability event; "
                f"using a uniform crisp row"
            )
            return FuzzyDistribution.crisp(node.space, [1.0 / len(node.labels)] * len(node.labels))
        probabilities = tuple(extremizer.fuzzy_probability(term) for term in row)
        return FuzzyDistribution(node.space, probabilities)

    def impossible_rows(self, extremizer: Extremizer) -> List[Tuple[str, Configuration]]:
        found = []
        for node in self.nodes.values():
            if node.kind != CHANCE:
                continue
            for config, row in node.cells.items():
                if self.mean_row(extremizer, row) is None:
                    found.append((node.name, config))
        return found

    def materialize(self, extremizer: Extremizer, source: InfluenceDiagram = None) -> InfluenceDiagram:
        """Fuzzy diagram for the current terms.

        Nodes untouched since ``source`` keep their original tables.
        """
        nodes = []
        for item in self.nodes.values():
            if source is not None and not item.touched and item.name in source:
                original = source.node(item.name)
                if tuple(original.parents) == tuple(item.parents):
                    nodes.append(original)
                    continue
            parents = tuple(self.nodes[p].space for p in item.parents)
            if item.kind == CHANCE:
                rows = {config: self.materialize_row(extremizer, item, config) for config in self.configurations(item.parents)}
                nodes.append(Node(item.name, CHANCE, item.space, tuple(item.parents), table=ConditionalTable(item.space, parents, rows)))
            elif item.kind == VALUE:
                entries = {}
                for config in self.configurations(item.parents):
                    value = extremizer.fuzzy_value(item.cells[config])
                    if value is None:
                        raise QueryError(f"Expected value of {item.name}{list(config)} is undefined")
                    entries[config] = value
                nodes.append(Node(item.name, VALUE, None, tuple(item.parents), costs=CostFunction(parents, entries)))
            else:
                nodes.append(Node(item.name, DECISION, item.space, tuple(item.parents)))
        return InfluenceDiagram(tuple(nodes), derivation=self)
