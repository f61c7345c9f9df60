import typing
from typing import Dict, Iterable, List, Optional, Tuple, Union

import networkx as nx

from ...errors import FuzzyIDError, StructureError
from ...types import (
    CHANCE, DECISION, NODE_KINDS, VALUE,
    ConditionalTable, CostFunction, FuzzyDistribution, InfluenceDiagram, Node, NodeSpec, OutcomeSpace
)

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class BuildValidate:
    """Assemble validated diagrams."""

    def build_validate(
        self: "FuzzyIDPy",
        nodes: Iterable[NodeSpec],
        arcs: Iterable[Tuple[str, str]],
        tables: Dict[str, Union[ConditionalTable, FuzzyDistribution]],
        costs: Optional[CostFunction] = None
    ) -> InfluenceDiagram:
        """Build an influence diagram, collecting every structural problem first.

        Parameters:
            nodes (``list`` of :obj:`NodeSpec`):
                Nodes in declaration order.

            arcs (``list`` of ``tuple``):
                ``(parent, child)`` pairs.

            tables (``dict``):
                Chance node name to its :obj:`ConditionalTable` (or a
                :obj:`FuzzyDistribution` for a root node). The table's parent
                order is the node's declared parent order.

            costs (:obj:`CostFunction`, optional):
                Cost function of the value node.

        Returns:
            :obj:`InfluenceDiagram`: The validated diagram.

        Raises:
            StructureError: With the full list of problems (cycles, orphan
            tables, bad parent sets, more than one value node, table
            violations, incomplete costs).

        Example:
            .. code-block:: python

                engine = FuzzyIDPy()
                diagram = engine.build_validate(
                    [NodeSpec("L", "chance", ("L1", "L0")), NodeSpec("S", "chance", ("S1", "S0"))],
                    [("L", "S")],
                    {"L": l_table, "S": s_table}
                )
        """
        nodes = list(nodes)
        arcs = [tuple(arc) for arc in arcs]
        tables = dict(tables or {})
        errors: List[str] = []

        specs: Dict[str, NodeSpec] = {}
        spaces: Dict[str, OutcomeSpace] = {}
        for spec in nodes:
            if spec.name in specs:
                errors.append(f"duplicate node {spec.name!r}")
                continue
            specs[spec.name] = spec
            if spec.kind not in NODE_KINDS:
                errors.append(f"node {spec.name!r} has unknown kind {spec.kind!r}")
                continue
            if spec.kind == VALUE:
                if spec.outcomes:
                    errors.append(f"value node {spec.name!r} cannot have outcomes")
                continue
            try:
                spaces[spec.name] = OutcomeSpace(spec.name, tuple(spec.outcomes))
            except FuzzyIDError as e:
                errors.append(e.description)

        values = [spec.name for spec in specs.values() if spec.kind == VALUE]
        if len(values) > 1:
            errors.append(f"more than one value node: {values}; exactly one is supported")

        graph = nx.DiGraph()
        graph.add_nodes_from(specs)
        for parent, child in arcs:
            for end in (parent, child):
                if end not in specs:
                    errors.append(f"arc {parent}->{child} names unknown node {end!r}")
            if graph.has_edge(parent, child):
                errors.append(f"duplicate arc {parent}->{child}")
            graph.add_edge(parent, child)

        if not nx.is_directed_acyclic_graph(graph):
            cycle = [edge[0] for edge in nx.find_cycle(graph)]
            errors.append(f"cycle {' -> '.join(cycle + cycle[:1])}")

        for name in values:
            if name in graph and graph.out_degree(name):
                errors.append(f"value node {name!r} has children {sorted(graph.successors(name))}")

        for name in tables:
            if name not in specs:
                errors.append(f"orphan table for unknown node {name!r}")
            elif specs[name].kind != CHANCE:
                errors.append(f"orphan table for {specs[name].kind} node {name!r}")

        built: List[Node] = []
        for spec in specs.values():
            parents = [p for p, c in arcs if c == spec.name]
            if spec.kind == CHANCE and spec.name in spaces:
                node = self._chance_node(spec, spaces, parents, tables.get(spec.name), errors)
            elif spec.kind == DECISION and spec.name in spaces:
                node = Node(spec.name, DECISION, spaces[spec.name], tuple(parents))
            elif spec.kind == VALUE:
                node = self._value_node(spec, spaces, parents, costs, errors)
            else:
                node = None
            if node is not None:
                built.append(node)

        if costs is not None and not values:
            errors.append("costs given but the diagram has no value node")

        if errors:
            self.logger.info(f"Diagram failed validation with {len(errors)} errors")
            raise StructureError(f"Diagram failed validation: {errors[0]}", errors)

        diagram = InfluenceDiagram(tuple(built))
        self.logger.info(f"Built {diagram}")
        return diagram

    def _chance_node(self: "FuzzyIDPy", spec: NodeSpec, spaces, parents, table, errors) -> Optional[Node]:
        if table is None:
            errors.append(f"chance node {spec.name!r} has no table")
            return None
        if isinstance(table, FuzzyDistribution):
            table = ConditionalTable.marginal(table)
        if table.child != spaces[spec.name]:
            errors.append(f"table of {spec.name!r} is over {table.child.name} {list(table.child.labels)}")
            return None
        if sorted(table.parent_names) != sorted(parents):
            errors.append(
                f"bad parent set for {spec.name!r}: table uses {list(table.parent_names)}, arcs give {parents}"
            )
            return None
        for space in table.parents:
            if spaces.get(space.name) != space:
                errors.append(f"table of {spec.name!r} uses outcomes {list(space.labels)} for parent {space.name!r}")
                return None
        errors.extend(str(violation) for violation in self.validate(table, spec.name))
        return Node(spec.name, CHANCE, spaces[spec.name], table.parent_names, table=table)

    def _value_node(self: "FuzzyIDPy", spec: NodeSpec, spaces, parents, costs, errors) -> Optional[Node]:
        if costs is None:
            errors.append(f"value node {spec.name!r} has no costs")
            return None
        if sorted(costs.parent_names) != sorted(parents):
            errors.append(
                f"bad parent set for {spec.name!r}: costs use {list(costs.parent_names)}, arcs give {parents}"
            )
            return None
        for space in costs.parents:
            if spaces.get(space.name) != space:
                errors.append(f"costs of {spec.name!r} use outcomes {list(space.labels)} for {space.name!r}")
                return None
        for config in costs.missing():
            errors.append(f"value node {spec.name!r} has no cost for {list(config)}")
        fuzzy = [list(config) for config, value in costs.entries.items() if not value.is_crisp]
        if fuzzy:
            errors.append(f"value node {spec.name!r} has fuzzy costs for {fuzzy}; costs must be crisp numbers")
        return Node(spec.name, VALUE, None, costs.parent_names, costs=costs)
