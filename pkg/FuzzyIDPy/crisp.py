"""Point estimates by direct joint enumeration.

This is deliberately a different algorithm than the transformation engine:
it multiplies table entries along every joint configuration of the relevant
chance nodes. Tables may hold numpy arrays instead of floats, in which case
every result is an array with one entry per perturbed diagram.
"""
import itertools
from typing import Dict, Iterator, Mapping, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from .errors import QueryError
from .types import InfluenceDiagram, Query

Tables = Dict[str, Dict[Tuple[str, ...], Sequence]]


def mean_tables(diagram: InfluenceDiagram) -> Tables:
    """Tables of means of every chance node."""
    return {
        node.name: {config: row.means for config, row in node.table.rows.items()}
        for node in diagram.chance_nodes
    }


def relevant_nodes(diagram: InfluenceDiagram, names) -> Set[str]:
    """``names`` and all their ancestors."""
    keep = set(names)
    for name in names:
        keep |= nx.ancestors(diagram.graph, name)
    return keep


def joint_weights(diagram: InfluenceDiagram, tables: Tables, fixed: Mapping[str, str],
                  keep: Set[str]) -> Iterator[Tuple[Dict[str, str], object]]:
    """Yield every configuration of the kept chance nodes consistent with ``fixed`` and its probability."""
    order = [name for name in nx.lexicographical_topological_sort(diagram.graph, key=diagram.names.index)
             if name in keep]
    for name in order:
        node = diagram.node(name)
        if node.is_decision and name not in fixed:
            raise QueryError(f"Decision {name} influences the result and must be fixed")
    chance = [name for name in order if diagram.node(name).is_chance]
    axes = [(fixed[name],) if name in fixed else diagram.space(name).labels for name in chance]
    for combo in itertools.product(*axes):
        assignment = dict(fixed)
        assignment.update(zip(chance, combo))
        weight = 1.0
        for name in chance:
            node = diagram.node(name)
            config = tuple(assignment[p] for p in node.parents)
            weight = weight * tables[name][config][node.space.index(assignment[name])]
        yield assignment, weight


def _ratio(numerator, denominator, what: str):
    denominator = np.asarray(denominator, dtype=float)
    if denominator.ndim == 0:
        if denominator == 0.0:
            raise QueryError(f"{what}: the evidence has probability zero")
        return float(np.asarray(numerator, dtype=float) / denominator)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(denominator == 0.0, np.nan, np.asarray(numerator, dtype=float) / denominator)


def posterior(diagram: InfluenceDiagram, query: Query, tables: Optional[Tables] = None) -> Dict[str, object]:
    """Posterior of the query target by enumeration."""
    tables = tables if tables is not None else mean_tables(diagram)
    given = query.given
    keep = relevant_nodes(diagram, [query.target, *given])
    totals = {label: 0.0 for label in diagram.space(query.target).labels}
    evidence = 0.0
    for assignment, weight in joint_weights(diagram, tables, given, keep):
        totals[assignment[query.target]] = totals[assignment[query.target]] + weight
        evidence = evidence + weight
    return {label: _ratio(total, evidence, str(query)) for label, total in totals.items()}


def expected_costs(diagram: InfluenceDiagram, evidence: Mapping[str, str],
                   tables: Optional[Tables] = None) -> Dict[str, object]:
    """Expected value of the value node for every alternative of the decision."""
    tables = tables if tables is not None else mean_tables(diagram)
    value = diagram.value_node
    if value is None:
        raise QueryError("The diagram has no value node")
    decisions = diagram.decision_nodes
    if len(decisions) != 1:
        raise QueryError(f"Expected exactly one decision node, found {len(decisions)}")
    decision = decisions[0]
    keep = relevant_nodes(diagram, [value.name, *evidence])
    results = {}
    for alternative in decision.space.labels:
        fixed = dict(evidence)
        fixed[decision.name] = alternative
        total = 0.0
        mass = 0.0
        for assignment, weight in joint_weights(diagram, tables, fixed, keep):
            config = tuple(assignment[p] for p in value.parents)
            total = total + weight * value.costs.cost(config).mean
            mass = mass + weight
        results[alternative] = _ratio(total, mass, f"E({decision.name}={alternative})")
    return results
