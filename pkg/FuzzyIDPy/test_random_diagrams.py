"""Mean channel of the transformations against joint enumeration on random diagrams."""
import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from FuzzyIDPy import FuzzyIDPy, FuzzyProbability, Query
from FuzzyIDPy.types import configurations, OutcomeSpace

DIAGRAMS = 200


def random_row(rng, k):
    means = (rng.dirichlet(np.ones(k)) + 0.2) / (1.0 + 0.2 * k)
    if rng.random() < 0.2:
        return [FuzzyProbability.crisp(m) for m in means]
    if k == 2:
        left, right = rng.uniform(0.0, 0.1, size=2)
        first = FuzzyProbability(means[0], left, right)
        return [first, first.complement()]
    return [FuzzyProbability(m, s, s) for m, s in zip(means, rng.uniform(0.0, 0.05, size=k))]


def random_document(rng):
    nodes, spaces = [], []
    for i in range(int(rng.integers(2, 5))):
        name = f"N{i}"
        labels = [f"{name.lower()}_{j}" for j in range(2 if rng.random() < 0.75 else 3)]
        parents = [space for space in spaces if rng.random() < 0.5][:2]
        table = {}
        for config in configurations(parents):
            for label, probability in zip(labels, random_row(rng, len(labels))):
                table[",".join((label,) + config)] = probability
        nodes.append({
            "name": name, "kind": "chance", "outcomes": labels,
            "parents": [space.name for space in parents], "table": table
        })
        spaces.append(OutcomeSpace(name, tuple(labels)))

    if rng.random() < 0.5:
        decision = OutcomeSpace("D", ("d1", "d2"))
        parents = [spaces[int(i)] for i in rng.choice(len(spaces), size=min(2, len(spaces)), replace=False)]
        parents.append(decision)
        nodes.append({"name": "D", "kind": "decision", "outcomes": list(decision.labels)})
        nodes.append({
            "name": "C", "kind": "value", "parents": [space.name for space in parents],
            "costs": {",".join(config): int(rng.integers(0, 100)) for config in configurations(parents)}
        })
    return {"nodes": nodes}, spaces


def random_evidence(rng, spaces, exclude=None):
    others = [space for space in spaces if space.name != exclude]
    picked = rng.choice(len(others), size=int(rng.integers(0, min(2, len(others)) + 1)), replace=False)
    return {others[int(i)].name: str(rng.choice(others[int(i)].labels)) for i in picked}


@pytest.mark.parametrize("seed", range(DIAGRAMS))
def test_means_match_joint_enumeration(seed):
    rng = np.random.default_rng(seed)
    engine = FuzzyIDPy(vertex_limit=512, workers=1)
    document, spaces = random_document(rng)
    diagram = engine.parse_document(document, f"seed {seed}")

    target = spaces[int(rng.integers(len(spaces)))].name
    query = Query(target, random_evidence(rng, spaces, target))
    posterior = engine.infer(diagram, query)
    expected = engine.crisp_evaluate(diagram, query)
    for label, probability in posterior.items():
        assert probability.mean == pytest.approx(expected[label], abs=1e-9)
        lower, upper = probability.support
        assert lower - 1e-9 <= expected[label] <= upper + 1e-9

    if diagram.value_node is not None:
        evidence = random_evidence(rng, spaces)
        policy = engine.decide(diagram, evidence)
        costs = engine.crisp_evaluate(diagram, evidence=evidence)
        for alternative, value in policy.expected.items():
            assert value.mean == pytest.approx(costs[alternative], abs=1e-9)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_binary_posteriors_are_complement_pairs(seed):
    rng = np.random.default_rng(seed)
    document, spaces = random_document(rng)
    binary = [space for space in spaces if len(space) == 2]
    assume(binary)
    engine = FuzzyIDPy(workers=1)
    diagram = engine.parse_document(document, f"seed {seed}")

    target = binary[int(rng.integers(len(binary)))]
    posterior = engine.infer(diagram, Query(target.name, random_evidence(rng, spaces, target.name)))
    first, second = (posterior[label] for label in target.labels)
    twin = first.complement()
    assert second.mean == pytest.approx(twin.mean, abs=1e-6)
    assert second.support == pytest.approx(twin.support, abs=1e-6)
    assert second.boundary_left == pytest.approx(first.boundary_right, abs=1e-6)
    assert second.boundary_right == pytest.approx(first.boundary_left, abs=1e-6)
