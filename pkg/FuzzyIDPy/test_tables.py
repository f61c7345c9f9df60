import pytest

from FuzzyIDPy import ConditionalTable, FuzzyDistribution, FuzzyProbability, OutcomeSpace, TableError


@pytest.fixture
def io_given_l(inference_diagram):
    """IO is independent of L: the same marginal in every row."""
    io = inference_diagram.node("IO").table.row(())
    l_space = inference_diagram.space("L")
    return ConditionalTable(io.space, (l_space,), {(label,): io for label in l_space.labels})


def test_published_marginals_are_valid(engine, inference_diagram):
    for name in ("L", "IO"):
        report = engine.validate(inference_diagram.node(name).table.row(()))
        assert report.is_valid, report.to_dict()
    assert engine.validate(inference_diagram.node("S").table).is_valid


@pytest.mark.parametrize("labels", [("x1", "x,0"), ("x1", "x0 "), (" x1", "x0"), ("x1", "")])
def test_outcome_labels_that_break_table_keys(labels):
    with pytest.raises(TableError):
        OutcomeSpace("X", labels)

def test_mean_sum_violation(engine):
    space = OutcomeSpace("X", ("x1", "x0"))
    report = engine.validate(FuzzyDistribution.crisp(space, [0.6, 0.5]))
    assert not report.is_valid
    assert "mean-sum" in report.rules()


def test_spread_feasibility_violation(engine):
    space = OutcomeSpace("X", ("x1", "x2", "x3"))
    distribution = FuzzyDistribution.from_mapping(space, {
        "x1": FuzzyProbability(0.5, 0.0, 0.1),
        "x2": FuzzyProbability(0.3, 0.0, 0.1),
        "x3": FuzzyProbability(0.2, 0.0, 0.1)
    })
    assert engine.validate(distribution).is_valid
    lifted = FuzzyDistribution(space, tuple(FuzzyProbability(p.mean - 0.01, 0.0, 0.0) for p in distribution.probabilities))
    assert "spread-feasibility" in engine.validate(lifted).rules()


def test_complement_pair_violation(engine):
    space = OutcomeSpace("X", ("x1", "x0"))
    distribution = FuzzyDistribution.from_mapping(space, {"x1": "(.1, .6, .1)", "x0": "(.2, .4, .1)"})
    assert engine.validate(distribution).rules() == ["complement-pair"]


def test_missing_row(engine, inference_diagram):
    table = inference_diagram.node("S").table
    partial = ConditionalTable(table.child, table.parents, {("L1", "IO1"): table.row(("L1", "IO1"))})
    rules = engine.validate(partial).rules()
    assert rules.count("missing-row") == 3


def test_product_follows_the_chain_rule(engine, inference_diagram, io_given_l):
    joint = engine.product(io_given_l, inference_diagram.node("L").table.row(()))
    assert joint[("IO1", "L1")].mean == pytest.approx(0.9405)
    assert joint[("IO1", "L1")].nominal_support == pytest.approx((0.8832, 0.99902), abs=1e-5)
    assert sum(cell.mean for cell in joint.cells.values()) == pytest.approx(1.0, abs=1e-9)
    assert joint.marginal_means("L") == pytest.approx({"L1": 0.95, "L0": 0.05})
    assert engine.validate(joint).is_valid


def test_product_with_an_identity_table(engine, inference_diagram):
    l_marginal = inference_diagram.node("L").table.row(())
    copy = OutcomeSpace("X", ("x1", "x0"))
    identity = ConditionalTable(copy, (l_marginal.space,), {
        ("L1",): FuzzyDistribution.crisp(copy, [1.0, 0.0]),
        ("L0",): FuzzyDistribution.crisp(copy, [0.0, 1.0])
    })
    joint = engine.product(identity, l_marginal)
    for diagonal, off, parent in (("x1", "x0", "L1"), ("x0", "x1", "L0")):
        assert joint[(diagonal, parent)].mean == pytest.approx(l_marginal[parent].mean)
        assert joint[(diagonal, parent)].support == pytest.approx(l_marginal[parent].support)
        assert joint[(off, parent)].is_crisp and joint[(off, parent)].mean == 0.0


def test_product_space_mismatch(engine, inference_diagram):
    with pytest.raises(TableError):
        engine.product(inference_diagram.node("S").table, inference_diagram.node("L").table.row(()))


def test_condition_slice(engine, inference_diagram):
    table = inference_diagram.node("S").table
    works = engine.condition_slice(table, ("L1", "IO1"))
    assert works["S1"] == FuzzyProbability.crisp(1.0)
    assert works["S0"] == FuzzyProbability.crisp(0.0)
    assert engine.condition_slice(table, {"L": "L0", "IO": "IO0"})["S0"] == FuzzyProbability.crisp(1.0)

    with pytest.raises(TableError):
        engine.condition_slice(table, ("L2", "IO1"))
    with pytest.raises(TableError):
        engine.condition_slice(table, {"L": "L0"})
    with pytest.raises(TableError):
        engine.condition_slice(table, {"L": "L0", "IO": "IO0", "X": "x"})


def test_every_slice_of_a_valid_table_is_valid(engine, io_given_l):
    assert engine.validate(io_given_l).is_valid
    for config in io_given_l.configurations():
        assert engine.validate(engine.condition_slice(io_given_l, config)).is_valid
