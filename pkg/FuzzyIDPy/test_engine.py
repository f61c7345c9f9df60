import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from FuzzyIDPy import FuzzyIDPy, FuzzyProbability, Query, QueryError, TransformationError
from FuzzyIDPy.types import MAXIMIZE


def test_posterior_given_a_failed_system(engine, inference_diagram):
    posterior = engine.infer(inference_diagram, Query("IO", {"S": "S0"}))
    failed, works = posterior["IO0"], posterior["IO1"]

    assert failed.mean == pytest.approx(0.16807, abs=1e-5)
    assert works.mean == pytest.approx(0.83193, abs=1e-5)
    assert failed.support[1] == pytest.approx(0.6757, abs=1e-4)
    assert failed.right_nominal == pytest.approx(0.5076, abs=1e-4)
    assert works.support[0] == pytest.approx(0.3243, abs=1e-4)
    # constrained extension principle at IO0 = 0
    assert failed.boundary_left == pytest.approx(0.66, abs=1e-3)

    twin = failed.complement()
    assert works.mean == pytest.approx(twin.mean, abs=1e-6)
    assert works.left_nominal == pytest.approx(twin.left_nominal, abs=1e-6)
    assert works.right_nominal == pytest.approx(twin.right_nominal, abs=1e-6)


def contains(outer, inner, slack=1e-9):
    return outer[0] - slack <= inner[0] and inner[1] <= outer[1] + slack


def test_posterior_lies_inside_chained_interval_arithmetic(engine, inference_diagram):
    l_row = inference_diagram.node("L").table.row(())
    io_row = inference_diagram.node("IO").table.row(())
    # P(IO0 | S0) = P(IO0) / (1 - P(L1) P(IO1)) with every operand independent
    naive = engine.binary_arith(
        "div", io_row["IO0"], engine.binary_arith("sub", 1, engine.binary_arith("mul", l_row["L1"], io_row["IO1"]))
    )
    posterior = engine.infer(inference_diagram, Query("IO", {"S": "S0"}))
    assert contains(naive.nominal_support, posterior["IO0"].support)
    assert naive.nominal_support[1] > posterior["IO0"].support[1] + 0.1


def test_posterior_given_a_working_system(engine, inference_diagram):
    posterior = engine.infer(inference_diagram, Query("IO", {"S": "S1"}))
    assert posterior["IO1"].is_crisp and posterior["IO1"].mean == pytest.approx(1.0)
    assert posterior["IO0"].is_crisp and posterior["IO0"].mean == pytest.approx(0.0)


def test_no_evidence_returns_the_prior(engine, inference_diagram):
    prior = inference_diagram.node("IO").table.row(())
    posterior = engine.infer(inference_diagram, Query("IO"))
    for label in ("IO1", "IO0"):
        assert posterior[label].mean == pytest.approx(prior[label].mean, abs=1e-12)
        assert posterior[label].left_nominal == pytest.approx(prior[label].left_nominal, abs=1e-9)
        assert posterior[label].right_nominal == pytest.approx(prior[label].right_nominal, abs=1e-9)


def test_solve_query_counts_operations(engine, inference_diagram):
    _, counter = engine.solve_query(inference_diagram, Query("IO", {"S": "S0"}))
    assert counter.multiplications > 0
    assert counter.divisions > 0
    assert counter.evaluations > 0


def test_decision(engine, decision_diagram):
    policy = engine.decide(decision_diagram, {"S": "S0"})
    logic, io = policy.expected["D_L"], policy.expected["D_IO"]

    assert policy.decision == "D"
    assert policy.chosen == "D_L"
    assert logic.mean == pytest.approx(225.63, abs=0.01)
    assert io.mean == pytest.approx(284.87, abs=0.01)
    assert logic.mean == pytest.approx(226, abs=1)
    assert logic.left_nominal == pytest.approx(26, abs=3)
    assert logic.right_nominal == pytest.approx(78, abs=3)
    assert io.mean == pytest.approx(285, abs=1)
    assert io.left_nominal == pytest.approx(50, abs=3)
    assert io.right_nominal == pytest.approx(15, abs=3)
    assert logic.support[0] == pytest.approx(200.0, abs=0.01)
    assert io.support[1] == pytest.approx(300.0, abs=0.01)
    assert policy.op_counter.multiplications > 0


def test_maximize_picks_the_other_board(engine, decision_diagram):
    assert engine.decide(decision_diagram, {"S": "S0"}, MAXIMIZE).chosen == "D_IO"
    assert FuzzyIDPy(objective=MAXIMIZE, workers=1).decide(decision_diagram, {"S": "S0"}).chosen == "D_IO"


def test_decision_preconditions(engine, decision_diagram, inference_diagram):
    with pytest.raises(QueryError):
        engine.decide(decision_diagram)
    with pytest.raises(TransformationError):
        engine.decide(inference_diagram, {"S": "S0"})
    with pytest.raises(ValueError):
        engine.decide(decision_diagram, {"S": "S0"}, "cheapest")


def test_constant_costs_give_equal_alternatives(engine):
    diagram = engine.parse_document({
        "nodes": [
            {"name": "X", "kind": "chance", "outcomes": ["x1", "x0"], "table": {"x1": "(.1, .6, .1)", "x0": "(.1, .4, .1)"}},
            {"name": "D", "kind": "decision", "outcomes": ["a", "b"]},
            {"name": "C", "kind": "value", "parents": ["X", "D"],
             "costs": {"x1,a": 100, "x0,a": 100, "x1,b": 100, "x0,b": 100}}
        ]
    })
    policy = engine.decide(diagram)
    for value in policy.expected.values():
        assert value.support == pytest.approx((100.0, 100.0), abs=1e-9)


def test_crisp_evaluate(engine, inference_diagram, decision_diagram):
    posterior = engine.crisp_evaluate(inference_diagram, Query("IO", {"S": "S0"}))
    assert posterior["IO0"] == pytest.approx(0.16807, abs=1e-5)
    costs = engine.crisp_evaluate(decision_diagram, evidence={"S": "S0"})
    assert costs == pytest.approx({"D_L": 225.63, "D_IO": 284.87}, abs=0.01)


def test_mean_channel_matches_point_estimates(engine, decision_diagram):
    policy = engine.decide(decision_diagram, {"S": "S0"})
    costs = engine.crisp_evaluate(decision_diagram, evidence={"S": "S0"})
    for alternative, value in policy.expected.items():
        assert value.mean == pytest.approx(costs[alternative], abs=1e-9)


def test_zero_probability_evidence(engine, inference_diagram):
    query = Query("L", {"S": "S1", "IO": "IO0"})
    with pytest.raises(QueryError):
        engine.infer(inference_diagram, query)
    with pytest.raises(QueryError):
        engine.crisp_evaluate(inference_diagram, query)


@pytest.mark.parametrize("query", [
    Query("C", {"S": "S0"}),
    Query("IO", {"S": "S2"}),
    Query("IO", {"Z": "z"})
])
def test_bad_queries(engine, decision_diagram, query):
    with pytest.raises(QueryError):
        engine.infer(decision_diagram, query)


def test_reverse_after_summing_out(engine, inference_diagram):
    summed = engine.sum_out_chance(inference_diagram, "L")
    assert summed.node("S").parents == ("IO",)
    reversed_ = engine.reverse_arc(summed, ("IO", "S"))
    assert reversed_.node("IO").parents == ("S",)
    failed = reversed_.node("IO").table.row(("S0",))["IO0"]
    assert failed.mean == pytest.approx(0.16807, abs=1e-5)
    assert failed.support[1] == pytest.approx(0.6757, abs=1e-4)


def test_sum_out_marginalizes(engine, inference_diagram):
    once = engine.sum_out_chance(inference_diagram, "L")
    twice = engine.sum_out_chance(once, "IO")
    assert twice.node("S").parents == ()
    assert twice.node("S").table.row(())["S0"].mean == pytest.approx(0.0595, abs=1e-9)

    other = engine.sum_out_chance(engine.sum_out_chance(inference_diagram, "IO"), "L")
    assert other.node("S").table.row(())["S0"].mean == pytest.approx(
        twice.node("S").table.row(())["S0"].mean, abs=1e-12
    )


def test_sum_out_a_barren_node(engine, inference_diagram):
    pruned = engine.sum_out_chance(inference_diagram, "S")
    assert pruned.names == ("L", "IO")
    assert pruned.node("L") == inference_diagram.node("L")
    assert pruned.node("IO") == inference_diagram.node("IO")


def test_absorb_builds_the_cost_tree(engine, decision_diagram):
    absorbed = engine.absorb_into_value(decision_diagram, "R")
    assert "R" not in absorbed
    value = absorbed.value_node
    assert value.parents == ("D", "L", "IO")
    expected = {
        ("D_L", "L0", "IO1"): 200, ("D_L", "L1", "IO0"): 350, ("D_L", "L0", "IO0"): 400,
        ("D_IO", "L1", "IO0"): 200, ("D_IO", "L0", "IO1"): 300, ("D_IO", "L0", "IO0"): 400
    }
    for config, cost in expected.items():
        assert value.costs.cost(config).mean == pytest.approx(cost)
        assert value.costs.cost(config).support == pytest.approx((cost, cost))


def test_transformation_preconditions(engine, inference_diagram, decision_diagram):
    with pytest.raises(TransformationError):
        engine.reverse_arc(decision_diagram, ("S", "D"))
    with pytest.raises(TransformationError):
        engine.sum_out_chance(decision_diagram, "S")
    with pytest.raises(TransformationError):
        engine.sum_out_chance(decision_diagram, "D")
    with pytest.raises(TransformationError):
        engine.absorb_into_value(decision_diagram, "S")


def test_fuzzy_reversal_costs_about_three_crisp_ones(engine):
    diagram = engine.parse_document({
        "nodes": [
            {"name": "A", "kind": "chance", "outcomes": ["a1", "a0"],
             "table": {"a1": "(.05, .3, .05)", "a0": "(.05, .7, .05)"}},
            {"name": "B", "kind": "chance", "outcomes": ["b1", "b0"], "parents": ["A"],
             "table": {"b1,a1": "(.05, .9, .05)", "b0,a1": "(.05, .1, .05)",
                       "b1,a0": "(.05, .2, .05)", "b0,a0": "(.05, .8, .05)"}}
        ]
    })
    reversed_ = engine.reverse_arc(diagram, ("A", "B"))
    derivation = reversed_.derivation
    crisp, fuzzy = derivation.counter, derivation.fuzzy_counter
    assert crisp.multiplications > 0 and crisp.additions > 0
    assert fuzzy.multiplications <= 4 * crisp.multiplications
    assert fuzzy.additions <= 4 * crisp.additions
    assert fuzzy.multiplications >= 3 * crisp.multiplications


def test_grid_strategy_agrees_on_means(inference_diagram):
    vertex = FuzzyIDPy(workers=1).infer(inference_diagram, Query("IO", {"S": "S0"}))
    grid = FuzzyIDPy(extremization="grid", workers=1).infer(inference_diagram, Query("IO", {"S": "S0"}))
    assert grid["IO0"].mean == pytest.approx(vertex["IO0"].mean, abs=1e-12)
    assert grid["IO0"].support == pytest.approx(vertex["IO0"].support, abs=1e-3)


@pytest.mark.parametrize("options", [
    {"tolerance": 0.0},
    {"vertex_limit": 0},
    {"extremization": "random"},
    {"oracle_grid": 100},
    {"workers": 0}
])
def test_client_options_are_checked(options):
    with pytest.raises(ValueError):
        FuzzyIDPy(**options)


ENGINE = FuzzyIDPy(workers=1)

probabilities = st.builds(
    lambda mean, left, right: FuzzyProbability(mean / 1000, left / 1000, right / 1000),
    st.integers(200, 800),
    st.integers(0, 150),
    st.integers(0, 150)
)


@settings(max_examples=200, deadline=None)
@given(probabilities, probabilities, probabilities)
def test_bayes_rule_lies_inside_chained_interval_arithmetic(prior, hit, false_alarm):
    diagram = ENGINE.parse_document({
        "nodes": [
            {"name": "A", "kind": "chance", "outcomes": ["a1", "a0"],
             "table": {"a1": prior, "a0": prior.complement()}},
            {"name": "B", "kind": "chance", "outcomes": ["b1", "b0"], "parents": ["A"],
             "table": {"b1,a1": hit, "b0,a1": hit.complement(),
                       "b1,a0": false_alarm, "b0,a0": false_alarm.complement()}}
        ]
    })
    posterior = ENGINE.infer(diagram, Query("A", {"B": "b1"}))["a1"]

    joint = ENGINE.binary_arith("mul", prior, hit)
    other = ENGINE.binary_arith("mul", ENGINE.binary_arith("sub", 1, prior), false_alarm)
    naive = ENGINE.binary_arith("div", joint, ENGINE.binary_arith("add", joint, other))
    assert posterior.mean == pytest.approx(naive.mean, abs=1e-9)
    assert contains(naive.nominal_support, posterior.support)
