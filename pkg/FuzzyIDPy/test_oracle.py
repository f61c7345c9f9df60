import numpy as np
import pytest

from FuzzyIDPy import FuzzyIDError, FuzzyIDPy, FuzzyProbability, OracleError, Query
from FuzzyIDPy.types import LEFT, RIGHT


def test_enumerate_configs(engine, inference_diagram):
    configs = list(engine.enumerate_configs(inference_diagram, grid_n=3))
    assert len(configs) == 9
    for config in configs:
        for distribution in config.distributions.values():
            assert sum(distribution) == pytest.approx(1.0, abs=1e-12)
        assert 0.02 - 1e-12 <= config.distributions[("L", ())][1] <= 0.08 + 1e-12
        assert config.distributions[("S", ("L1", "IO1"))] == (1.0, 0.0)

    centre = [config for config in configs if config.membership == 1.0]
    assert len(centre) == 1
    assert centre[0].distributions[("L", ())] == pytest.approx((0.95, 0.05))
    assert centre[0].distributions[("IO", ())] == pytest.approx((0.99, 0.01))


def test_enumeration_is_deterministic(engine, inference_diagram):
    first = [c.distributions for c in engine.enumerate_configs(inference_diagram, grid_n=5)]
    second = [c.distributions for c in engine.enumerate_configs(inference_diagram, grid_n=5)]
    assert first == second


@pytest.mark.parametrize("grid_n", [1, 4])
def test_grid_must_be_odd(engine, inference_diagram, grid_n):
    with pytest.raises(OracleError):
        next(engine.enumerate_configs(inference_diagram, grid_n=grid_n))


def test_posterior_curve(engine, inference_diagram):
    curve = engine.ep_curve(inference_diagram, "P(IO=IO0 | S=S0)", grid_n=201)
    lower, upper = curve.support
    assert lower == pytest.approx(0.0, abs=0.02)
    assert upper == pytest.approx(0.6757, abs=0.02)
    assert curve.membership_at(0.0) == pytest.approx(0.66, abs=0.03)
    assert curve.peak == pytest.approx(0.168, abs=0.005)

    posterior = engine.infer(inference_diagram, Query("IO", {"S": "S0"}))
    report = engine.compare(posterior["IO0"], curve)
    assert report.passed, report.to_dict()
    assert report.clipped == ()


def test_crisp_diagram_gives_one_bin(engine):
    diagram = engine.parse_document({
        "nodes": [
            {"name": "A", "kind": "chance", "outcomes": ["a1", "a0"], "table": {"a1": ".3", "a0": ".7"}},
            {"name": "B", "kind": "chance", "outcomes": ["b1", "b0"], "parents": ["A"],
             "table": {"b1,a1": ".9", "b0,a1": ".1", "b1,a0": ".2", "b0,a0": ".8"}}
        ]
    })
    curve = engine.ep_curve(diagram, "P(A=a1 | B=b1)", grid_n=5)
    assert curve.bins == 1
    assert curve.support == pytest.approx((0.27 / 0.41, 0.27 / 0.41))
    assert curve.membership_at(curve.lower) == 1.0


def test_a_widened_result_fails(engine, inference_diagram):
    curve = engine.ep_curve(inference_diagram, "P(IO=IO0 | S=S0)", grid_n=51)
    widened = FuzzyProbability(0.16807, 0.16807, 0.8)
    report = engine.compare(widened, curve)
    assert not report.support_ok
    assert not report.passed
    assert report.to_dict()["support"]["ok"] is False


def test_workers_do_not_change_the_curve(inference_diagram):
    expression = "P(L=L0 | S=S0)"
    single = FuzzyIDPy(workers=1).ep_curve(inference_diagram, expression, grid_n=201)
    pooled = FuzzyIDPy(workers=3).ep_curve(inference_diagram, expression, grid_n=201)
    assert single == pooled


def test_cost_curves_report_their_clipped_halves(engine, decision_diagram):
    policy = engine.decide(decision_diagram, {"S": "S0"})
    for alternative, side, edge in (("D_L", LEFT, 200.0), ("D_IO", RIGHT, 300.0)):
        curve = engine.ep_curve(decision_diagram, f"E(D={alternative} | S=S0)", grid_n=201)
        result = policy.expected[alternative]
        report = engine.compare(result, curve)
        assert report.passed, report.to_dict()
        assert report.support_deviation < 0.02

        # IO0 sits at 0 with membership .66, so the cost reaches its extreme with that membership
        (band,) = report.clipped
        assert band.side == side
        assert band.edge_membership == pytest.approx(0.66, abs=0.03)
        if side == LEFT:
            assert (band.lower, band.upper) == pytest.approx((edge, result.mean), abs=0.01)
            assert curve.membership_at(curve.lower) > 0.5
        else:
            assert (band.lower, band.upper) == pytest.approx((result.mean, edge), abs=0.01)
            assert curve.membership_at(curve.upper) > 0.5
        assert report.compared_bins < int((curve.counts > 0).sum())
        assert report.to_dict()["clipped"][0]["side"] == side


def test_posterior_curves_approach_their_limit(engine, inference_diagram):
    # each lattice is nested in the next, so bin suprema can only rise
    grids = (11, 21, 41, 81)
    curves = [engine.ep_curve(inference_diagram, "P(IO=IO0 | S=S0)", grid_n=n, bins=64) for n in grids]
    finest = curves[-1]
    for coarse, fine in zip(curves, curves[1:]):
        assert coarse.support == pytest.approx(fine.support, abs=1e-12)
        assert np.all(coarse.memberships <= fine.memberships + 1e-12)
    gaps = [float(np.sum(finest.memberships - curve.memberships)) for curve in curves]
    assert gaps == sorted(gaps, reverse=True)
    assert gaps[0] > gaps[-2]


def test_bad_expressions(engine, inference_diagram, decision_diagram):
    with pytest.raises(FuzzyIDError):
        engine.ep_curve(inference_diagram, "P(IO=IO9 | S=S0)", grid_n=3)
    with pytest.raises(FuzzyIDError):
        engine.ep_curve(inference_diagram, "E(D=D_L)", grid_n=3)
    with pytest.raises(FuzzyIDError):
        engine.ep_curve(decision_diagram, "E(S=S0)", grid_n=3)
