import json
from pathlib import Path

import pytest

from FuzzyIDPy.cli import main
from FuzzyIDPy.errors import EXIT_CHECK_FAILED, EXIT_INVALID, EXIT_OK, EXIT_SOLVER, EXIT_USAGE

FIXTURES = Path(__file__).parent / "fixtures"
INFERENCE = str(FIXTURES / "assembly_inference.fid.json")
DECISION = str(FIXTURES / "assembly_decision.fid.json")


def run(capsys, *argv):
    code = main(["--workers", "1", *argv])
    return code, capsys.readouterr().out


def test_validate(capsys):
    code, out = run(capsys, "validate", DECISION)
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["command"] == "validate"
    assert report["valid"] is True
    assert report["diagram"]["arcs"] == 7


def test_validate_a_cycle(capsys, tmp_path):
    document = json.loads(Path(INFERENCE).read_text(encoding="utf-8"))
    document["nodes"][0]["parents"] = ["S"]
    document["nodes"][0]["table"] = {"L1,S1": ".95", "L0,S1": ".05", "L1,S0": ".95", "L0,S0": ".05"}
    path = tmp_path / "cycle.fid.json"
    path.write_text(json.dumps(document), encoding="utf-8")

    code, out = run(capsys, "validate", str(path))
    assert code == EXIT_INVALID
    error = json.loads(out)["error"]
    assert error["error"] == "structure_error"
    assert any("cycle" in problem for problem in error["errors"])



def test_validate_a_fuzzy_cost(capsys, tmp_path):
    document = json.loads(Path(DECISION).read_text(encoding="utf-8"))
    document["nodes"][-1]["costs"]["L1_IO0,D_L"] = "350|5|5"
    path = tmp_path / "fuzzy_cost.fid.json"
    path.write_text(json.dumps(document), encoding="utf-8")

    code, out = run(capsys, "validate", str(path))
    assert code == EXIT_INVALID
    error = json.loads(out)["error"]
    assert error["error"] == "structure_error"
    assert any("must be a finite number" in problem for problem in error["errors"])

    code, _ = run(capsys, "decide", str(path), "--given", "S=S0")
    assert code == EXIT_INVALID

def test_infer(capsys):
    code, out = run(capsys, "infer", INFERENCE, "--target", "IO", "--given", "S=S0")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["distribution"]["IO0"]["mean"] == pytest.approx(0.16807, abs=1e-5)
    assert report["distribution"]["IO0"]["membership_at_0"] == pytest.approx(0.66, abs=1e-3)
    assert report["boundary_semantics"] == "constrained"
    assert report["op_counter"]["multiplications"] > 0


def test_infer_is_deterministic(capsys):
    _, first = run(capsys, "infer", INFERENCE, "--target", "IO", "--given", "S=S0")
    _, second = run(capsys, "infer", INFERENCE, "--target", "IO", "--given", "S=S0")
    assert first == second


def test_infer_on_zero_probability_evidence(capsys):
    code, out = run(capsys, "infer", INFERENCE, "--target", "L", "--given", "S=S1", "--given", "IO=IO0")
    assert code == EXIT_SOLVER
    assert json.loads(out)["error"]["error"] == "query_error"


def test_decide_and_sensitivity(capsys):
    code, out = run(capsys, "decide", DECISION, "--given", "S=S0")
    assert code == EXIT_OK
    policy = json.loads(out)["policy"]
    assert policy["chosen"] == "D_L"
    assert policy["expected"]["D_IO"]["mean"] == pytest.approx(284.87, abs=0.01)

    code, out = run(capsys, "sensitivity", DECISION, "--given", "S=S0")
    assert code == EXIT_OK
    sensitivity = json.loads(out)["sensitivity"]
    assert sensitivity["reference"] == "D_L"
    assert 0.03 <= sensitivity["alpha_star"] <= 0.10
    assert "difference_dominance" not in sensitivity


def test_sensitivity_with_the_difference_check(capsys):
    code, out = run(capsys, "sensitivity", DECISION, "--given", "S=S0", "--difference", "--grid", "11")
    assert code == EXIT_OK
    assert json.loads(out)["sensitivity"]["difference_dominance"]["verdict"] == "mixed"


def test_plot_csv(capsys, tmp_path):
    path = tmp_path / "io0.csv"
    code, out = run(capsys, "plot", INFERENCE, "--expr", "P(IO=IO0 | S=S0)", "--out", str(path), "--points", "32")
    assert code == EXIT_OK
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "x,membership"
    assert len(lines) == 33
    assert json.loads(out)["plot"]["points"] == 32


def test_plot_csv_with_the_oracle(capsys, tmp_path):
    path = tmp_path / "l0.csv"
    code, _ = run(capsys, "plot", INFERENCE, "--expr", "P(L=L0)", "--out", str(path),
                  "--points", "8", "--oracle", "21")
    assert code == EXIT_OK
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "x,membership,oracle_membership"
    assert len(lines) == 9


def test_plot_svg(capsys, tmp_path):
    path = tmp_path / "cost.svg"
    code, _ = run(capsys, "plot", DECISION, "--expr", "E(D=D_L | S=S0)", "--out", str(path))
    assert code == EXIT_OK
    text = path.read_text(encoding="utf-8")
    assert "<svg" in text
    assert "x,membership" in text


def test_check(capsys):
    code, out = run(capsys, "check", INFERENCE, "--expr", "P(L=L0)", "--grid", "21")
    assert code == EXIT_OK
    assert json.loads(out)["agreement"]["passed"] is True



def test_check_a_cost_with_a_clipped_half(capsys):
    code, out = run(capsys, "check", DECISION, "--expr", "E(D=D_L | S=S0)", "--grid", "201")
    assert code == EXIT_OK
    agreement = json.loads(out)["agreement"]
    assert agreement["passed"] is True
    assert [band["side"] for band in agreement["clipped"]] == ["left"]

def test_check_fails_with_a_negative_tolerance(capsys):
    code, out = run(capsys, "check", INFERENCE, "--expr", "P(L=L0)", "--grid", "21", "--tol-support=-1")
    assert code == EXIT_CHECK_FAILED
    assert json.loads(out)["agreement"]["passed"] is False


def test_missing_file(capsys, tmp_path):
    code, out = run(capsys, "validate", str(tmp_path / "missing.fid.json"))
    assert code == EXIT_INVALID
    assert json.loads(out)["error"]["error"] == "report_error"


@pytest.mark.parametrize("argv", [
    [],
    ["infer", INFERENCE],
    ["decide", DECISION, "--objective", "cheapest"],
    ["plot", INFERENCE, "--expr", "P(L=L0)", "--out", "curve.png"],
    ["plot", INFERENCE, "--expr", "P(L=L0)", "--out", "curve.csv", "--points", "1"],
    ["--extremization", "random", "validate", INFERENCE]
])
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE
    assert "usage" in capsys.readouterr().err


def test_bad_client_option():
    assert main(["--workers", "0", "validate", INFERENCE]) == EXIT_USAGE


def test_report_to_a_file(capsys, tmp_path):
    path = tmp_path / "policy.json"
    code, out = run(capsys, "decide", DECISION, "--given", "S=S0", "--out", str(path))
    assert code == EXIT_OK
    assert out == ""
    assert json.loads(path.read_text(encoding="utf-8"))["command"] == "decide"
