import json
import logging
from pathlib import Path

import pytest

from FuzzyIDPy import CostFunction, FuzzyValue, NodeSpec, ReportError, StructureError

INFERENCE_FILE = Path(__file__).parent / "fixtures" / "assembly_inference.fid.json"
DECISION_FILE = Path(__file__).parent / "fixtures" / "assembly_decision.fid.json"


def chain_document():
    """A -> B -> C with a shortcut A -> C."""
    return {
        "nodes": [
            {"name": "A", "kind": "chance", "outcomes": ["a1", "a0"], "table": {"a1": ".3", "a0": ".7"}},
            {"name": "B", "kind": "chance", "outcomes": ["b1", "b0"], "parents": ["A"],
             "table": {"b1,a1": ".9", "b0,a1": ".1", "b1,a0": ".2", "b0,a0": ".8"}},
            {"name": "C", "kind": "chance", "outcomes": ["c1", "c0"], "parents": ["A", "B"],
             "table": {"c1,a1,b1": "1", "c1,a1,b0": ".5", "c0,a1,b0": ".5",
                       "c0,a0,b1": "1", "c1,a0,b0": ".4", "c0,a0,b0": ".6"}}
        ]
    }


def test_fixture_structure(inference_diagram):
    assert inference_diagram.names == ("L", "IO", "S")
    assert sorted(inference_diagram.arcs) == [("IO", "S"), ("L", "S")]
    assert inference_diagram.node("S").parents == ("L", "IO")
    assert inference_diagram.value_node is None


def test_decision_fixture_structure(decision_diagram):
    assert [node.name for node in decision_diagram.decision_nodes] == ["D"]
    assert decision_diagram.value_node.name == "C"
    assert decision_diagram.value_node.costs.cost(("L1_IO0", "D_L")).mean == 350


def test_cycle_is_reported(engine, inference_diagram):
    nodes = [NodeSpec(node.name, node.kind, node.space.labels) for node in inference_diagram.nodes]
    tables = {node.name: node.table for node in inference_diagram.nodes}
    arcs = list(inference_diagram.arcs) + [("S", "L")]
    with pytest.raises(StructureError) as caught:
        engine.build_validate(nodes, arcs, tables)
    assert any(error.startswith("cycle") for error in caught.value.errors)
    assert any("bad parent set for 'L'" in error for error in caught.value.errors)


def test_every_problem_is_collected(engine):
    document = chain_document()
    document["nodes"][0]["table"] = {"a1": ".3", "a0": ".6"}
    document["nodes"][1]["colour"] = "red"
    document["nodes"][2]["table"]["c9,a1,b1"] = "1"
    with pytest.raises(StructureError) as caught:
        engine.parse_document(document, "chain")
    errors = caught.value.errors
    assert any("unknown field 'colour'" in error for error in errors)
    assert any("c9" in error for error in errors)
    assert all(error.startswith("chain: ") for error in errors)


def test_table_violations_name_the_row(engine):
    document = chain_document()
    document["nodes"][0]["table"] = {"a1": ".3", "a0": ".6"}
    with pytest.raises(StructureError) as caught:
        engine.parse_document(document)
    assert any("mean-sum" in error and "A" in error for error in caught.value.errors)


@pytest.mark.parametrize("cost", ["10|5|5", "(5, 10, 5)", "ten", True, None, float("inf")])
def test_costs_must_be_numbers(engine, cost):
    document = json.loads(DECISION_FILE.read_text(encoding="utf-8"))
    document["nodes"][-1]["costs"]["L1_IO0,D_L"] = cost
    with pytest.raises(StructureError) as caught:
        engine.parse_document(document)
    assert any("costs['L1_IO0,D_L'] must be a finite number" in error for error in caught.value.errors)


def test_fuzzy_costs_are_rejected(engine, decision_diagram):
    nodes = [NodeSpec(node.name, node.kind, node.space.labels if node.space else ()) for node in decision_diagram.nodes]
    tables = {node.name: node.table for node in decision_diagram.nodes if node.table is not None}
    costs = decision_diagram.value_node.costs
    entries = dict(costs.entries)
    entries[("L1_IO0", "D_L")] = FuzzyValue(350.0, 5.0, 5.0)
    with pytest.raises(StructureError) as caught:
        engine.build_validate(nodes, decision_diagram.arcs, tables, CostFunction(costs.parents, entries))
    assert any("fuzzy costs" in error and "L1_IO0" in error for error in caught.value.errors)


@pytest.mark.parametrize("label", ["a1,a2", " a1", "a1 ", ""])
def test_outcome_labels_must_be_plain(engine, label):
    document = chain_document()
    document["nodes"][0]["outcomes"] = [label, "a0"]
    document["nodes"][0]["table"] = {"a0": "1"}
    with pytest.raises(StructureError) as caught:
        engine.parse_document(document)
    assert any("hold commas or outer whitespace" in error and "nodes[0] (A)" in error for error in caught.value.errors)


def test_build_validate_rejects_comma_labels(engine):
    nodes = [NodeSpec("A", "chance", ("a1", "a,0")), NodeSpec("B", "decision", ("b1", "b0"))]
    with pytest.raises(StructureError) as caught:
        engine.build_validate(nodes, [], {})
    assert any("'a,0'" in error for error in caught.value.errors)

def test_reversible(engine, inference_diagram, decision_diagram):
    assert engine.reversible(inference_diagram, ("L", "S"))[0]
    assert engine.reversible(decision_diagram, ("L", "R"))[0]

    ok, reason = engine.reversible(decision_diagram, ("S", "D"))
    assert not ok and "decision" in reason

    ok, reason = engine.reversible(engine.parse_document(chain_document()), ("A", "C"))
    assert not ok and "cycle" in reason

    with pytest.raises(StructureError):
        engine.reversible(inference_diagram, ("S", "L"))


def test_missing_file(engine, tmp_path):
    with pytest.raises(ReportError):
        engine.parse_file(tmp_path / "missing.fid.json")


def test_malformed_json_reports_the_position(engine, tmp_path):
    path = tmp_path / "broken.fid.json"
    path.write_text('{"nodes": [\n  {"name": "A",}\n]}', encoding="utf-8")
    with pytest.raises(StructureError) as caught:
        engine.parse_file(path)
    assert "line 2" in caught.value.errors[0]


def test_write_then_parse(engine, decision_diagram, tmp_path):
    path = engine.write_file(decision_diagram, tmp_path / "copy.fid.json", "copy")
    assert json.loads(path.read_text(encoding="utf-8"))["description"] == "copy"
    again = engine.parse_file(path)
    assert engine.to_document(again) == engine.to_document(decision_diagram)


def test_transformed_diagrams_can_be_written(engine, inference_diagram, tmp_path):
    reversed_ = engine.reverse_arc(inference_diagram, ("IO", "S"))
    again = engine.parse_file(engine.write_file(reversed_, tmp_path / "reversed.fid.json"))
    assert again.node("IO").parents == ("L", "S")
    row = again.node("IO").table.row(("L1", "S0"))
    assert row["IO0"].mean == pytest.approx(1.0)


def test_fixture_file_matches_its_document(engine):
    document = json.loads(INFERENCE_FILE.read_text(encoding="utf-8"))
    assert engine.to_document(engine.parse_document(document)) == engine.to_document(engine.parse_file(INFERENCE_FILE))


def test_error_handling_helpers(engine, tmp_path, caplog):
    result = engine.with_error_handling(engine.parse_file, tmp_path / "missing.fid.json")
    assert result["error"] == "report_error"
    assert result["error_code"] == 2

    result = engine.with_error_handling(engine.parse_document, ["not", "an", "object"])
    assert result["error"] == "structure_error"

    @engine.log_errors(level=logging.WARNING)
    def load(path):
        return engine.parse_file(path)

    with pytest.raises(ReportError):
        load(tmp_path / "missing.fid.json")
    assert any("Error in load" in record.message for record in caplog.records)
