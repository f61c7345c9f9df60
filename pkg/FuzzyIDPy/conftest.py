from pathlib import Path

import pytest

from FuzzyIDPy import FuzzyIDPy

FIXTURES = Path(__file__).parent / "fixtures"
INFERENCE_FILE = FIXTURES / "assembly_inference.fid.json"
DECISION_FILE = FIXTURES / "assembly_decision.fid.json"


@pytest.fixture
def engine():
    return FuzzyIDPy(workers=1)


@pytest.fixture
def inference_diagram(engine):
    return engine.parse_file(INFERENCE_FILE)


@pytest.fixture
def decision_diagram(engine):
    return engine.parse_file(DECISION_FILE)
