from .client import FuzzyIDPy
from .errors import (
    FuzzyIDError,
    TripletSyntaxError,
    FuzzyDomainError,
    TableError,
    StructureError,
    TransformationError,
    QueryError,
    OracleError,
    ReportError
)
from .types import (
    Boundary,
    FuzzyProbability,
    FuzzyValue,
    OutcomeSpace,
    FuzzyDistribution,
    ConditionalTable,
    CostFunction,
    NodeSpec,
    InfluenceDiagram,
    Query,
    Policy,
    SensitivityReport,
    MembershipCurve
)

__version__ = "0.1.0"
__author__ = "FuzzyIDPy Team"
__license__ = "MIT"
__copyright__ = f"Copyright 2024 {__author__}"

__all__ = [
    "FuzzyIDPy",
    "FuzzyIDError",
    "TripletSyntaxError",
    "FuzzyDomainError",
    "TableError",
    "StructureError",
    "TransformationError",
    "QueryError",
    "OracleError",
    "ReportError",
    "Boundary",
    "FuzzyProbability",
    "FuzzyValue",
    "OutcomeSpace",
    "FuzzyDistribution",
    "ConditionalTable",
    "CostFunction",
    "NodeSpec",
    "InfluenceDiagram",
    "Query",
    "Policy",
    "SensitivityReport",
    "MembershipCurve"
]
