from .fuzzy_probability import FuzzyProbability, CRISP, TYPE0, TYPE1, TYPE2, TYPE12
from .fuzzy_value import FuzzyValue
from .outcome_space import OutcomeSpace
from .fuzzy_distribution import FuzzyDistribution
from .conditional_table import ConditionalTable, configurations
from .joint_table import JointTable
from .validation_report import ValidationReport, Violation
from .cost_function import CostFunction
from .influence_diagram import InfluenceDiagram, Node, NodeSpec, CHANCE, DECISION, VALUE, NODE_KINDS
from .query import Query
from .op_counter import OpCounter
from .policy import Policy, MINIMIZE, MAXIMIZE
from .membership_curve import ConsistentConfig, MembershipCurve, AgreementReport, ClippedBand
from .sensitivity_report import (
    HalfIntersection, DifferenceDominance, SensitivityReport,
    LEFT, RIGHT, POSITIVE, NEGATIVE, MIXED
)
from .solver_report import SolverReport
from ..utils.formatting import Boundary

__all__ = [
    "FuzzyProbability", "FuzzyValue", "Boundary",
    "CRISP", "TYPE0", "TYPE1", "TYPE2", "TYPE12",
    "OutcomeSpace", "FuzzyDistribution", "ConditionalTable", "JointTable", "configurations",
    "ValidationReport", "Violation",
    "CostFunction", "InfluenceDiagram", "Node", "NodeSpec", "CHANCE", "DECISION", "VALUE", "NODE_KINDS",
    "Query", "OpCounter", "Policy", "MINIMIZE", "MAXIMIZE",
    "ConsistentConfig", "MembershipCurve", "AgreementReport", "ClippedBand",
    "HalfIntersection", "DifferenceDominance", "SensitivityReport",
    "LEFT", "RIGHT", "POSITIVE", "NEGATIVE", "MIXED",
    "SolverReport"
]
