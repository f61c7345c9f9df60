from .formatting import Boundary, format_number, format_side, parse_triplet
from .expressions import CostExpr, ProbabilityExpr, parse_assignments, parse_expression

__all__ = [
    "Boundary",
    "format_number",
    "format_side",
    "parse_triplet",
    "CostExpr",
    "ProbabilityExpr",
    "parse_assignments",
    "parse_expression"
]
