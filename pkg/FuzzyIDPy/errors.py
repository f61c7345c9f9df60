"""Exception hierarchy shared by every FuzzyIDPy module."""
from typing import Dict, List

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_SOLVER = 3
EXIT_USAGE = 64


class FuzzyIDError(Exception):
    """Base class for FuzzyIDPy errors.

    Parameters:
        description (``str``):
            Human readable description of the problem.

        error_code (``int``, optional):
            Exit code the command line uses for this error.

        parameters (``dict``, optional):
            Extra context (node names, offending rows, ...).
    """
    default_code = EXIT_SOLVER

    def __init__(self, description: str, error_code: int = None, parameters: Dict = None):
        self.description = description
        self.error_code = self.default_code if error_code is None else error_code
        self.parameters = parameters or {}
        super().__init__(f"[{self.error_code}] {description}")


class TripletSyntaxError(FuzzyIDError):
    """Raised when a display triplet does not follow the triplet grammar"""
    default_code = EXIT_INVALID


class FuzzyDomainError(FuzzyIDError):
    """Raised for values outside the domain of a fuzzy operation"""
    default_code = EXIT_INVALID


class TableError(FuzzyIDError):
    """Raised when a table is addressed or combined inconsistently"""
    default_code = EXIT_INVALID


class StructureError(FuzzyIDError):
    """Raised when a diagram fails structural validation.

    All collected problems are kept in ``errors``.
    """
    default_code = EXIT_INVALID

    def __init__(self, description: str, errors: List[str] = None, error_code: int = None):
        self.errors = list(errors or [])
        super().__init__(description, error_code, {"errors": self.errors})


class TransformationError(FuzzyIDError):
    """Raised when a transformation precondition does not hold"""


class QueryError(FuzzyIDError):
    """Raised for queries a diagram cannot answer"""


class OracleError(FuzzyIDError):
    """Raised when the brute force verifier cannot run"""


class ReportError(FuzzyIDError):
    """Raised when a document cannot be read or written"""
    default_code = EXIT_INVALID


