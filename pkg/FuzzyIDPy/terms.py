"""Symbolic table entries.

Transformations never compute fuzzy numbers from fuzzy numbers. Every table
cell of a working diagram is a term over the crisp parameters of the original
fuzzy rows; a term can be evaluated at the means (the point estimate) or at
many perturbed parameter vectors at once, which is what the extremizer and
the verifier need.
"""
import math
from functools import reduce
from typing import Dict, FrozenSet, Optional, Tuple

import numpy as np

from .types import OpCounter


class Term:
    """Base class of expression nodes.

    ``evaluate`` receives ``theta`` of shape ``(points, columns)`` and returns
    either a float (for constants) or an array of shape ``(points,)``.
    """

    __slots__ = ("_blocks",)

    operands: Tuple["Term", ...] = ()

    def blocks(self) -> FrozenSet[int]:
        """Ids of the parameter blocks the term depends on."""
        try:
            return self._blocks
        except AttributeError:
            found = frozenset().union(*(op.blocks() for op in self.operands)) if self.operands else frozenset()
            self._blocks = found
            return found

    def _compute(self, values):
        raise NotImplementedError

    def ops(self) -> Tuple[int, int, int]:
        """Additions, multiplications and divisions of this node alone."""
        return 0, 0, 0


class Const(Term):
    __slots__ = ("value",)

    def __init__(self, value: float):
        self.value = float(value)

    def blocks(self) -> FrozenSet[int]:
        return frozenset()

    def __repr__(self) -> str:
        return f"Const({self.value})"


class Param(Term):
    """Probability of one outcome in one fuzzy row."""

    __slots__ = ("column", "block", "source")

    def __init__(self, column: int, block: int, source=None):
        self.column = column
        self.block = block
        self.source = source

    def blocks(self) -> FrozenSet[int]:
        return frozenset((self.block,))

    def __repr__(self) -> str:
        return f"Param({self.column})"


class Sum(Term):
    __slots__ = ("operands",)

    def __init__(self, operands):
        self.operands = tuple(operands)

    def _compute(self, values):
        return reduce(np.add, values)

    def ops(self):
        return len(self.operands) - 1, 0, 0


class Product(Term):
    """Product with an exact zero factor forcing 0, even against an undefined factor."""

    __slots__ = ("operands",)

    def __init__(self, operands):
        self.operands = tuple(operands)

    def _compute(self, values):
        result = reduce(np.multiply, values)
        zero = reduce(np.logical_or, (np.equal(v, 0.0) for v in values))
        return np.where(zero, 0.0, result)

    def ops(self):
        return 0, len(self.operands) - 1, 0


class Ratio(Term):
    """Quotient that is undefined (NaN) where the denominator vanishes."""

    __slots__ = ("operands",)

    def __init__(self, numerator: Term, denominator: Term):
        self.operands = (numerator, denominator)

    def _compute(self, values):
        numerator, denominator = values
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(np.equal(denominator, 0.0), np.nan, np.divide(numerator, denominator))

    def ops(self):
        return 0, 0, 1


ZERO = Const(0.0)
ONE = Const(1.0)


def evaluate(term: Term, theta: np.ndarray, cache: Optional[Dict[int, object]] = None) -> np.ndarray:
    """Evaluate ``term`` at every row of ``theta``."""
    theta = np.atleast_2d(theta)
    if cache is None:
        cache = {}
    value = _evaluate(term, theta, cache)
    return np.broadcast_to(np.asarray(value, dtype=float), (theta.shape[0],)).copy()


def _evaluate(term: Term, theta: np.ndarray, cache: Dict[int, object]):
    key = id(term)
    if key in cache:
        return cache[key]
    if isinstance(term, Const):
        value = term.value
    elif isinstance(term, Param):
        value = theta[:, term.column]
    else:
        value = term._compute([_evaluate(op, theta, cache) for op in term.operands])
    cache[key] = value
    return value


def count_ops(terms, counter: OpCounter) -> OpCounter:
    """Add the arithmetic of every distinct node reachable from ``terms``."""
    seen = set()
    stack = list(terms)
    while stack:
        term = stack.pop()
        if id(term) in seen:
            continue
        seen.add(id(term))
        additions, multiplications, divisions = term.ops()
        counter.tally(additions, multiplications, divisions)
        stack.extend(term.operands)
    return counter


class TermBuilder:
    """Builds terms with constant folding and tallies the arithmetic it creates.

    Parameters:
        counter (:obj:`OpCounter`, optional):
            Receives the additions, multiplications and divisions of every
            node the builder creates.
    """

    def __init__(self, counter: OpCounter = None):
        self.counter = counter if counter is not None else OpCounter()

    def const(self, value: float) -> Term:
        if value == 0.0:
            return ZERO
        if value == 1.0:
            return ONE
        return Const(value)

    def add(self, *terms: Term) -> Term:
        constant = 0.0
        rest = []
        for term in terms:
            if isinstance(term, Const):
                constant += term.value
            else:
                rest.append(term)
        if constant != 0.0 or not rest:
            rest.append(self.const(constant))
        if len(rest) == 1:
            return rest[0]
        self.counter.tally(additions=len(rest) - 1)
        return Sum(rest)

    def mul(self, *terms: Term) -> Term:
        constant = 1.0
        rest = []
        for term in terms:
            if isinstance(term, Const):
                if term.value == 0.0:
                    return ZERO
                constant *= term.value
            else:
                rest.append(term)
        if constant != 1.0 or not rest:
            rest.append(self.const(constant))
        if len(rest) == 1:
            return rest[0]
        self.counter.tally(multiplications=len(rest) - 1)
        return Product(rest)

    def div(self, numerator: Term, denominator: Term) -> Term:
        if isinstance(numerator, Const) and numerator.value == 0.0:
            return ZERO
        if isinstance(denominator, Const):
            if denominator.value == 1.0:
                return numerator
            if isinstance(numerator, Const):
                if denominator.value == 0.0:
                    return Const(math.nan)
                return self.const(numerator.value / denominator.value)
        self.counter.tally(divisions=1)
        return Ratio(numerator, denominator)
