"""Constrained extremization of terms over the parameter-block polytopes."""
import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from .parameters import ParameterSpace
from .terms import Const, Param, Term, evaluate
from .types import FuzzyProbability, FuzzyValue, OpCounter

VERTEX = "vertex"
GRID = "grid"
STRATEGIES = (VERTEX, GRID)

MAX_SWEEPS = 64


class Extremizer:
    """Turns terms into fuzzy numbers.

    The mean is the term at the block means. Support endpoints are the term's
    extremes over the product of block polytopes: every vertex combination
    when there are at most ``vertex_limit`` of them, otherwise a coordinate
    search that moves one block at a time. A support endpoint that reaches a
    domain edge gets its boundary membership by bisection on alpha.

    Parameters:
        space (:obj:`ParameterSpace`):
            The blocks terms are built over.

        strategy (``str``, optional):
            ``"vertex"`` (default) or ``"grid"`` (coordinate search over a
            lattice of ``grid_points`` per free parameter).

        vertex_limit (``int``, optional):
            Largest vertex combination count searched exhaustively.

        grid_points (``int``, optional):
            Lattice size of the ``grid`` strategy.

        bisection_steps (``int``, optional):
            Bisection steps for boundary memberships.

        tolerance (``float``, optional):
            Absolute tolerance for comparisons with the domain edges.

        counter (:obj:`OpCounter`, optional):
            Receives evaluation and comparison counts.
    """

    def __init__(self, space: ParameterSpace, strategy: str = VERTEX, vertex_limit: int = 4096,
                 grid_points: int = 33, bisection_steps: int = 48, tolerance: float = 1e-9,
                 counter: OpCounter = None):
        if strategy not in STRATEGIES:
            raise ValueError(f"Unknown extremization strategy {strategy!r}; expected one of {STRATEGIES}")
        self.space = space
        self.strategy = strategy
        self.vertex_limit = vertex_limit
        self.grid_points = grid_points
        self.bisection_steps = bisection_steps
        self.tolerance = tolerance
        self.counter = counter if counter is not None else OpCounter()
        self.logger = logging.getLogger(__name__)
        self._mean_theta = space.mean_theta()

    def mean(self, term: Term) -> float:
        if isinstance(term, Const):
            return term.value
        return float(evaluate(term, self._mean_theta[np.newaxis, :])[0])

    def _candidates(self, index: int, alpha: float) -> np.ndarray:
        block = self.space.block(index)
        if self.strategy == GRID:
            return block.lattice(self.grid_points, alpha)[0]
        return block.vertices(alpha)

    def extremes(self, term: Term, alpha: float = 0.0) -> Tuple[float, float]:
        """Smallest and largest defined value of ``term`` over the polytopes at ``alpha``.

        Returns ``(nan, nan)`` when the term is undefined everywhere.
        """
        blocks = sorted(term.blocks())
        if not blocks:
            value = self.mean(term)
            return value, value
        candidates = [self._candidates(index, alpha) for index in blocks]
        total = math.prod(len(c) for c in candidates)
        if self.strategy == VERTEX and total <= self.vertex_limit:
            values = self._exhaustive(term, blocks, candidates, total)
            self.counter.tally(comparisons=2 * total, evaluations=total)
            if np.all(np.isnan(values)):
                return math.nan, math.nan
            return float(np.nanmin(values)), float(np.nanmax(values))
        self.logger.debug(
            f"Coordinate search over {len(blocks)} blocks ({total} combinations, strategy {self.strategy})"
        )
        return self._coordinate(term, blocks, candidates, 1.0), self._coordinate(term, blocks, candidates, -1.0)

    def _exhaustive(self, term: Term, blocks: List[int], candidates: List[np.ndarray], total: int) -> np.ndarray:
        picks = np.indices([len(c) for c in candidates]).reshape(len(candidates), total)
        theta = np.tile(self._mean_theta, (total, 1))
        for index, choices, pick in zip(blocks, candidates, picks):
            theta[:, self.space.block(index).columns] = choices[pick]
        return evaluate(term, theta)

    def _coordinate(self, term: Term, blocks: List[int], candidates: List[np.ndarray], sign: float) -> float:
        theta = self._mean_theta.copy()
        best = sign * self.mean(term)
        if math.isnan(best):
            best = math.inf
        for _ in range(MAX_SWEEPS):
            improved = False
            for index, choices in zip(blocks, candidates):
                rows = np.tile(theta, (len(choices), 1))
                rows[:, self.space.block(index).columns] = choices
                values = sign * evaluate(term, rows)
                values = np.where(np.isnan(values), math.inf, values)
                self.counter.tally(comparisons=len(choices), evaluations=len(choices))
                pick = int(np.argmin(values))
                if values[pick] < best - 1e-15:
                    best = float(values[pick])
                    theta = rows[pick]
                    improved = True
            if not improved:
                break
        return math.nan if math.isinf(best) else sign * best

    def edge_membership(self, term: Term, left: bool) -> float:
        """Largest alpha at which the term can still reach 0 (``left``) or 1."""
        low, high = 0.0, 1.0
        for _ in range(self.bisection_steps):
            alpha = (low + high) / 2.0
            lower, upper = self.extremes(term, alpha)
            reaches = lower <= self.tolerance if left else upper >= 1.0 - self.tolerance
            if reaches:
                low = alpha
            else:
                high = alpha
        self.logger.debug(f"Boundary membership at {'0' if left else '1'}: {low:.6f}")
        return low

    def _spread(self, term: Term, mean: float, end: float, left: bool) -> float:
        gap = abs(mean - end)
        if gap <= self.tolerance:
            return 0.0
        room = mean if left else 1.0 - mean
        if room - gap > self.tolerance:
            return gap
        mu = self.edge_membership(term, left)
        if mu >= 1.0 - self.tolerance:
            return gap
        return room / (1.0 - mu)

    def fuzzy_probability(self, term: Term) -> Optional[FuzzyProbability]:
        """Fuzzy probability of a term; ``None`` when the term is undefined at the means."""
        if isinstance(term, Param) and isinstance(term.source, FuzzyProbability):
            return term.source
        mean = self.mean(term)
        if math.isnan(mean):
            return None
        mean = min(1.0, max(0.0, mean))
        if isinstance(term, Const):
            return FuzzyProbability.crisp(mean)
        lower, upper = self.extremes(term)
        lower = mean if math.isnan(lower) else max(0.0, min(lower, mean))
        upper = mean if math.isnan(upper) else min(1.0, max(upper, mean))
        return FuzzyProbability(
            mean,
            self._spread(term, mean, lower, left=True),
            self._spread(term, mean, upper, left=False)
        )

    def fuzzy_value(self, term: Term) -> Optional[FuzzyValue]:
        """Fuzzy value of a term; ``None`` when the term is undefined at the means."""
        mean = self.mean(term)
        if math.isnan(mean):
            return None
        if isinstance(term, Const):
            return FuzzyValue.crisp(mean)
        lower, upper = self.extremes(term)
        lower = mean if math.isnan(lower) else min(lower, mean)
        upper = mean if math.isnan(upper) else max(upper, mean)
        return FuzzyValue.from_support(lower, mean, upper)
