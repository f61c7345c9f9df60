"""Parameter blocks: the fuzzy rows of the original diagram.

A block is one fuzzy distribution (one node, one parent configuration). Its
consistent perturbations form a polytope: the box of per-outcome intervals
intersected with the sum-to-one hyperplane.
"""
import itertools
import logging
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from .terms import Param, Term, TermBuilder
from .types import FuzzyDistribution, FuzzyProbability, FuzzyValue

log = logging.getLogger(__name__)

SUM_TOLERANCE = 1e-12


def membership_array(value: Union[FuzzyProbability, FuzzyValue], xs: np.ndarray) -> np.ndarray:
    """Vectorised ``membership_at`` of a fuzzy probability or fuzzy value."""
    xs = np.asarray(xs, dtype=float)
    mean = value.mean
    out = np.zeros_like(xs)
    if value.left_nominal > 0.0:
        out = np.where(xs < mean, 1.0 - (mean - xs) / value.left_nominal, out)
    if value.right_nominal > 0.0:
        out = np.where(xs > mean, 1.0 - (xs - mean) / value.right_nominal, out)
    out = np.where(xs == mean, 1.0, out)
    if isinstance(value, FuzzyProbability):
        out = np.where((xs < 0.0) | (xs > 1.0), 0.0, out)
    return np.clip(out, 0.0, 1.0)


def centred_lattice(lower: float, mean: float, upper: float, grid_n: int) -> np.ndarray:
    """Sorted lattice with ``(grid_n + 1) / 2`` points on each side of ``mean``."""
    half = (grid_n + 1) // 2
    points = np.concatenate((np.linspace(lower, mean, half), np.linspace(mean, upper, half)[1:]))
    return np.unique(points)


class Block:
    """Consistent perturbations of one fuzzy row.

    Parameters:
        index (``int``):
            Block id, also the position in :attr:`ParameterSpace.blocks`.

        node (``str``):
            Node the row belongs to.

        config (``tuple``):
            Parent configuration of the row.

        distribution (:obj:`FuzzyDistribution`):
            The fuzzy row.

        start (``int``):
            First parameter column of the block.
    """

    def __init__(self, index: int, node: str, config: Tuple[str, ...], distribution: FuzzyDistribution, start: int):
        self.index = index
        self.node = node
        self.config = config
        self.distribution = distribution
        self.columns = slice(start, start + len(distribution.probabilities))
        self.means = np.array(distribution.means, dtype=float)
        self._vertices: Dict[float, np.ndarray] = {}

    @property
    def size(self) -> int:
        return len(self.means)

    def intervals(self, alpha: float = 0.0) -> np.ndarray:
        """Per-outcome ``[lower, upper]`` at ``alpha`` (supports at 0), shape ``(k, 2)``."""
        if alpha <= 0.0:
            return np.array([p.support for p in self.distribution.probabilities], dtype=float)
        return np.array([p.alpha_cut(min(alpha, 1.0)) for p in self.distribution.probabilities], dtype=float)

    def vertices(self, alpha: float = 0.0) -> np.ndarray:
        """Vertices of the block polytope at ``alpha``, shape ``(m, k)``.

        A vertex fixes every outcome but one at an interval end and lets the
        remaining outcome take up the slack.
        """
        key = round(float(alpha), 15)
        if key in self._vertices:
            return self._vertices[key]
        bounds = self.intervals(alpha)
        k = self.size
        found = []
        for free in range(k):
            others = [j for j in range(k) if j != free]
            for corner in itertools.product((0, 1), repeat=k - 1):
                point = np.empty(k)
                for j, end in zip(others, corner):
                    point[j] = bounds[j, end]
                slack = 1.0 - point[others].sum()
                if bounds[free, 0] - 1e-12 <= slack <= bounds[free, 1] + 1e-12:
                    point[free] = min(max(slack, bounds[free, 0]), bounds[free, 1])
                    found.append(point)
        if found:
            vertices = np.unique(np.round(np.array(found), 15), axis=0)
        else:
            log.debug(f"Block {self.node}{list(self.config)} has an empty slice at alpha={alpha}, using its means")
            vertices = self.means[np.newaxis, :]
        self._vertices[key] = vertices
        return vertices

    def lattice(self, grid_n: int, alpha: float = 0.0) -> Tuple[np.ndarray, np.ndarray]:
        """Mean-centred lattice of consistent points and their memberships.

        The first ``k - 1`` outcomes are swept; the last one takes the slack
        and the point is kept only when the slack stays inside its interval.
        """
        bounds = self.intervals(alpha)
        axes = [
            centred_lattice(bounds[j, 0], self.means[j], bounds[j, 1], grid_n)
            for j in range(self.size - 1)
        ]
        free = np.array(list(itertools.product(*axes)), dtype=float).reshape(-1, self.size - 1)
        last = 1.0 - free.sum(axis=1)
        last = np.where(np.abs(last - self.means[-1]) <= SUM_TOLERANCE, self.means[-1], last)
        keep = (last >= bounds[-1, 0] - SUM_TOLERANCE) & (last <= bounds[-1, 1] + SUM_TOLERANCE)
        points = np.column_stack((free[keep], np.clip(last[keep], bounds[-1, 0], bounds[-1, 1])))
        memberships = np.min(
            np.column_stack([
                membership_array(p, points[:, j]) for j, p in enumerate(self.distribution.probabilities)
            ]),
            axis=1
        )
        return points, memberships

    def __repr__(self) -> str:
        return f"Block({self.index}, {self.node}, {list(self.config)})"


class ParameterSpace:
    """Every fuzzy row a working diagram depends on, laid out as parameter columns."""

    def __init__(self):
        self.blocks: List[Block] = []
        self.columns = 0

    def register(self, node: str, config: Tuple[str, ...], distribution: FuzzyDistribution,
                 builder: Optional[TermBuilder] = None) -> List[Term]:
        """Turn a row into terms: constants for a crisp row, parameters otherwise."""
        builder = builder or TermBuilder()
        if distribution.is_crisp:
            return [builder.const(mean) for mean in distribution.means]
        block = Block(len(self.blocks), node, tuple(config), distribution, self.columns)
        self.blocks.append(block)
        self.columns += block.size
        return [
            Param(block.columns.start + j, block.index, probability)
            for j, probability in enumerate(distribution.probabilities)
        ]

    def block(self, index: int) -> Block:
        return self.blocks[index]

    def mean_theta(self) -> np.ndarray:
        theta = np.zeros(self.columns)
        for block in self.blocks:
            theta[block.columns] = block.means
        return theta
