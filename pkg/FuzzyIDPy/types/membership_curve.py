from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np


@dataclass(frozen=True)
class ConsistentConfig:
    """One crisp perturbation of every fuzzy row of a diagram.

    Parameters:
        distributions (``dict``):
            ``(node, parent configuration)`` to a crisp distribution (tuple of
            probabilities in outcome order) that sums to 1.

        membership (``float``):
            Minimum membership of all perturbed probabilities.
    """

    distributions: Dict[Tuple[str, Tuple[str, ...]], Tuple[float, ...]]
    membership: float


@dataclass(frozen=True, eq=False)
class MembershipCurve:
    """Sampled membership function: per-bin supremum over the configurations landing in the bin.

    Parameters:
        lower (``float``), upper (``float``):
            Output interval covered by the bins.

        memberships (``numpy.ndarray``):
            Supremum membership per bin (0 for empty bins).

        counts (``numpy.ndarray``):
            Number of configurations per bin.

        observed_min (``float``), observed_max (``float``):
            Smallest and largest output reached by the sweep (the closed support).

        grid_n (``int``):
            Lattice points per free parameter used to build the curve.
    """

    lower: float
    upper: float
    memberships: np.ndarray
    counts: np.ndarray
    observed_min: float
    observed_max: float
    grid_n: int = 0

    @property
    def bins(self) -> int:
        return len(self.memberships)

    @property
    def width(self) -> float:
        return (self.upper - self.lower) / self.bins if self.bins else 0.0

    @property
    def centers(self) -> np.ndarray:
        if self.width == 0.0:
            return np.full(self.bins, self.lower)
        return self.lower + (np.arange(self.bins) + 0.5) * self.width

    @property
    def support(self) -> Tuple[float, float]:
        return self.observed_min, self.observed_max

    @property
    def peak(self) -> float:
        """Bin centre of the highest membership."""
        return float(self.centers[int(np.argmax(self.memberships))])

    def bin_of(self, x: float) -> int:
        if self.width == 0.0:
            return 0 if x == self.lower else -1
        if x < self.lower or x > self.upper:
            return -1
        return min(self.bins - 1, int((x - self.lower) / self.width))

    def membership_at(self, x: float) -> float:
        index = self.bin_of(x)
        return 0.0 if index < 0 else float(self.memberships[index])

    def __eq__(self, other) -> bool:
        if not isinstance(other, MembershipCurve):
            return NotImplemented
        return (
            self.lower == other.lower and self.upper == other.upper
            and self.observed_min == other.observed_min and self.observed_max == other.observed_max
            and np.array_equal(self.memberships, other.memberships)
            and np.array_equal(self.counts, other.counts)
        )

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "bins": self.bins,
            "support": [self.observed_min, self.observed_max],
            "grid_n": self.grid_n
        }


@dataclass(frozen=True)
class ClippedBand:
    """One side of a cost curve whose sampled membership stays high up to the support edge.

    This happens when a boundary membership (``[m]``) pins an input at its
    domain edge: the cost reaches its extreme with membership ``m`` instead
    of 0, which a triangular :obj:`FuzzyValue` cannot represent.

    Parameters:
        side (``str``):
            ``"left"`` or ``"right"``.

        lower (``float``), upper (``float``):
            The band, from the support edge to the engine mean.

        edge_membership (``float``):
            Sampled membership of the outermost non-empty bin.
    """

    side: str
    lower: float
    upper: float
    edge_membership: float

    def to_dict(self) -> dict:
        return {
            "side": self.side,
            "lower": self.lower,
            "upper": self.upper,
            "edge_membership": self.edge_membership
        }


@dataclass(frozen=True)
class AgreementReport:
    """Comparison of an engine result with an oracle curve.

    Parameters:
        support_deviation (``float``):
            Largest distance between matching support endpoints.

        membership_deviation (``float``):
            Largest pointwise membership difference over compared bins.

        compared_bins (``int``):
            Bins that entered the pointwise comparison.

        support_tolerance (``float``), membership_tolerance (``float``):
            The tolerances applied.

        clipped (``tuple`` of :obj:`ClippedBand`, optional):
            Bands left out of the pointwise comparison.
    """

    support_deviation: float
    membership_deviation: float
    compared_bins: int
    support_tolerance: float
    membership_tolerance: float
    engine_support: Tuple[float, float] = (0.0, 0.0)
    oracle_support: Tuple[float, float] = (0.0, 0.0)
    clipped: Tuple[ClippedBand, ...] = ()

    @property
    def support_ok(self) -> bool:
        return self.support_deviation <= self.support_tolerance

    @property
    def membership_ok(self) -> bool:
        return self.membership_deviation <= self.membership_tolerance

    @property
    def passed(self) -> bool:
        return self.support_ok and self.membership_ok

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "support": {
                "engine": list(self.engine_support),
                "oracle": list(self.oracle_support),
                "deviation": self.support_deviation,
                "tolerance": self.support_tolerance,
                "ok": self.support_ok
            },
            "membership": {
                "deviation": self.membership_deviation,
                "tolerance": self.membership_tolerance,
                "compared_bins": self.compared_bins,
                "ok": self.membership_ok
            },
            "clipped": [band.to_dict() for band in self.clipped]
        }
