from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, List, Optional

from .fuzzy_value import FuzzyValue

if TYPE_CHECKING:
    from .membership_curve import MembershipCurve

LEFT = "left"
RIGHT = "right"

POSITIVE = "positive"
NEGATIVE = "negative"
MIXED = "mixed"


@dataclass(frozen=True)
class HalfIntersection:
    """Crossing of two same-side membership lines.

    Parameters:
        first (``str``), second (``str``):
            Alternatives whose halves cross.

        side (``str``):
            ``"left"`` or ``"right"``.

        x (``float``):
            Value at the crossing.

        alpha (``float``):
            Membership at the crossing.
    """

    first: str
    second: str
    side: str
    x: float
    alpha: float

    def to_dict(self) -> dict:
        return {"pair": [self.first, self.second], "side": self.side, "x": self.x, "alpha": self.alpha}


@dataclass(frozen=True)
class DifferenceDominance:
    """Verdict on the sign of ``cost(first) - cost(second)`` over consistent perturbations.

    Parameters:
        first (``str``), second (``str``):
            The compared alternatives.

        verdict (``str``):
            ``"positive"``, ``"negative"`` or ``"mixed"``.

        curve (:obj:`MembershipCurve`):
            Membership curve of the difference.
    """

    first: str
    second: str
    verdict: str
    curve: "MembershipCurve"

    def to_dict(self) -> dict:
        lower, upper = self.curve.support
        return {
            "pair": [self.first, self.second],
            "verdict": self.verdict,
            "difference_support": [lower, upper],
            "grid_n": self.curve.grid_n
        }


@dataclass(frozen=True)
class SensitivityReport:
    """Sensitivity of a decision to the fuzziness of its probabilities.

    Parameters:
        alternatives (``dict``):
            Alternative to fuzzy expected value.

        reference (``str``):
            The mean-optimal alternative the others are compared against.

        intersections (``list``):
            Every same-side crossing found, as :obj:`HalfIntersection`.

        alpha_star (``float``):
            Largest crossing membership, 0 when no halves cross.

        deterministic_dominance (``dict``):
            ``"first<=second"`` keys to ``bool``: first's support lies entirely
            at or below second's.

        overlap_possibility (``float``):
            Height of the intersection of the reference with its closest rival
            (the conventional possibility measure), reported as a diagnostic only.

        difference (:obj:`DifferenceDominance`, optional):
            Difference-membership verdict when it was requested.
    """

    alternatives: Dict[str, FuzzyValue]
    reference: str
    intersections: List[HalfIntersection]
    alpha_star: float
    deterministic_dominance: Dict[str, bool] = field(default_factory=dict)
    overlap_possibility: float = 0.0
    difference: Optional[DifferenceDominance] = None

    @property
    def possibility(self) -> float:
        """Possibility that the mean-based decision is optimal unconditionally."""
        return 1.0 - self.alpha_star

    def to_dict(self) -> dict:
        data = {
            "alternatives": {alt: value.to_dict() for alt, value in self.alternatives.items()},
            "reference": self.reference,
            "alpha_star": self.alpha_star,
            "possibility": self.possibility,
            "intersections": [i.to_dict() for i in self.intersections],
            "deterministic_dominance": dict(self.deterministic_dominance),
            "diagnostics": {"overlap_possibility": self.overlap_possibility}
        }
        if self.difference is not None:
            data["difference_dominance"] = self.difference.to_dict()
        return data
