from dataclasses import dataclass
from typing import Tuple

from ..errors import FuzzyDomainError, TripletSyntaxError
from ..utils.formatting import Boundary, format_number, parse_triplet


@dataclass(frozen=True)
class FuzzyValue:
    """A fuzzy number on the real line with a linear membership function.

    Used for expected costs and cost differences.

    Parameters:
        mean (``float``):
            Point of membership 1, in the units of the quantity (e.g. dollars).

        left_nominal (``float``):
            Distance from the mean to the left zero-membership point.

        right_nominal (``float``):
            Distance from the mean to the right zero-membership point.
    """

    mean: float
    left_nominal: float = 0.0
    right_nominal: float = 0.0

    def __post_init__(self):
        left, right = float(self.left_nominal), float(self.right_nominal)
        if left < -1e-9 or right < -1e-9:
            raise FuzzyDomainError(f"Spreads must be nonnegative, got ({left}, {right})")
        object.__setattr__(self, "mean", float(self.mean))
        object.__setattr__(self, "left_nominal", max(0.0, left))
        object.__setattr__(self, "right_nominal", max(0.0, right))

    @classmethod
    def crisp(cls, value: float) -> "FuzzyValue":
        return cls(value, 0.0, 0.0)

    @classmethod
    def from_support(cls, lower: float, mean: float, upper: float) -> "FuzzyValue":
        """Linear fuzzy value through ``(lower, 0)``, ``(mean, 1)`` and ``(upper, 0)``."""
        return cls(mean, max(0.0, mean - lower), max(0.0, upper - mean))

    @classmethod
    def parse(cls, text: str) -> "FuzzyValue":
        """Parse ``"(26, 226, 78)"`` or a bare number."""
        left, mean, right = parse_triplet(text)
        if isinstance(left, Boundary) or isinstance(right, Boundary):
            raise TripletSyntaxError(f"Boundary memberships are not allowed for real-valued triplets: {text!r}")
        return cls(mean, left, right)

    @property
    def is_crisp(self) -> bool:
        return self.left_nominal == 0.0 and self.right_nominal == 0.0

    @property
    def support(self) -> Tuple[float, float]:
        return self.mean - self.left_nominal, self.mean + self.right_nominal

    nominal_support = support

    def membership_at(self, x: float) -> float:
        if x == self.mean:
            return 1.0
        if x < self.mean:
            if self.left_nominal <= 0.0:
                return 0.0
            return max(0.0, 1.0 - (self.mean - x) / self.left_nominal)
        if self.right_nominal <= 0.0:
            return 0.0
        return max(0.0, 1.0 - (x - self.mean) / self.right_nominal)

    def alpha_cut(self, alpha: float) -> Tuple[float, float]:
        if not (0.0 < alpha <= 1.0):
            raise FuzzyDomainError(f"Alpha must lie in (0, 1], got {alpha}; use support for alpha = 0")
        return (
            self.mean - (1.0 - alpha) * self.left_nominal,
            self.mean + (1.0 - alpha) * self.right_nominal
        )

    def affine(self, scale: float, shift: float = 0.0) -> "FuzzyValue":
        """Image under ``x -> scale * x + shift`` for ``scale > 0``."""
        if scale <= 0.0:
            raise FuzzyDomainError(f"Affine scale must be positive, got {scale}")
        return FuzzyValue(scale * self.mean + shift, scale * self.left_nominal, scale * self.right_nominal)

    def to_display(self) -> str:
        if self.is_crisp:
            return format_number(self.mean)
        return (
            f"({format_number(self.left_nominal)}, {format_number(self.mean)}, "
            f"{format_number(self.right_nominal)})"
        )

    def to_dict(self) -> dict:
        lower, upper = self.support
        return {
            "triplet": self.to_display(),
            "mean": self.mean,
            "left_nominal": self.left_nominal,
            "right_nominal": self.right_nominal,
            "support": [lower, upper]
        }

    def __str__(self) -> str:
        return self.to_display()
