from dataclasses import dataclass
from typing import Tuple, Union

from ..errors import FuzzyDomainError
from ..utils.formatting import Boundary, format_number, format_side, parse_triplet

TOLERANCE = 1e-9

CRISP = "crisp"
TYPE0 = "type0"
TYPE1 = "type1"
TYPE2 = "type2"
TYPE12 = "type12"

SideSpec = Union[float, Boundary]


@dataclass(frozen=True)
class FuzzyProbability:
    """A Bayesian fuzzy probability with a linear membership function on [0, 1].

    The value is stored as its mean plus the nominal spreads, the distances
    from the mean to the points where the membership lines reach zero. A
    nominal spread may reach past 0 or 1; clipping to the domain happens when
    the value is queried and leaves a nonzero membership at the domain edge.

    Parameters:
        mean (``float``):
            The unique point of membership 1, in [0, 1].

        left_nominal (``float``):
            Nominal left spread, >= 0.

        right_nominal (``float``):
            Nominal right spread, >= 0.
    """

    mean: float
    left_nominal: float = 0.0
    right_nominal: float = 0.0

    def __post_init__(self):
        mean = float(self.mean)
        if not (-TOLERANCE <= mean <= 1.0 + TOLERANCE):
            raise FuzzyDomainError(f"Fuzzy probability mean {mean} lies outside [0, 1]")
        left, right = float(self.left_nominal), float(self.right_nominal)
        if left < -TOLERANCE or right < -TOLERANCE:
            raise FuzzyDomainError(f"Spreads must be nonnegative, got ({left}, {right})")
        object.__setattr__(self, "mean", min(1.0, max(0.0, mean)))
        object.__setattr__(self, "left_nominal", max(0.0, left))
        object.__setattr__(self, "right_nominal", max(0.0, right))

    @classmethod
    def crisp(cls, value: float) -> "FuzzyProbability":
        """Create a crisp probability."""
        return cls(value, 0.0, 0.0)

    @classmethod
    def make(cls, left_spec: SideSpec, mean: float, right_spec: SideSpec) -> "FuzzyProbability":
        """Create a fuzzy probability from display-style sides.

        Parameters:
            left_spec (``float`` | :obj:`Boundary`):
                Left spread magnitude, or the membership at probability 0.

            mean (``float``):
                The mean, in [0, 1].

            right_spec (``float`` | :obj:`Boundary`):
                Right spread magnitude, or the membership at probability 1.

        Returns:
            :obj:`FuzzyProbability`: The canonical value.

        Example:
            .. code-block:: python

                io_failed = FuzzyProbability.make(Boundary(0.66), 0.01, 0.03)
                io_failed.membership_at(0.0)   # 0.66
        """
        mean = float(mean)
        if not (0.0 <= mean <= 1.0):
            raise FuzzyDomainError(f"Mean {mean} lies outside [0, 1]")
        left = cls._nominal(left_spec, mean, "left")
        right = cls._nominal(right_spec, 1.0 - mean, "right")
        return cls(mean, left, right)

    @staticmethod
    def _nominal(spec: SideSpec, room: float, side: str) -> float:
        if isinstance(spec, Boundary):
            mu = float(spec)
            if mu >= 1.0 or mu < 0.0:
                raise FuzzyDomainError(f"Boundary membership [{mu}] on the {side} side must lie in [0, 1)")
            if room <= 0.0:
                raise FuzzyDomainError(
                    f"Boundary membership given on the {side} side, but the mean sits on that domain edge"
                )
            return room / (1.0 - mu)
        spread = float(spec)
        if spread < 0.0:
            raise FuzzyDomainError(f"Spread on the {side} side must be nonnegative, got {spread}")
        return spread

    @classmethod
    def parse(cls, text: str) -> "FuzzyProbability":
        """Parse a display triplet such as ``"([.66], 0.01, .03)"`` or ``"1"``."""
        left, mean, right = parse_triplet(text)
        return cls.make(left, mean, right)

    @classmethod
    def _parse(cls, data) -> "FuzzyProbability":
        """Parse a fuzzy probability from a triplet string, number or dictionary."""
        if isinstance(data, cls):
            return data
        if isinstance(data, str):
            return cls.parse(data)
        if isinstance(data, (int, float)):
            return cls.crisp(float(data))
        if isinstance(data, dict):
            return cls(
                mean=data.get("mean"),
                left_nominal=data.get("left_nominal", 0.0),
                right_nominal=data.get("right_nominal", 0.0)
            )
        raise FuzzyDomainError(f"Cannot read a fuzzy probability from {type(data).__name__}")

    @property
    def is_crisp(self) -> bool:
        return self.left_nominal <= TOLERANCE and self.right_nominal <= TOLERANCE

    @property
    def nominal_support(self) -> Tuple[float, float]:
        """Unclipped support, possibly reaching below 0 or above 1."""
        return self.mean - self.left_nominal, self.mean + self.right_nominal

    @property
    def support(self) -> Tuple[float, float]:
        return max(0.0, self.mean - self.left_nominal), min(1.0, self.mean + self.right_nominal)

    @property
    def boundary_left(self) -> float:
        """Membership at probability 0."""
        return self.membership_at(0.0)

    @property
    def boundary_right(self) -> float:
        """Membership at probability 1."""
        return self.membership_at(1.0)

    @property
    def kind(self) -> str:
        """Classification: crisp, type0, type1, type2 or type12 (both edges nonzero)."""
        if self.is_crisp:
            return CRISP
        at_zero = self.boundary_left > 0.0
        at_one = self.boundary_right > 0.0
        if at_zero and at_one:
            return TYPE12
        if at_one:
            return TYPE1
        if at_zero:
            return TYPE2
        return TYPE0

    def membership_at(self, x: float) -> float:
        """Membership degree of probability ``x``; 0 outside [0, 1]."""
        if x < 0.0 or x > 1.0:
            return 0.0
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
        """Closed interval of probabilities with membership >= ``alpha``."""
        if not (0.0 < alpha <= 1.0):
            raise FuzzyDomainError(f"Alpha must lie in (0, 1], got {alpha}; use support for alpha = 0")
        lower = self.mean - (1.0 - alpha) * self.left_nominal
        upper = self.mean + (1.0 - alpha) * self.right_nominal
        return max(0.0, lower), min(1.0, upper)

    def complement(self) -> "FuzzyProbability":
        """Fuzzy probability of the complementary event."""
        return FuzzyProbability(1.0 - self.mean, self.right_nominal, self.left_nominal)

    def display_sides(self) -> Tuple[SideSpec, SideSpec]:
        """Sides as printed: boundary memberships where the nominal line is clipped."""
        left: SideSpec = self.left_nominal
        right: SideSpec = self.right_nominal
        if self.mean > 0.0 and self.left_nominal > self.mean:
            left = Boundary(1.0 - self.mean / self.left_nominal)
        if self.mean < 1.0 and self.right_nominal > 1.0 - self.mean:
            right = Boundary(1.0 - (1.0 - self.mean) / self.right_nominal)
        return left, right

    def to_display(self) -> str:
        """Display triplet, e.g. ``"([0.66], 0.01, 0.03)"``; crisp values print as a number."""
        if self.left_nominal == 0.0 and self.right_nominal == 0.0:
            return format_number(self.mean)
        left, right = self.display_sides()
        return f"({format_side(left)}, {format_number(self.mean)}, {format_side(right)})"

    def to_dict(self) -> dict:
        """Convert the fuzzy probability to a dictionary."""
        lower, upper = self.support
        return {
            "triplet": self.to_display(),
            "mean": self.mean,
            "left_nominal": self.left_nominal,
            "right_nominal": self.right_nominal,
            "support": [lower, upper],
            "kind": self.kind,
            "membership_at_0": self.boundary_left,
            "membership_at_1": self.boundary_right
        }

    def __str__(self) -> str:
        return self.to_display()
