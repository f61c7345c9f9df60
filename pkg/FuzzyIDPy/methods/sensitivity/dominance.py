import typing

from ...types import FuzzyValue

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class Dominance:
    """Support-based comparisons."""

    def deterministic_dominance(self: "FuzzyIDPy", first: FuzzyValue, second: FuzzyValue) -> bool:
        """True when every possible value of ``first`` is at most every possible value of ``second``."""
        return first.support[1] <= second.support[0]

    def overlap_possibility(self: "FuzzyIDPy", first: FuzzyValue, second: FuzzyValue) -> float:
        """Height of the intersection of two fuzzy values.

        This is the conventional possibility measure: the lower value's right
        half against the higher value's left half. It is reported as a
        diagnostic next to alpha*.
        """
        if first.mean == second.mean:
            return 1.0
        low, high = (first, second) if first.mean < second.mean else (second, first)
        reach = low.right_nominal + high.left_nominal
        if reach <= 0.0:
            return 0.0
        return max(0.0, 1.0 - (high.mean - low.mean) / reach)
