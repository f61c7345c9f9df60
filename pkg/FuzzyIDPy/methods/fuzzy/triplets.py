import typing
from typing import Union

from ...types import FuzzyProbability, FuzzyValue

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class Triplets:
    """Display triplets."""

    def parse_probability(self: "FuzzyIDPy", text: str) -> FuzzyProbability:
        """Parse ``"(l, m, r)"`` where a side may be a bracketed boundary membership."""
        return FuzzyProbability.parse(text)

    def parse_value(self: "FuzzyIDPy", text: str) -> FuzzyValue:
        """Parse a real-valued triplet such as ``"(26, 226, 78)"``."""
        return FuzzyValue.parse(text)

    def to_display(self: "FuzzyIDPy", value: Union[FuzzyProbability, FuzzyValue]) -> str:
        return value.to_display()
