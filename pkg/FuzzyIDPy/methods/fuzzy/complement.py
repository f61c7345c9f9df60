import typing

from ...types import FuzzyProbability

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class Complement:
    """Complementary events."""

    def complement(self: "FuzzyIDPy", probability: FuzzyProbability) -> FuzzyProbability:
        """Fuzzy probability of the complementary event.

        The mean is reflected and the spreads swap sides, so a type1 value
        becomes type2 and vice versa.
        """
        return probability.complement()
