import typing
from typing import Union

from ...types import FuzzyProbability, FuzzyValue

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class MembershipAt:
    """Membership degrees."""

    def membership_at(self: "FuzzyIDPy", value: Union[FuzzyProbability, FuzzyValue], x: float) -> float:
        """Membership of ``x`` in a fuzzy probability or fuzzy value.

        Fuzzy probabilities give 0 outside [0, 1].
        """
        return value.membership_at(float(x))
