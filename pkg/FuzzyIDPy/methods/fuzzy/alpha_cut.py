import typing
from typing import Tuple, Union

from ...types import FuzzyProbability, FuzzyValue

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class AlphaCut:
    """Alpha-cuts."""

    def alpha_cut(self: "FuzzyIDPy", value: Union[FuzzyProbability, FuzzyValue], alpha: float) -> Tuple[float, float]:
        """Closed interval where the membership is at least ``alpha``.

        Parameters:
            value (:obj:`FuzzyProbability` | :obj:`FuzzyValue`):
                The fuzzy number.

            alpha (``float``):
                Level in (0, 1]; use ``support`` for level 0.

        Returns:
            ``tuple``: Lower and upper end, clipped to [0, 1] for fuzzy probabilities.
        """
        return value.alpha_cut(float(alpha))
