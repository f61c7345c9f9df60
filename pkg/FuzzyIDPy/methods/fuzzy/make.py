import typing
from typing import Union

from ...types import Boundary, FuzzyProbability

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class Make:
    """Create fuzzy probabilities."""

    def make(
        self: "FuzzyIDPy",
        left_spec: Union[float, Boundary],
        mean: float,
        right_spec: Union[float, Boundary]
    ) -> FuzzyProbability:
        """Create a fuzzy probability from its display sides.

        Each side is either a spread magnitude or, wrapped in :obj:`Boundary`,
        the membership of the domain edge on that side.

        Parameters:
            left_spec (``float`` | :obj:`Boundary`):
                Left spread, or the membership at probability 0.

            mean (``float``):
                The mean, in [0, 1].

            right_spec (``float`` | :obj:`Boundary`):
                Right spread, or the membership at probability 1.

        Returns:
            :obj:`FuzzyProbability`: The canonical fuzzy probability.

        Example:
            .. code-block:: python

                engine = FuzzyIDPy()
                io_failed = engine.make(Boundary(0.66), 0.01, 0.03)
                print(io_failed.kind)   # type2
        """
        return FuzzyProbability.make(left_spec, mean, right_spec)
