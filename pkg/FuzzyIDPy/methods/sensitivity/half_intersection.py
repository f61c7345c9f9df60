import typing
from typing import Optional, Tuple

from ...errors import FuzzyDomainError
from ...types import LEFT, RIGHT, FuzzyValue

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


def _line(value: FuzzyValue, side: str) -> Tuple[float, float]:
    """``(endpoint, slope)`` of ``x(alpha) = endpoint + alpha * slope`` for one half."""
    if side == LEFT:
        return value.mean - value.left_nominal, value.left_nominal
    return value.mean + value.right_nominal, -value.right_nominal


class HalfIntersect:
    """Crossings of same-side membership halves."""

    def half_intersection(
        self: "FuzzyIDPy",
        first: FuzzyValue,
        second: FuzzyValue,
        side: str
    ) -> Optional[Tuple[float, float]]:
        """Where the ``side`` halves of two fuzzy values cross.

        Each half is written as ``x(alpha) = endpoint + alpha * (mean - endpoint)``,
        so vertical halves of crisp values need no special case.

        Parameters:
            first, second (:obj:`FuzzyValue`):
                The two fuzzy values.

            side (``str``):
                ``"left"`` or ``"right"``.

        Returns:
            ``tuple`` | ``None``: ``(x, alpha)`` when the halves cross at a
            membership in (0, 1]; ``(mean, 1)`` for identical halves; ``None``
            for parallel distinct halves or crossings outside (0, 1].

        Example:
            .. code-block:: python

                engine = FuzzyIDPy()
                m = FuzzyValue(226, 26, 78)
                n = FuzzyValue(285, 50, 15)
                engine.half_intersection(m, n, "right")   # (299.05..., 0.0635...)
        """
        if side not in (LEFT, RIGHT):
            raise FuzzyDomainError(f"Side must be {LEFT!r} or {RIGHT!r}, got {side!r}")
        first_end, first_slope = _line(first, side)
        second_end, second_slope = _line(second, side)
        if abs(first_slope - second_slope) <= self.tolerance:
            if abs(first_end - second_end) <= self.tolerance:
                return first.mean, 1.0
            return None
        alpha = (second_end - first_end) / (first_slope - second_slope)
        if alpha <= self.tolerance or alpha > 1.0 + self.tolerance:
            return None
        alpha = min(alpha, 1.0)
        return first_end + alpha * first_slope, alpha
