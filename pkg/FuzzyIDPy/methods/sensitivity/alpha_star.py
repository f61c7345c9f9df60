import typing
from typing import List, Mapping, Sequence, Tuple, Union

from ...errors import FuzzyDomainError
from ...types import LEFT, MAXIMIZE, MINIMIZE, RIGHT, FuzzyValue, HalfIntersection

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy

Alternatives = Union[Sequence[FuzzyValue], Mapping[str, FuzzyValue]]


class AlphaStar:
    """The largest same-side crossing membership."""

    def alpha_star(self: "FuzzyIDPy", alternatives: Alternatives, objective: str = None) -> float:
        """Sensitivity of a decision to the fuzziness of its expected values.

        For two alternatives this is the largest membership at which their
        left halves or their right halves cross, 0 when none do. With more
        alternatives each one is compared with the mean-optimal alternative.
        A small value means the point-estimate decision holds with
        possibility at least ``1 - alpha_star``.

        Parameters:
            alternatives (``list`` | ``dict``):
                At least two :obj:`FuzzyValue` (optionally keyed by name).

            objective (``str``, optional):
                Which mean is optimal; defaults to the client's.

        Returns:
            ``float``: alpha* in [0, 1].
        """
        _, crossings = self.crossings(alternatives, objective)
        return max((c.alpha for c in crossings), default=0.0)

    def crossings(
        self: "FuzzyIDPy",
        alternatives: Alternatives,
        objective: str = None
    ) -> Tuple[str, List[HalfIntersection]]:
        """The mean-optimal alternative and its crossings with every other one."""
        named = self._named(alternatives)
        if len(named) < 2:
            raise FuzzyDomainError(f"alpha* needs at least two alternatives, got {len(named)}")
        reference = self.reference(named, objective)
        found = []
        for name, value in named.items():
            if name == reference:
                continue
            for side in (LEFT, RIGHT):
                hit = self.half_intersection(named[reference], value, side)
                if hit is not None:
                    found.append(HalfIntersection(reference, name, side, hit[0], hit[1]))
        return reference, found

    def reference(self: "FuzzyIDPy", alternatives: Alternatives, objective: str = None) -> str:
        named = self._named(alternatives)
        objective = objective or self.objective
        if objective not in (MINIMIZE, MAXIMIZE):
            raise ValueError(f"Objective must be {MINIMIZE!r} or {MAXIMIZE!r}, got {objective!r}")
        pick = min if objective == MINIMIZE else max
        return pick(named, key=lambda name: named[name].mean)

    @staticmethod
    def _named(alternatives: Alternatives) -> dict:
        if isinstance(alternatives, Mapping):
            return dict(alternatives)
        return {str(i): value for i, value in enumerate(alternatives)}
