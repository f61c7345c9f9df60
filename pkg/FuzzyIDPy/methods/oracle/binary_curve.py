import typing
from typing import Union

import numpy as np

from ...errors import FuzzyDomainError
from ...parameters import centred_lattice, membership_array
from ...types import FuzzyProbability, FuzzyValue, MembershipCurve
from ..fuzzy.binary_arith import OPERATIONS, BinaryArith

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy

Fuzzy = Union[FuzzyProbability, FuzzyValue]


class BinaryCurve:
    """Grid extension principle for one independent operation."""

    def binary_curve(
        self: "FuzzyIDPy",
        kind: str,
        a: Union[Fuzzy, float],
        b: Union[Fuzzy, float],
        grid_n: int = None,
        bins: int = None
    ) -> MembershipCurve:
        """Sampled membership curve of ``a <kind> b`` for independent operands.

        Both operands are swept over their supports on mean-centred lattices;
        every pair contributes the smaller of the two memberships to the bin of
        its result.

        Parameters:
            kind (``str``):
                ``"add"``, ``"sub"``, ``"mul"`` or ``"div"``.

            a, b (:obj:`FuzzyProbability` | :obj:`FuzzyValue` | ``float``):
                Operands.

            grid_n (``int``, optional):
                Odd lattice size per operand; defaults to ``oracle_grid``.

            bins (``int``, optional):
                Number of output bins; defaults to ``oracle_bins``.

        Returns:
            :obj:`MembershipCurve`: The sampled curve.
        """
        if kind not in OPERATIONS:
            raise FuzzyDomainError(f"Unknown operation {kind!r}; expected one of {sorted(OPERATIONS)}")
        grid_n = self._grid(grid_n)
        a = BinaryArith._as_fuzzy(a, b)
        b = BinaryArith._as_fuzzy(b, a)
        if kind == "div" and b.support[0] <= 0.0 <= b.support[1]:
            raise FuzzyDomainError(f"Division by {b.to_display()} whose support contains 0")

        xs, x_membership = self._operand(a, grid_n)
        ys, y_membership = self._operand(b, grid_n)
        x_grid, y_grid = np.meshgrid(xs, ys, indexing="ij")
        values = OPERATIONS[kind](x_grid, y_grid).ravel()
        memberships = np.minimum.outer(x_membership, y_membership).ravel()
        self.logger.info(f"Oracle sweep of {kind} over {values.size} operand pairs")
        return self._bin(values, memberships, bins or self.oracle_bins, grid_n)

    @staticmethod
    def _operand(value: Fuzzy, grid_n: int):
        lower, upper = value.support
        points = centred_lattice(lower, value.mean, upper, grid_n)
        return points, membership_array(value, points)
