import itertools
import typing
from typing import Iterable, Iterator, List, Optional, Tuple

import numpy as np

from ...errors import OracleError
from ...parameters import Block
from ...types import ConsistentConfig, InfluenceDiagram

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy

Lattice = Tuple[str, Tuple[str, ...], np.ndarray, np.ndarray]


class EnumerateConfigs:
    """Consistent perturbations of a whole diagram."""

    def enumerate_configs(self: "FuzzyIDPy", diagram: InfluenceDiagram, grid_n: int = None) -> Iterator[ConsistentConfig]:
        """Every combination of lattice points of the diagram's fuzzy rows.

        Each fuzzy row is swept on a lattice of ``grid_n`` points per free
        probability, centred so that the row means are lattice points. Crisp
        rows stay at their values. The order is deterministic.

        Parameters:
            diagram (:obj:`InfluenceDiagram`):
                The diagram.

            grid_n (``int``, optional):
                Odd lattice size, at least 3; defaults to ``oracle_grid``.

        Yields:
            :obj:`ConsistentConfig`: One crisp diagram and its membership.
        """
        grid_n = self._grid(grid_n)
        lattices = self._lattices(diagram, grid_n)
        fixed = {
            (node.name, config): tuple(row.means)
            for node in diagram.chance_nodes for config, row in node.table.rows.items()
            if row.is_crisp
        }
        for picks in itertools.product(*(range(len(points)) for _, _, points, _ in lattices)):
            distributions = dict(fixed)
            membership = 1.0
            for (node, config, points, memberships), pick in zip(lattices, picks):
                distributions[(node, config)] = tuple(float(p) for p in points[pick])
                membership = min(membership, float(memberships[pick]))
            yield ConsistentConfig(distributions, membership)

    def _grid(self: "FuzzyIDPy", grid_n: Optional[int]) -> int:
        grid_n = self.oracle_grid if grid_n is None else int(grid_n)
        if grid_n < 3 or grid_n % 2 == 0:
            raise OracleError(f"Grid size must be odd and at least 3 so that means are grid points, got {grid_n}")
        return grid_n

    def _lattices(self: "FuzzyIDPy", diagram: InfluenceDiagram, grid_n: int,
                  names: Optional[Iterable[str]] = None) -> List[Lattice]:
        names = set(diagram.names if names is None else names)
        lattices = []
        for node in diagram.chance_nodes:
            if node.name not in names:
                continue
            for config, row in node.table.rows.items():
                if row.is_crisp:
                    continue
                points, memberships = Block(len(lattices), node.name, config, row, 0).lattice(grid_n)
                lattices.append((node.name, config, points, memberships))
        return lattices
