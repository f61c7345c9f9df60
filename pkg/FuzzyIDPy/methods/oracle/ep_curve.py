import math
import typing
from typing import Callable, Iterable, Tuple, Union

import numpy as np

from ... import crisp
from ...dispatcher import Dispatcher
from ...errors import OracleError, QueryError
from ...types import InfluenceDiagram, MembershipCurve, Query
from ...utils import CostExpr, ProbabilityExpr, parse_expression
from ..transforms.helpers import check_evidence

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy

CHUNK_SIZE = 1 << 14
MAX_CONFIGS = 50_000_000

Expression = Union[ProbabilityExpr, CostExpr, str]


class EpCurve:
    """Brute-force extension-principle curves."""

    def ep_curve(
        self: "FuzzyIDPy",
        diagram: InfluenceDiagram,
        expression: Expression,
        grid_n: int = None,
        bins: int = None
    ) -> MembershipCurve:
        """Membership curve of a posterior cell or an expected cost by grid sampling.

        Every consistent configuration of the relevant fuzzy rows is evaluated
        crisply; its membership (the smallest membership of its perturbed
        probabilities) goes to the bin of the result, and each bin keeps the
        supremum. This is the constrained extension principle on a grid.

        Parameters:
            diagram (:obj:`InfluenceDiagram`):
                The diagram.

            expression (:obj:`ProbabilityExpr` | :obj:`CostExpr` | ``str``):
                ``P(T=t | ...)`` or ``E(D=d | ...)``.

            grid_n (``int``, optional):
                Odd lattice size per free probability; defaults to ``oracle_grid``.

            bins (``int``, optional):
                Number of output bins; defaults to ``oracle_bins``.

        Returns:
            :obj:`MembershipCurve`: The sampled curve.

        Example:
            .. code-block:: python

                engine = FuzzyIDPy()
                diagram = engine.parse_file("assembly_inference.fid.json")
                curve = engine.ep_curve(diagram, "P(IO=IO0 | S=S0)", grid_n=201)
                print(curve.support, curve.membership_at(0.0))
        """
        if isinstance(expression, str):
            expression = parse_expression(expression)
        functional, names = self._functional(diagram, expression)
        grid_n = self._grid(grid_n)
        values, memberships = self._sweep(diagram, functional, grid_n, names)
        return self._bin(values, memberships, bins or self.oracle_bins, grid_n)

    def _functional(self: "FuzzyIDPy", diagram: InfluenceDiagram, expression) -> Tuple[Callable, set]:
        if isinstance(expression, ProbabilityExpr):
            query = Query(expression.target, expression.evidence)
            if expression.target not in diagram:
                raise QueryError(f"Unknown node {expression.target!r}")
            diagram.space(expression.target).index(expression.outcome)
            check_evidence(diagram, query.evidence)
            names = crisp.relevant_nodes(diagram, [query.target, *query.given])
            return (lambda tables: crisp.posterior(diagram, query, tables)[expression.outcome]), names
        if isinstance(expression, CostExpr):
            decision = diagram.node(expression.decision)
            if not decision.is_decision:
                raise QueryError(f"{expression.decision} is not a decision node")
            decision.space.index(expression.alternative)
            given = check_evidence(diagram, expression.evidence)
            value = diagram.value_node
            if value is None:
                raise QueryError("The diagram has no value node")
            names = crisp.relevant_nodes(diagram, [value.name, *given])
            return (lambda tables: crisp.expected_costs(diagram, given, tables)[expression.alternative]), names
        raise QueryError(f"Cannot build a curve for {expression!r}")

    def _sweep(
        self: "FuzzyIDPy",
        diagram: InfluenceDiagram,
        functional: Callable,
        grid_n: int,
        names: Iterable[str]
    ) -> Tuple[np.ndarray, np.ndarray]:
        lattices = self._lattices(diagram, grid_n, names)
        sizes = [len(points) for _, _, points, _ in lattices]
        total = math.prod(sizes)
        if total > MAX_CONFIGS:
            raise OracleError(f"{total} configurations exceed the limit of {MAX_CONFIGS}; use a coarser grid")
        self.logger.info(f"Oracle sweep over {total} configurations ({len(lattices)} fuzzy rows, grid {grid_n})")
        base = crisp.mean_tables(diagram)

        def evaluate(start: int) -> Tuple[np.ndarray, np.ndarray]:
            index = np.arange(start, min(start + CHUNK_SIZE, total))
            picks = np.unravel_index(index, sizes) if sizes else ()
            tables = {name: dict(rows) for name, rows in base.items()}
            membership = np.ones(len(index))
            for (node, config, points, memberships), pick in zip(lattices, picks):
                chosen = points[pick]
                tables[node][config] = [chosen[:, j] for j in range(chosen.shape[1])]
                membership = np.minimum(membership, memberships[pick])
            values = np.broadcast_to(np.asarray(functional(tables), dtype=float), index.shape)
            return np.array(values), membership

        with Dispatcher(self, self.workers) as dispatcher:
            parts = dispatcher.map(evaluate, range(0, total, CHUNK_SIZE))
        return np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts])

    def _bin(self: "FuzzyIDPy", values: np.ndarray, memberships: np.ndarray, bins: int, grid_n: int) -> MembershipCurve:
        if bins < 1:
            raise OracleError(f"Bin count must be positive, got {bins}")
        defined = np.isfinite(values)
        values, memberships = values[defined], memberships[defined]
        if not len(values):
            raise OracleError("No configuration gives a defined result")
        lower, upper = float(values.min()), float(values.max())
        if upper - lower <= 1e-12:
            return MembershipCurve(
                lower, lower, np.array([memberships.max()]), np.array([len(values)]), lower, lower, grid_n
            )
        width = (upper - lower) / bins
        index = np.minimum(((values - lower) / width).astype(int), bins - 1)
        peaks = np.zeros(bins)
        np.maximum.at(peaks, index, memberships)
        counts = np.bincount(index, minlength=bins)
        return MembershipCurve(lower, upper, peaks, counts, lower, upper, grid_n)
