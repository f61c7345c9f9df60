import logging
import platform

from .derivation import WorkingDiagram
from .extremizer import STRATEGIES, Extremizer
from .methods import Methods
from .parameters import ParameterSpace
from .types import MAXIMIZE, MINIMIZE, InfluenceDiagram, OpCounter


class FuzzyIDPy(Methods):
    """FuzzyIDPy Client - fuzzy influence diagram engine

    This is the main class for building, transforming and solving influence
    diagrams whose probabilities are fuzzy numbers. Every operation is a
    method contributed by one of the category mixins.

    Parameters:
        tolerance (``float``, optional):
            Absolute tolerance for sums, domain edges and line crossings.
            Defaults to 1e-9.

        vertex_limit (``int``, optional):
            Largest number of vertex combinations searched exhaustively before
            the extremizer switches to coordinate search. Defaults to 4096.

        grid_points (``int``, optional):
            Lattice size of the ``grid`` extremization strategy. Defaults to 33.

        extremization (``str``, optional):
            ``"vertex"`` or ``"grid"``. Defaults to ``"vertex"``.

        bisection_steps (``int``, optional):
            Bisection steps for boundary memberships. Defaults to 48.

        objective (``str``, optional):
            ``"minimize"`` (costs) or ``"maximize"`` (utilities). Defaults to
            ``"minimize"``.

        oracle_grid (``int``, optional):
            Default oracle lattice size per free probability; odd. Defaults to 101.

        oracle_bins (``int``, optional):
            Default number of oracle curve bins. Defaults to 256.

        workers (``int``, optional):
            Number of worker threads for oracle sweeps. Defaults to 4.
    """

    APP_VERSION = "FuzzyIDPy 0.1.0"
    SYSTEM_VERSION = f"{platform.python_implementation()} {platform.python_version()}"

    def __init__(
        self,
        tolerance: float = 1e-9,
        vertex_limit: int = 4096,
        grid_points: int = 33,
        extremization: str = "vertex",
        bisection_steps: int = 48,
        objective: str = MINIMIZE,
        oracle_grid: int = 101,
        oracle_bins: int = 256,
        workers: int = 4
    ):
        super().__init__()

        if not (0.0 < tolerance < 1e-2):
            raise ValueError(f"Tolerance must lie in (0, 0.01), got {tolerance}")
        if vertex_limit < 1:
            raise ValueError(f"Vertex limit must be positive, got {vertex_limit}")
        if grid_points < 3:
            raise ValueError(f"The extremization grid needs at least 3 points, got {grid_points}")
        if extremization not in STRATEGIES:
            raise ValueError(f"Extremization must be one of {STRATEGIES}, got {extremization!r}")
        if bisection_steps < 1:
            raise ValueError(f"Bisection steps must be positive, got {bisection_steps}")
        if objective not in (MINIMIZE, MAXIMIZE):
            raise ValueError(f"Objective must be {MINIMIZE!r} or {MAXIMIZE!r}, got {objective!r}")
        if oracle_grid < 3 or oracle_grid % 2 == 0:
            raise ValueError(f"Oracle grid must be odd and at least 3, got {oracle_grid}")
        if oracle_bins < 1:
            raise ValueError(f"Oracle bins must be positive, got {oracle_bins}")
        if workers < 1:
            raise ValueError(f"Workers must be positive, got {workers}")

        self.tolerance = tolerance
        self.vertex_limit = vertex_limit
        self.grid_points = grid_points
        self.extremization = extremization
        self.bisection_steps = bisection_steps
        self.objective = objective
        self.oracle_grid = oracle_grid
        self.oracle_bins = oracle_bins
        self.workers = workers

        # Setup logging
        self.logger = logging.getLogger(__name__)

    def _extremizer(self, space: ParameterSpace, counter: OpCounter = None) -> Extremizer:
        return Extremizer(
            space,
            strategy=self.extremization,
            vertex_limit=self.vertex_limit,
            grid_points=self.grid_points,
            bisection_steps=self.bisection_steps,
            tolerance=self.tolerance,
            counter=counter
        )

    def _materialize(self, work: WorkingDiagram, source: InfluenceDiagram) -> InfluenceDiagram:
        """Fuzzy tables for a working diagram; op counts land in ``work.fuzzy_counter``."""
        extremizer = self._extremizer(work.space)
        diagram = work.materialize(extremizer, source)
        work.fuzzy_counter = work.counter.scaled(3).merge(extremizer.counter)
        self.logger.debug(f"Materialized {diagram} after {work.history[-1:] or 'no steps'}")
        return diagram

    def __repr__(self) -> str:
        return (
            f"FuzzyIDPy(extremization={self.extremization!r}, objective={self.objective!r}, "
            f"oracle_grid={self.oracle_grid}, workers={self.workers})"
        )
