import typing
from typing import Union

import numpy as np

from ...parameters import membership_array
from ...types import LEFT, RIGHT, AgreementReport, ClippedBand, FuzzyProbability, FuzzyValue, MembershipCurve

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy

SUPPORT_TOLERANCE = 0.02
MEMBERSHIP_TOLERANCE = 0.15
CLIP_BAND = 0.02


class Compare:
    """Engine against oracle."""

    def compare(
        self: "FuzzyIDPy",
        result: Union[FuzzyProbability, FuzzyValue],
        curve: MembershipCurve,
        support_tolerance: float = SUPPORT_TOLERANCE,
        membership_tolerance: float = MEMBERSHIP_TOLERANCE,
        band: float = CLIP_BAND
    ) -> AgreementReport:
        """Check an engine result against an oracle curve for the same expression.

        The support check compares both endpoints. The pointwise check
        compares the engine membership at every non-empty bin centre with the
        bin's sampled membership. For fuzzy probabilities, bins within
        ``band`` of 0 or 1 are left out because clipping makes the membership
        jump there. For costs, a side whose outermost sampled bin keeps a
        membership above the engine's by more than ``membership_tolerance``
        is reported as a :obj:`ClippedBand` and left out from the support
        edge to the mean; only the support endpoints are checked there.

        Parameters:
            result (:obj:`FuzzyProbability` | :obj:`FuzzyValue`):
                Engine answer.

            curve (:obj:`MembershipCurve`):
                Oracle answer.

            support_tolerance (``float``, optional):
                Largest accepted endpoint distance.

            membership_tolerance (``float``, optional):
                Largest accepted pointwise difference.

            band (``float``, optional):
                Width of the excluded zone at the domain edges.

        Returns:
            :obj:`AgreementReport`: Deviations and verdicts.

        Example:
            .. code-block:: python

                engine = FuzzyIDPy()
                posterior = engine.infer(diagram, Query("IO", {"S": "S0"}))
                curve = engine.ep_curve(diagram, "P(IO=IO0 | S=S0)", grid_n=201)
                print(engine.compare(posterior["IO0"], curve).passed)
        """
        engine_support = tuple(float(x) for x in result.support)
        oracle_support = curve.support
        support_deviation = max(abs(engine_support[0] - oracle_support[0]), abs(engine_support[1] - oracle_support[1]))

        centers = curve.centers
        compared = curve.counts > 0
        clipped = ()
        if isinstance(result, FuzzyProbability):
            compared &= (centers >= band) & (centers <= 1.0 - band)
        elif not result.is_crisp and curve.bins > 1:
            clipped = _clipped_bands(result, curve, membership_tolerance)
            for side in clipped:
                compared &= (centers >= result.mean) if side.side == LEFT else (centers <= result.mean)
        if compared.any():
            engine = membership_array(result, centers[compared])
            membership_deviation = float(np.max(np.abs(engine - curve.memberships[compared])))
        else:
            membership_deviation = 0.0

        report = AgreementReport(
            float(support_deviation),
            membership_deviation,
            int(compared.sum()),
            support_tolerance,
            membership_tolerance,
            engine_support,
            oracle_support,
            clipped
        )
        self.logger.info(
            f"Oracle agreement: support deviation {support_deviation:.4g}, "
            f"membership deviation {membership_deviation:.4g} over {report.compared_bins} bins"
        )
        for side in clipped:
            self.logger.info(
                f"Clipped {side.side} band [{side.lower:.6g}, {side.upper:.6g}] "
                f"with edge membership {side.edge_membership:.3g} left out of the pointwise check"
            )
        return report


def _clipped_bands(result: FuzzyValue, curve: MembershipCurve, membership_tolerance: float):
    filled = np.flatnonzero(curve.counts > 0)
    bands = []
    for side, index in ((LEFT, filled[0]), (RIGHT, filled[-1])):
        edge = float(curve.memberships[index])
        engine = float(membership_array(result, curve.centers[index:index + 1])[0])
        if edge - engine <= membership_tolerance:
            continue
        if side == LEFT:
            bands.append(ClippedBand(side, curve.observed_min, float(result.mean), edge))
        else:
            bands.append(ClippedBand(side, float(result.mean), curve.observed_max, edge))
    return tuple(bands)
