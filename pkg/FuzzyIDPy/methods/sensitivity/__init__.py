from .half_intersection import HalfIntersect
from .alpha_star import AlphaStar
from .dominance import Dominance
from .difference_dominance import DifferenceDominanceCheck
from .sensitivity import Sensitivity


class SensitivityMethodsMixin(
    HalfIntersect,
    AlphaStar,
    Dominance,
    DifferenceDominanceCheck,
    Sensitivity
):
    """Sensitivity methods.

    This mixin includes half-line crossings, alpha*, support and difference
    dominance, and the combined report.
    """
    pass
