from .enumerate_configs import EnumerateConfigs
from .ep_curve import EpCurve
from .binary_curve import BinaryCurve
from .compare import Compare


class OracleMethodsMixin(
    EnumerateConfigs,
    EpCurve,
    BinaryCurve,
    Compare
):
    """Brute-force verification methods.

    This mixin includes consistent-configuration enumeration, grid
    extension-principle curves and the engine/oracle comparison.
    """
    pass
