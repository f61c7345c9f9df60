from .reverse_arc import ReverseArc
from .sum_out_chance import SumOutChance
from .absorb_into_value import AbsorbIntoValue
from .infer import Infer
from .decide import Decide
from .crisp_evaluate import CrispEvaluate


class TransformsMethodsMixin(
    ReverseArc,
    SumOutChance,
    AbsorbIntoValue,
    Infer,
    Decide,
    CrispEvaluate
):
    """Influence diagram transformations and solvers.

    This mixin includes arc reversal, chance node removal, expectation into
    the value node, posterior inference, decision solving and the crisp
    reference evaluator.
    """
    pass
