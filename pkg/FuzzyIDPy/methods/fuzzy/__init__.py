from .make import Make
from .membership_at import MembershipAt
from .complement import Complement
from .binary_arith import BinaryArith
from .alpha_cut import AlphaCut
from .triplets import Triplets


class FuzzyMethodsMixin(
    Make,
    MembershipAt,
    Complement,
    BinaryArith,
    AlphaCut,
    Triplets
):
    """Fuzzy number methods.

    This mixin includes construction, membership, complement, alpha-cuts,
    independent arithmetic and the display-triplet codec.
    """
    pass
