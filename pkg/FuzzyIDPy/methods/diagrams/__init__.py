from .build_validate import BuildValidate
from .reversible import Reversible, check_reversible


class DiagramsMethodsMixin(
    BuildValidate,
    Reversible
):
    """Diagram methods.

    This mixin includes assembling validated influence diagrams and checking
    the arc reversal precondition.
    """
    pass
