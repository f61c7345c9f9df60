from .validate import Validate
from .product import Product
from .condition_slice import ConditionSlice


class TablesMethodsMixin(
    Validate,
    Product,
    ConditionSlice
):
    """Table methods.

    This mixin includes validation of the normalization and spread
    constraints, the fuzzy product rule and row slicing.
    """
    pass
