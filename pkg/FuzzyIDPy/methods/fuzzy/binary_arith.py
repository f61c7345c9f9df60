import operator
import typing
from typing import Union

from ...errors import FuzzyDomainError
from ...types import FuzzyProbability, FuzzyValue

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy

Fuzzy = Union[FuzzyProbability, FuzzyValue]

OPERATIONS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv
}


class BinaryArith:
    """Arithmetic on independent fuzzy operands."""

    def binary_arith(self: "FuzzyIDPy", kind: str, a: Union[Fuzzy, float], b: Union[Fuzzy, float]) -> Fuzzy:
        """Apply ``add``, ``sub``, ``mul`` or ``div`` to two independent fuzzy numbers.

        The mean of the result is the operation on the means. The nominal
        support is the range of the operation over the operands' nominal
        supports, and each side is re-linearized as one line from the mean to
        that endpoint. Two fuzzy probabilities give a fuzzy probability while
        the mean stays in [0, 1]; anything else gives a :obj:`FuzzyValue`.

        Operands that are constrained against each other (rows of one
        distribution, a joint and its marginal) must go through the diagram
        transformations instead.

        Parameters:
            kind (``str``):
                ``"add"``, ``"sub"``, ``"mul"`` or ``"div"``.

            a, b (:obj:`FuzzyProbability` | :obj:`FuzzyValue` | ``float``):
                Operands; plain numbers are crisp.

        Returns:
            :obj:`FuzzyProbability` | :obj:`FuzzyValue`: The result.

        Raises:
            FuzzyDomainError: For an unknown kind, or a divisor whose support contains 0.

        Example:
            .. code-block:: python

                engine = FuzzyIDPy()
                l1 = engine.parse_probability("(.03, 0.95, .03)")
                io1 = engine.parse_probability("(.03, 0.99, [.66])")
                joint = engine.binary_arith("mul", l1, io1)
                print(joint.nominal_support)   # (0.8832, 0.99902...)
        """
        try:
            op = OPERATIONS[kind]
        except KeyError:
            raise FuzzyDomainError(f"Unknown operation {kind!r}; expected one of {sorted(OPERATIONS)}")

        a = self._as_fuzzy(a, b)
        b = self._as_fuzzy(b, a)
        a_low, a_high = a.nominal_support
        b_low, b_high = b.nominal_support

        if kind == "div" and b_low <= 0.0 <= b_high:
            raise FuzzyDomainError(
                f"Division by {b.to_display()} whose support [{b_low}, {b_high}] contains 0"
            )

        mean = op(a.mean, b.mean)
        ends = [op(x, y) for x in (a_low, a_high) for y in (b_low, b_high)]
        lower = min(min(ends), mean)
        upper = max(max(ends), mean)

        self.logger.debug(f"{kind}({a}, {b}) -> mean {mean}, nominal support [{lower}, {upper}]")

        if isinstance(a, FuzzyProbability) and isinstance(b, FuzzyProbability) and 0.0 <= mean <= 1.0:
            return FuzzyProbability(mean, mean - lower, upper - mean)
        return FuzzyValue(mean, mean - lower, upper - mean)

    @staticmethod
    def _as_fuzzy(value, other) -> Fuzzy:
        if isinstance(value, (FuzzyProbability, FuzzyValue)):
            return value
        value = float(value)
        if isinstance(other, FuzzyProbability) and 0.0 <= value <= 1.0:
            return FuzzyProbability.crisp(value)
        return FuzzyValue.crisp(value)
