import re
from typing import Tuple, Union

from ..errors import TripletSyntaxError

_NUMBER = r"[+-]?(?:\d+\.?\d*|\.\d+)"
_SIDE = rf"(?:\[\s*(?P<{{name}}_b>{_NUMBER})\s*\]|(?P<{{name}}_n>{_NUMBER}))"

_TRIPLET_RE = re.compile(
    r"^\s*\(\s*"
    + _SIDE.format(name="left")
    + r"\s*,\s*(?P<mean>" + _NUMBER + r")\s*,\s*"
    + _SIDE.format(name="right")
    + r"\s*\)\s*$"
)
_CRISP_RE = re.compile(rf"^\s*(?P<mean>{_NUMBER})\s*$")


class Boundary(float):
    """Boundary membership of a triplet side, written ``[mu]`` in display form."""

    def __repr__(self) -> str:
        return f"[{format_number(self)}]"


def format_number(value: float, decimals: int = 10) -> str:
    """Format a number the way display triplets print it.

    Parameters:
        value (``float``):
            The number to format.

        decimals (``int``, optional):
            Maximum number of decimals. Defaults to 10.

    Returns:
        ``str``: Fixed-point text with trailing zeros stripped.

    Example:
        .. code-block:: python

            format_number(0.0300000)   # "0.03"
            format_number(226.0)       # "226"
    """
    text = f"{float(value):.{decimals}f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    if text in ("-0", ""):
        text = "0"
    return text


def format_side(value: Union[float, "Boundary"]) -> str:
    """Format one side of a triplet."""
    if isinstance(value, Boundary):
        return f"[{format_number(value)}]"
    return format_number(value)


def parse_triplet(text: str) -> Tuple[Union[float, Boundary], float, Union[float, Boundary]]:
    """Parse a display triplet.

    The grammar is ``FUZZY := '(' SIDE ',' NUMBER ',' SIDE ')' | NUMBER`` with
    ``SIDE := NUMBER | '[' NUMBER ']'``. Whitespace is ignored.

    Parameters:
        text (``str``):
            The triplet text, e.g. ``"([.66], 0.01, .03)"`` or ``"1"``.

    Returns:
        ``tuple``: ``(left, mean, right)``; bracketed sides are returned as
        :obj:`Boundary` floats, a bare number parses as ``(0.0, mean, 0.0)``.

    Raises:
        :obj:`TripletSyntaxError`: when the text does not follow the grammar.
    """
    if not isinstance(text, str):
        raise TripletSyntaxError(f"Triplet must be text, got {type(text).__name__}")

    match = _CRISP_RE.match(text)
    if match:
        return 0.0, float(match.group("mean")), 0.0

    match = _TRIPLET_RE.match(text)
    if not match:
        raise TripletSyntaxError(f"Malformed triplet: {text!r}", parameters={"text": text})

    sides = []
    for name in ("left", "right"):
        bracket = match.group(f"{name}_b")
        if bracket is not None:
            sides.append(Boundary(float(bracket)))
        else:
            sides.append(float(match.group(f"{name}_n")))

    return sides[0], float(match.group("mean")), sides[1]
