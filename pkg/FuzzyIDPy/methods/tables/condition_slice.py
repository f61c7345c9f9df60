import typing
from typing import Mapping, Sequence, Union

from ...errors import TableError
from ...types import ConditionalTable, FuzzyDistribution

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class ConditionSlice:
    """Rows of conditional tables."""

    def condition_slice(
        self: "FuzzyIDPy",
        table: ConditionalTable,
        config: Union[Sequence[str], Mapping[str, str], str]
    ) -> FuzzyDistribution:
        """The distribution of ``table`` at one parent configuration.

        ``config`` is a tuple of parent outcomes in declared order or a
        ``{parent: outcome}`` mapping.
        """
        if isinstance(config, Mapping):
            unknown = set(config) - set(table.parent_names)
            if unknown:
                raise TableError(f"{sorted(unknown)} are not parents of {table.child.name}")
            try:
                config = tuple(config[name] for name in table.parent_names)
            except KeyError as e:
                raise TableError(f"Configuration does not fix parent {e.args[0]} of {table.child.name}")
        return table.row(config)
