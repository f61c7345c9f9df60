import json
import math
from dataclasses import dataclass, field
from typing import Any, Dict

FORMAT_VERSION = 1


def _clean(value):
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return None
        return value
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    if hasattr(value, "item"):
        return _clean(value.item())
    return value


@dataclass
class SolverReport:
    """Machine readable result of one command.

    Parameters:
        command (``str``):
            The command that produced the report.

        sections (``dict``):
            Named result blocks (``query``, ``distribution``, ``policy``,
            ``sensitivity``, ``op_counter``, ``oracle``, ...).
    """

    command: str
    sections: Dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, content: Any) -> "SolverReport":
        self.sections[name] = content
        return self

    def to_dict(self) -> dict:
        data = {"command": self.command, "format_version": FORMAT_VERSION}
        data.update(self.sections)
        return _clean(data)

    def to_json(self) -> str:
        """Byte-deterministic JSON text (sorted keys, two-space indentation)."""
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
