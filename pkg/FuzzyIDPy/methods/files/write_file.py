import json
import typing
from pathlib import Path
from typing import Union

from ...errors import ReportError
from ...types import InfluenceDiagram

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy


class WriteFile:
    """Diagram documents back to disk."""

    def to_document(self: "FuzzyIDPy", diagram: InfluenceDiagram, description: str = None) -> dict:
        """The diagram as a document that :meth:`parse_document` reads back."""
        nodes = []
        for node in diagram.nodes:
            entry = {"name": node.name, "kind": node.kind}
            if node.space is not None:
                entry["outcomes"] = list(node.space.labels)
            entry["parents"] = list(node.parents)
            if node.table is not None:
                entry["table"] = node.table.to_dict()
            if node.costs is not None:
                entry["costs"] = node.costs.to_dict()
            nodes.append(entry)
        document = {"nodes": nodes}
        if description:
            document["description"] = description
        return document

    def write_file(
        self: "FuzzyIDPy",
        diagram: InfluenceDiagram,
        path: Union[str, Path],
        description: str = None
    ) -> Path:
        """Write a diagram, for example a transformed one, as a ``.fid.json`` file.

        Parameters:
            diagram (:obj:`InfluenceDiagram`):
                The diagram.

            path (``str`` | ``Path``):
                Destination.

            description (``str``, optional):
                Free text stored with the document.

        Returns:
            ``Path``: The written path.

        Example:
            .. code-block:: python

                reversed_ = engine.reverse_arc(diagram, ("L", "S"))
                engine.write_file(reversed_, "reversed.fid.json")
        """
        path = Path(path)
        text = json.dumps(self.to_document(diagram, description), indent=2, ensure_ascii=False) + "\n"
        try:
            path.write_text(text, encoding="utf-8")
        except OSError as e:
            raise ReportError(f"Cannot write {path}: {e}")
        self.logger.info(f"Wrote {diagram} to {path}")
        return path
