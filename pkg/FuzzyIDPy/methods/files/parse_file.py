import json
import math
import typing
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from ...errors import FuzzyIDError, ReportError, StructureError
from ...types import (
    CHANCE, NODE_KINDS, VALUE,
    ConditionalTable, CostFunction, FuzzyDistribution, FuzzyProbability, FuzzyValue,
    InfluenceDiagram, NodeSpec, OutcomeSpace, configurations
)

if typing.TYPE_CHECKING:
    from ...client import FuzzyIDPy

DOCUMENT_KEYS = {"nodes", "description"}
NODE_KEYS = {"name", "kind", "outcomes", "parents", "table", "costs"}


class ParseFile:
    """Diagram documents."""

    def parse_file(self: "FuzzyIDPy", path: Union[str, Path]) -> InfluenceDiagram:
        """Read and validate a ``.fid.json`` diagram file.

        Parameters:
            path (``str`` | ``Path``):
                UTF-8 JSON document with a ``nodes`` list.

        Returns:
            :obj:`InfluenceDiagram`: The validated diagram.

        Raises:
            ReportError: If the file cannot be read.
            StructureError: For malformed JSON, unknown fields, bad triplets or
            failed validation; ``errors`` lists every problem with its location.

        Example:
            .. code-block:: python

                engine = FuzzyIDPy()
                diagram = engine.parse_file("FuzzyIDPy/fixtures/assembly_inference.fid.json")
        """
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise ReportError(f"Cannot read {path}: {e}")
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            problem = f"{path.name}: line {e.lineno} column {e.colno}: {e.msg}"
            raise StructureError(f"Malformed document {problem}", [problem])
        self.logger.info(f"Parsing {path}")
        return self.parse_document(data, path.name)

    def parse_document(self: "FuzzyIDPy", data: Any, source: str = "document") -> InfluenceDiagram:
        """Build a diagram from an already decoded document."""
        errors: List[str] = []
        if not isinstance(data, Mapping):
            raise StructureError(f"{source}: the document must be an object", [f"{source}: not an object"])
        for key in sorted(set(data) - DOCUMENT_KEYS):
            errors.append(f"{source}: unknown field {key!r}")
        entries = data.get("nodes")
        if not isinstance(entries, list):
            errors.append(f"{source}: 'nodes' must be a list")
            entries = []

        declared: List[Tuple[str, dict]] = []
        for index, entry in enumerate(entries):
            where = f"{source}: nodes[{index}]"
            if not isinstance(entry, Mapping):
                errors.append(f"{where}: must be an object")
                continue
            name = entry.get("name")
            if not isinstance(name, str) or not name:
                errors.append(f"{where}: 'name' must be a nonempty string")
                continue
            where = f"{where} ({name})"
            for key in sorted(set(entry) - NODE_KEYS):
                errors.append(f"{where}: unknown field {key!r}")
            if entry.get("kind") not in NODE_KINDS:
                errors.append(f"{where}: 'kind' must be one of {list(NODE_KINDS)}")
                continue
            declared.append((where, dict(entry)))

        spaces: Dict[str, OutcomeSpace] = {}
        specs: List[NodeSpec] = []
        for where, entry in declared:
            outcomes = entry.get("outcomes", [])
            if not isinstance(outcomes, list) or not all(isinstance(o, str) for o in outcomes):
                errors.append(f"{where}: 'outcomes' must be a list of strings")
                continue
            specs.append(NodeSpec(entry["name"], entry["kind"], tuple(outcomes)))
            if entry["kind"] != VALUE:
                try:
                    spaces[entry["name"]] = OutcomeSpace(entry["name"], tuple(outcomes))
                except FuzzyIDError as e:
                    errors.append(f"{where}: {e.description}")

        arcs: List[Tuple[str, str]] = []
        tables: Dict[str, ConditionalTable] = {}
        costs: Optional[CostFunction] = None
        for where, entry in declared:
            name = entry["name"]
            parents = entry.get("parents", [])
            if not isinstance(parents, list) or not all(isinstance(p, str) for p in parents):
                errors.append(f"{where}: 'parents' must be a list of node names")
                continue
            arcs.extend((parent, name) for parent in parents)
            if "table" in entry and entry["kind"] != CHANCE:
                errors.append(f"{where}: only chance nodes have a 'table'")
            if "costs" in entry and entry["kind"] != VALUE:
                errors.append(f"{where}: only the value node has 'costs'")
            unknown = [p for p in parents if p not in spaces]
            if unknown:
                errors.append(f"{where}: unknown or outcome-less parents {unknown}")
                continue
            parent_spaces = tuple(spaces[p] for p in parents)
            if entry["kind"] == CHANCE and name in spaces:
                table = self._table(where, spaces[name], parent_spaces, entry.get("table"), errors)
                if table is not None:
                    tables[name] = table
            elif entry["kind"] == VALUE:
                costs = self._costs(where, parent_spaces, entry.get("costs"), errors)

        if errors:
            raise StructureError(f"{len(errors)} problems in {source}: {errors[0]}", errors)
        try:
            return self.build_validate(specs, arcs, tables, costs)
        except StructureError as e:
            raise StructureError(f"{source}: {e.description}", [f"{source}: {error}" for error in e.errors])

    @staticmethod
    def _table(where, child: OutcomeSpace, parents, cells, errors) -> Optional[ConditionalTable]:
        if not isinstance(cells, Mapping):
            errors.append(f"{where}: 'table' must be an object of 'outcome,parents' keys")
            return None
        rows: Dict[Tuple[str, ...], Dict[str, FuzzyProbability]] = {}
        for key, text in cells.items():
            parts = tuple(part.strip() for part in str(key).split(","))
            if len(parts) != len(parents) + 1:
                errors.append(
                    f"{where}: table[{key!r}] must name the outcome and {len(parents)} parent outcomes"
                )
                continue
            label, config = parts[0], parts[1:]
            bad = [
                f"{space.name}={value}" for space, value in zip((child,) + tuple(parents), parts)
                if value not in space
            ]
            if bad:
                errors.append(f"{where}: table[{key!r}] uses unknown outcomes {bad}")
                continue
            try:
                probability = FuzzyProbability._parse(text)
            except FuzzyIDError as e:
                errors.append(f"{where}: table[{key!r}]: {e.description}")
                continue
            rows.setdefault(config, {})[label] = probability
        ordered = {
            config: FuzzyDistribution.from_mapping(child, rows[config])
            for config in configurations(parents) if config in rows
        }
        return ConditionalTable(child, tuple(parents), ordered)

    @staticmethod
    def _costs(where, parents, cells, errors) -> Optional[CostFunction]:
        if not isinstance(cells, Mapping):
            errors.append(f"{where}: 'costs' must be an object of parent-outcome keys")
            return None
        entries: Dict[Tuple[str, ...], FuzzyValue] = {}
        for key, value in cells.items():
            config = tuple(part.strip() for part in str(key).split(","))
            if len(config) != len(parents):
                errors.append(f"{where}: costs[{key!r}] must name {len(parents)} parent outcomes")
                continue
            bad = [f"{space.name}={label}" for space, label in zip(parents, config) if label not in space]
            if bad:
                errors.append(f"{where}: costs[{key!r}] uses unknown outcomes {bad}")
                continue
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
                errors.append(f"{where}: costs[{key!r}] must be a finite number, got {value!r}")
                continue
            entries[config] = FuzzyValue.crisp(float(value))
        return CostFunction(tuple(parents), entries)
