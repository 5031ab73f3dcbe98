"""Network documents, matrix serialization and result documents."""

from __future__ import annotations

import csv
import io as _io
import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

from .attributes import AttributeRegistry, AttributeResult, AttributeSpec, fold_op
from .errors import AttributeSpecError, DocumentError, PathError, UnknownNameError
from .graph import DirectedGraph, PathSet, build_graph, validate_path_set
from .hypergraph import Hypergraph, Matrix

_DOC_KEYS = {"vertices", "edges", "properties", "path_sets", "attributes"}
_PATH_SET_KEYS = {"name", "paths"}
_ATTRIBUTE_KEYS = {"name", "property", "transform", "inner", "outer", "unit"}
_OP_KEYS = {"op", "identity"}

BUNDLED = ("fig2.json", "capacity_example.json")


@dataclass(frozen=True)
class NetworkDocument:
    graph: DirectedGraph
    path_sets: Mapping[str, PathSet]
    attributes: AttributeRegistry

    def path_set(self, name: str) -> PathSet:
        try:
            return self.path_sets[name]
        except KeyError:
            raise UnknownNameError(f"unknown path set {name!r}") from None


def bundled_path(name: str) -> Path:
    """Filesystem path of a fixture shipped with the package."""
    return Path(str(resources.files("pathattr") / "data" / name))


def read_document(source: str | Path) -> NetworkDocument:
    """Load a network document from a file.

    A bare file name that does not exist on disk but matches a bundled
    fixture (``fig2.json``, ``capacity_example.json``) loads the fixture.
    """
    path = Path(source)
    if not path.exists() and path.name == str(source) and str(source) in BUNDLED:
        path = bundled_path(str(source))
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {source}: {exc.strerror or exc}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{source}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    return parse_document(raw)


def _number(value: Any, what: str) -> float:
    if isinstance(value, bool):
        raise DocumentError(f"{what} must be a number")
    try:
        return float(value)
    except (TypeError, ValueError):
        raise DocumentError(f"{what} must be a number, got {value!r}") from None


def _parse_attribute(raw: Any) -> AttributeSpec:
    if not isinstance(raw, dict):
        raise DocumentError("attribute record must be an object")
    extra = set(raw) - _ATTRIBUTE_KEYS
    if extra:
        raise DocumentError(f"attribute record has unknown key(s): {', '.join(sorted(extra))}")
    missing = {"name", "property", "transform", "inner", "outer"} - set(raw)
    if missing:
        raise DocumentError(f"attribute record missing {', '.join(sorted(missing))}")
    ops = []
    for side in ("inner", "outer"):
        rec = raw[side]
        if not isinstance(rec, dict) or set(rec) - _OP_KEYS or "op" not in rec:
            raise DocumentError(f"attribute {raw['name']!r}: {side} must be {{'op', 'identity'}}")
        identity = rec.get("identity")
        if identity is not None:
            identity = _number(identity, f"attribute {raw['name']!r}: {side} identity")
        ops.append(fold_op(rec["op"], identity))
    try:
        return AttributeSpec(str(raw["name"]), str(raw["property"]), raw["transform"], ops[0], ops[1],
                             unit=str(raw.get("unit", "")))
    except ValueError as exc:
        raise DocumentError(f"attribute {raw['name']!r}: {exc}") from None


def parse_document(raw: Any) -> NetworkDocument:
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    extra = set(raw) - _DOC_KEYS
    if extra:
        raise DocumentError(f"unknown document key(s): {', '.join(sorted(extra))}")
    graph = build_graph({k: raw[k] for k in ("vertices", "edges", "properties") if k in raw})

    path_sets: dict[str, PathSet] = {}
    for rec in raw.get("path_sets", []):
        if not isinstance(rec, dict) or set(rec) != _PATH_SET_KEYS:
            raise DocumentError("path set record must have exactly 'name' and 'paths'")
        name = rec["name"]
        if name in path_sets:
            raise DocumentError(f"duplicate path set name {name!r}")
        if not isinstance(rec["paths"], list) or not all(isinstance(p, list) for p in rec["paths"]):
            raise DocumentError(f"path set {name!r}: 'paths' must be a list of edge-id lists")
        try:
            path_sets[name] = validate_path_set(graph, rec["paths"])
        except (PathError, UnknownNameError) as exc:
            raise DocumentError(f"path set {name!r}: {exc}") from None

    registry = AttributeRegistry()
    for rec in raw.get("attributes", []):
        spec = _parse_attribute(rec)
        if spec.property not in graph.properties:
            raise DocumentError(f"attribute {spec.name!r} references unknown property {spec.property!r}")
        try:
            registry.register(spec)
        except AttributeSpecError as exc:
            raise DocumentError(str(exc)) from None
    return NetworkDocument(graph, path_sets, registry)


# -- matrices ---------------------------------------------------------------


def _exact(x: float) -> float | int:
    # repr-based JSON numbers round-trip exactly; integral values print as ints
    return int(x) if float(x).is_integer() and abs(x) < 2**53 else float(x)


def matrix_to_dict(m: Matrix) -> dict:
    return {
        "rows": list(m.row_labels),
        "columns": list(m.column_labels),
        "values": [[_exact(v) for v in row] for row in m.values.tolist()],
    }


def matrix_from_dict(d: Mapping[str, Any]) -> Matrix:
    return Matrix(tuple(d["rows"]), tuple(d["columns"]), d["values"] or [[] for _ in d["rows"]])


def matrix_to_csv(m: Matrix) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["edge", *m.column_labels])
    for label, row in zip(m.row_labels, m.values.tolist()):
        writer.writerow([label, *(repr(_exact(v)) for v in row)])
    return buf.getvalue()


def matrix_from_csv(text: str) -> Matrix:
    rows = list(csv.reader(_io.StringIO(text)))
    header, body = rows[0], rows[1:]
    return Matrix(tuple(r[0] for r in body), tuple(header[1:]), [[float(x) for x in r[1:]] for r in body])


def matrix_to_table(m: Matrix) -> str:
    cells = [["edge", *m.column_labels]]
    cells += [[label, *(format_number(v) for v in row)] for label, row in zip(m.row_labels, m.values.tolist())]
    widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
    return "\n".join(
        "  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(r, widths))).rstrip()
        for r in cells
    ) + "\n"


# -- results ----------------------------------------------------------------


def format_number(x: float) -> str:
    """Up to ten decimal places, trailing zeros dropped; integers bare.

    Values that would round to zero at ten places fall back to ten
    significant digits.
    """
    if math.isinf(x) or math.isnan(x):
        return str(x)
    if float(x).is_integer() and abs(x) < 1e15:
        return str(int(x))
    if abs(x) >= 1e10:
        return f"{x:.10g}"
    text = f"{x:.10f}".rstrip("0").rstrip(".")
    if text in ("0", "-0"):
        return f"{x:.10g}"
    return text


def display_number(x: float) -> float | int:
    """JSON-ready number rounded as by ``format_number``."""
    if math.isinf(x) or math.isnan(x):
        return x
    rounded = float(format_number(x))
    return int(rounded) if rounded.is_integer() and abs(rounded) < 1e15 else rounded


def result_to_dict(path_set: str, result: AttributeResult, verbose: bool = False) -> dict:
    doc: dict[str, Any] = {
        "path_set": path_set,
        "name": result.name,
        "value": display_number(result.value),
        "unit": result.unit,
        "transform": str(result.transform),
    }
    if verbose:
        doc["columns"] = {k: display_number(v) for k, v in zip(result.column_labels, result.columns)}
        doc["matrix"] = matrix_to_dict(result.matrix)
    return doc


def cuts_to_dict(path_set: str, h: Hypergraph) -> dict:
    order = {v: i for i, v in enumerate(h.vertices)}
    return {
        "path_set": path_set,
        "count": len(h),
        "cuts": [
            {"label": e.label, "edges": sorted(e.members, key=order.__getitem__)} for e in h.hyperedges
        ],
    }


def _render(doc: Any, indent: int) -> str:
    pad = "  " * (indent + 1)
    if isinstance(doc, dict) and doc:
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_render(v, indent + 1)}" for k, v in doc.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(doc, list) and any(isinstance(v, (dict, list)) for v in doc):
        items = [pad + _render(v, indent + 1) for v in doc]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    # scalars and flat lists stay on one line
    return json.dumps(doc, ensure_ascii=False)


def dumps(doc: Any) -> str:
    """Indented JSON with flat lists (matrix rows, cut members) kept on one line."""
    return _render(doc, 0) + "\n"

