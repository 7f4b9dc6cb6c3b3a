"""Instance files: UTF-8 JSON, one instance per file.

Four kinds are accepted::

    {"kind": "explicit", "n": 3, "weights": [1, 2, 3], "maximal_feasible": [[0, 1], [2]]}
    {"kind": "coloring", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]], "colors": 2}
    {"kind": "digraph", "vertices": 3, "arcs": [[0, 1], [1, 2]]}
    {"kind": "graph", "vertices": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}

Every kind takes an optional ``"label"``.  Unknown keys, duplicate keys,
duplicate elements/edges/arcs and out-of-range ids are rejected.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

import jsonschema

from .core import ProblemInstance
from .errors import InputError
from .instances.coloring import ColoringOracle, coloring_system
from .instances.graphs import Digraph, Graph
from .oracles import ExplicitOracle

_int = {"type": "integer", "minimum": 0}
_pair = {"type": "array", "items": _int, "minItems": 2, "maxItems": 2}
_pairs = {"type": "array", "items": _pair, "uniqueItems": True}
_label = {"type": "string"}


def _kind(name, props, required):
    return {
        "type": "object",
        "properties": {"kind": {"const": name}, "label": _label, **props},
        "required": ["kind", *required],
        "additionalProperties": False,
    }


SCHEMAS = {
    "explicit": _kind(
        "explicit",
        {
            "n": {"type": "integer", "minimum": 2},
            "weights": {"type": "array", "items": _int},
            "maximal_feasible": {
                "type": "array",
                "items": {"type": "array", "items": _int, "uniqueItems": True},
                "uniqueItems": True,
            },
        },
        ["n", "maximal_feasible"],
    ),
    "coloring": _kind(
        "coloring",
        {"vertices": _int, "edges": _pairs, "colors": {"type": "integer", "minimum": 1}},
        ["vertices", "edges", "colors"],
    ),
    "digraph": _kind("digraph", {"vertices": _int, "arcs": _pairs}, ["vertices", "arcs"]),
    "graph": _kind("graph", {"vertices": _int, "edges": _pairs}, ["vertices", "edges"]),
}

Parsed = Union[ProblemInstance, Digraph, Graph]


def _no_duplicate_keys(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise InputError(f"duplicate key {k!r}")
        out[k] = v
    return out


def load_document(text: str, source: str = "<string>") -> dict:
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}") from None
    except InputError as exc:
        raise InputError(f"{source}: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{source}: top level must be a JSON object")
    kind = doc.get("kind")
    if kind not in SCHEMAS:
        raise InputError(f"{source}: $.kind: expected one of {sorted(SCHEMAS)}, got {kind!r}")
    try:
        jsonschema.validate(doc, SCHEMAS[kind])
    except jsonschema.ValidationError as exc:
        raise InputError(f"{source}: {exc.json_path}: {exc.message}") from None
    return doc


def from_document(doc: dict, source: str = "<string>") -> Parsed:
    kind = doc["kind"]
    label = doc.get("label", "")
    try:
        if kind == "explicit":
            n = doc["n"]
            weights = doc.get("weights", [1] * n)
            return ProblemInstance(n, tuple(weights), ExplicitOracle(n, doc["maximal_feasible"]), label)
        if kind == "coloring":
            graph = Graph(doc["vertices"], tuple(tuple(e) for e in doc["edges"]))
            return coloring_system(graph, doc["colors"], label)
        if kind == "digraph":
            return Digraph(doc["vertices"], tuple(tuple(a) for a in doc["arcs"]))
        return Graph(doc["vertices"], tuple(tuple(e) for e in doc["edges"]))
    except InputError as exc:
        raise InputError(f"{source}: {exc}") from None


def parse_instance(path) -> Parsed:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: cannot read: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path}: not UTF-8") from None
    doc = load_document(text, str(path))
    return from_document(doc, str(path))


def parse_label(path) -> str:
    """The file's ``label`` (digraph and graph objects do not carry one)."""
    return load_document(Path(path).read_text(encoding="utf-8"), str(path)).get("label", "")


def to_document(obj: Parsed, label: str = None) -> dict:
    if isinstance(obj, Digraph):
        doc = {"kind": "digraph", "vertices": obj.vertex_count, "arcs": [list(a) for a in obj.arcs]}
    elif isinstance(obj, Graph):
        doc = {"kind": "graph", "vertices": obj.vertex_count, "edges": [list(e) for e in obj.edges]}
    elif isinstance(obj.oracle.base, ExplicitOracle):
        doc = {
            "kind": "explicit",
            "n": obj.n,
            "weights": list(obj.weights),
            "maximal_feasible": [list(m) for m in obj.oracle.base.maximal_sets],
        }
        label = obj.label if label is None else label
    elif isinstance(obj.oracle.base, ColoringOracle):
        o = obj.oracle.base
        doc = {
            "kind": "coloring",
            "vertices": o.graph.vertex_count,
            "edges": [list(e) for e in o.graph.edges],
            "colors": o.k,
        }
        label = obj.label if label is None else label
    else:
        raise InputError(f"no file representation for oracle {type(obj.oracle.base).__name__}")
    if label:
        doc["label"] = label
    return doc


def dumps(obj: Parsed, label: str = None) -> str:
    return json.dumps(to_document(obj, label), indent=2) + "\n"
