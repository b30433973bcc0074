"""Diagram/form documents and report serialization.

Diagram document (JSON)::

    {
      "one_handles": 2,
      "components": [
        {"id": "S", "tb": 1, "rot": 0, "coeff": "-1"},
        {"id": "F", "tb": -1, "rot": 0, "coeff": "2/3"}
      ],
      "linking": [[0, 1], [1, 0]],
      "variant": 0,            # optional, default reduction variant
      "convention": "chain"    # optional, "chain" or "parallel"
    }

Form document (JSON), accepted by ``kirby-reduce``::

    {"Q": [[2, 1], [1, 0]], "c1": [0, 0], "labels": ["a", "b"]}

Rationals are always written as strings (``"-1/2"``, ``"3"``).
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

import jsonschema

from .errors import DiagramFormatError
from .exact_arith import to_rat
from .kirby import MarkedForm
from .surgery import CONVENTIONS, ContactDiagram, LegendrianComponent

_INT = {"type": "integer"}

DIAGRAM_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["one_handles", "components", "linking"],
    "additionalProperties": False,
    "properties": {
        "one_handles": {"type": "integer", "minimum": 0},
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "tb", "rot", "coeff"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "tb": _INT,
                    "rot": _INT,
                    "coeff": {"type": "string", "pattern": r"^\s*[-+]?\d+(\s*/\s*[1-9]\d*)?\s*$"},
                },
            },
        },
        "linking": {"type": "array", "items": {"type": "array", "items": _INT}},
        "variant": {"enum": [0, 1]},
        "convention": {"enum": list(CONVENTIONS)},
    },
}

FORM_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["Q", "c1"],
    "additionalProperties": False,
    "properties": {
        "Q": {"type": "array", "items": {"type": "array", "items": _INT}},
        "c1": {"type": "array", "items": _INT},
        "labels": {"type": "array", "items": {"type": "string"}},
    },
}


def _validate(doc, schema):
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise DiagramFormatError(f"{where}: {exc.message}") from None


def read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DiagramFormatError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DiagramFormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def diagram_from_dict(doc: dict) -> ContactDiagram:
    _validate(doc, DIAGRAM_SCHEMA)
    try:
        comps = tuple(
            LegendrianComponent(c["id"], c["tb"], c["rot"], to_rat(c["coeff"].replace(" ", "")))
            for c in doc["components"])
    except ZeroDivisionError:
        raise DiagramFormatError("zero denominator in a coefficient") from None
    return ContactDiagram(doc["one_handles"], comps, doc["linking"],
                          doc.get("variant", 0), doc.get("convention", "chain"))


def diagram_to_dict(d: ContactDiagram) -> dict:
    return {
        "one_handles": d.one_handles,
        "components": [{"id": c.id, "tb": c.tb, "rot": c.rot, "coeff": str(c.coeff)}
                       for c in d.components],
        "linking": [list(row) for row in d.linking],
        "variant": d.variant,
        "convention": d.convention,
    }


def form_from_dict(doc: dict) -> MarkedForm:
    _validate(doc, FORM_SCHEMA)
    try:
        return MarkedForm(doc["Q"], doc["c1"], doc.get("labels", ()))
    except ValueError as exc:
        raise DiagramFormatError(str(exc)) from None


def form_to_dict(m: MarkedForm) -> dict:
    return {"Q": [list(r) for r in m.Q], "c1": list(m.c1), "labels": list(m.labels)}


def _plain(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, exact rationals as strings."""
    return json.dumps(_plain(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def rows_to_csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: "" if row.get(k) is None else _plain(row.get(k)) for k in columns})
    return buf.getvalue()
