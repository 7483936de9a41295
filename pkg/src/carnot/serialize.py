"""Configuration JSON files.

Carnot file::

    {"kind": "carnot",
     "points": {"A": ["p/q", "p/q", "p/q"], ..., "C2": [...]},   # 9 labels
     "triangle": ["A", "B", "C"],
     "conic": {"coefficients": [six "p/q"], "role": "point"},
     "validated": true,
     "seed": 7}

Quadrilateral file: ``kind: "quad"``, points A, B, C, D, P, Q, R, S and an
``axis`` line triple.  Point-set file: ``kind: "points"``, any labels.

``validated: false`` marks a deliberate negative control: the Carnot
relation is not enforced when loading it.
"""
from __future__ import annotations

import json
from typing import Any, Mapping

from .conic import Conic
from .configuration import BASE_LABELS, VERTEX_LABELS, CarnotConfig, build_config
from .errors import GeometryError
from .projective import ProjLine, ProjPoint, Triangle
from .quadrilateral import ABCD_LABELS, PQRS_LABELS, QuadConfig, build_quad_config

SCHEMA_VERSION = 1


class ConfigFormatError(ValueError):
    pass


def carnot_to_json(cfg: CarnotConfig, seed: int | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {"kind": "carnot", "version": SCHEMA_VERSION}
    if seed is not None:
        doc["seed"] = seed
    doc["points"] = {k: cfg[k].to_json() for k in VERTEX_LABELS + BASE_LABELS}
    doc["triangle"] = list(VERTEX_LABELS)
    if cfg.validated:
        doc["conic"] = cfg.base_conic.to_json()
    doc["validated"] = cfg.validated
    return doc


def quad_to_json(qc: QuadConfig, seed: int | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {"kind": "quad", "version": SCHEMA_VERSION}
    if seed is not None:
        doc["seed"] = seed
    doc["points"] = {k: qc[k].to_json() for k in ABCD_LABELS + PQRS_LABELS}
    doc["axis"] = qc.axis.to_json()
    doc["validated"] = qc.validated
    return doc


def points_to_json(points: Mapping[str, ProjPoint], seed: int | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {"kind": "points", "version": SCHEMA_VERSION}
    if seed is not None:
        doc["seed"] = seed
    doc["points"] = {k: p.to_json() for k, p in points.items()}
    return doc


def to_json(obj, seed: int | None = None) -> dict[str, Any]:
    if isinstance(obj, CarnotConfig):
        return carnot_to_json(obj, seed)
    if isinstance(obj, QuadConfig):
        return quad_to_json(obj, seed)
    return points_to_json(obj, seed)


def dumps(obj, seed: int | None = None) -> str:
    return json.dumps(to_json(obj, seed), indent=2) + "\n"


def _points(doc: Mapping, required) -> dict[str, ProjPoint]:
    raw = doc.get("points")
    if not isinstance(raw, Mapping):
        raise ConfigFormatError("missing 'points' object")
    missing = [k for k in required if k not in raw]
    if missing:
        raise ConfigFormatError(f"missing point labels: {', '.join(missing)}")
    try:
        return {k: ProjPoint.from_json(v) for k, v in raw.items()}
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ConfigFormatError(f"bad coordinate: {exc}") from None


def from_json(doc: Mapping[str, Any]):
    """Rebuild a CarnotConfig, QuadConfig, or point map.

    Geometric validation errors propagate as GeometryError subclasses;
    structural problems raise ConfigFormatError.
    """
    kind = doc.get("kind")
    validate = bool(doc.get("validated", True))
    if kind == "carnot":
        pts = _points(doc, VERTEX_LABELS + BASE_LABELS)
        tri = Triangle(*(pts[k] for k in VERTEX_LABELS))
        cfg = build_config(tri, *(pts[k] for k in BASE_LABELS), validate=validate)
        if "conic" in doc:
            try:
                stated = Conic.from_json(doc["conic"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ConfigFormatError(f"bad conic block: {exc}") from None
            if stated != cfg.base_conic:
                raise ConfigFormatError("conic block does not match the base points")
        return cfg
    if kind == "quad":
        pts = _points(doc, ABCD_LABELS + PQRS_LABELS)
        qc = build_quad_config(
            [pts[k] for k in ABCD_LABELS], [pts[k] for k in PQRS_LABELS], validate=validate
        )
        if "axis" in doc and validate:
            try:
                axis = ProjLine.from_json(doc["axis"])
            except (TypeError, ValueError) as exc:
                raise ConfigFormatError(f"bad axis: {exc}") from None
            if axis != qc.axis:
                raise ConfigFormatError("axis does not match the quadrilaterals")
        return qc
    if kind == "points":
        return _points(doc, ())
    raise ConfigFormatError(f"unknown configuration kind {kind!r}")


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, Mapping):
        raise ConfigFormatError("configuration must be a JSON object")
    return from_json(doc)


__all__ = [
    "ConfigFormatError",
    "GeometryError",
    "dumps",
    "from_json",
    "loads",
    "to_json",
]
