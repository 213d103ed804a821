"""JSON forms of scalars, geometry objects and maps (exact literals only)."""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Any

from .field import FieldMode, Scalar, format_scalar, parse_scalar
from .geometry import Cone, Line, Plane, Point, Vector
from .worldview import Body, CoordinateMap


def to_json(obj: Any) -> Any:
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, (Scalar, Fraction, int)):
        return format_scalar(obj)
    if isinstance(obj, (Point, Vector)):
        return [format_scalar(c) for c in obj]
    if isinstance(obj, Line):
        return {"line": {"base": to_json(obj.base), "dir": to_json(obj.direction)}}
    if isinstance(obj, Plane):
        return {"plane": {"base": to_json(obj.base), "d1": to_json(obj.d1), "d2": to_json(obj.d2)}}
    if isinstance(obj, Cone):
        return {"cone": {"vertex": to_json(obj.vertex), "slope": to_json(obj.slope)}}
    if isinstance(obj, Body):
        return {
            "id": obj.id,
            "ph": obj.ph,
            "iob": obj.iob,
            "worldline": to_json(obj.worldline),
        }
    if isinstance(obj, CoordinateMap):
        return {"linear": [[format_scalar(v) for v in row] for row in obj.linear],
                "translation": to_json(obj.translation)}
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def scalar(text: str | int, mode: FieldMode) -> Scalar:
    return parse_scalar(text, mode)


def point(data: list, mode: FieldMode) -> Point:
    if not isinstance(data, list) or len(data) != 4:
        raise ValueError("a point needs exactly 4 coordinates")
    return Point(*(parse_scalar(v, mode) for v in data))


def vector(data: list, mode: FieldMode) -> Vector:
    return Vector(*point(data, mode))


def line(data: dict, mode: FieldMode) -> Line:
    body = data["line"]
    return Line(point(body["base"], mode), vector(body["dir"], mode))


def plane(data: dict, mode: FieldMode) -> Plane:
    body = data["plane"]
    return Plane(point(body["base"], mode), vector(body["d1"], mode), vector(body["d2"], mode))


def cone(data: dict, mode: FieldMode) -> Cone:
    body = data["cone"]
    return Cone(point(body["vertex"], mode), parse_scalar(body["slope"], mode))


def coordinate_map(data: dict, mode: FieldMode) -> CoordinateMap:
    lin = tuple(tuple(parse_scalar(v, mode) for v in row) for row in data["linear"])
    return CoordinateMap(lin, vector(data.get("translation", ["0"] * 4), mode))
