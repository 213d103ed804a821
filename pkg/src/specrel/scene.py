"""Scene files: schema, exact parsing and model construction."""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from typing import Any

import jsonschema

from . import serialize as ser
from .axioms import SamplingConfig
from .field import FieldMode, ParseError
from .geometry import ORIGIN, GeometryError, Line, Point, T_AXIS
from .noftl import FTLHypothesis
from .worldview import Body, Model, ModelError, build_boost_model

SCENE_VERSION = 1


class SceneError(ParseError):
    """Raised for anything wrong with a scene file; the message names the location."""


class SchemaError(SceneError):
    pass


_SCALAR = {"type": ["string", "integer"]}
_POINT = {"type": "array", "items": _SCALAR, "minItems": 4, "maxItems": 4}
_LINE = {
    "type": "object",
    "properties": {
        "line": {
            "type": "object",
            "properties": {"base": _POINT, "dir": _POINT},
            "required": ["base", "dir"],
            "additionalProperties": False,
        }
    },
    "required": ["line"],
    "additionalProperties": False,
}
_MAP = {
    "type": "object",
    "properties": {
        "linear": {
            "type": "array", "minItems": 4, "maxItems": 4,
            "items": {"type": "array", "items": _SCALAR, "minItems": 4, "maxItems": 4},
        },
        "translation": _POINT,
    },
    "required": ["linear"],
    "additionalProperties": False,
}
_BOOST = {
    "type": "object",
    "properties": {
        "boost": {
            "type": "object",
            "properties": {
                "triple": {"type": "array", "items": {"type": "integer"}, "minItems": 3, "maxItems": 3},
                "velocity": _SCALAR,
                "c": _SCALAR,
                "origin": _POINT,
                "ids": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
            },
            "oneOf": [{"required": ["triple"]}, {"required": ["velocity"]}],
            "additionalProperties": False,
        }
    },
    "required": ["boost"],
    "additionalProperties": False,
}
_EXPLICIT = {
    "type": "object",
    "properties": {
        "bodies": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "ph": {"type": "boolean"},
                    "iob": {"type": "boolean"},
                    "worldline": {"oneOf": [_LINE, {"type": "null"}]},
                },
                "required": ["id"],
                "additionalProperties": False,
            },
        },
        "frames": {"type": "object", "additionalProperties": _MAP},
        "lightSpeed": {"type": "object", "additionalProperties": _SCALAR},
        "photonPlenum": {"type": "boolean"},
        "worldLightSpeed": _SCALAR,
    },
    "required": ["bodies", "frames", "lightSpeed"],
    "additionalProperties": False,
}

SCENE_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "specrel scene",
    "type": "object",
    "properties": {
        "version": {"const": SCENE_VERSION},
        "fieldMode": {"enum": [m.value for m in FieldMode]},
        "model": {"oneOf": [_BOOST, _EXPLICIT]},
        "sampling": {
            "type": "object",
            "properties": {
                "seed": {"type": "integer"},
                "gridRadius": {"type": "integer", "minimum": 0},
                "randomCount": {"type": "integer", "minimum": 1},
                "denominatorBound": {"type": "integer", "minimum": 1},
            },
            "additionalProperties": False,
        },
        "noftl": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "m": {"type": "string"}, "k": {"type": "string"},
                    "e": _POINT, "f": _POINT,
                },
                "required": ["m", "k", "e", "f"],
                "additionalProperties": False,
            },
        },
        "witness": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "e": _POINT, "f": _POINT, "cM": _SCALAR, "cK": _SCALAR,
                    "purportedMap": _MAP,
                },
                "required": ["e", "f", "cM", "cK", "purportedMap"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["version", "fieldMode", "model"],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class NoFTLCheck:
    m: str
    k: str
    e: Point
    f: Point


@dataclass(frozen=True)
class Scene:
    field_mode: FieldMode
    model: Model
    sampling: SamplingConfig
    digest: str
    noftl: tuple[NoFTLCheck, ...] = field(default=())
    witness: tuple[FTLHypothesis, ...] = field(default=())


class _FloatSeen(Exception):
    pass


def _reject_float(text: str):
    raise _FloatSeen(text)


_NUMBER = re.compile(r'"(?:[^"\\]|\\.)*"|-?\d+(?:\.\d+)?(?:[eE][-+]?\d+)?')


def _float_location(text: str) -> tuple[int, int]:
    for m in _NUMBER.finditer(text):
        tok = m.group()
        if not tok.startswith('"') and any(ch in tok for ch in ".eE"):
            line = text.count("\n", 0, m.start()) + 1
            return line, m.start() - (text.rfind("\n", 0, m.start()) + 1) + 1
    return 1, 1


def _where(path) -> str:
    out = "$"
    for p in path:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def load_json(raw: bytes | str) -> Any:
    text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise SceneError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except _FloatSeen as exc:
        line, col = _float_location(text)
        raise SceneError(
            f"line {line} column {col}: decimal number {exc} is not an exact literal; "
            "write it as a fraction string"
        ) from None


def _at(path: str, fn, *args):
    try:
        return fn(*args)
    except (ParseError, ArithmeticError, GeometryError, ModelError, ValueError, KeyError) as exc:
        raise SceneError(f"{path}: {exc}") from None


def _explicit_model(data: dict, mode: FieldMode) -> Model:
    frames = {
        k: _at(f"$.model.frames.{k}", ser.coordinate_map, v, mode) for k, v in data["frames"].items()
    }
    bodies = []
    for i, b in enumerate(data["bodies"]):
        where = f"$.model.bodies[{i}]"
        wl = b.get("worldline")
        line = None if wl is None else _at(where + ".worldline", ser.line, wl, mode)
        if line is None and b.get("iob") and b["id"] in frames:
            # an observer's worldline is its own time axis
            fr = frames[b["id"]]
            base = fr.apply_inverse(ORIGIN)
            line = Line(base, fr.apply_inverse(ORIGIN + T_AXIS) - base)
        bodies.append(Body(b["id"], bool(b.get("ph", False)), bool(b.get("iob", False)), line))
    speeds = {k: _at(f"$.model.lightSpeed.{k}", ser.scalar, v, mode) for k, v in data["lightSpeed"].items()}
    wls = data.get("worldLightSpeed")
    wls = None if wls is None else _at("$.model.worldLightSpeed", ser.scalar, wls, mode)
    return _at("$.model", lambda: Model(
        field_mode=mode, bodies=tuple(bodies), frames=frames, light_speed=speeds,
        photon_plenum=bool(data.get("photonPlenum", False)), world_light_speed=wls,
    ))


def _boost_model(data: dict, mode: FieldMode) -> Model:
    b = data["boost"]
    kw: dict[str, Any] = {"mode": mode}
    if "triple" in b:
        kw["triple"] = b["triple"]
    else:
        kw["velocity"] = _at("$.model.boost.velocity", ser.scalar, b["velocity"], mode)
    if "c" in b:
        kw["c"] = _at("$.model.boost.c", ser.scalar, b["c"], mode)
    if "origin" in b:
        kw["origin"] = _at("$.model.boost.origin", ser.point, b["origin"], mode)
    if "ids" in b:
        kw["ids"] = tuple(b["ids"])
    return _at("$.model.boost", lambda: build_boost_model(**kw))


def parse_scene(raw: bytes | str, mode_override: FieldMode | str | None = None) -> Scene:
    data = load_json(raw)
    validator = jsonschema.Draft202012Validator(SCENE_SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise SchemaError(f"{_where(err.absolute_path)}: {err.message}")
    mode = FieldMode(mode_override or data["fieldMode"])
    model_data = data["model"]
    model = _boost_model(model_data, mode) if "boost" in model_data else _explicit_model(model_data, mode)
    s = data.get("sampling", {})
    sampling = SamplingConfig(
        seed=s.get("seed", 0),
        grid_radius=s.get("gridRadius", 1),
        random_count=s.get("randomCount", 8),
        denominator_bound=s.get("denominatorBound", 4),
    )
    checks = tuple(
        NoFTLCheck(
            c["m"], c["k"],
            _at(f"$.noftl[{i}].e", ser.point, c["e"], mode),
            _at(f"$.noftl[{i}].f", ser.point, c["f"], mode),
        )
        for i, c in enumerate(data.get("noftl", []))
    )
    hyps = tuple(
        FTLHypothesis(
            _at(f"$.witness[{i}].e", ser.point, h["e"], mode),
            _at(f"$.witness[{i}].f", ser.point, h["f"], mode),
            _at(f"$.witness[{i}].cM", ser.scalar, h["cM"], mode),
            _at(f"$.witness[{i}].purportedMap", ser.coordinate_map, h["purportedMap"], mode),
            _at(f"$.witness[{i}].cK", ser.scalar, h["cK"], mode),
        )
        for i, h in enumerate(data.get("witness", []))
    )
    raw_bytes = raw.encode("utf-8") if isinstance(raw, str) else raw
    digest = "sha256:" + hashlib.sha256(raw_bytes).hexdigest()
    return Scene(mode, model, sampling, digest, checks, hyps)
