"""Bodies, observer frames, the worldview relation W and transformation wvt.

A model fixes a world chart.  Every body's worldline is a line in that chart
and every inertial observer carries an affine frame sending world coordinates
to its own coordinates.  ``W(m, b, p)`` holds when the world event behind
``p`` (read in m's coordinates) lies on b's worldline.

With ``photon_plenum`` set, photons are intensional: every line of the world
chart that is lightlike for ``world_light_speed`` is the worldline of a
photon.  This is what lets the photon axiom hold with its full existential
strength.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Protocol, Sequence

from . import _linalg
from .field import ONE, ZERO, FieldMode, Number, Scalar, as_scalar, sqrt
from .geometry import (
    ORIGIN,
    T_AXIS,
    Cone,
    Line,
    Point,
    Vector,
    cone_form,
    on_line,
)

__all__ = [
    "Body",
    "CoordinateMap",
    "Frame",
    "Model",
    "ModelError",
    "NotAnObserver",
    "SingularMap",
    "SuperluminalBoost",
    "W",
    "build_boost_model",
    "c_of",
    "lightcone_at",
    "map_line",
    "photon_sighting",
    "plenum_photon",
    "wvt",
]


class ModelError(ValueError):
    pass


class NotAnObserver(ModelError):
    pass


class SingularMap(ModelError):
    pass


class SuperluminalBoost(ModelError):
    pass


@dataclass(frozen=True)
class Body:
    id: str
    ph: bool = False
    iob: bool = False
    worldline: Line | None = None


class Frame(Protocol):
    def apply(self, p: Point) -> Point: ...

    def apply_inverse(self, p: Point) -> Point: ...


def _identity() -> tuple[tuple[Scalar, ...], ...]:
    return tuple(tuple(ONE if i == j else ZERO for j in range(4)) for i in range(4))


@dataclass(frozen=True)
class CoordinateMap:
    """p -> linear @ p + translation, with an exactly invertible linear part."""

    linear: tuple[tuple[Scalar, ...], ...] = field(default_factory=_identity)
    translation: Vector = Vector(0, 0, 0, 0)
    _inv: tuple = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        lin = tuple(tuple(as_scalar(v) for v in row) for row in self.linear)
        if len(lin) != 4 or any(len(r) != 4 for r in lin):
            raise ModelError("linear part must be 4x4")
        object.__setattr__(self, "linear", lin)
        try:
            inv = _linalg.inverse(lin)
        except ZeroDivisionError:
            raise SingularMap("coordinate map is not invertible") from None
        object.__setattr__(self, "_inv", tuple(tuple(r) for r in inv))

    @classmethod
    def identity(cls) -> CoordinateMap:
        return cls()

    def linear_apply(self, v: Vector) -> Vector:
        return Vector(*_linalg.matvec(self.linear, list(v)))

    def apply(self, p: Point) -> Point:
        return Point(*_linalg.matvec(self.linear, list(p))) + self.translation

    def apply_inverse(self, p: Point) -> Point:
        q = p + (-self.translation)
        return Point(*_linalg.matvec(self._inv, list(q)))

    def inverse(self) -> CoordinateMap:
        t = Vector(*_linalg.matvec(self._inv, list(self.translation)))
        return CoordinateMap(self._inv, -t)

    def compose(self, inner: CoordinateMap) -> CoordinateMap:
        """self after inner."""
        lin = _linalg.matmul(self.linear, inner.linear)
        return CoordinateMap(lin, self.linear_apply(inner.translation) + self.translation)

    def with_entry(self, i: int, j: int, value: Number) -> CoordinateMap:
        rows = [list(r) for r in self.linear]
        rows[i][j] = as_scalar(value)
        return CoordinateMap(tuple(tuple(r) for r in rows), self.translation)


def map_line(f: Frame, line: Line) -> Line:
    a = f.apply(line.base)
    return Line(a, f.apply(line.at(1)) - a)


@dataclass(frozen=True, eq=False)
class Model:
    field_mode: FieldMode
    bodies: tuple[Body, ...]
    frames: Mapping[str, Frame]
    light_speed: Mapping[str, Scalar]
    photon_plenum: bool = False
    world_light_speed: Scalar | None = None

    def __post_init__(self):
        object.__setattr__(self, "field_mode", FieldMode(self.field_mode))
        object.__setattr__(self, "bodies", tuple(self.bodies))
        object.__setattr__(self, "frames", dict(self.frames))
        object.__setattr__(
            self, "light_speed", {k: as_scalar(v) for k, v in self.light_speed.items()}
        )
        ids = [b.id for b in self.bodies]
        if len(set(ids)) != len(ids):
            raise ModelError("duplicate body ids")
        for b in self.bodies:
            if b.iob:
                if b.id not in self.frames or b.id not in self.light_speed:
                    raise ModelError(f"observer {b.id!r} needs a frame and a light speed")
                if self.light_speed[b.id].sign() <= 0:
                    raise ModelError(f"light speed of {b.id!r} must be positive")
        if self.photon_plenum:
            if self.world_light_speed is None:
                raise ModelError("a photon plenum needs worldLightSpeed")
            object.__setattr__(self, "world_light_speed", as_scalar(self.world_light_speed))

    def body(self, ident: str) -> Body:
        for b in self.bodies:
            if b.id == ident:
                return b
        raise KeyError(ident)

    @property
    def observers(self) -> list[str]:
        return [b.id for b in self.bodies if b.iob]

    def is_observer(self, ident: str) -> bool:
        return any(b.id == ident and b.iob for b in self.bodies)

    def frame(self, ident: str) -> Frame:
        if not self.is_observer(ident):
            raise NotAnObserver(f"{ident!r} is not an inertial observer")
        return self.frames[ident]

    def is_plenum_photon(self, b: Body) -> bool:
        return (
            self.photon_plenum
            and b.ph
            and b.worldline is not None
            and cone_form(b.worldline.direction, b.worldline.direction, self.world_light_speed).is_zero()
        )

    def has_body(self, b: Body) -> bool:
        return any(x == b for x in self.bodies) or self.is_plenum_photon(b)

    def replace(self, **changes) -> Model:
        kw = dict(
            field_mode=self.field_mode,
            bodies=self.bodies,
            frames=self.frames,
            light_speed=self.light_speed,
            photon_plenum=self.photon_plenum,
            world_light_speed=self.world_light_speed,
        )
        kw.update(changes)
        return Model(**kw)


def plenum_photon(through: Point, direction: Vector, label: str = "photon") -> Body:
    """The (intensional) plenum photon along a world-chart line."""
    return Body(id=label, ph=True, worldline=Line(through, direction))


def _resolve(model: Model, b: Body | str) -> Body | None:
    if isinstance(b, Body):
        return b if model.has_body(b) else None
    return model.body(b)


def W(model: Model, m: str, b: Body | str, p: Point) -> bool:
    frame = model.frame(m)
    body = _resolve(model, b)
    if body is None or body.worldline is None:
        return False
    return on_line(frame.apply_inverse(p), body.worldline)


def photon_sighting(model: Model, m: str, x: Point, y: Point) -> Body | None:
    """A photon m sees at both x and y, if the model has one."""
    frame = model.frame(m)
    X, Y = frame.apply_inverse(x), frame.apply_inverse(y)
    for b in model.bodies:
        if b.ph and b.worldline is not None and on_line(X, b.worldline) and on_line(Y, b.worldline):
            return b
    if model.photon_plenum:
        d = Y - X
        if d.is_zero():
            return plenum_photon(X, Vector(1, model.world_light_speed, 0, 0))
        if cone_form(d, d, model.world_light_speed).is_zero():
            return plenum_photon(X, d)
    return None


def wvt(model: Model, m: str, k: str, p: Point) -> Point:
    """Where m sees what k sees at p."""
    fm, fk = model.frame(m), model.frame(k)
    if m == k:
        return p
    return fm.apply(fk.apply_inverse(p))


def c_of(model: Model, m: str) -> Scalar:
    if not model.is_observer(m):
        raise NotAnObserver(f"{m!r} is not an inertial observer; its light speed is undefined")
    return model.light_speed[m]


def lightcone_at(model: Model, m: str, v: Point) -> Cone:
    return Cone(v, c_of(model, m))


def boost_map(v: Scalar, c: Scalar, gamma: Scalar, origin: Point = ORIGIN) -> CoordinateMap:
    """Boost along x with velocity v, centred on the world event ``origin``."""
    z, o = ZERO, ONE
    lin = (
        (gamma, -gamma * v / (c * c), z, z),
        (-gamma * v, gamma, z, z),
        (z, z, o, z),
        (z, z, z, o),
    )
    m = CoordinateMap(lin)
    return CoordinateMap(lin, -m.linear_apply(origin - ORIGIN))


def build_boost_model(
    *,
    triple: Sequence[int] | None = None,
    velocity: Number | None = None,
    c: Number = 1,
    mode: FieldMode | str = FieldMode.EUCLIDEAN,
    origin: Point = ORIGIN,
    ids: tuple[str, str] = ("m", "k"),
    photon: bool = True,
) -> Model:
    """Observer m at rest in the world chart, observer k boosted along x.

    ``triple`` (a, b, h) with a^2 + b^2 = h^2 gives v = (a/h) c and the
    rational Lorentz factor h/b.  ``origin`` is the world event k takes as
    its own origin.
    """
    mode = FieldMode(mode)
    c = as_scalar(c)
    if c.sign() <= 0:
        raise ModelError("light speed must be positive")
    if (triple is None) == (velocity is None):
        raise ModelError("give exactly one of triple or velocity")
    if triple is not None:
        a, b, h = (int(x) for x in triple)
        if a * a + b * b != h * h or h <= 0:
            raise ModelError(f"{tuple(triple)} is not a Pythagorean triple")
        v = c * a / h
    else:
        v = as_scalar(velocity)
    if abs(v) >= c:
        raise SuperluminalBoost(f"|v| = {abs(v)} is not below c = {c}")
    gamma = ONE / sqrt(ONE - v * v / (c * c), mode)
    m_id, k_id = ids
    bodies = [
        Body(m_id, iob=True, worldline=Line(ORIGIN, T_AXIS)),
        Body(k_id, iob=True, worldline=Line(origin, Vector(1, v, 0, 0))),
    ]
    if photon:
        bodies.append(Body("photon", ph=True, worldline=Line(ORIGIN, Vector(1, c, 0, 0))))
    return Model(
        field_mode=mode,
        bodies=tuple(bodies),
        frames={m_id: CoordinateMap.identity(), k_id: boost_map(v, c, gamma, origin)},
        light_speed={m_id: c, k_id: c},
        photon_plenum=True,
        world_light_speed=c,
    )
