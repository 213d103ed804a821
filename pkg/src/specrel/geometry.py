"""(1+3)-dimensional spacetime geometry over exact scalars.

Points and vectors are ordered ``(t, x, y, z)``.  Cones are upright: a cone
with vertex ``v`` and slope ``c`` is the set of points ``p`` with
``space2(v, p) == c*c * time2(v, p)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from . import _linalg
from .field import (
    ONE,
    ZERO,
    FieldMode,
    NotEuclidean,
    Number,
    Scalar,
    as_scalar,
    sqrt,
)

__all__ = [
    "Cone",
    "ConePosition",
    "DegenerateLine",
    "DegeneratePlane",
    "GeometryError",
    "Line",
    "LineConeIntersection",
    "LineMeeting",
    "NotOnCone",
    "NotOutside",
    "Plane",
    "PlaneConeSection",
    "Point",
    "PreconditionViolated",
    "Vector",
    "VertexInput",
    "collinear",
    "cone_classify",
    "cone_form",
    "in_plane",
    "line_cone_intersect",
    "line_joining",
    "lines_meet",
    "on_axis_t",
    "on_cone",
    "on_line",
    "parallel",
    "plane_cone_classify",
    "same_plane",
    "sloped_point_on_line",
    "space2",
    "tangent_plane_at",
    "tangent_plane_through_outside",
    "tangent_points_through_outside",
    "time2",
    "vector_algebra",
]


class GeometryError(ValueError):
    pass


class DegenerateLine(GeometryError):
    pass


class DegeneratePlane(GeometryError):
    pass


class NotOnCone(GeometryError):
    pass


class VertexInput(GeometryError):
    pass


class NotOutside(GeometryError):
    pass


class PreconditionViolated(GeometryError):
    pass


@dataclass(frozen=True)
class Vector:
    dt: Scalar
    dx: Scalar
    dy: Scalar
    dz: Scalar

    def __post_init__(self):
        for name in ("dt", "dx", "dy", "dz"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    @classmethod
    def of(cls, *comps: Number) -> Vector:
        return cls(*comps)

    def __iter__(self) -> Iterator[Scalar]:
        return iter((self.dt, self.dx, self.dy, self.dz))

    @property
    def spatial(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.dx, self.dy, self.dz)

    def __add__(self, other: Vector) -> Vector:
        return Vector(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other: Vector) -> Vector:
        return Vector(*(a - b for a, b in zip(self, other)))

    def __neg__(self) -> Vector:
        return Vector(*(-a for a in self))

    def __mul__(self, s: Number) -> Vector:
        s = as_scalar(s)
        return Vector(*(a * s for a in self))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self)

    def spatial_dot(self, other: Vector) -> Scalar:
        return self.dx * other.dx + self.dy * other.dy + self.dz * other.dz

    def normalized(self) -> Vector:
        """Scaled so the first nonzero component is 1."""
        lead = next(a for a in self if not a.is_zero())
        return self * lead.inverse()


@dataclass(frozen=True)
class Point:
    t: Scalar
    x: Scalar
    y: Scalar
    z: Scalar

    def __post_init__(self):
        for name in ("t", "x", "y", "z"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    def __iter__(self) -> Iterator[Scalar]:
        return iter((self.t, self.x, self.y, self.z))

    def __sub__(self, other: Point) -> Vector:
        return Vector(*(a - b for a, b in zip(self, other)))

    def __add__(self, v: Vector) -> Point:
        return Point(*(a + b for a, b in zip(self, v)))

    @property
    def tval(self) -> Scalar:
        return self.t


ORIGIN = Point(0, 0, 0, 0)
T_AXIS = Vector(1, 0, 0, 0)


@dataclass(frozen=True)
class Line:
    base: Point
    direction: Vector

    def __post_init__(self):
        if self.direction.is_zero():
            raise DegenerateLine("line direction is the zero vector")

    def at(self, s: Number) -> Point:
        return self.base + self.direction * s


@dataclass(frozen=True)
class Plane:
    base: Point
    d1: Vector
    d2: Vector

    def __post_init__(self):
        if _linalg.rank([list(self.d1), list(self.d2)]) != 2:
            raise DegeneratePlane("plane directions are linearly dependent")

    def at(self, a: Number, b: Number) -> Point:
        return self.base + self.d1 * a + self.d2 * b


@dataclass(frozen=True)
class Cone:
    vertex: Point
    slope: Scalar

    def __post_init__(self):
        object.__setattr__(self, "slope", as_scalar(self.slope))
        if self.slope.sign() <= 0:
            raise GeometryError("cone slope must be positive")


class VectorAlgebra(NamedTuple):
    sum: Vector
    scaled: Vector
    spatial_dot: Scalar
    is_orthogonal: bool


def cone_form(u: Vector, v: Vector, slope: Number) -> Scalar:
    """The bilinear form whose null vectors are the cone generators."""
    slope = as_scalar(slope)
    return u.spatial_dot(v) - slope * slope * u.dt * v.dt


def vector_algebra(u: Vector, v: Vector, s: Number, slope: Number | None = None) -> VectorAlgebra:
    dot = u.spatial_dot(v)
    orth = cone_form(u, v, slope) if slope is not None else dot
    return VectorAlgebra(u + v, u * s, dot, orth.is_zero())


def space2(p: Point, q: Point) -> Scalar:
    dx, dy, dz = p.x - q.x, p.y - q.y, p.z - q.z
    return dx * dx + dy * dy + dz * dz


def time2(p: Point, q: Point) -> Scalar:
    dt = p.t - q.t
    return dt * dt


def collinear(a: Point, b: Point, c: Point) -> bool:
    return _linalg.rank([list(b - a), list(c - a)]) <= 1


def line_joining(a: Point, b: Point) -> Line:
    if a == b:
        raise DegenerateLine("cannot join a point to itself")
    return Line(a, b - a)


def on_line(p: Point, line: Line) -> bool:
    return _linalg.rank([list(line.direction), list(p - line.base)]) == 1


def parallel(l1: Line, l2: Line) -> bool:
    return _linalg.rank([list(l1.direction), list(l2.direction)]) == 1


class MeetingKind(str, enum.Enum):
    IDENTICAL = "identical"
    MEET = "meetAt"
    DISJOINT = "disjoint"


@dataclass(frozen=True)
class LineMeeting:
    kind: MeetingKind
    point: Point | None = None


def lines_meet(l1: Line, l2: Line) -> LineMeeting:
    if parallel(l1, l2):
        if on_line(l2.base, l1):
            return LineMeeting(MeetingKind.IDENTICAL)
        return LineMeeting(MeetingKind.DISJOINT)
    # base1 + s d1 = base2 + u d2
    a = [[p, -q] for p, q in zip(l1.direction, l2.direction)]
    rhs = list(l2.base - l1.base)
    sol = _linalg.solve(a, rhs)
    if sol is None:
        return LineMeeting(MeetingKind.DISJOINT)
    return LineMeeting(MeetingKind.MEET, l1.at(sol[0]))


def in_plane(p: Point, pl: Plane) -> bool:
    return _linalg.rank([list(pl.d1), list(pl.d2), list(p - pl.base)]) == 2


def same_plane(p1: Plane, p2: Plane) -> bool:
    return (
        in_plane(p2.base, p1)
        and in_plane(p2.base + p2.d1, p1)
        and in_plane(p2.base + p2.d2, p1)
    )


def on_axis_t(p: Point) -> bool:
    return p.x.is_zero() and p.y.is_zero() and p.z.is_zero()


class ConePosition(str, enum.Enum):
    ON = "onCone"
    INSIDE = "insideCone"
    OUTSIDE = "outsideCone"


def _cone_value(p: Point, c: Cone) -> Scalar:
    return space2(c.vertex, p) - c.slope * c.slope * time2(c.vertex, p)


def cone_classify(p: Point, c: Cone) -> ConePosition:
    s = _cone_value(p, c).sign()
    if s == 0:
        return ConePosition.ON
    return ConePosition.INSIDE if s < 0 else ConePosition.OUTSIDE


def on_cone(p: Point, c: Cone) -> bool:
    return _cone_value(p, c).is_zero()


class SectionKind(str, enum.Enum):
    VERTEX_ONLY = "vertexOnly"
    ONE_LINE = "oneLine"
    TWO_LINES = "twoLines"
    NOT_THROUGH_VERTEX = "notThroughVertex"


@dataclass(frozen=True)
class PlaneConeSection:
    kind: SectionKind
    lines: tuple[Line, ...] = ()


def plane_cone_classify(
    pl: Plane, c: Cone, mode: FieldMode | str = FieldMode.EUCLIDEAN
) -> PlaneConeSection:
    """Intersect a plane through the cone vertex with the cone.

    With p = vertex + a*d1 + b*d2 the cone equation becomes the binary
    quadratic A a^2 + 2B ab + C b^2 = 0, classified by B^2 - AC.
    """
    if not in_plane(c.vertex, pl):
        return PlaneConeSection(SectionKind.NOT_THROUGH_VERTEX)
    d1, d2 = pl.d1, pl.d2
    A = cone_form(d1, d1, c.slope)
    B = cone_form(d1, d2, c.slope)
    C = cone_form(d2, d2, c.slope)
    disc = B * B - A * C
    ds = disc.sign()
    if ds < 0:
        return PlaneConeSection(SectionKind.VERTEX_ONLY)
    if A.is_zero() and B.is_zero() and C.is_zero():
        raise GeometryError("a 2-plane cannot lie inside a lightcone")

    def line(a: Scalar, b: Scalar) -> Line:
        return Line(c.vertex, (d1 * a + d2 * b).normalized())

    if ds == 0:
        if A.is_zero():
            return PlaneConeSection(SectionKind.ONE_LINE, (line(ONE, ZERO),))
        return PlaneConeSection(SectionKind.ONE_LINE, (line(-B, A),))
    if A.is_zero():
        return PlaneConeSection(SectionKind.TWO_LINES, (line(ONE, ZERO), line(-C, 2 * B)))
    root = sqrt(disc, mode)
    roots = sorted([(-B - root) / A, (-B + root) / A])
    return PlaneConeSection(SectionKind.TWO_LINES, tuple(line(r, ONE) for r in roots))


# -- tangent planes ----------------------------------------------------------
#
# The tangent plane at a cone point e is spanned by the generator w = e - vertex
# and a purely spatial vector u with spatial_dot(w, u) == 0.  u is the part of
# a reference axis orthogonal to w: the y axis on the future nappe (falling back
# to x when w is along y) and the x axis on the past nappe (falling back to z).
# Using different axes on the two nappes is what lets every outside point lie
# on some tangent plane.

_X, _Y, _Z = Vector(0, 1, 0, 0), Vector(0, 0, 1, 0), Vector(0, 0, 0, 1)


def _reject(axis: Vector, w: Vector) -> Vector:
    """|w_s|^2 axis - (w_s . axis) w_s, as a spatial vector."""
    ws = Vector(0, w.dx, w.dy, w.dz)
    return axis * ws.spatial_dot(ws) - ws * ws.spatial_dot(axis)


def _tangent_direction(w: Vector) -> Vector:
    axis, fallback = (_Y, _X) if w.dt.sign() > 0 else (_X, _Z)
    u = _reject(axis, w)
    if u.is_zero():
        u = _reject(fallback, w)
    return u.normalized()


def tangent_plane_at(e: Point, c: Cone) -> Plane:
    if e == c.vertex:
        raise VertexInput("tangent plane at the cone vertex is undefined")
    if not on_cone(e, c):
        raise NotOnCone("point is not on the cone")
    w = e - c.vertex
    return Plane(e, w, _tangent_direction(w))


def _tangent_candidates(f: Point, c: Cone, mode: FieldMode) -> Iterator[Point]:
    """Candidate tangent points for outside f, in preference order.

    The generator is normalized so that |e_s - v_s| == |f_s - v_s|.
    """
    d = f - c.vertex
    s = c.slope
    ds2 = d.spatial_dot(d)
    tau = sqrt(ds2, mode) / s
    blocked: NotEuclidean | None = None
    for sheet, axis, other in ((1, _Y, _X), (-1, _X, _Y)):
        wt = tau if sheet > 0 else -tau
        d_a = d.spatial_dot(axis)
        p = Vector(0, d.dx, d.dy, d.dz) - axis * d_a
        ws_list = []
        try:
            if not p.is_zero():
                p2 = p.spatial_dot(p)
                root = sqrt(p2 * (ds2 - s * s * d.dt * d.dt), mode)
                for sgn in (1, -1):
                    beta = (s * s * wt * d.dt * d_a + sgn * s * tau * root) / ds2
                    alpha = (s * s * wt * d.dt - beta * d_a) / p2
                    ws_list.append(p * alpha + axis * beta)
            else:
                w_a = s * s * wt * d.dt / d_a
                rest = sqrt(s * s * wt * wt - w_a * w_a, mode)
                for sgn in (1, -1):
                    ws_list.append(axis * w_a + other * (rest * sgn))
        except NotEuclidean as exc:
            blocked = exc
            continue
        for ws in ws_list:
            e = c.vertex + Vector(wt, ws.dx, ws.dy, ws.dz)
            if on_cone(e, c) and in_plane(f, tangent_plane_at(e, c)):
                yield e
    if blocked is not None:
        raise blocked


def tangent_points_through_outside(
    f: Point, c: Cone, mode: FieldMode | str = FieldMode.EUCLIDEAN
) -> list[Point]:
    """All tangent points e (in preference order) whose tangent plane holds f."""
    if cone_classify(f, c) is not ConePosition.OUTSIDE:
        raise NotOutside("point is not outside the cone")
    out: list[Point] = []
    gen = _tangent_candidates(f, c, FieldMode(mode))
    try:
        for e in gen:
            if e not in out:
                out.append(e)
    except NotEuclidean:
        if not out:
            raise
    if not out:
        raise GeometryError("no tangent plane through outside point (internal error)")
    return out


def tangent_plane_through_outside(
    f: Point, c: Cone, mode: FieldMode | str = FieldMode.EUCLIDEAN
) -> tuple[Point, Plane]:
    if cone_classify(f, c) is not ConePosition.OUTSIDE:
        raise NotOutside("point is not outside the cone")
    gen = _tangent_candidates(f, c, FieldMode(mode))
    e = next(gen, None)
    if e is None:
        raise GeometryError("no tangent plane through outside point (internal error)")
    return e, tangent_plane_at(e, c)


# -- line / cone ---------------------------------------------------------------

class IntersectionKind(str, enum.Enum):
    EMPTY = "empty"
    POINTS = "points"
    WHOLE_LINE = "wholeLine"


@dataclass(frozen=True)
class LineConeIntersection:
    kind: IntersectionKind
    points: tuple[Point, ...] = ()
    params: tuple[Scalar, ...] = ()


def line_cone_intersect(
    line: Line, c: Cone, mode: FieldMode | str = FieldMode.EUCLIDEAN
) -> LineConeIntersection:
    D = line.direction
    b0 = line.base - c.vertex
    A = cone_form(D, D, c.slope)
    B = cone_form(D, b0, c.slope)
    C = cone_form(b0, b0, c.slope)
    if A.is_zero():
        if B.is_zero():
            if C.is_zero():
                return LineConeIntersection(IntersectionKind.WHOLE_LINE)
            return LineConeIntersection(IntersectionKind.EMPTY)
        params = [-C / (2 * B)]
    else:
        disc = B * B - A * C
        sd = disc.sign()
        if sd < 0:
            return LineConeIntersection(IntersectionKind.EMPTY)
        if sd == 0:
            params = [-B / A]
        else:
            root = sqrt(disc, mode)
            params = sorted([(-B - root) / A, (-B + root) / A])
    return LineConeIntersection(
        IntersectionKind.POINTS, tuple(line.at(s) for s in params), tuple(params)
    )


def sloped_point_on_line(
    e: Point, f: Point, g: Point, s: Number, mode: FieldMode | str = FieldMode.EUCLIDEAN
) -> list[Point]:
    """Points p collinear with e and g with space2(p, f) == s^2 time2(p, f).

    e and f are distinct points of the time axis and g is off it, so the
    line through e and g always crosses the cone at f.
    """
    s = as_scalar(s)
    if not (on_axis_t(e) and on_axis_t(f)) or e == f or on_axis_t(g) or s.sign() <= 0:
        raise PreconditionViolated(
            "need e != f on the time axis, g off the axis and a positive slope"
        )
    res = line_cone_intersect(Line(e, g - e), Cone(f, s), mode)
    return list(res.points)
