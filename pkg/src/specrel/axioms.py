"""Auditors for the SpecRel axioms.

Every axiom is a first-order statement quantified over an infinite field, so
an audit evaluates its body on a finite deterministic grid plus a seeded
random sample.  A pass is therefore relative to the instances checked; a
fail always carries a counterexample that ``recheck_counterexample`` can
confirm from scratch.
"""

from __future__ import annotations

import enum
import hashlib
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, Mapping

from . import _linalg
from .field import FieldMode, NotEuclidean, Scalar, as_scalar, sqrt
from .geometry import (
    ORIGIN,
    Cone,
    GeometryError,
    Line,
    Point,
    SectionKind,
    Vector,
    collinear,
    in_plane,
    line_joining,
    on_axis_t,
    on_cone,
    parallel,
    plane_cone_classify,
    same_plane,
    space2,
    tangent_plane_at,
    tangent_plane_through_outside,
    time2,
)
from .worldview import (
    Body,
    Model,
    W,
    c_of,
    photon_sighting,
    plenum_photon,
    wvt,
)

__all__ = [
    "AxiomId",
    "AxiomReport",
    "NotApplicable",
    "SamplingConfig",
    "Verdict",
    "audit_all",
    "check_axiom",
    "coplanar",
    "overall_verdict",
    "recheck_counterexample",
]


class AxiomId(str, enum.Enum):
    AX_PH = "AxPh"
    AX_EV = "AxEv"
    AX_SELF = "AxSelf"
    AX_SYM = "AxSym"
    AX_WVT = "AxWVT"
    AX_WVT_SYM = "AxWVTSym"
    AX_LINES = "AxLines"
    AX_PLANES = "AxPlanes"
    AX_CONES = "AxCones"
    AX_EUCLIDEAN = "AxEuclidean"
    AX_TANGENT_BASE = "AxTangentBase"
    AX_TANGENT_VERTEX = "AxTangentVertex"
    AX_CONE_TANGENT = "AxConeTangent"
    AX_PARALLEL_CONES = "AxParallelCones"
    AX_PARALLEL_CONES_E = "AxParallelConesE"


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_CHECKABLE = "notCheckable"


class NotApplicable(ValueError):
    pass


@dataclass(frozen=True)
class SamplingConfig:
    seed: int = 0
    grid_radius: int = 1
    random_count: int = 8
    denominator_bound: int = 4

    def __post_init__(self):
        if self.grid_radius < 0:
            raise ValueError("grid_radius must be nonnegative")
        if self.random_count <= 0 or self.denominator_bound <= 0:
            raise ValueError("random_count and denominator_bound must be positive")


@dataclass(frozen=True)
class AxiomReport:
    axiom: AxiomId
    verdict: Verdict
    instances_checked: int
    counterexample: Mapping[str, Any] | None = None
    notes: tuple[str, ...] = field(default=())


# -- sampling ----------------------------------------------------------------

class _Sampler:
    def __init__(self, cfg: SamplingConfig, axiom: AxiomId):
        self.cfg = cfg
        digest = hashlib.sha256(f"{cfg.seed}:{axiom.value}".encode()).digest()
        self.rng = random.Random(int.from_bytes(digest[:8], "big"))

    def q(self, bound: int | None = None) -> Fraction:
        d = self.cfg.denominator_bound
        r = bound if bound is not None else self.cfg.grid_radius + 1
        return Fraction(self.rng.randint(-r * d, r * d), self.rng.randint(1, d))

    def nonzero_q(self) -> Fraction:
        while True:
            v = self.q()
            if v:
                return v

    def positive_q(self) -> Fraction:
        return abs(self.nonzero_q())

    def point(self) -> Point:
        return Point(self.q(), self.q(), self.q(), self.q())

    def vector(self) -> Vector:
        while True:
            v = Vector(self.q(), self.q(), self.q(), self.q())
            if not v.is_zero():
                return v

    def grid(self) -> list[Point]:
        r = self.cfg.grid_radius
        return [Point(*c) for c in itertools.product(range(-r, r + 1), repeat=4)]

    def events(self) -> list[Point]:
        return self.grid() + [self.point() for _ in range(self.cfg.random_count)]

    def few_events(self) -> list[Point]:
        """Axis points of the grid plus the random sample."""
        r = self.cfg.grid_radius
        pts = [ORIGIN]
        for i in range(4):
            for s in range(1, r + 1):
                for sgn in (1, -1):
                    c = [0, 0, 0, 0]
                    c[i] = s * sgn
                    pts.append(Point(*c))
        return pts + [self.point() for _ in range(self.cfg.random_count)]

    def unit_direction(self) -> tuple[Fraction, Fraction, Fraction]:
        a, b = self.q(), self.q()
        n = a * a + b * b + 1
        return (2 * a / n, 2 * b / n, (a * a + b * b - 1) / n)

    def null_vectors(self, c: Scalar) -> list[Vector]:
        """Lightlike vectors for slope c: axis ones, then random ones."""
        out = []
        for dt in (1, -1):
            for i in range(3):
                for sgn in (1, -1):
                    sp = [0, 0, 0]
                    sp[i] = sgn
                    out.append(Vector(dt, *(c * s for s in sp)))
        for _ in range(self.cfg.random_count):
            t = self.nonzero_q()
            out.append(Vector(t, *(c * t * n for n in self.unit_direction())))
        return out


# -- driver --------------------------------------------------------------------

_BLOCKED = object()


def _drive(axiom: AxiomId, instances: Iterator, notes: list[str]) -> AxiomReport:
    n = blocked = 0
    for ok, witness in instances:
        if ok is _BLOCKED:
            blocked += 1
            continue
        n += 1
        if not ok:
            return AxiomReport(axiom, Verdict.FAIL, n, witness, tuple(notes))
    if blocked:
        return AxiomReport(axiom, Verdict.NOT_CHECKABLE, n, None, tuple(notes))
    return AxiomReport(axiom, Verdict.PASS, n, None, tuple(notes))


def _need_observers(model: Model) -> list[str]:
    obs = model.observers
    if not obs:
        raise NotApplicable("the model has no inertial observers")
    return obs


def _pairs(model: Model) -> list[tuple[str, str]]:
    obs = _need_observers(model)
    return [(m, k) for m in obs for k in obs]


def _world_nulls(model: Model) -> list[Vector]:
    c = model.world_light_speed
    return [Vector(1, c, 0, 0), Vector(1, 0, 0, -c)]


def _test_bodies(model: Model, X: Point) -> list[Body]:
    """Extensional bodies plus plenum photons through and beside X."""
    bodies = list(model.bodies)
    if model.photon_plenum:
        for i, d in enumerate(_world_nulls(model)):
            bodies.append(plenum_photon(X, d, f"photon@{i}"))
        bodies.append(plenum_photon(X + Vector(0, 1, 0, 0), _world_nulls(model)[0], "photon@off"))
    return bodies


# -- worldview axioms ------------------------------------------------------------

def _ax_ph(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    obs = _need_observers(model)
    for m in obs:
        c = c_of(model, m)
        frame = model.frame(m)
        for b in model.bodies:
            if not b.ph or b.worldline is None:
                continue
            x = frame.apply(b.worldline.base)
            y = frame.apply(b.worldline.at(1))
            lhs, rhs = space2(x, y), c * c * time2(x, y)
            yield lhs == rhs, {
                "kind": "photonSpeed", "observer": m, "body": b.id,
                "x": x, "y": y, "space2": lhs, "c2time2": rhs,
            }
    if not model.photon_plenum:
        notes.append("existential direction needs a photon plenum; only photon speeds were checked")
        yield _BLOCKED, None
        return
    for m in obs:
        c = c_of(model, m)
        pairs = []
        for x in s.few_events():
            for d in s.null_vectors(c)[:6]:
                pairs.append((x, x + d))
            pairs.append((x, x + s.vector()))
            pairs.append((x, x))
        for x, y in pairs:
            lightlike = space2(x, y) == c * c * time2(x, y)
            exists = photon_sighting(model, m, x, y) is not None
            yield lightlike == exists, {
                "kind": "photonExistence", "observer": m, "x": x, "y": y,
                "photonExists": exists, "lightlike": lightlike,
            }


def _ax_ev(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    notes.append("the witness y is instantiated as wvt(k, m, x)")
    for m, k in _pairs(model):
        fm = model.frame(m)
        for x in s.events():
            y = wvt(model, k, m, x)
            for b in _test_bodies(model, fm.apply_inverse(x)):
                lhs, rhs = W(model, m, b, x), W(model, k, b, y)
                yield lhs == rhs, {
                    "m": m, "k": k, "body": b, "x": x, "y": y, "Wm": lhs, "Wk": rhs,
                }


def _ax_self(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    for m in _need_observers(model):
        me = model.body(m)
        frame = model.frame(m)
        candidates = []
        if me.worldline is not None:
            r = s.cfg.grid_radius + 1
            params = list(range(-r, r + 1)) + [s.q() for _ in range(s.cfg.random_count)]
            candidates += [frame.apply(me.worldline.at(t)) for t in params]
        candidates += s.events()
        for x in candidates:
            if W(model, m, m, x):
                yield on_axis_t(x), {"observer": m, "x": x, "W": True, "onAxisT": on_axis_t(x)}


def _time_row(model: Model, m: str) -> list[Scalar]:
    frame = model.frame(m)
    t0 = frame.apply(ORIGIN).t
    return [frame.apply(ORIGIN + e).t - t0 for e in
            (Vector(1, 0, 0, 0), Vector(0, 1, 0, 0), Vector(0, 0, 1, 0), Vector(0, 0, 0, 1))]


def _ax_sym(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    notes.append("x and x' (y and y') are read as sightings of the same event")
    for m, k in _pairs(model):
        fm, fk = model.frame(m), model.frame(k)
        basis = _linalg.nullspace([_time_row(model, m), _time_row(model, k)], 4)
        if not basis:
            continue
        pairs = []
        if model.photon_plenum:
            for X in s.few_events():
                coeffs = [s.q() for _ in basis]
                d = Vector(*(sum((c * v[i] for c, v in zip(coeffs, basis)), as_scalar(0)) for i in range(4)))
                pairs.append((X, X + d))
                for v in basis:
                    pairs.append((X, X + Vector(*v)))
        else:
            lines = [b.worldline for b in model.bodies if b.worldline is not None]
            for l1, l2 in itertools.combinations(lines, 2):
                for t in range(-1, 2):
                    X = l1.at(t)
                    # Y = l2.at(u) + d with d simultaneous to X in both frames
                    for u in range(-1, 2):
                        Y = l2.at(u)
                        diff = Y - X
                        tm = sum((a * b for a, b in zip(_time_row(model, m), diff)), as_scalar(0))
                        tk = sum((a * b for a, b in zip(_time_row(model, k), diff)), as_scalar(0))
                        if tm.is_zero() and tk.is_zero():
                            pairs.append((X, Y))
        for X, Y in pairs:
            x, y, x2, y2 = fm.apply(X), fm.apply(Y), fk.apply(X), fk.apply(Y)
            if x.t != y.t or x2.t != y2.t:
                continue
            lhs, rhs = space2(x, y), space2(x2, y2)
            yield lhs == rhs, {
                "m": m, "k": k, "x": x, "y": y, "x'": x2, "y'": y2,
                "space2_m": lhs, "space2_k": rhs,
            }


def _ax_wvt(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    for m, k in _pairs(model):
        fk = model.frame(k)
        for x in s.few_events():
            X = fk.apply_inverse(x)
            bodies = _test_bodies(model, X)
            events = [x]
            for b in model.bodies:
                if b.worldline is not None:
                    events.append(fk.apply(b.worldline.at(x.t)))
            for b in bodies:
                for p in events:
                    lhs, rhs = W(model, k, b, p), W(model, m, b, wvt(model, m, k, p))
                    yield lhs == rhs, {"m": m, "k": k, "body": b, "x": p, "Wk": lhs, "Wm": rhs}


def _ax_wvt_sym(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    shift = Vector(1, 0, 0, 0)
    for m, k in _pairs(model):
        for x in s.events():
            y = wvt(model, k, m, x)
            back = wvt(model, m, k, y)
            yield back == x, {"m": m, "k": k, "x": x, "y": y, "yIsImage": True, "xIsImage": back == x}
            y2 = y + shift
            back2 = wvt(model, m, k, y2)
            yield back2 != x, {"m": m, "k": k, "x": x, "y": y2, "yIsImage": False, "xIsImage": back2 == x}


def coplanar(points: list[Point]) -> bool:
    base = points[0]
    return _linalg.rank([list(p - base) for p in points[1:]]) <= 2


def _ax_lines(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    for m, k in _pairs(model):
        if m == k:
            continue
        for p in s.events():
            d = s.vector()
            for lam in (2, -1, s.q()):
                pts = [p, p + d, p + d * lam]
                imgs = [wvt(model, m, k, q) for q in pts]
                yield collinear(*imgs), {"m": m, "k": k, "points": pts, "images": imgs}


def _ax_planes(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    for m, k in _pairs(model):
        if m == k:
            continue
        for p in s.events():
            d1, d2 = s.vector(), s.vector()
            if _linalg.rank([list(d1), list(d2)]) < 2:
                continue
            pts = [p, p + d1, p + d2, p + d1 * s.q() + d2 * s.q()]
            imgs = [wvt(model, m, k, q) for q in pts]
            yield coplanar(imgs), {"m": m, "k": k, "points": pts, "images": imgs}


def _ax_cones(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    for m, k in _pairs(model):
        if m == k:
            continue
        cm, ck = c_of(model, m), c_of(model, k)
        for v in s.few_events():
            vi = wvt(model, m, k, v)
            for d in s.null_vectors(ck):
                p = v + d
                pi = wvt(model, m, k, p)
                lhs, rhs = space2(vi, pi), cm * cm * time2(vi, pi)
                yield lhs == rhs, {
                    "m": m, "k": k, "vertex": v, "point": p,
                    "vertexImage": vi, "pointImage": pi,
                    "space2": lhs, "c2time2": rhs,
                }


def _ax_euclidean(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    mode = model.field_mode
    r = s.cfg.grid_radius
    values: list[Scalar] = [as_scalar(n) for n in range(0, 4 * r + 5)]
    values += [as_scalar(abs(s.q())) for _ in range(s.cfg.random_count)]
    if mode is FieldMode.EUCLIDEAN:
        values += [abs(s.q()) + sqrt(abs(s.q())) for _ in range(s.cfg.random_count)]
    for x in values:
        try:
            root = sqrt(x, mode)
        except NotEuclidean:
            yield False, {"x": x, "mode": mode.value, "sqrt": None}
            continue
        yield root.sign() >= 0 and root * root == x, {"x": x, "mode": mode.value, "sqrt": root}


# -- cone axioms -------------------------------------------------------------------

def _cones(model: Model, s: _Sampler) -> list[Cone]:
    slopes: list[Scalar] = []
    for m in model.observers:
        c = c_of(model, m)
        if c not in slopes:
            slopes.append(c)
    if not slopes:
        slopes.append(as_scalar(1))
    slopes.append(as_scalar(s.positive_q()))
    return [Cone(v, c) for c in slopes for v in [ORIGIN] + [s.point() for _ in range(s.cfg.random_count)]]


def _cone_points(s: _Sampler, cone: Cone) -> list[Point]:
    return [cone.vertex + d for d in s.null_vectors(cone.slope)]


def _ax_tangent_base(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    for cone in _cones(model, s):
        for e in _cone_points(s, cone):
            pl = tangent_plane_at(e, cone)
            yield pl.base == e, {"cone": cone, "e": e, "plane": pl}


def _ax_tangent_vertex(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    for cone in _cones(model, s):
        for e in _cone_points(s, cone):
            pl = tangent_plane_at(e, cone)
            yield in_plane(cone.vertex, pl), {"cone": cone, "e": e, "plane": pl}


def _ax_cone_tangent(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    mode = model.field_mode
    for cone in _cones(model, s):
        pts = _cone_points(s, cone)
        for i, e in enumerate(pts):
            pl = tangent_plane_at(e, cone)
            w = e - cone.vertex
            section = plane_cone_classify(pl, cone, mode)
            ok = section.kind is SectionKind.ONE_LINE and parallel(
                section.lines[0], Line(cone.vertex, w)
            )
            yield ok, {"cone": cone, "e": e, "plane": pl, "section": section.kind.value}
            probes = [
                cone.vertex + w * 2,
                e + pl.d2,
                pts[(i + 1) % len(pts)],
                e + s.vector(),
            ]
            for p in probes:
                lhs = in_plane(p, pl) and on_cone(p, cone)
                rhs = collinear(cone.vertex, e, p)
                yield lhs == rhs, {
                    "cone": cone, "e": e, "plane": pl, "point": p,
                    "inPlaneAndOnCone": lhs, "collinear": rhs,
                }


def _ax_parallel_cones(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    notes.append("checked on induced pairs: vertex F in the tangent plane, f on the same nappe")
    for cone in _cones(model, s):
        for e in _cone_points(s, cone):
            pl = tangent_plane_at(e, cone)
            w = e - cone.vertex
            for a, b, lam in ((1, 1, 2), (s.q(), s.q(), s.positive_q())):
                vf = pl.at(0, b) + w * a + (cone.vertex - e)
                fcone = Cone(vf, cone.slope)
                f = vf + w * lam
                ok = same_plane(pl, tangent_plane_at(f, fcone)) and parallel(
                    line_joining(cone.vertex, e), line_joining(vf, f)
                )
                yield ok, {"cone": cone, "e": e, "fCone": fcone, "f": f}


def _outside_offsets(s: _Sampler, c: Scalar) -> list[Vector]:
    fixed = [
        Vector(0, 1, 0, 0), Vector(0, 0, 1, 0), Vector(0, 0, 0, 1), Vector(0, -1, 0, 0),
        Vector(0, 0, -1, 0), Vector(0, 0, 0, -1), Vector(0, 1, 0, 1), Vector(0, 1, 1, 1),
        Vector(1, c * 2, 0, 0), Vector(-1, 0, c * 2, c),
    ]
    out = list(fixed)
    while len(out) < len(fixed) + s.cfg.random_count:
        d = s.vector()
        if d.spatial_dot(d) > c * c * d.dt * d.dt:
            out.append(d)
    return out


def _ax_parallel_cones_e(model: Model, s: _Sampler, notes: list[str]) -> Iterator:
    mode = model.field_mode
    blocked = 0
    for cone in _cones(model, s):
        for d in _outside_offsets(s, cone.slope):
            f = cone.vertex + d
            try:
                e, pl = tangent_plane_through_outside(f, cone, mode)
            except NotEuclidean:
                blocked += 1
                yield _BLOCKED, None
                continue
            except GeometryError:
                yield False, {"cone": cone, "f": f, "e": None}
                continue
            ok = on_cone(e, cone) and e != cone.vertex and in_plane(f, tangent_plane_at(e, cone))
            yield ok, {"cone": cone, "f": f, "e": e}
    if blocked:
        notes.append(f"{blocked} instances need square roots outside the {mode.value} field")


_CHECKERS = {
    AxiomId.AX_PH: _ax_ph,
    AxiomId.AX_EV: _ax_ev,
    AxiomId.AX_SELF: _ax_self,
    AxiomId.AX_SYM: _ax_sym,
    AxiomId.AX_WVT: _ax_wvt,
    AxiomId.AX_WVT_SYM: _ax_wvt_sym,
    AxiomId.AX_LINES: _ax_lines,
    AxiomId.AX_PLANES: _ax_planes,
    AxiomId.AX_CONES: _ax_cones,
    AxiomId.AX_EUCLIDEAN: _ax_euclidean,
    AxiomId.AX_TANGENT_BASE: _ax_tangent_base,
    AxiomId.AX_TANGENT_VERTEX: _ax_tangent_vertex,
    AxiomId.AX_CONE_TANGENT: _ax_cone_tangent,
    AxiomId.AX_PARALLEL_CONES: _ax_parallel_cones,
    AxiomId.AX_PARALLEL_CONES_E: _ax_parallel_cones_e,
}


def check_axiom(model: Model, axiom: AxiomId | str, cfg: SamplingConfig = SamplingConfig()) -> AxiomReport:
    axiom = AxiomId(axiom)
    notes: list[str] = []
    return _drive(axiom, _CHECKERS[axiom](model, _Sampler(cfg, axiom), notes), notes)


def audit_all(model: Model, cfg: SamplingConfig = SamplingConfig()) -> list[AxiomReport]:
    reports = []
    for axiom in AxiomId:
        try:
            reports.append(check_axiom(model, axiom, cfg))
        except NotApplicable as exc:
            reports.append(AxiomReport(axiom, Verdict.NOT_CHECKABLE, 0, None, (str(exc),)))
    return reports


def overall_verdict(reports: list[AxiomReport]) -> Verdict:
    return Verdict.FAIL if any(r.verdict is Verdict.FAIL for r in reports) else Verdict.PASS


# -- re-checking counterexamples ---------------------------------------------------

def recheck_counterexample(model: Model, report: AxiomReport) -> bool:
    """True iff the report's counterexample really violates the axiom."""
    cx = report.counterexample
    if report.verdict is not Verdict.FAIL or cx is None:
        return False
    a = report.axiom
    if a is AxiomId.AX_PH:
        m, x, y = cx["observer"], cx["x"], cx["y"]
        c = c_of(model, m)
        lightlike = space2(x, y) == c * c * time2(x, y)
        if cx["kind"] == "photonSpeed":
            b = model.body(cx["body"])
            return b.ph and W(model, m, b, x) and W(model, m, b, y) and not lightlike
        return (photon_sighting(model, m, x, y) is not None) != lightlike
    if a is AxiomId.AX_EV:
        m, k, b, x = cx["m"], cx["k"], cx["body"], cx["x"]
        return W(model, m, b, x) != W(model, k, b, wvt(model, k, m, x))
    if a is AxiomId.AX_SELF:
        m, x = cx["observer"], cx["x"]
        return W(model, m, m, x) and not on_axis_t(x)
    if a is AxiomId.AX_SYM:
        m, k = cx["m"], cx["k"]
        x, y, x2, y2 = cx["x"], cx["y"], cx["x'"], cx["y'"]
        same_events = wvt(model, k, m, x) == x2 and wvt(model, k, m, y) == y2
        return same_events and x.t == y.t and x2.t == y2.t and space2(x, y) != space2(x2, y2)
    if a is AxiomId.AX_WVT:
        m, k, b, x = cx["m"], cx["k"], cx["body"], cx["x"]
        return W(model, k, b, x) != W(model, m, b, wvt(model, m, k, x))
    if a is AxiomId.AX_WVT_SYM:
        m, k, x, y = cx["m"], cx["k"], cx["x"], cx["y"]
        return (y == wvt(model, k, m, x)) != (x == wvt(model, m, k, y))
    if a is AxiomId.AX_LINES:
        m, k, pts = cx["m"], cx["k"], cx["points"]
        return collinear(*pts) and not collinear(*(wvt(model, m, k, p) for p in pts))
    if a is AxiomId.AX_PLANES:
        m, k, pts = cx["m"], cx["k"], cx["points"]
        return coplanar(pts) and not coplanar([wvt(model, m, k, p) for p in pts])
    if a is AxiomId.AX_CONES:
        m, k, v, p = cx["m"], cx["k"], cx["vertex"], cx["point"]
        if not on_cone(p, Cone(v, c_of(model, k))):
            return False
        return not on_cone(wvt(model, m, k, p), Cone(wvt(model, m, k, v), c_of(model, m)))
    if a is AxiomId.AX_EUCLIDEAN:
        x = cx["x"]
        if x.sign() < 0:
            return False
        try:
            r = sqrt(x, model.field_mode)
        except NotEuclidean:
            return True
        return not (r.sign() >= 0 and r * r == x)
    cone = cx.get("cone")
    if a is AxiomId.AX_TANGENT_BASE:
        return on_cone(cx["e"], cone) and tangent_plane_at(cx["e"], cone).base != cx["e"]
    if a is AxiomId.AX_TANGENT_VERTEX:
        return on_cone(cx["e"], cone) and not in_plane(cone.vertex, tangent_plane_at(cx["e"], cone))
    if a is AxiomId.AX_CONE_TANGENT:
        e = cx["e"]
        pl = tangent_plane_at(e, cone)
        if "point" not in cx:
            section = plane_cone_classify(pl, cone, model.field_mode)
            return not (
                section.kind is SectionKind.ONE_LINE
                and parallel(section.lines[0], Line(cone.vertex, e - cone.vertex))
            )
        p = cx["point"]
        return (in_plane(p, pl) and on_cone(p, cone)) != collinear(cone.vertex, e, p)
    if a is AxiomId.AX_PARALLEL_CONES:
        e, f, fcone = cx["e"], cx["f"], cx["fCone"]
        pl = tangent_plane_at(e, cone)
        premise = (
            on_cone(e, cone) and on_cone(f, fcone) and fcone.slope == cone.slope
            and in_plane(fcone.vertex, pl) and in_plane(f, pl)
        )
        conclusion = same_plane(pl, tangent_plane_at(f, fcone)) and parallel(
            line_joining(cone.vertex, e), line_joining(fcone.vertex, f)
        )
        return premise and not conclusion
    if a is AxiomId.AX_PARALLEL_CONES_E:
        f, e = cx["f"], cx["e"]
        if e is None:
            try:
                tangent_plane_through_outside(f, cone, model.field_mode)
            except (GeometryError, NotEuclidean):
                return True
            return False
        return not (on_cone(e, cone) and e != cone.vertex and in_plane(f, tangent_plane_at(e, cone)))
    raise AssertionError(a)
