"""The no-FTL result for inertial observers: a direct check and a refutation.

``check_noftl`` evaluates the theorem on a pair of sightings.  Given a
hypothesis that some observer k moves faster than light relative to m,
together with a purported m-to-k coordinate map, ``build_ftl_witness`` runs
the five-step argument on concrete coordinates.  Step 5 produces a point z
that should lie on two distinct parallel lines.  Since that cannot happen,
some axiom instance used along the way must fail for the supplied map, and
the certificate names the first one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Mapping

from .axioms import AxiomId
from .field import FieldMode, NotEuclidean, Scalar, as_scalar
from .geometry import (
    Cone,
    GeometryError,
    Line,
    MeetingKind,
    Plane,
    Point,
    PreconditionViolated,
    collinear,
    cone_classify,
    ConePosition,
    in_plane,
    line_joining,
    lines_meet,
    on_axis_t,
    on_cone,
    on_line,
    parallel,
    same_plane,
    sloped_point_on_line,
    space2,
    tangent_plane_at,
    tangent_plane_through_outside,
    time2,
)
from .worldview import CoordinateMap, Model, W, c_of
from . import serialize as ser

__all__ = [
    "BadHypothesis",
    "CertificateVerdict",
    "ContradictionCertificate",
    "FTLHypothesis",
    "NoFTLResult",
    "NotFTL",
    "PreconditionViolated",
    "ValidationResult",
    "VerdictKind",
    "build_ftl_witness",
    "certificate_from_json",
    "certificate_to_json",
    "check_noftl",
    "hypothesis_from_json",
    "hypothesis_to_json",
    "validate_certificate",
]

CERTIFICATE_FORMAT = "specrel-certificate/1"


class NotFTL(ValueError):
    pass


class BadHypothesis(ValueError):
    pass


@dataclass(frozen=True)
class NoFTLResult:
    holds: bool
    space2: Scalar
    c2time2: Scalar

    def __bool__(self) -> bool:
        return self.holds


def check_noftl(model: Model, m: str, k: str, e: Point, f: Point) -> NoFTLResult:
    model.frame(m)
    model.frame(k)
    if e == f:
        raise PreconditionViolated("enotf: the two sightings e and f must differ")
    if not (W(model, m, k, e) and W(model, m, k, f)):
        raise PreconditionViolated(f"{m} does not see {k} at both e and f")
    c = c_of(model, m)
    lhs, rhs = space2(e, f), c * c * time2(e, f)
    return NoFTLResult(lhs <= rhs, lhs, rhs)


@dataclass(frozen=True)
class FTLHypothesis:
    e: Point
    f: Point
    c_m: Scalar
    purported_map: CoordinateMap
    c_k: Scalar

    def __post_init__(self):
        object.__setattr__(self, "c_m", as_scalar(self.c_m))
        object.__setattr__(self, "c_k", as_scalar(self.c_k))


class VerdictKind(str, enum.Enum):
    PARALLEL_LINES_MEET = "parallelLinesMeetAt"
    AXIOM_VIOLATED = "axiomViolated"


@dataclass(frozen=True)
class CertificateVerdict:
    kind: VerdictKind
    point: Point | None = None
    axiom: AxiomId | None = None
    witness: Mapping[str, Any] | None = None


@dataclass(frozen=True)
class ContradictionCertificate:
    hypothesis: FTLHypothesis
    field_mode: FieldMode
    converse: tuple[Scalar, Scalar]
    e_cone: Cone
    g: Point
    tangent_plane: Plane
    wvte: Point
    wvtf: Point
    wvtg: Point
    wvtz: Point
    z: Point
    f_cone: Cone
    line_a: Line
    line_b: Line
    verdict: CertificateVerdict

    @property
    def steps(self) -> list[tuple[str, dict]]:
        return [
            ("converseCheck", {"space2": self.converse[0], "c2time2": self.converse[1]}),
            ("eCone", {"eCone": self.e_cone}),
            ("tangentPlane", {"g": self.g, "tangentPlane": self.tangent_plane}),
            ("switchToK", {"wvte": self.wvte, "wvtf": self.wvtf, "wvtg": self.wvtg}),
            ("findZ", {"wvtz": self.wvtz, "z": self.z, "fCone": self.f_cone}),
        ]


def _check_hypothesis(h: FTLHypothesis) -> None:
    if h.e == h.f:
        raise BadHypothesis("enotf: e and f must differ")
    if h.c_m.sign() <= 0 or h.c_k.sign() <= 0:
        raise BadHypothesis("light speeds must be positive")
    P = h.purported_map
    if not (on_axis_t(P.apply(h.e)) and on_axis_t(P.apply(h.f))):
        raise BadHypothesis("the purported map must send e and f onto k's time axis")


def _derive_verdict(
    h: FTLHypothesis, e_cone: Cone, g: Point, wvtz: Point, z: Point,
    f_cone: Cone, line_a: Line, line_b: Line,
) -> CertificateVerdict:
    """Walk the step-5 axiom instances in order; the first failure is the verdict."""
    P = h.purported_map
    e, f = h.e, h.f
    if not collinear(e, g, z):
        return CertificateVerdict(VerdictKind.AXIOM_VIOLATED, None, AxiomId.AX_LINES, ser.to_json({
            "points": [P.apply(e), P.apply(g), wvtz], "images": [e, g, z],
        }))
    if not on_cone(f, Cone(z, h.c_m)):
        return CertificateVerdict(VerdictKind.AXIOM_VIOLATED, None, AxiomId.AX_CONES, ser.to_json({
            "vertex": wvtz, "point": P.apply(f), "vertexImage": z, "pointImage": f,
            "space2": space2(z, f), "c2time2": h.c_m * h.c_m * time2(z, f),
        }))
    if not on_cone(z, e_cone):
        return CertificateVerdict(VerdictKind.AXIOM_VIOLATED, None, AxiomId.AX_CONE_TANGENT, ser.to_json({
            "cone": e_cone, "e": g, "point": z,
        }))
    if not (
        same_plane(tangent_plane_at(g, e_cone), tangent_plane_at(z, f_cone))
        and parallel(line_a, line_b)
    ):
        return CertificateVerdict(VerdictKind.AXIOM_VIOLATED, None, AxiomId.AX_PARALLEL_CONES, ser.to_json({
            "cone": e_cone, "e": g, "fCone": f_cone, "f": z,
        }))
    meet = lines_meet(line_a, line_b)
    if meet.kind is MeetingKind.MEET:
        return CertificateVerdict(VerdictKind.PARALLEL_LINES_MEET, meet.point)
    raise GeometryError("all axiom instances hold but the lines do not meet (internal error)")


def build_ftl_witness(
    h: FTLHypothesis, mode: FieldMode | str = FieldMode.EUCLIDEAN
) -> ContradictionCertificate:
    mode = FieldMode(mode)
    _check_hypothesis(h)
    e, f, P = h.e, h.f, h.purported_map
    # step 1
    lhs, rhs = space2(e, f), h.c_m * h.c_m * time2(e, f)
    if not lhs > rhs:
        raise NotFTL(f"space2 = {lhs} does not exceed c^2 time2 = {rhs}")
    # step 2
    e_cone = Cone(e, h.c_m)
    # step 3
    try:
        g, plane = tangent_plane_through_outside(f, e_cone, mode)
    except NotEuclidean as exc:
        raise NotEuclidean(f"step 3 (tangent plane through f): {exc}") from None
    # step 4
    wvte, wvtf, wvtg = P.apply(e), P.apply(f), P.apply(g)
    if collinear(e, g, f) or on_axis_t(wvtg):
        raise BadHypothesis("the purported map sends g onto k's time axis")
    # step 5
    try:
        wvtz = sloped_point_on_line(wvte, wvtf, wvtg, h.c_k, mode)[0]
    except NotEuclidean as exc:
        raise NotEuclidean(f"step 5 (point z on k's lightcone at f): {exc}") from None
    z = P.apply_inverse(wvtz)
    f_cone = Cone(f, h.c_m)
    line_a, line_b = line_joining(e, g), line_joining(f, z)
    verdict = _derive_verdict(h, e_cone, g, wvtz, z, f_cone, line_a, line_b)
    return ContradictionCertificate(
        h, mode, (lhs, rhs), e_cone, g, plane, wvte, wvtf, wvtg, wvtz, z, f_cone,
        line_a, line_b, verdict,
    )


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    mismatch: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _first_mismatch(cert: ContradictionCertificate, h: FTLHypothesis) -> str | None:
    if cert.hypothesis != h:
        return "certificate was issued for a different hypothesis"
    try:
        _check_hypothesis(h)
    except BadHypothesis as exc:
        return f"hypothesis: {exc}"
    e, f, P = h.e, h.f, h.purported_map
    cm2 = h.c_m * h.c_m
    if cert.converse != (space2(e, f), cm2 * time2(e, f)):
        return "converseCheck: recorded separations differ"
    if not cert.converse[0] > cert.converse[1]:
        return "converseCheck: f is not outside the cone at e"
    if cert.e_cone != Cone(e, h.c_m):
        return "eCone: not the m-lightcone at e"
    g = cert.g
    if cone_classify(f, cert.e_cone) is not ConePosition.OUTSIDE:
        return "tangentPlane: f is not outside eCone"
    if not on_cone(g, cert.e_cone) or g == e:
        return "tangentPlane: g is not a non-vertex point of eCone"
    if g == f:
        return "tangentPlane: g equals f"
    if not same_plane(cert.tangent_plane, tangent_plane_at(g, cert.e_cone)):
        return "tangentPlane: recorded plane is not the tangent plane at g"
    if not in_plane(f, cert.tangent_plane):
        return "tangentPlane: f is not in the tangent plane"
    if (cert.wvte, cert.wvtf, cert.wvtg) != (P.apply(e), P.apply(f), P.apply(g)):
        return "switchToK: transformed points differ from the purported map"
    if not (on_axis_t(cert.wvte) and on_axis_t(cert.wvtf)):
        return "switchToK: wvte or wvtf is off k's time axis"
    if cert.wvte == cert.wvtf or cert.wvtf == cert.wvtg or cert.wvtg == cert.wvte:
        return "switchToK: transformed points are not pairwise distinct"
    if on_axis_t(cert.wvtg) or collinear(e, g, f):
        return "switchToK: g is on k's time axis"
    wz = cert.wvtz
    if not collinear(cert.wvte, cert.wvtg, wz):
        return "findZ: wvtz is not on the line through wvte and wvtg"
    if space2(wz, cert.wvtf) != h.c_k * h.c_k * time2(wz, cert.wvtf):
        return "findZ: wvtz is not on k's lightcone at wvtf"
    if not (on_line(e, cert.line_a) and on_line(g, cert.line_a)):
        return "lineA: does not join e and g"
    if not (on_line(f, cert.line_b) and on_line(cert.z, cert.line_b)):
        return "lineB: does not join f and z"
    if P.apply(cert.z) != wz:
        return "findZ: z is not the m-image of wvtz"
    if cert.f_cone != Cone(f, h.c_m):
        return "findZ: fCone is not the m-lightcone at f"
    try:
        verdict = _derive_verdict(
            h, cert.e_cone, g, wz, cert.z, cert.f_cone, cert.line_a, cert.line_b
        )
    except GeometryError as exc:
        return f"verdict: {exc}"
    if verdict != cert.verdict:
        return f"verdict: recorded {cert.verdict.kind.value} does not match re-derived {verdict.kind.value}"
    return None


def validate_certificate(
    cert: ContradictionCertificate, h: FTLHypothesis | None = None
) -> ValidationResult:
    """Re-derive every recorded step from scratch; never raises."""
    try:
        mismatch = _first_mismatch(cert, cert.hypothesis if h is None else h)
    except (GeometryError, ArithmeticError, ValueError) as exc:
        mismatch = f"re-check raised {type(exc).__name__}: {exc}"
    return ValidationResult(mismatch is None, mismatch)


# -- JSON ------------------------------------------------------------------------

def hypothesis_to_json(h: FTLHypothesis) -> dict:
    return {
        "e": ser.to_json(h.e),
        "f": ser.to_json(h.f),
        "cM": ser.to_json(h.c_m),
        "cK": ser.to_json(h.c_k),
        "purportedMap": ser.to_json(h.purported_map),
    }


def hypothesis_from_json(data: Mapping, mode: FieldMode) -> FTLHypothesis:
    return FTLHypothesis(
        ser.point(data["e"], mode),
        ser.point(data["f"], mode),
        ser.scalar(data["cM"], mode),
        ser.coordinate_map(data["purportedMap"], mode),
        ser.scalar(data["cK"], mode),
    )


def certificate_to_json(cert: ContradictionCertificate) -> dict:
    v = cert.verdict
    return {
        "format": CERTIFICATE_FORMAT,
        "fieldMode": cert.field_mode.value,
        "hypothesis": hypothesis_to_json(cert.hypothesis),
        "steps": [{"step": name, **ser.to_json(data)} for name, data in cert.steps],
        "lineA": ser.to_json(cert.line_a),
        "lineB": ser.to_json(cert.line_b),
        "verdict": {
            "kind": v.kind.value,
            "point": ser.to_json(v.point),
            "axiom": ser.to_json(v.axiom),
            "witness": v.witness,
        },
    }


def certificate_from_json(data: Mapping) -> ContradictionCertificate:
    if data.get("format") != CERTIFICATE_FORMAT:
        raise ValueError(f"not a {CERTIFICATE_FORMAT} document")
    mode = FieldMode(data["fieldMode"])
    steps = {s["step"]: s for s in data["steps"]}
    pt = lambda v: ser.point(v, mode)  # noqa: E731
    conv, tp, sk, fz = steps["converseCheck"], steps["tangentPlane"], steps["switchToK"], steps["findZ"]
    v = data["verdict"]
    verdict = CertificateVerdict(
        VerdictKind(v["kind"]),
        None if v.get("point") is None else pt(v["point"]),
        None if v.get("axiom") is None else AxiomId(v["axiom"]),
        v.get("witness"),
    )
    return ContradictionCertificate(
        hypothesis=hypothesis_from_json(data["hypothesis"], mode),
        field_mode=mode,
        converse=(ser.scalar(conv["space2"], mode), ser.scalar(conv["c2time2"], mode)),
        e_cone=ser.cone(steps["eCone"]["eCone"], mode),
        g=pt(tp["g"]),
        tangent_plane=ser.plane(tp["tangentPlane"], mode),
        wvte=pt(sk["wvte"]),
        wvtf=pt(sk["wvtf"]),
        wvtg=pt(sk["wvtg"]),
        wvtz=pt(fz["wvtz"]),
        z=pt(fz["z"]),
        f_cone=ser.cone(fz["fCone"], mode),
        line_a=ser.line(data["lineA"], mode),
        line_b=ser.line(data["lineB"], mode),
        verdict=verdict,
    )
