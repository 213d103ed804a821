from dataclasses import dataclass
from fractions import Fraction

import pytest

from specrel.axioms import (
    AxiomId,
    SamplingConfig,
    Verdict,
    audit_all,
    check_axiom,
    coplanar,
    overall_verdict,
    recheck_counterexample,
)
from specrel.field import FieldMode
from specrel.geometry import ORIGIN, Line, Point, Vector
from specrel.worldview import Body, CoordinateMap, Model, build_boost_model

P, V = Point, Vector
LIGHT = SamplingConfig(seed=3, grid_radius=0, random_count=3)


@dataclass(frozen=True)
class Warped:
    """t' = t + x^2: straight lines in the world bend in this chart."""

    def apply(self, p):
        return P(p.t + p.x * p.x, p.x, p.y, p.z)

    def apply_inverse(self, p):
        return P(p.t - p.x * p.x, p.x, p.y, p.z)


def verdicts(reports):
    return {r.axiom: r.verdict for r in reports}


@pytest.fixture(scope="module")
def euclid_reports():
    return audit_all(build_boost_model(triple=(3, 4, 5)), LIGHT)


@pytest.fixture(scope="module")
def rational_reports():
    return audit_all(build_boost_model(triple=(3, 4, 5), mode="rational"), LIGHT)


def test_boost_model_passes_everything(euclid_reports):
    assert all(r.verdict is Verdict.PASS for r in euclid_reports), verdicts(euclid_reports)
    assert all(r.instances_checked > 0 for r in euclid_reports)
    assert [r.axiom for r in euclid_reports] == list(AxiomId)


def test_rational_boost_fails_only_euclidean(rational_reports):
    v = verdicts(rational_reports)
    assert v[AxiomId.AX_EUCLIDEAN] is Verdict.FAIL
    assert v[AxiomId.AX_PARALLEL_CONES_E] is Verdict.NOT_CHECKABLE
    others = set(AxiomId) - {AxiomId.AX_EUCLIDEAN, AxiomId.AX_PARALLEL_CONES_E}
    assert all(v[a] is Verdict.PASS for a in others)
    report = next(r for r in rational_reports if r.axiom is AxiomId.AX_EUCLIDEAN)
    assert report.counterexample["x"] == 2
    assert recheck_counterexample(build_boost_model(triple=(3, 4, 5), mode="rational"), report)
    assert overall_verdict(rational_reports) is Verdict.FAIL


def test_not_checkable_counts_as_pass():
    model = build_boost_model(triple=(3, 4, 5), mode="rational")
    reports = [r for r in audit_all(model, LIGHT) if r.axiom is not AxiomId.AX_EUCLIDEAN]
    assert overall_verdict(reports) is Verdict.PASS


def test_extensional_photons_without_plenum():
    model = build_boost_model(triple=(3, 4, 5)).replace(photon_plenum=False)
    r = check_axiom(model, AxiomId.AX_PH, LIGHT)
    assert r.verdict is Verdict.NOT_CHECKABLE
    assert r.instances_checked > 0 and r.notes


def test_no_observers_is_not_checkable():
    model = Model(FieldMode.RATIONAL, (Body("p", ph=True),), {}, {})
    v = verdicts(audit_all(model, LIGHT))
    assert v[AxiomId.AX_SYM] is Verdict.NOT_CHECKABLE


def test_mismatched_light_speeds():
    ident = CoordinateMap.identity()
    model = Model(
        FieldMode.EUCLIDEAN,
        (Body("m", iob=True, worldline=Line(ORIGIN, V(1, 0, 0, 0))),
         Body("k", iob=True, worldline=Line(ORIGIN, V(1, 0, 0, 0)))),
        {"m": ident, "k": ident},
        {"m": 1, "k": 2},
        photon_plenum=True,
        world_light_speed=1,
    )
    v = verdicts(audit_all(model, LIGHT))
    assert v[AxiomId.AX_PH] is Verdict.FAIL
    assert v[AxiomId.AX_CONES] is Verdict.FAIL


def test_warped_frame_breaks_lines():
    model = Model(
        FieldMode.RATIONAL,
        (Body("m", iob=True, worldline=Line(ORIGIN, V(1, 0, 0, 0))),
         Body("k", iob=True, worldline=Line(ORIGIN, V(1, 0, 0, 0)))),
        {"m": CoordinateMap.identity(), "k": Warped()},
        {"m": 1, "k": 1},
        photon_plenum=True,
        world_light_speed=1,
    )
    for axiom in (AxiomId.AX_LINES, AxiomId.AX_PLANES):
        r = check_axiom(model, axiom, LIGHT)
        assert r.verdict is Verdict.FAIL
        assert recheck_counterexample(model, r)


@pytest.mark.parametrize("i,j,delta", [(0, 0, 1), (1, 0, Fraction(1, 2)), (2, 2, 1), (3, 1, 1), (0, 3, -1)])
def test_mutated_boost_never_passes(i, j, delta):
    base = build_boost_model(triple=(3, 4, 5))
    k = base.frame("k")
    model = base.replace(frames={"m": base.frame("m"), "k": k.with_entry(i, j, k.linear[i][j] + delta)})
    reports = audit_all(model, LIGHT)
    failed = [r for r in reports if r.verdict is Verdict.FAIL]
    assert failed, verdicts(reports)
    for r in failed:
        assert recheck_counterexample(model, r), r.axiom


def test_recheck_rejects_passing_report(euclid_reports):
    model = build_boost_model(triple=(3, 4, 5))
    assert not any(recheck_counterexample(model, r) for r in euclid_reports)


def test_deterministic_and_seed_sensitive():
    model = build_boost_model(triple=(5, 12, 13), mode="rational")
    a = check_axiom(model, AxiomId.AX_CONES, LIGHT)
    b = check_axiom(model, AxiomId.AX_CONES, LIGHT)
    assert a == b
    other = check_axiom(model, "AxEuclidean", SamplingConfig(seed=99, grid_radius=0, random_count=3))
    assert other.verdict is Verdict.FAIL


def test_sampling_config_validation():
    with pytest.raises(ValueError):
        SamplingConfig(grid_radius=-1)
    with pytest.raises(ValueError):
        SamplingConfig(random_count=0)


def test_coplanar():
    assert coplanar([ORIGIN, P(1, 0, 0, 0), P(0, 1, 0, 0), P(1, 1, 0, 0)])
    assert not coplanar([ORIGIN, P(1, 0, 0, 0), P(0, 1, 0, 0), P(0, 0, 1, 0)])
