import dataclasses
import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from conftest import axis_map, ftl_hypotheses
from specrel.axioms import AxiomId
from specrel.field import FieldMode, NotEuclidean
from specrel.geometry import ORIGIN, Point, PreconditionViolated, Vector
from specrel.noftl import (
    BadHypothesis,
    FTLHypothesis,
    NotFTL,
    VerdictKind,
    build_ftl_witness,
    certificate_from_json,
    certificate_to_json,
    check_noftl,
    hypothesis_from_json,
    hypothesis_to_json,
    validate_certificate,
)
from specrel.worldview import CoordinateMap, build_boost_model

P, V = Point, Vector
AXES = [V(0, 1, 0, 0), V(0, 0, 1, 0), V(0, 0, 0, 1)]


def worked_hypothesis():
    f = P(3, 5, 0, 0)
    return FTLHypothesis(ORIGIN, f, 1, axis_map(ORIGIN, f, 1, AXES), 1)


class TestCheckNoFTL:
    def test_boost_sightings(self):
        model = build_boost_model(triple=(3, 4, 5), mode="rational")
        r = check_noftl(model, "m", "k", ORIGIN, P(5, 3, 0, 0))
        assert r and (r.space2, r.c2time2) == (9, 25)

    def test_same_event(self):
        model = build_boost_model(triple=(3, 4, 5), mode="rational")
        with pytest.raises(PreconditionViolated, match="enotf"):
            check_noftl(model, "m", "k", ORIGIN, ORIGIN)

    def test_not_seen(self):
        model = build_boost_model(triple=(3, 4, 5), mode="rational")
        with pytest.raises(PreconditionViolated):
            check_noftl(model, "m", "k", ORIGIN, P(1, 1, 0, 0))


class TestWitness:
    def test_worked_example(self):
        cert = build_ftl_witness(worked_hypothesis())
        assert cert.g == P(5, 3, 4, 0)
        assert cert.converse == (25, 9)
        assert cert.verdict.kind is VerdictKind.AXIOM_VIOLATED
        assert cert.verdict.axiom is AxiomId.AX_CONES
        assert [name for name, _ in cert.steps] == [
            "converseCheck", "eCone", "tangentPlane", "switchToK", "findZ",
        ]
        assert validate_certificate(cert)

    def test_not_ftl(self):
        f = P(5, 3, 0, 0)
        with pytest.raises(NotFTL):
            build_ftl_witness(FTLHypothesis(ORIGIN, f, 1, axis_map(ORIGIN, f, 1, AXES), 1))

    def test_bad_hypotheses(self):
        with pytest.raises(BadHypothesis, match="enotf"):
            build_ftl_witness(FTLHypothesis(ORIGIN, ORIGIN, 1, CoordinateMap.identity(), 1))
        with pytest.raises(BadHypothesis):
            build_ftl_witness(FTLHypothesis(ORIGIN, P(3, 5, 0, 0), 1, CoordinateMap.identity(), 1))

    def test_rational_mode_names_the_step(self):
        f = P(1, 2, 0, 0)
        h = FTLHypothesis(ORIGIN, f, 1, axis_map(ORIGIN, f, 1, AXES), 1)
        with pytest.raises(NotEuclidean, match="step 3"):
            build_ftl_witness(h, FieldMode.RATIONAL)
        assert validate_certificate(build_ftl_witness(h))

    def test_json_round_trip(self):
        cert = build_ftl_witness(worked_hypothesis())
        doc = json.loads(json.dumps(certificate_to_json(cert)))
        back = certificate_from_json(doc)
        assert back == cert
        assert validate_certificate(back)
        h = worked_hypothesis()
        assert hypothesis_from_json(hypothesis_to_json(h), FieldMode.EUCLIDEAN) == h


class TestTamper:
    def cert(self):
        return build_ftl_witness(worked_hypothesis())

    def test_moved_z(self):
        cert = self.cert()
        bad = dataclasses.replace(cert, z=cert.z + V(0, 1, 0, 0))
        r = validate_certificate(bad)
        assert not r and r.mismatch.startswith("lineB")

    def test_swapped_verdict(self):
        cert = self.cert()
        v = dataclasses.replace(cert.verdict, axiom=AxiomId.AX_LINES)
        r = validate_certificate(dataclasses.replace(cert, verdict=v))
        assert not r and r.mismatch.startswith("verdict")

    def test_wrong_g(self):
        cert = self.cert()
        r = validate_certificate(dataclasses.replace(cert, g=P(5, 4, 3, 0)))
        assert not r and r.mismatch.startswith("tangentPlane")

    def test_wrong_converse(self):
        r = validate_certificate(dataclasses.replace(self.cert(), converse=(25, 10)))
        assert not r and r.mismatch.startswith("converseCheck")

    def test_other_hypothesis(self):
        cert = self.cert()
        f = P(0, 1, 0, 0)
        other = FTLHypothesis(ORIGIN, f, 1, axis_map(ORIGIN, f, 1), 1)
        assert not validate_certificate(cert, other)

    def test_tampered_json_field(self):
        doc = certificate_to_json(self.cert())
        doc = json.loads(json.dumps(doc).replace('"5", "3", "4", "0"', '"5", "3", "4", "1"'))
        assert not validate_certificate(certificate_from_json(doc))


@given(ftl_hypotheses())
@settings(max_examples=40, deadline=None)
def test_every_hypothesis_is_refuted(h):
    try:
        cert = build_ftl_witness(h)
    except BadHypothesis:
        assume(False)
    assert cert.verdict.kind is VerdictKind.AXIOM_VIOLATED
    assert validate_certificate(cert)
    assert certificate_from_json(json.loads(json.dumps(certificate_to_json(cert)))) == cert


def test_scaled_speeds():
    f = P(1, 3, 0, 0)
    h = FTLHypothesis(ORIGIN, f, 2, axis_map(ORIGIN, f, Fraction(1, 2), AXES), Fraction(1, 3))
    cert = build_ftl_witness(h)
    assert validate_certificate(cert)
