from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import points
from specrel.field import FieldMode, NotEuclidean, sqrt
from specrel.geometry import ORIGIN, Line, Point, Vector, on_line, space2, time2
from specrel.worldview import (
    Body,
    CoordinateMap,
    Model,
    ModelError,
    NotAnObserver,
    SingularMap,
    SuperluminalBoost,
    W,
    build_boost_model,
    c_of,
    map_line,
    photon_sighting,
    wvt,
)

P, V = Point, Vector
BOOST = build_boost_model(triple=(3, 4, 5), mode="rational")


def triples():
    # Euclid's formula with m > n > 0
    return st.tuples(st.integers(2, 9), st.integers(1, 8)).filter(lambda t: t[0] > t[1]).map(
        lambda t: (t[0] ** 2 - t[1] ** 2, 2 * t[0] * t[1], t[0] ** 2 + t[1] ** 2)
    )


class TestBoost:
    def test_worked_example(self):
        # k moves at 3/5 along x; the event (5,3) is k's own clock reading 4
        assert wvt(BOOST, "k", "m", P(5, 3, 0, 0)) == P(4, 0, 0, 0)
        assert wvt(BOOST, "m", "k", P(4, 0, 0, 0)) == P(5, 3, 0, 0)

    def test_identity_when_same_observer(self):
        p = P(1, 2, 3, 4)
        assert wvt(BOOST, "m", "m", p) == p

    def test_rational_mode_needs_pythagorean_speed(self):
        with pytest.raises(NotEuclidean):
            build_boost_model(velocity=Fraction(1, 2), mode="rational")
        model = build_boost_model(velocity=Fraction(1, 2))
        assert model.frame("k").linear[0][0] == Fraction(2, 3) * sqrt(3)

    def test_zero_velocity_is_identity(self):
        model = build_boost_model(velocity=0, mode="rational")
        p = P(1, -2, 3, 5)
        assert wvt(model, "k", "m", p) == p

    def test_superluminal(self):
        with pytest.raises(SuperluminalBoost):
            build_boost_model(velocity=1)
        with pytest.raises(SuperluminalBoost):
            build_boost_model(velocity=3, c=2)

    def test_bad_triple(self):
        with pytest.raises(ModelError):
            build_boost_model(triple=(1, 2, 3))

    def test_origin_shift(self):
        model = build_boost_model(triple=(3, 4, 5), mode="rational", origin=P(1, 1, 0, 0))
        assert wvt(model, "k", "m", P(1, 1, 0, 0)) == ORIGIN

    @given(triples(), st.sampled_from([1, 2, Fraction(1, 3)]), points())
    @settings(max_examples=50, deadline=None)
    def test_interval_preserved(self, triple, c, p):
        model = build_boost_model(triple=triple, c=c, mode="rational")
        q = wvt(model, "k", "m", p)
        o = wvt(model, "k", "m", ORIGIN)
        c2 = model.light_speed["m"] ** 2
        assert c2 * time2(ORIGIN, p) - space2(ORIGIN, p) == c2 * time2(o, q) - space2(o, q)

    @given(triples(), points())
    @settings(max_examples=50, deadline=None)
    def test_wvt_round_trip(self, triple, p):
        model = build_boost_model(triple=triple, mode="rational")
        assert wvt(model, "m", "k", wvt(model, "k", "m", p)) == p


class TestW:
    def test_worldlines(self):
        assert W(BOOST, "m", "k", P(5, 3, 0, 0))
        assert W(BOOST, "k", "k", P(7, 0, 0, 0))
        assert not W(BOOST, "k", "k", P(7, 1, 0, 0))
        assert W(BOOST, "m", "m", P(-2, 0, 0, 0))

    def test_photon_sighting(self):
        assert photon_sighting(BOOST, "m", ORIGIN, P(1, 1, 0, 0)) is not None
        assert photon_sighting(BOOST, "m", ORIGIN, P(1, 2, 0, 0)) is None
        ph = photon_sighting(BOOST, "k", P(1, 0, 0, 1), P(2, 0, 0, 0))
        assert ph is not None and ph.ph

    def test_not_an_observer(self):
        with pytest.raises(NotAnObserver):
            c_of(BOOST, "photon")
        with pytest.raises(NotAnObserver):
            W(BOOST, "photon", "m", ORIGIN)


class TestCoordinateMap:
    def test_singular(self):
        with pytest.raises(SingularMap):
            CoordinateMap(((1, 0, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))

    def test_compose_inverse(self):
        f = BOOST.frame("k")
        assert f.compose(f.inverse()) == CoordinateMap.identity()

    def test_map_line(self):
        line = map_line(BOOST.frame("k"), Line(ORIGIN, V(1, Fraction(3, 5), 0, 0)))
        assert on_line(P(1, 0, 0, 0), line)


class TestModel:
    def test_observer_needs_frame(self):
        with pytest.raises(ModelError):
            Model(FieldMode.RATIONAL, (Body("m", iob=True),), {}, {})

    def test_light_speed_positive(self):
        with pytest.raises(ModelError):
            Model(FieldMode.RATIONAL, (Body("m", iob=True),), {"m": CoordinateMap.identity()}, {"m": 0})

    def test_plenum_needs_world_speed(self):
        with pytest.raises(ModelError):
            Model(FieldMode.RATIONAL, (), {}, {}, photon_plenum=True)

    def test_duplicate_ids(self):
        with pytest.raises(ModelError):
            Model(FieldMode.RATIONAL, (Body("a"), Body("a")), {}, {})
