from fractions import Fraction

from hypothesis import strategies as st

from specrel.field import Scalar, as_scalar, sqrt
from specrel.geometry import Point, Vector
from specrel.worldview import CoordinateMap


def rationals(bound: int = 20, den: int = 12):
    return st.builds(
        lambda n, d: Fraction(n, d),
        st.integers(-bound * den, bound * den),
        st.integers(1, den),
    )


def nonneg_rationals(bound: int = 20, den: int = 12):
    return rationals(bound, den).map(abs)


@st.composite
def surds(draw, depth: int = 2) -> Scalar:
    """a + b*sqrt(r) with r itself possibly a surd."""
    a = as_scalar(draw(rationals(6, 6)))
    if depth == 0 or draw(st.booleans()):
        return a
    r = draw(surds(depth - 1))
    b = as_scalar(draw(rationals(4, 4)))
    return a + b * sqrt(abs(r))


def points(elems=None):
    elems = rationals(6, 4) if elems is None else elems
    return st.builds(Point, elems, elems, elems, elems)


def vectors(elems=None):
    elems = rationals(6, 4) if elems is None else elems
    return st.builds(Vector, elems, elems, elems, elems).filter(lambda v: not v.is_zero())


def unit_direction(a: Fraction, b: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """Rational point on the unit sphere (inverse stereographic projection)."""
    n = a * a + b * b + 1
    return (2 * a / n, 2 * b / n, (a * a + b * b - 1) / n)


def null_vector(t, c, a: Fraction, b: Fraction) -> Vector:
    t, c = as_scalar(t), as_scalar(c)
    return Vector(t, *(c * t * n for n in unit_direction(a, b)))


def axis_map(e: Point, f: Point, tau, columns=None) -> CoordinateMap:
    """An affine map sending e to the origin and f to (tau, 0, 0, 0).

    Built as the inverse of x -> B x + e where B's first column is (f - e)/tau
    and the other three columns are ``columns`` (completed from the standard
    axes when omitted).
    """
    from specrel._linalg import rank

    first = list((f - e) * (as_scalar(1) / as_scalar(tau)))
    if columns is None:
        cols = [first]
        for i in range(4):
            unit = [as_scalar(int(i == j)) for j in range(4)]
            if rank(cols + [unit]) > len(cols):
                cols.append(unit)
    else:
        cols = [first] + [list(c) for c in columns]
    B = tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))
    return CoordinateMap(B, e - Point(0, 0, 0, 0)).inverse()


@st.composite
def ftl_hypotheses(draw, c_choices=(1, 2, Fraction(1, 2))):
    from specrel.geometry import space2, time2
    from specrel.noftl import FTLHypothesis
    from specrel.worldview import SingularMap

    c_m = draw(st.sampled_from(c_choices))
    c_k = draw(st.sampled_from(c_choices))
    e = draw(points(rationals(4, 3)))
    d = draw(vectors(rationals(4, 3)))
    if not space2(e, e + d) > as_scalar(c_m) ** 2 * time2(e, e + d):
        # drop the time component: a purely spatial step is always outside the cone
        d = Vector(0, *d.spatial) if any(not x.is_zero() for x in d.spatial) else Vector(0, 1, 0, 0)
    f = e + d
    tau = draw(rationals(3, 3).filter(bool))
    cols = draw(st.lists(vectors(rationals(3, 2)), min_size=3, max_size=3))
    try:
        P = axis_map(e, f, tau, cols)
    except SingularMap:
        P = axis_map(e, f, tau)
    return FTLHypothesis(e, f, c_m, P, c_k)
