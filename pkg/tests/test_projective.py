from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from carnot.errors import (
    IdenticalLines,
    IdenticalPoints,
    NotCollinear,
    PointAtInfinity,
    PointNotOnSide,
    RatioUndefined,
)
from carnot.generator import carnot_from_parameters
from carnot.projective import (
    INFINITY,
    ProjLine,
    ProjPoint,
    Triangle,
    carnot_product,
    collinear,
    concurrent,
    cross_ratio,
    directed_ratio,
    incident,
    join,
    meet,
    menelaus_product,
)

P = ProjPoint
small = st.integers(-20, 20)
triples = st.tuples(small, small, small).filter(lambda t: t != (0, 0, 0))


def F(x):
    return Fraction(x)


def sympy_cross(u, v):
    return tuple(int(c) for c in sympy.Matrix(u).cross(sympy.Matrix(v)))


# --- canonical form ------------------------------------------------------------


def test_canonical_form_is_coprime_with_positive_lead():
    assert P(2, 4, -6).coords == (1, 2, -3)
    assert P(0, -3, 6).coords == (0, 1, -2)
    assert P(F("1/2"), F("1/3"), 1).coords == (3, 2, 6)


def test_zero_vector_rejected():
    with pytest.raises(ValueError):
        P(0, 0, 0)


@given(triples, st.integers(-9, 9).filter(bool), st.integers(1, 9))
def test_equality_is_scale_invariant(t, num, den):
    s = Fraction(num, den)
    assert P(t) == P(*(s * c for c in t))
    assert hash(P(t)) == hash(P(*(s * c for c in t)))


def test_points_and_lines_are_immutable():
    p = P(1, 2, 3)
    with pytest.raises(AttributeError):
        p.coords = (1, 1, 1)


# --- join / meet ---------------------------------------------------------------


def test_join_examples():
    assert join(P(0, 0, 1), P(1, 0, 1)) == ProjLine(0, 1, 0)
    assert join(P(1, 0, 1), P(0, 1, 1)) == ProjLine(1, 1, -1)
    with pytest.raises(IdenticalPoints):
        join(P(1, 0, 1), P(2, 0, 2))


def test_meet_examples():
    assert meet(ProjLine(0, 1, 0), ProjLine(1, 0, 0)) == P(0, 0, 1)
    assert meet(ProjLine(1, 1, -1), ProjLine(1, -1, 0)) == P(1, 1, 2)
    # x = 0 and x = z are parallel: they meet at infinity
    x0, x1 = ProjLine(1, 0, 0), ProjLine(1, 0, -1)
    q = meet(x0, x1)
    assert q == P(0, 1, 0) and not q.is_finite
    with pytest.raises(IdenticalLines):
        meet(x0, ProjLine(3, 0, 0))


@given(triples, triples)
def test_join_matches_sympy_cross_product(u, v):
    assume(P(u) != P(v))
    assert join(P(u), P(v)) == ProjLine(sympy_cross(u, v))


@given(triples, triples)
def test_join_meet_duality(u, v):
    assume(P(u) != P(v))
    l = join(P(u), P(v))
    assert incident(P(u), l) and incident(P(v), l)
    # the same formula read dually
    m = meet(ProjLine(u), ProjLine(v))
    assert incident(m, ProjLine(u)) and incident(m, ProjLine(v))
    assert m.coords == l.coords


# --- collinearity ------------------------------------------------------------------


def test_collinear_examples():
    assert collinear(P(0, 0, 1), P(1, 0, 1), P(2, 0, 1))
    assert not collinear(P(0, 0, 1), P(1, 0, 1), P(0, 1, 1))
    assert collinear(P(1, 2, 1), P(2, 3, 1), P(3, 4, 1))


@given(triples, triples, triples)
def test_collinear_matches_sympy_determinant(u, v, w):
    det = sympy.Matrix([u, v, w]).det()
    assert collinear(P(u), P(v), P(w)) == (det == 0)


def test_concurrent_lines():
    assert concurrent(ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, 0))
    assert not concurrent(ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, -1))


# --- directed ratio ------------------------------------------------------------------


def test_directed_ratio_examples():
    a = P(0, 0, 1)
    assert directed_ratio(a, P(2, 0, 1), P(1, 0, 1)) == 1
    assert directed_ratio(a, P(3, 0, 1), P(1, 0, 1)) == Fraction(1, 2)
    assert directed_ratio(a, P(1, 0, 1), P.from_affine(F("3/2"), 0)) == -3


def test_directed_ratio_errors():
    a, b = P(0, 0, 1), P(2, 0, 1)
    with pytest.raises(NotCollinear):
        directed_ratio(a, b, P(1, 1, 1))
    with pytest.raises(PointAtInfinity):
        directed_ratio(a, b, P(1, 0, 0))
    with pytest.raises(RatioUndefined):
        directed_ratio(a, b, b)


def test_directed_ratio_on_vertical_line_uses_y():
    assert directed_ratio(P(0, 0, 1), P(0, 4, 1), P(0, 1, 1)) == Fraction(1, 3)


@given(triples, triples, st.fractions(min_value=-5, max_value=5, max_denominator=7))
def test_directed_ratio_agrees_in_both_coordinates(u, v, s):
    """(p - a) = t (b - p) in every affine coordinate that moves."""
    assume(u[2] != 0 and v[2] != 0)
    a, b = P(u), P(v)
    assume(a != b and s != 1)
    (ax, ay), (bx, by) = a.affine(), b.affine()
    p = P.from_affine(ax + s * (bx - ax), ay + s * (by - ay))
    t = directed_ratio(a, b, p)
    (px, py) = p.affine()
    assert px - ax == t * (bx - px)
    assert py - ay == t * (by - py)
    assert t == s / (1 - s)


# --- cross ratio ------------------------------------------------------------------


def test_cross_ratio_examples():
    o, one, half = P(0, 0, 1), P(1, 0, 1), P.from_affine(F("1/2"), 0)
    assert cross_ratio(o, one, half, P(1, 0, 0)) == -1
    assert cross_ratio(o, one, o, P(3, 0, 1)) == 0
    assert cross_ratio(o, P(3, 0, 1), one, P(2, 0, 1)) == Fraction(1, 4)


def test_cross_ratio_pole_and_errors():
    o, one, two = P(0, 0, 1), P(1, 0, 1), P(2, 0, 1)
    assert cross_ratio(o, one, two, o) is INFINITY
    with pytest.raises(NotCollinear):
        cross_ratio(o, one, two, P(0, 1, 1))


def _apply(m, p):
    return P(*(sum(m[i][j] * p.coords[j] for j in range(3)) for i in range(3)))


matrices = st.lists(st.integers(-4, 4), min_size=9, max_size=9).map(
    lambda xs: [xs[0:3], xs[3:6], xs[6:9]]
)


@settings(max_examples=60)
@given(matrices, st.lists(st.fractions(-6, 6, max_denominator=5), min_size=4, max_size=4, unique=True))
def test_cross_ratio_is_projectively_invariant(m, params):
    assume(sympy.Matrix(m).det() != 0)
    pts = [P.from_affine(t, 2 * t + 1) for t in params]
    images = [_apply(m, p) for p in pts]
    assert cross_ratio(*pts) == cross_ratio(*images)


# --- Menelaus / Carnot products -----------------------------------------------------


@pytest.fixture
def right_triangle():
    return Triangle(P(0, 0, 1), P(1, 0, 1), P(0, 1, 1))


def test_menelaus_transversal_gives_minus_one(right_triangle):
    p_ab = P.from_affine(F("3/2"), 0)
    p_bc = P.from_affine(F("1/2"), F("1/2"))
    p_ca = P.from_affine(0, F("3/4"))
    assert collinear(p_ab, p_bc, p_ca)
    assert right_triangle.side_ratio("c", p_ab) == -3
    assert right_triangle.side_ratio("a", p_bc) == 1
    assert right_triangle.side_ratio("b", p_ca) == Fraction(1, 3)
    assert menelaus_product(right_triangle, p_bc, p_ca, p_ab) == -1


def test_menelaus_midpoints_give_plus_one(right_triangle):
    mids = P.from_affine(F("1/2"), F("1/2")), P.from_affine(0, F("1/2")), P.from_affine(F("1/2"), 0)
    assert menelaus_product(right_triangle, *mids) == 1


def test_menelaus_errors(right_triangle):
    mid_bc, mid_ca = P.from_affine(F("1/2"), F("1/2")), P.from_affine(0, F("1/2"))
    with pytest.raises(RatioUndefined):
        menelaus_product(right_triangle, mid_bc, mid_ca, P(1, 0, 1))
    with pytest.raises(PointNotOnSide):
        menelaus_product(right_triangle, P(5, 5, 1), mid_ca, P.from_affine(F("1/2"), 0))


def test_carnot_doubled_midpoints(right_triangle):
    ma = P.from_affine(F("1/2"), F("1/2"))
    mb = P.from_affine(0, F("1/2"))
    mc = P.from_affine(F("1/2"), 0)
    assert carnot_product(right_triangle, ma, ma, mb, mb, mc, mc) == 1


def test_carnot_circle_points_and_perturbation():
    tri, pts = carnot_from_parameters((0, 1, 2, 3, -1, -2))
    assert carnot_product(tri, *pts) == 1
    # move C2 along AB by a fifth of AB
    (x, y), (ax, ay), (bx, by) = pts[5].affine(), tri.a_vertex.affine(), tri.b_vertex.affine()
    moved = P.from_affine(x + (bx - ax) / 5, y + (by - ay) / 5)
    assert carnot_product(tri, *pts[:5], moved) != 1
