import itertools
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthocevia import (
    AtInfinity,
    Circle,
    Line,
    Orientation,
    Point,
    Tolerance,
    circle_through,
    concyclic,
    foot_of_perpendicular,
    intersect_lines,
    line_circle_intersections,
    line_through,
    median_length_squared,
    orientation,
    power_of_point,
)
from orthocevia.errors import CoincidentLines, CollinearPoints, DegenerateInput, NegativeResult

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
points = st.builds(Point, coord, coord)


def test_tolerance_rejects_bad_params():
    with pytest.raises(ValueError):
        Tolerance(rel_eps=0)
    with pytest.raises(ValueError):
        Tolerance(abs_floor=-1)


def test_tolerance_is_scale_relative():
    tol = Tolerance()
    assert tol.is_zero(1e-7, 1e3)
    assert not tol.is_zero(1e-7, 1.0)
    assert tol.is_zero(1e-13, 0.0)


def test_point_rejects_nan():
    with pytest.raises(ValueError):
        Point(float("nan"), 0)


@pytest.mark.parametrize("pts, expected", [
    (((0, 0), (1, 0), (0, 1)), Orientation.CCW),
    (((0, 0), (1, 0), (2, 0)), Orientation.COLLINEAR),
    (((0, 0), (0, 1), (1, 0)), Orientation.CW),
])
def test_orientation_examples(pts, expected):
    assert orientation(*(Point(*p) for p in pts)) is expected


def test_orientation_is_scale_invariant():
    tiny = [Point(0, 0), Point(1e-8, 0), Point(0, 1e-8)]
    assert orientation(*tiny, Tolerance(abs_floor=0)) is Orientation.CCW
    # the absolute floor is in squared-length units and swallows this one
    assert orientation(*tiny) is Orientation.COLLINEAR


def test_line_through_examples():
    assert line_through(Point(0, 0), Point(1, 0)) == Line(0.0, 1.0, 0.0)
    assert line_through(Point(0, 0), Point(0, 3)) == Line(1.0, 0.0, 0.0)
    bc = line_through(Point(4, 0), Point(0, 3))
    assert (bc.u, bc.v, bc.w) == pytest.approx((0.6, 0.8, -2.4), abs=1e-15)
    with pytest.raises(DegenerateInput):
        line_through(Point(1, 1), Point(1, 1))


@given(points, points)
def test_line_through_contains_both_and_is_canonical(p, q):
    if p.dist(q) < 1e-3:
        return
    ln = line_through(p, q)
    assert math.isclose(ln.u ** 2 + ln.v ** 2, 1.0, rel_tol=1e-12)
    assert ln.u > 0 or (ln.u == 0 and ln.v > 0)
    assert abs(ln.eval(p)) < 1e-12 * 20 and abs(ln.eval(q)) < 1e-12 * 20
    back = line_through(q, p)
    assert (back.u, back.v, back.w) == pytest.approx((ln.u, ln.v, ln.w), abs=1e-12 * 20)


def test_intersect_lines_examples():
    x0, y0, y1 = Line(1, 0, 0), Line(0, 1, 0), Line(0, 1, -1)
    assert intersect_lines(x0, y0) == Point(0, 0)
    assert isinstance(intersect_lines(y0, y1), AtInfinity)
    with pytest.raises(CoincidentLines):
        intersect_lines(y0, Line(0, 1, 0))


@settings(max_examples=200)
@given(st.lists(coord, min_size=6, max_size=6))
def test_intersect_lines_matches_lstsq(c):
    l1 = Line.from_coeffs(c[0], c[1], c[2]) if math.hypot(c[0], c[1]) > 1e-3 else None
    l2 = Line.from_coeffs(c[3], c[4], c[5]) if math.hypot(c[3], c[4]) > 1e-3 else None
    if l1 is None or l2 is None or abs(l1.u * l2.v - l2.u * l1.v) < 1e-3:
        return
    p = intersect_lines(l1, l2)
    sol, *_ = np.linalg.lstsq(np.array([[l1.u, l1.v], [l2.u, l2.v]]),
                              -np.array([l1.w, l2.w]), rcond=None)
    assert p.x == pytest.approx(sol[0], abs=1e-9 * (1 + abs(sol[0])))
    assert p.y == pytest.approx(sol[1], abs=1e-9 * (1 + abs(sol[1])))


def test_foot_examples():
    bc = line_through(Point(4, 0), Point(0, 3))
    f = foot_of_perpendicular(Point(0, 0), bc)
    assert (f.x, f.y) == pytest.approx((36 / 25, 48 / 25), abs=1e-15)
    assert foot_of_perpendicular(Point(1, 1), Line(0, 1, 0)) == Point(1, 0)
    on = Point(2, 1.5)
    assert foot_of_perpendicular(on, bc).dist(on) < 1e-15


@given(points, points, points)
def test_foot_is_idempotent_and_orthogonal(p, a, b):
    if a.dist(b) < 1e-3:
        return
    ln = line_through(a, b)
    f = foot_of_perpendicular(p, ln)
    scale = max(1.0, p.norm(), a.norm())
    assert abs(ln.eval(f)) <= 1e-12 * scale
    assert abs((p - f).dot(ln.direction)) <= 1e-12 * scale
    assert foot_of_perpendicular(f, ln).dist(f) <= 1e-12 * scale


def test_circle_through_examples():
    c = circle_through(Point(0, 0), Point(4, 0), Point(0, 3))
    assert (c.center.x, c.center.y, c.r_sq) == pytest.approx((2, 1.5, 6.25))
    c = circle_through(Point(0, 0), Point(4, 0), Point(1, 3))
    assert (c.center.x, c.center.y, c.r_sq) == pytest.approx((2, 1, 5))
    with pytest.raises(CollinearPoints):
        circle_through(Point(0, 0), Point(1, 0), Point(2, 0))


@given(points, points, points)
def test_circle_through_symmetric(p, q, r):
    if orientation(p, q, r, Tolerance(1e-3)) is Orientation.COLLINEAR:
        return
    ref = circle_through(p, q, r)
    for perm in itertools.permutations((p, q, r)):
        c = circle_through(*perm)
        assert c.center.dist(ref.center) <= 1e-8 * max(1.0, ref.radius)
        assert math.isclose(c.r_sq, ref.r_sq, rel_tol=1e-8)


def test_line_circle_examples():
    unit = Circle(Point(0, 0), 1.0)
    xs = line_circle_intersections(Line(0, 1, 0), unit)
    assert sorted((p.x, p.y) for p in xs) == [(-1, 0), (1, 0)]
    assert line_circle_intersections(Line(0, 1, -1), unit) == [Point(0, 1)]
    assert line_circle_intersections(Line(0, 1, -2), unit) == []


def test_power_of_point_examples():
    assert power_of_point(Point(0, 0), Circle(Point(3, 0), 1)) == 8
    assert power_of_point(Point(1, 0), Circle(Point(0, 0), 1)) == 0
    c = circle_through(Point(0, 0), Point(4, 0), Point(0, 3))
    assert abs(power_of_point(Point(0, 0), c)) < 1e-12


def test_power_of_point_secant_property():
    rng = random.Random(7)
    for _ in range(1000):
        c = Circle(Point(rng.uniform(-1, 1), rng.uniform(-1, 1)), rng.uniform(0.1, 1) ** 2)
        p = Point(rng.uniform(-2, 2), rng.uniform(-2, 2))
        theta = rng.uniform(0, math.pi)
        ln = line_through(p, p + Point(math.cos(theta), math.sin(theta)))
        xs = line_circle_intersections(ln, c)
        if len(xs) != 2:
            continue
        d = ln.direction
        product = (xs[0] - p).dot(d) * (xs[1] - p).dot(d)
        scale = max(c.r_sq, p.dist2(c.center))
        assert abs(product - power_of_point(p, c)) <= 1e-9 * scale


def test_median_length_squared():
    assert median_length_squared(1, 1, 1) == 0.75
    assert median_length_squared(1, 1, 4) == 0
    assert median_length_squared(16, 9, 25) == 6.25
    assert Point(0, 0).dist2(Point(2, 1.5)) == 6.25
    with pytest.raises(NegativeResult):
        median_length_squared(1, 1, 9)


def test_concyclic_examples():
    sq = [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]
    assert concyclic(sq)
    assert not concyclic(sq[:2] + [Point(1.01, 1)] + sq[3:])
    assert concyclic([Point(0, 0), Point(3, 1), Point(-1, 5)])
    with pytest.raises(CollinearPoints):
        concyclic([Point(0, 0), Point(1, 1), Point(2, 2), Point(0, 1)])
