from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from orthocevia import exact, kernel
from orthocevia.errors import CoincidentLines, CollinearPoints, DegenerateInput, NegativeResult
from orthocevia.kernel import AtInfinity, Orientation

rat = st.fractions(min_value=-20, max_value=20, max_denominator=50)
qpoints = st.tuples(rat, rat)


def test_t345_by_hand():
    A, B, C = exact.qpoint(0, 0), exact.qpoint(4, 0), exact.qpoint(0, 3)
    bc = exact.line_through(B, C)
    assert exact.same_line(bc, (F(3), F(4), F(-12)))
    assert exact.foot_of_perpendicular(A, bc) == (F(36, 25), F(48, 25))
    assert exact.circle_through(A, B, C) == ((F(2), F(3, 2)), F(25, 4))
    assert exact.power_of_point(A, (F(2), F(3, 2)), F(25, 4)) == 0
    assert exact.median_length_squared(16, 9, 25) == F(25, 4)


def test_exact_errors():
    o = exact.qpoint(0, 0)
    with pytest.raises(DegenerateInput):
        exact.line_through(o, o)
    with pytest.raises(CollinearPoints):
        exact.circle_through(o, exact.qpoint(1, 1), exact.qpoint(2, 2))
    with pytest.raises(CoincidentLines):
        exact.intersect_lines((F(0), F(1), F(0)), (F(0), F(2), F(0)))
    assert isinstance(exact.intersect_lines((F(0), F(1), F(0)), (F(0), F(1), F(-1))), AtInfinity)
    with pytest.raises(NegativeResult):
        exact.median_length_squared(1, 1, 9)


def test_exact_concyclic_square():
    sq = [exact.qpoint(*p) for p in ((0, 0), (1, 0), (1, 1), (0, 1))]
    assert exact.concyclic(sq)
    assert not exact.concyclic(sq[:3] + [exact.qpoint(F(1, 100), 1)])


@given(qpoints, qpoints, qpoints)
def test_orientation_agrees(p, q, r):
    # integer-valued and small rationals: float det is exact enough to agree
    real = kernel.orientation(*(exact.to_float(x) for x in (p, q, r)))
    ex = exact.orientation(p, q, r)
    assert real is ex or (real is Orientation.COLLINEAR and abs(
        (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])) <= F(1, 10 ** 6))


@given(qpoints, qpoints, qpoints, qpoints)
def test_intersection_and_foot_agree(a, b, c, d):
    assume(a != b and c != d)
    l1, l2 = exact.line_through(a, b), exact.line_through(c, d)
    det = l1[0] * l2[1] - l2[0] * l1[1]
    assume(det != 0)
    ex = exact.intersect_lines(l1, l2)
    r1 = kernel.line_through(exact.to_float(a), exact.to_float(b))
    r2 = kernel.line_through(exact.to_float(c), exact.to_float(d))
    # conditioning: relative error grows like 1/sin(angle)
    sin = abs(float(det)) / (float(l1[0] ** 2 + l1[1] ** 2) * float(l2[0] ** 2 + l2[1] ** 2)) ** 0.5
    assume(sin > 1e-3)
    real = kernel.intersect_lines(r1, r2)
    scale = max(1.0, abs(float(ex[0])), abs(float(ex[1])))
    assert real.dist(exact.to_float(ex)) <= 1e-9 * scale
    ft = exact.foot_of_perpendicular(c, l1)
    rf = kernel.foot_of_perpendicular(exact.to_float(c), r1)
    assert rf.dist(exact.to_float(ft)) <= 1e-12 * 40


@given(qpoints, qpoints, qpoints)
def test_circle_agrees(p, q, r):
    assume(exact.orientation(p, q, r) is not Orientation.COLLINEAR)
    fp = [exact.to_float(x) for x in (p, q, r)]
    assume(kernel.orientation(*fp, kernel.Tolerance(1e-4)) is not Orientation.COLLINEAR)
    center, r_sq = exact.circle_through(p, q, r)
    c = kernel.circle_through(*fp)
    scale = float(r_sq) ** 0.5
    assert c.center.dist(exact.to_float(center)) <= 1e-6 * scale
