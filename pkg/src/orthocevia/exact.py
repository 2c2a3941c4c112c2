"""Exact rational backend for the sqrt-free part of the kernel.

Points are ``(Fraction, Fraction)`` pairs and lines are unnormalized
``(u, v, w)`` triples with the same sign convention as :class:`kernel.Line`.
Zero tests here are exact, so these routines serve as an oracle for the
floating-point kernel on rational input.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import CoincidentLines, CollinearPoints, DegenerateInput, NegativeResult
from .kernel import AtInfinity, Orientation, Point

QPoint = tuple[Fraction, Fraction]
QLine = tuple[Fraction, Fraction, Fraction]


def qpoint(x, y) -> QPoint:
    return Fraction(x), Fraction(y)


def to_float(p: QPoint) -> Point:
    return Point(float(p[0]), float(p[1]))


def orientation(p: QPoint, q: QPoint, r: QPoint) -> Orientation:
    det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    if det == 0:
        return Orientation.COLLINEAR
    return Orientation.CCW if det > 0 else Orientation.CW


def _canonical(u: Fraction, v: Fraction, w: Fraction) -> QLine:
    if u < 0 or (u == 0 and v < 0):
        return -u, -v, -w
    return u, v, w


def line_through(p: QPoint, q: QPoint) -> QLine:
    dx, dy = q[0] - p[0], q[1] - p[1]
    if dx == 0 and dy == 0:
        raise DegenerateInput(f"points {p} and {q} coincide")
    return _canonical(-dy, dx, dy * p[0] - dx * p[1])


def same_line(l1: QLine, l2: QLine) -> bool:
    """Equality up to a positive scalar."""
    return all(l1[i] * l2[j] == l1[j] * l2[i] for i in range(3) for j in range(3))


def intersect_lines(l1: QLine, l2: QLine) -> QPoint | AtInfinity:
    det = l1[0] * l2[1] - l2[0] * l1[1]
    if det == 0:
        if same_line(l1, l2):
            raise CoincidentLines(f"{l1} and {l2} coincide")
        return AtInfinity(Point(-float(l1[1]), float(l1[0])).unit())
    x = (l1[1] * l2[2] - l2[1] * l1[2]) / det
    y = (l2[0] * l1[2] - l1[0] * l2[2]) / det
    return x, y


def foot_of_perpendicular(p: QPoint, line: QLine) -> QPoint:
    u, v, w = line
    k = (u * p[0] + v * p[1] + w) / (u * u + v * v)
    return p[0] - k * u, p[1] - k * v


def circle_through(p: QPoint, q: QPoint, r: QPoint) -> tuple[QPoint, Fraction]:
    """Center and squared radius."""
    if orientation(p, q, r) is Orientation.COLLINEAR:
        raise CollinearPoints(f"{p}, {q}, {r} are collinear")
    bx, by = q[0] - p[0], q[1] - p[1]
    cx, cy = r[0] - p[0], r[1] - p[1]
    d = 2 * (bx * cy - by * cx)
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    return (p[0] + ux, p[1] + uy), ux * ux + uy * uy


def power_of_point(p: QPoint, center: QPoint, r_sq: Fraction) -> Fraction:
    dx, dy = p[0] - center[0], p[1] - center[1]
    return dx * dx + dy * dy - r_sq


def median_length_squared(adj1_sq: Fraction, adj2_sq: Fraction, opp_sq: Fraction) -> Fraction:
    m2 = (2 * (Fraction(adj1_sq) + Fraction(adj2_sq)) - Fraction(opp_sq)) / 4
    if m2 < 0:
        raise NegativeResult(f"median squared {m2} < 0")
    return m2


def concyclic(points: Sequence[QPoint]) -> bool:
    center, r_sq = circle_through(points[0], points[1], points[2])
    return all(power_of_point(p, center, r_sq) == 0 for p in points[3:])

