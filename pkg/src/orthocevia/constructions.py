"""Triangle-level constructions: centers, derived triangles, conjugates.

Conjugation works in normalized barycentric coordinates, where both the
isogonal map ``(x:y:z) -> (a^2/x : b^2/y : c^2/z)`` and the isotomic map
``(x:y:z) -> (1/x : 1/y : 1/z)`` are rational.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterator

from .errors import (
    ConjugateAtInfinity,
    DegenerateTriangle,
    FootOffCarrier,
    OnSideLine,
    PedalDegenerate,
    ReflectedCevianParallel,
)
from .kernel import (
    DEFAULT_TOL,
    AtInfinity,
    Circle,
    Line,
    Point,
    Tolerance,
    circle_through,
    foot_of_perpendicular,
    intersect_best_pair,
    intersect_lines,
    line_through,
    power_of_point,
)

# 2*area / max_side**2 below this is rejected
MIN_AREA_RATIO = 1e-6

VERTICES = ("A", "B", "C")
SIDES = ("BC", "CA", "AB")
_OPPOSITE_SIDE = {"A": "BC", "B": "CA", "C": "AB"}


@dataclass(frozen=True)
class Triangle:
    A: Point
    B: Point
    C: Point
    a: float = field(init=False)
    b: float = field(init=False)
    c: float = field(init=False)
    s: float = field(init=False)
    area: float = field(init=False)  # signed, positive for counter-clockwise

    def __post_init__(self):
        a, b, c = self.B.dist(self.C), self.C.dist(self.A), self.A.dist(self.B)
        area = 0.5 * (self.B - self.A).cross(self.C - self.A)
        longest = max(a, b, c)
        ratio = 2.0 * abs(area) / (longest * longest) if longest > 0 else 0.0
        if not ratio >= MIN_AREA_RATIO:
            raise DegenerateTriangle(
                f"area ratio 2*area/max_side^2 = {ratio:.3g} below {MIN_AREA_RATIO:g}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "s", 0.5 * (a + b + c))
        object.__setattr__(self, "area", area)

    def __iter__(self) -> Iterator[Point]:
        yield self.A
        yield self.B
        yield self.C

    @property
    def scale(self) -> float:
        """Longest side; the length scale for tolerance tests."""
        return max(self.a, self.b, self.c)

    def vertex(self, label: str) -> Point:
        return getattr(self, label)

    def side_points(self, side: str) -> tuple[Point, Point]:
        if side not in SIDES:
            raise ValueError(f"unknown side {side!r}")
        return getattr(self, side[0]), getattr(self, side[1])

    def side_line(self, side: str) -> Line:
        p, q = self.side_points(side)
        return line_through(p, q)

    def side_lines(self) -> tuple[Line, Line, Line]:
        return tuple(self.side_line(s) for s in SIDES)

    def angle(self, label: str) -> float:
        """Interior angle at a vertex, in radians."""
        a, b, c = self.a, self.b, self.c
        opp, adj1, adj2 = {"A": (a, b, c), "B": (b, c, a), "C": (c, a, b)}[label]
        cosv = (adj1 * adj1 + adj2 * adj2 - opp * opp) / (2 * adj1 * adj2)
        return math.acos(max(-1.0, min(1.0, cosv)))

    def vertex_cosines(self) -> tuple[float, float, float]:
        out = []
        for p, q, r in ((self.A, self.B, self.C), (self.B, self.C, self.A), (self.C, self.A, self.B)):
            u, v = q - p, r - p
            out.append(u.dot(v) / (u.norm() * v.norm()))
        return tuple(out)

    def is_right(self, tol: Tolerance = DEFAULT_TOL) -> bool:
        return any(tol.is_zero(cs, 1.0) for cs in self.vertex_cosines())


def make_triangle(A: Point, B: Point, C: Point) -> Triangle:
    return Triangle(A, B, C)


@dataclass(frozen=True, slots=True)
class CevianFeet:
    """One point on each side line: ``fa`` on BC, ``fb`` on CA, ``fc`` on AB."""

    fa: Point
    fb: Point
    fc: Point

    def __iter__(self) -> Iterator[Point]:
        yield self.fa
        yield self.fb
        yield self.fc

    def __getitem__(self, i: int) -> Point:
        return (self.fa, self.fb, self.fc)[i]


class CenterKind(enum.Enum):
    CENTROID = "centroid"
    INCENTER = "incenter"
    CIRCUMCENTER = "circumcenter"
    ORTHOCENTER = "orthocenter"
    GERGONNE = "gergonne"
    NAGEL = "nagel"
    BEVAN = "bevan"
    SYMMEDIAN = "symmedian"


# --- barycentrics -------------------------------------------------------------

def from_barycentric(t: Triangle, x: float, y: float, z: float) -> Point:
    total = x + y + z
    if total == 0.0:
        raise ConjugateAtInfinity("barycentric weights sum to zero")
    return Point((x * t.A.x + y * t.B.x + z * t.C.x) / total,
                 (x * t.A.y + y * t.B.y + z * t.C.y) / total)


def to_barycentric(t: Triangle, p: Point) -> tuple[float, float, float]:
    """Normalized (sum 1) signed barycentric coordinates."""
    twice = 2.0 * t.area
    x = (t.B - p).cross(t.C - p) / twice
    y = (t.C - p).cross(t.A - p) / twice
    z = (t.A - p).cross(t.B - p) / twice
    return x, y, z


# --- circles and centers ------------------------------------------------------

def circumcircle(t: Triangle) -> Circle:
    return circle_through(t.A, t.B, t.C)


def incircle(t: Triangle) -> Circle:
    r = abs(t.area) / t.s
    return Circle(from_barycentric(t, t.a, t.b, t.c), r * r)


def excircle(t: Triangle, opposite: str) -> Circle:
    a, b, c = t.a, t.b, t.c
    weights = {"A": (-a, b, c), "B": (a, -b, c), "C": (a, b, -c)}[opposite]
    side = {"A": a, "B": b, "C": c}[opposite]
    r = abs(t.area) / (t.s - side)
    return Circle(from_barycentric(t, *weights), r * r)


def bevan_point(t: Triangle) -> Point:
    """Concurrence of the perpendiculars to the sides at the extouch points."""
    ext = extouch_triangle(t)
    perps = [Line.through_point(f, line.direction) for f, line in zip(ext, t.side_lines())]
    return intersect_best_pair(perps)


def triangle_center(t: Triangle, kind: CenterKind) -> Point:
    a, b, c, s = t.a, t.b, t.c, t.s
    if kind is CenterKind.CENTROID:
        return from_barycentric(t, 1.0, 1.0, 1.0)
    if kind is CenterKind.INCENTER:
        return from_barycentric(t, a, b, c)
    if kind is CenterKind.CIRCUMCENTER:
        return circumcircle(t).center
    if kind is CenterKind.ORTHOCENTER:
        # Euler: H = A + B + C - 2 O
        return t.A + t.B + t.C - 2.0 * circumcircle(t).center
    if kind is CenterKind.GERGONNE:
        return from_barycentric(t, 1.0 / (s - a), 1.0 / (s - b), 1.0 / (s - c))
    if kind is CenterKind.NAGEL:
        return from_barycentric(t, s - a, s - b, s - c)
    if kind is CenterKind.SYMMEDIAN:
        return from_barycentric(t, a * a, b * b, c * c)
    if kind is CenterKind.BEVAN:
        return bevan_point(t)
    raise ValueError(f"unknown center {kind!r}")


def all_centers(t: Triangle) -> dict[str, Point]:
    return {k.value: triangle_center(t, k) for k in CenterKind}


# --- derived triangles --------------------------------------------------------

def on_circumcircle(t: Triangle, p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    cc = circumcircle(t)
    return tol.is_zero(power_of_point(p, cc), cc.r_sq)


def pedal_triangle(t: Triangle, P: Point, tol: Tolerance = DEFAULT_TOL) -> CevianFeet:
    if on_circumcircle(t, P, tol):
        raise PedalDegenerate(f"{P} lies on the circumcircle")
    return CevianFeet(*(foot_of_perpendicular(P, line) for line in t.side_lines()))


def contact_triangle(t: Triangle) -> CevianFeet:
    # tangent lengths from A, B, C are s-a, s-b, s-c
    A, B, C, s = t.A, t.B, t.C, t.s
    return CevianFeet(B + (C - B) * ((s - t.b) / t.a),
                      C + (A - C) * ((s - t.c) / t.b),
                      A + (B - A) * ((s - t.a) / t.c))


def extouch_triangle(t: Triangle) -> CevianFeet:
    """Tangency points of each excircle with its own side."""
    return CevianFeet(*(foot_of_perpendicular(excircle(t, v).center, t.side_line(side))
                        for v, side in _OPPOSITE_SIDE.items()))


def medial_triangle(t: Triangle) -> CevianFeet:
    return CevianFeet(t.B.midpoint(t.C), t.C.midpoint(t.A), t.A.midpoint(t.B))


def orthic_triangle(t: Triangle, tol: Tolerance = DEFAULT_TOL) -> CevianFeet:
    if t.is_right(tol):
        raise PedalDegenerate("right triangle: the orthocenter is a vertex")
    return CevianFeet(*(foot_of_perpendicular(t.vertex(v), t.side_line(side))
                        for v, side in _OPPOSITE_SIDE.items()))


def cevian_feet(t: Triangle, P: Point, tol: Tolerance = DEFAULT_TOL) -> CevianFeet:
    """Traces of the cevians through ``P`` on the three side lines."""
    x, y, z = _off_sides(t, P, tol)
    return CevianFeet(from_barycentric(t, 0.0, y, z),
                      from_barycentric(t, x, 0.0, z),
                      from_barycentric(t, x, y, 0.0))


# --- conjugates ---------------------------------------------------------------

def _off_sides(t: Triangle, P: Point, tol: Tolerance) -> tuple[float, float, float]:
    bary = to_barycentric(t, P)
    if any(tol.is_zero(w, 1.0) for w in bary):
        raise OnSideLine(f"{P} lies on a side line")
    return bary


def _conjugate(t: Triangle, weights, tol: Tolerance) -> Point:
    x, y, z = weights
    total = x + y + z
    if tol.is_zero(total, max(abs(x), abs(y), abs(z))):
        raise ConjugateAtInfinity("conjugate point is at infinity")
    return from_barycentric(t, x, y, z)


def isogonal_conjugate(t: Triangle, P: Point, tol: Tolerance = DEFAULT_TOL) -> Point:
    x, y, z = _off_sides(t, P, tol)
    return _conjugate(t, (t.a * t.a / x, t.b * t.b / y, t.c * t.c / z), tol)


def isotomic_conjugate(t: Triangle, P: Point, tol: Tolerance = DEFAULT_TOL) -> Point:
    x, y, z = _off_sides(t, P, tol)
    return _conjugate(t, (1.0 / x, 1.0 / y, 1.0 / z), tol)


def _check_on_side(t: Triangle, side: str, p: Point, tol: Tolerance) -> Line:
    line = t.side_line(side)
    if not tol.is_zero(line.eval(p), t.scale):
        raise FootOffCarrier(f"{p} is not on side line {side}")
    return line


def isogonal_cevian_foot(t: Triangle, vertex: str, foot: Point,
                         tol: Tolerance = DEFAULT_TOL) -> Point:
    """Trace on the opposite side of the cevian reflected in the internal bisector."""
    side = _OPPOSITE_SIDE[vertex]
    carrier = _check_on_side(t, side, foot, tol)
    V = t.vertex(vertex)
    P, Q = t.side_points(side)
    bisector = (P - V).unit() + (Q - V).unit()
    bisector = bisector.unit()
    d = foot - V
    reflected = bisector * (2.0 * d.dot(bisector)) - d
    cevian = Line.through_point(V, Point(-reflected.y, reflected.x))
    hit = intersect_lines(cevian, carrier, tol)
    if isinstance(hit, AtInfinity):
        raise ReflectedCevianParallel(f"reflected cevian from {vertex} is parallel to {side}")
    return hit


def isotomic_point_on_side(t: Triangle, side: str, p: Point,
                           tol: Tolerance = DEFAULT_TOL) -> Point:
    _check_on_side(t, side, p, tol)
    P, Q = t.side_points(side)
    return P + Q - p
