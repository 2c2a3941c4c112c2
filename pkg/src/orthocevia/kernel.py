"""Numeric policy, primitives and low-level constructions.

Every comparison against zero goes through a :class:`Tolerance`, and is made
relative to a natural scale of the participating points so that results do not
change under a uniform rescaling of the input.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import (
    CoincidentLines,
    CollinearPoints,
    DegenerateInput,
    NegativeResult,
)


@dataclass(frozen=True, slots=True)
class Tolerance:
    """Scale-relative zero test: ``|q| <= max(abs_floor, rel_eps * scale)``."""

    rel_eps: float = 1e-9
    abs_floor: float = 1e-12

    def __post_init__(self):
        if not self.rel_eps > 0:
            raise ValueError(f"rel_eps must be positive, got {self.rel_eps}")
        if not self.abs_floor >= 0:
            raise ValueError(f"abs_floor must be non-negative, got {self.abs_floor}")

    def is_zero(self, q: float, scale: float) -> bool:
        return abs(q) <= max(self.abs_floor, self.rel_eps * abs(scale))

    def same_point(self, p: Point, q: Point, length: float) -> bool:
        """Points coincide when their distance is zero at the given length scale."""
        return self.is_zero(p.dist(q), length)


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, o: Point) -> Point:
        return Point(self.x + o.x, self.y + o.y)

    def __sub__(self, o: Point) -> Point:
        return Point(self.x - o.x, self.y - o.y)

    def __mul__(self, k: float) -> Point:
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> Point:
        return Point(self.x / k, self.y / k)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def dot(self, o: Point) -> float:
        return self.x * o.x + self.y * o.y

    def cross(self, o: Point) -> float:
        return self.x * o.y - self.y * o.x

    def norm2(self) -> float:
        return self.x * self.x + self.y * self.y

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist2(self, o: Point) -> float:
        dx = self.x - o.x
        dy = self.y - o.y
        return dx * dx + dy * dy

    def dist(self, o: Point) -> float:
        return math.hypot(self.x - o.x, self.y - o.y)

    def unit(self) -> Point:
        n = self.norm()
        if n == 0.0:
            raise DegenerateInput("cannot normalize the zero vector")
        return Point(self.x / n, self.y / n)

    def midpoint(self, o: Point) -> Point:
        return Point(0.5 * (self.x + o.x), 0.5 * (self.y + o.y))


@dataclass(frozen=True, slots=True)
class AtInfinity:
    """Common point of parallel lines; ``direction`` is a unit vector."""

    direction: Point


@dataclass(frozen=True, slots=True)
class Line:
    """Implicit line ``u*x + v*y + w = 0`` with ``u**2 + v**2 == 1``.

    Use :meth:`from_coeffs` to build one from arbitrary coefficients; it
    normalizes and fixes the sign so that ``u > 0`` or ``u == 0 and v > 0``.
    """

    u: float
    v: float
    w: float

    @classmethod
    def from_coeffs(cls, u: float, v: float, w: float) -> Line:
        n = math.hypot(u, v)
        if n == 0.0:
            raise DegenerateInput("line with zero normal")
        u, v, w = u / n, v / n, w / n
        if u < 0 or (u == 0 and v < 0):
            u, v, w = -u, -v, -w
        return cls(u + 0.0, v + 0.0, w + 0.0)

    @classmethod
    def through_point(cls, p: Point, normal: Point) -> Line:
        """Line through ``p`` perpendicular to ``normal``."""
        return cls.from_coeffs(normal.x, normal.y, -normal.dot(p))

    @property
    def normal(self) -> Point:
        return Point(self.u, self.v)

    @property
    def direction(self) -> Point:
        return Point(-self.v, self.u)

    def eval(self, p: Point) -> float:
        """Signed distance of ``p`` from the line."""
        return self.u * p.x + self.v * p.y + self.w


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point
    r_sq: float

    def __post_init__(self):
        if self.r_sq < 0:
            raise ValueError(f"negative squared radius {self.r_sq}")

    @property
    def radius(self) -> float:
        return math.sqrt(self.r_sq)


class Orientation(enum.Enum):
    CCW = 1
    CW = -1
    COLLINEAR = 0


def orientation(p: Point, q: Point, r: Point, tol: Tolerance = DEFAULT_TOL) -> Orientation:
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    scale = max(p.dist2(q), p.dist2(r))
    if tol.is_zero(det, scale):
        return Orientation.COLLINEAR
    return Orientation.CCW if det > 0 else Orientation.CW


def line_through(p: Point, q: Point, tol: Tolerance = DEFAULT_TOL) -> Line:
    d = q - p
    if tol.is_zero(d.norm(), max(p.norm(), q.norm())):
        raise DegenerateInput(f"points {p} and {q} coincide")
    return Line.from_coeffs(-d.y, d.x, d.y * p.x - d.x * p.y)


def intersect_lines(l1: Line, l2: Line, tol: Tolerance = DEFAULT_TOL) -> Union[Point, AtInfinity]:
    det = l1.u * l2.v - l2.u * l1.v
    if tol.is_zero(det, 1.0):
        # canonical sign makes parallel normals agree up to rounding
        sign = 1.0 if l1.u * l2.u + l1.v * l2.v >= 0 else -1.0
        if tol.is_zero(l1.w - sign * l2.w, max(abs(l1.w), abs(l2.w))):
            raise CoincidentLines(f"{l1} and {l2} coincide")
        return AtInfinity(l1.direction)
    x = (l1.v * l2.w - l2.v * l1.w) / det
    y = (l2.u * l1.w - l1.u * l2.w) / det
    return Point(x, y)


def intersect_best_pair(lines: Sequence[Line], tol: Tolerance = DEFAULT_TOL) -> Union[Point, AtInfinity]:
    """Intersect the two lines (out of three) that meet at the largest angle."""
    pairs = [(0, 1), (1, 2), (0, 2)]
    i, j = max(pairs, key=lambda ij: abs(lines[ij[0]].u * lines[ij[1]].v
                                         - lines[ij[1]].u * lines[ij[0]].v))
    return intersect_lines(lines[i], lines[j], tol)


def foot_of_perpendicular(p: Point, line: Line) -> Point:
    d = line.eval(p)
    return Point(p.x - d * line.u, p.y - d * line.v)


def circle_through(p: Point, q: Point, r: Point, tol: Tolerance = DEFAULT_TOL) -> Circle:
    if orientation(p, q, r, tol) is Orientation.COLLINEAR:
        raise CollinearPoints(f"{p}, {q}, {r} are collinear")
    # solve relative to p to keep the arithmetic well conditioned
    bx, by = q.x - p.x, q.y - p.y
    cx, cy = r.x - p.x, r.y - p.y
    d = 2.0 * (bx * cy - by * cx)
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    return Circle(Point(p.x + ux, p.y + uy), ux * ux + uy * uy)


def line_circle_intersections(line: Line, c: Circle, tol: Tolerance = DEFAULT_TOL) -> list[Point]:
    """Intersections ordered along ``line.direction``; one point at tangency."""
    f = foot_of_perpendicular(c.center, line)
    dist2 = c.center.dist2(f)
    h2 = c.r_sq - dist2
    if tol.is_zero(h2, max(c.r_sq, dist2)):
        return [f]
    if h2 < 0:
        return []
    h = math.sqrt(h2)
    d = line.direction
    return [f - d * h, f + d * h]


def power_of_point(p: Point, c: Circle) -> float:
    return p.dist2(c.center) - c.r_sq


def median_length_squared(adj1_sq: float, adj2_sq: float, opp_sq: float,
                          tol: Tolerance = DEFAULT_TOL) -> float:
    """Squared median onto the side of squared length ``opp_sq``."""
    if min(adj1_sq, adj2_sq, opp_sq) < 0:
        raise ValueError("squared lengths must be non-negative")
    m2 = (2.0 * (adj1_sq + adj2_sq) - opp_sq) / 4.0
    if m2 < 0:
        if tol.is_zero(m2, max(adj1_sq, adj2_sq, opp_sq)):
            return 0.0
        raise NegativeResult(f"median squared {m2} < 0: lengths do not form a triangle")
    return m2


def concyclic(points: Sequence[Point], tol: Tolerance = DEFAULT_TOL) -> bool:
    if len(points) < 3:
        raise ValueError("need at least three points")
    c = circle_through(points[0], points[1], points[2], tol)
    r = c.radius
    return all(tol.is_zero(p.dist(c.center) - r, r) for p in points[3:])


def max_dist2(points: Sequence[Point]) -> float:
    """Largest squared pairwise distance; the natural squared scale of a configuration."""
    best = 0.0
    for i, p in enumerate(points):
        for q in points[i + 1:]:
            best = max(best, p.dist2(q))
    return best
