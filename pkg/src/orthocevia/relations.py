"""Theorem-level predicates on triangles and cevian feet.

Ratios along a side are signed so that a foot strictly inside the segment
gives a positive ratio; feet outside the segment then need no special case.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .constructions import (
    CevianFeet,
    Triangle,
    isogonal_conjugate,
    pedal_triangle,
)
from .errors import (
    CoincidentVertexPair,
    FootAtVertex,
    NegativeResult,
    NotConcurrentInput,
    NotIsogonalPair,
)
from .kernel import (
    DEFAULT_TOL,
    AtInfinity,
    Circle,
    Line,
    Point,
    Tolerance,
    circle_through,
    concyclic,
    foot_of_perpendicular,
    intersect_best_pair,
    line_through,
    max_dist2,
)

TriangleLike = Union[Triangle, CevianFeet, tuple]


def _pts(obj: TriangleLike) -> tuple[Point, Point, Point]:
    p, q, r = obj
    return p, q, r


def _sides(pts) -> list[tuple[Point, Point]]:
    A, B, C = pts
    return [(B, C), (C, A), (A, B)]


def _length_scale(*groups: Iterable[Point]) -> float:
    pts = [p for g in groups for p in g]
    return math.sqrt(max_dist2(pts))


# --- Ceva / Steiner -----------------------------------------------------------

def signed_ratio(foot: Point, P: Point, Q: Point, tol: Tolerance = DEFAULT_TOL) -> float:
    """``foot P / foot Q`` along the line PQ, positive for a foot between P and Q."""
    d = Q - P
    num = (P - foot).dot(d)
    den = (Q - foot).dot(d)
    L2 = d.norm2()
    if tol.is_zero(num, L2) or tol.is_zero(den, L2):
        raise FootAtVertex(f"{foot} coincides with an endpoint of its side")
    return -num / den


def ceva_product(t: Triangle, feet: CevianFeet, tol: Tolerance = DEFAULT_TOL) -> float:
    """``(A1B/A1C) * (B1C/B1A) * (C1A/C1B)`` with signed ratios; 1 iff the cevians concur."""
    A, B, C = _pts(t)
    return (signed_ratio(feet.fa, B, C, tol)
            * signed_ratio(feet.fb, C, A, tol)
            * signed_ratio(feet.fc, A, B, tol))


_VERTEX_SIDE = {"A": ("A", "B", "C"), "B": ("B", "C", "A"), "C": ("C", "A", "B")}


def steiner_check(t: Triangle, vertex: str, foot1: Point, foot2: Point,
                  tol: Tolerance = DEFAULT_TOL) -> tuple[float, float]:
    """Both sides of the Steiner relation for two feet on the side opposite ``vertex``.

    For vertex A: lhs = (A1B/A1C)*(A2B/A2C) and rhs = (AB/AC)**2, all unsigned.
    """
    v, n, p = (t.vertex(k) for k in _VERTEX_SIDE[vertex])
    lhs = abs(signed_ratio(foot1, n, p, tol) * signed_ratio(foot2, n, p, tol))
    rhs = (v.dist2(n)) / (v.dist2(p))
    return lhs, rhs


# --- homology -----------------------------------------------------------------

@dataclass(frozen=True)
class PerspectivityResult:
    concurrent: bool
    center: Union[Point, AtInfinity, None]
    residual: float


def concurrency_residual(lines: list[Line], origin: Point, length: float) -> float:
    """Determinant of three normalized lines in coordinates centered at ``origin`` and
    scaled by ``length``; zero iff the lines share a (possibly ideal) point."""
    rows = []
    for ln in lines:
        rows.append((ln.u, ln.v, ln.eval(origin) / length))
    (a1, b1, c1), (a2, b2, c2), (a3, b3, c3) = rows
    return abs(a1 * (b2 * c3 - b3 * c2) - b1 * (a2 * c3 - a3 * c2) + c1 * (a2 * b3 - a3 * b2))


def concurrence(lines: list[Line], points: list[Point],
                tol: Tolerance = DEFAULT_TOL) -> PerspectivityResult:
    length = _length_scale(points)
    origin = Point(sum(p.x for p in points) / len(points), sum(p.y for p in points) / len(points))
    residual = concurrency_residual(lines, origin, length)
    if not tol.is_zero(residual, 1.0):
        return PerspectivityResult(False, None, residual)
    return PerspectivityResult(True, intersect_best_pair(lines, tol), residual)


def homology(t1: TriangleLike, t2: TriangleLike, tol: Tolerance = DEFAULT_TOL) -> PerspectivityResult:
    """Do the lines AA', BB', CC' concur? The center is the perspector when they do."""
    p1, p2 = _pts(t1), _pts(t2)
    length = _length_scale(p1, p2)
    lines = []
    for P, Q in zip(p1, p2):
        if tol.same_point(P, Q, length):
            raise CoincidentVertexPair(f"corresponding vertices {P} and {Q} coincide")
        lines.append(line_through(P, Q, tol))
    return concurrence(lines, list(p1 + p2), tol)


# --- Carnot / orthology -------------------------------------------------------

def carnot_sum(t: TriangleLike, feet: TriangleLike) -> float:
    """``A1B^2 - A1C^2 + B1C^2 - B1A^2 + C1A^2 - C1B^2``."""
    A, B, C = _pts(t)
    fa, fb, fc = _pts(feet)
    return (fa.dist2(B) - fa.dist2(C)
            + fb.dist2(C) - fb.dist2(A)
            + fc.dist2(A) - fc.dist2(B))


@dataclass(frozen=True)
class OrthologyResult:
    carnot_sum: float
    concurrent: bool
    center: Optional[Point]


def _orthology_one_way(src, dst, tol: Tolerance, scale_sq: float) -> OrthologyResult:
    """Perpendiculars from the vertices of ``src`` onto the side lines of ``dst``."""
    feet = []
    perps = []
    for V, (P, Q) in zip(src, _sides(dst)):
        side = line_through(P, Q, tol)
        feet.append(foot_of_perpendicular(V, side))
        perps.append(Line.through_point(V, side.direction))
    total = carnot_sum(dst, feet)
    if not tol.is_zero(total, scale_sq):
        return OrthologyResult(total, False, None)
    center = intersect_best_pair(perps, tol)
    return OrthologyResult(total, True, center if isinstance(center, Point) else None)


def orthology(t1: TriangleLike, t2: TriangleLike,
              tol: Tolerance = DEFAULT_TOL) -> tuple[OrthologyResult, OrthologyResult]:
    """Forward: perpendiculars from t1's vertices onto t2's sides; backward: the reverse."""
    p1, p2 = _pts(t1), _pts(t2)
    scale_sq = max(max_dist2(p1), max_dist2(p2))
    return (_orthology_one_way(p1, p2, tol, scale_sq),
            _orthology_one_way(p2, p1, tol, scale_sq))


def is_bilogical(t1: TriangleLike, t2: TriangleLike, tol: Tolerance = DEFAULT_TOL) -> bool:
    fwd, bwd = orthology(t1, t2, tol)
    if not (fwd.concurrent and bwd.concurrent) or fwd.center is None or bwd.center is None:
        return False
    return tol.same_point(fwd.center, bwd.center, _length_scale(_pts(t1), _pts(t2)))


def is_orthohomological(t1: TriangleLike, t2: TriangleLike, tol: Tolerance = DEFAULT_TOL) -> bool:
    fwd, _ = orthology(t1, t2, tol)
    return fwd.concurrent and homology(t1, t2, tol).concurrent


# --- six-point circle ---------------------------------------------------------

@dataclass(frozen=True)
class SixPointResult:
    center: Point
    radii: tuple[float, ...]  # to A1, A2, B1, B2, C1, C2
    max_deviation: float
    feet1: CevianFeet
    feet2: CevianFeet

    @property
    def radius(self) -> float:
        return sum(self.radii) / len(self.radii)


def six_point_circle(t: Triangle, P1: Point, P2: Point, tol: Tolerance = DEFAULT_TOL,
                     enforce_conjugate: bool = True) -> SixPointResult:
    """Common circle of the pedal triangles of an isogonal pair.

    ``enforce_conjugate=False`` skips the pairing check; it exists for negative
    controls, where the six feet are expected *not* to be concyclic.
    """
    if enforce_conjugate:
        expected = isogonal_conjugate(t, P1, tol)
        if not tol.same_point(P2, expected, max(t.scale, P1.dist(P2))):
            raise NotIsogonalPair(f"{P2} is not the isogonal conjugate of {P1} ({expected})")
    feet1 = pedal_triangle(t, P1, tol)
    feet2 = pedal_triangle(t, P2, tol)
    center = P1.midpoint(P2)
    radii = tuple(center.dist(f) for pair in zip(feet1, feet2) for f in pair)
    mean = sum(radii) / 6.0
    spread = max(radii) - min(radii)
    return SixPointResult(center, radii, spread / mean if mean > 0 else math.inf, feet1, feet2)


def six_point_radius_formula(x1: float, x2: float, alpha: float, A: float, d: float,
                             tol: Tolerance = DEFAULT_TOL) -> float:
    """Squared radius of the six-point circle from data at one vertex.

    ``x1``, ``x2`` are the distances from the vertex to the two points, ``alpha``
    the angle between one side and the first point's cevian (equal to the angle
    between the other side and the second point's cevian), ``A`` the vertex angle
    and ``d`` the distance between the points.
    """
    if not (0.0 <= alpha <= A < math.pi):
        raise ValueError(f"need 0 <= alpha <= A < pi, got alpha={alpha}, A={A}")
    if min(x1, x2, d) < 0:
        raise ValueError("lengths must be non-negative")
    r_sq = (2.0 * (x1 * x1 + x2 * x2 - 2.0 * x1 * x2 * math.cos(alpha) * math.cos(A - alpha))
            - d * d) / 4.0
    if r_sq < 0:
        if tol.is_zero(r_sq, max(x1 * x1, x2 * x2, d * d)):
            return 0.0
        raise NegativeResult(f"squared radius {r_sq} < 0")
    return r_sq


# --- Terquem ------------------------------------------------------------------

@dataclass(frozen=True)
class TerquemResult:
    circle: Circle
    second_feet: CevianFeet
    F1: Union[Point, AtInfinity]
    F2: Union[Point, AtInfinity]
    tangent_sides: tuple[bool, bool, bool]


def _cevian_concurrence(t: Triangle, feet: CevianFeet, tol: Tolerance) -> Union[Point, AtInfinity]:
    lines = [line_through(V, f, tol) for V, f in zip(t, feet)]
    return intersect_best_pair(lines, tol)


def terquem(t: Triangle, feet: CevianFeet, tol: Tolerance = DEFAULT_TOL) -> TerquemResult:
    """Second intersections of the circle through concurrent cevian feet with the sides."""
    product = ceva_product(t, feet, tol)
    if not tol.is_zero(product - 1.0, 1.0):
        raise NotConcurrentInput(f"Ceva product {product!r} != 1")
    circle = circle_through(*feet, tol=tol)
    second = []
    tangent = []
    for f, (P, Q) in zip(feet, _sides(t)):
        d = (Q - P).unit()
        # chord through f along d ends at f + k d, with k = -2 (f - center).d
        k = -2.0 * (f - circle.center).dot(d)
        is_tangent = tol.is_zero(k, t.scale)
        tangent.append(is_tangent)
        second.append(f if is_tangent else f + d * k)
    second_feet = CevianFeet(*second)
    return TerquemResult(circle, second_feet,
                         _cevian_concurrence(t, feet, tol),
                         _cevian_concurrence(t, second_feet, tol),
                         tuple(tangent))


# --- orthohomological pedal pipeline -----------------------------------------

@dataclass(frozen=True)
class PedalCheckReport:
    P1: Point
    P2: Point
    homological_1: bool
    homological_2: Optional[bool] = None
    F1: Union[Point, AtInfinity, None] = None
    F2: Union[Point, AtInfinity, None] = None
    six_feet_concyclic: Optional[bool] = None
    # relative disagreement of the circle through P1's feet with the six-point circle
    center_deviation: Optional[float] = None
    radius_deviation: Optional[float] = None
    residual_1: float = 0.0
    residual_2: Optional[float] = None


def orthohomological_pedal_check(t: Triangle, P1: Point,
                                 tol: Tolerance = DEFAULT_TOL) -> PedalCheckReport:
    P2 = isogonal_conjugate(t, P1, tol)
    feet1 = pedal_triangle(t, P1, tol)
    h1 = homology(t, feet1, tol)
    if not h1.concurrent:
        return PedalCheckReport(P1, P2, False, residual_1=h1.residual)
    feet2 = pedal_triangle(t, P2, tol)
    h2 = homology(t, feet2, tol)
    six = six_point_circle(t, P1, P2, tol, enforce_conjugate=False)
    feet_circle = circle_through(*feet1, tol=tol)
    r = six.radius
    return PedalCheckReport(
        P1, P2, True, h2.concurrent, h1.center, h2.center,
        six_feet_concyclic=concyclic(list(feet1) + list(feet2), tol),
        center_deviation=feet_circle.center.dist(six.center) / r,
        radius_deviation=abs(feet_circle.radius - r) / r,
        residual_1=h1.residual, residual_2=h2.residual,
    )
