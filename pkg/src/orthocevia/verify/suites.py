"""Registered verification suites.

A suite is a pair of functions: ``sample(rng, config) -> inputs`` draws a trial's
inputs as plain JSON data, and ``check(inputs, config) -> list[Check]``
evaluates it. Keeping the two apart lets a failing trial be replayed from its
serialized inputs alone.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Any, Callable

from .. import constructions as cons
from .. import relations as rel
from ..constructions import CenterKind, Triangle, triangle_center
from ..errors import ConjugateAtInfinity, OnSideLine
from ..kernel import (
    AtInfinity,
    Circle,
    Line,
    Point,
    intersect_best_pair,
    line_circle_intersections,
    line_through,
    max_dist2,
    power_of_point,
)
from .report import Check
from .sampling import (
    ACUTE_MIN_COSINE,
    SuiteConfig,
    sample_interior_point,
    sample_triangle,
)

# fixed separation demanded by the negative claims about isogonal conjugates
CONJUGATE_SEPARATION = 1e-3
# relative side-length spread below which a triangle counts as equilateral
EQUILATERAL_SPREAD = 1e-6


class SkipTrial(Exception):
    """The sampled configuration is outside the claim being tested."""


Inputs = dict[str, Any]


@dataclass(frozen=True)
class Suite:
    name: str
    sample: Callable[[random.Random, SuiteConfig], Inputs]
    check: Callable[[Inputs, SuiteConfig], list[Check]]
    default_trials: int = 1000
    rates: dict[str, float] = field(default_factory=dict)  # soft check -> required rate
    summary: str = ""


# --- input (de)serialization --------------------------------------------------

def _enc(p: Point) -> list[float]:
    return [p.x, p.y]


def _dec(v) -> Point:
    return Point(float(v[0]), float(v[1]))


def _enc_tri(t: Triangle) -> list[list[float]]:
    return [_enc(p) for p in t]


def _tri(inputs: Inputs) -> Triangle:
    return Triangle(*(_dec(v) for v in inputs["triangle"]))


def _rel_dist(p: Point, q, length: float) -> float:
    if not isinstance(q, Point):
        return math.inf
    return p.dist(q) / length


def _flag(ok: bool) -> float:
    return 0.0 if ok else 1.0


def _is_equilateral(t: Triangle) -> bool:
    return (max(t.a, t.b, t.c) - min(t.a, t.b, t.c)) <= EQUILATERAL_SPREAD * t.scale


def _triangle_with_point(rng, cfg: SuiteConfig) -> Inputs:
    t = sample_triangle(rng, cfg)
    return {"triangle": _enc_tri(t), "P": _enc(sample_interior_point(rng, t, cfg.interior_margin))}


def _triangle_only(rng, cfg: SuiteConfig) -> Inputs:
    return {"triangle": _enc_tri(sample_triangle(rng, cfg))}


def _cevian_point(t: Triangle, feet) -> Point | AtInfinity:
    return intersect_best_pair([line_through(V, f) for V, f in zip(t, feet)])


# --- steiner ------------------------------------------------------------------

def _steiner_sample(rng, cfg):
    t = sample_triangle(rng, cfg)
    m = cfg.interior_margin
    return {"triangle": _enc_tri(t), "vertex": rng.choice(cons.VERTICES),
            "u": rng.uniform(m, 1.0 - m)}


def _steiner_check(inp, cfg):
    t = _tri(inp)
    vertex = inp["vertex"]
    side = {"A": "BC", "B": "CA", "C": "AB"}[vertex]
    P, Q = t.side_points(side)
    foot1 = P + (Q - P) * inp["u"]
    foot2 = cons.isogonal_cevian_foot(t, vertex, foot1, cfg.tolerance)
    back = cons.isogonal_cevian_foot(t, vertex, foot2, cfg.tolerance)
    lhs, rhs = rel.steiner_check(t, vertex, foot1, foot2, cfg.tolerance)
    return [
        Check("steiner_rel", abs(lhs / rhs - 1.0), cfg.eps),
        Check("involution", back.dist(foot1) / t.scale, cfg.eps),
    ]


# --- ceva_isogonal ------------------------------------------------------------

def _ceva_isogonal_check(inp, cfg):
    t = _tri(inp)
    P = _dec(inp["P"])
    tol = cfg.tolerance
    feet = cons.cevian_feet(t, P, tol)
    iso = cons.CevianFeet(*(cons.isogonal_cevian_foot(t, v, f, tol)
                            for v, f in zip(cons.VERTICES, feet)))
    conj = cons.isogonal_conjugate(t, P, tol)
    # trace of the cevian from A through the conjugate must be the reflected foot
    conj_feet = cons.cevian_feet(t, conj, tol)
    consistency = max(a.dist(b) for a, b in zip(conj_feet, iso)) / t.scale
    return [
        Check("ceva_rel", abs(rel.ceva_product(t, iso, tol) - 1.0), cfg.eps),
        Check("concurrence_vs_conjugate", _rel_dist(conj, _cevian_point(t, iso), t.scale), cfg.eps),
        Check("cevian_consistency", consistency, cfg.eps),
        Check("ceva_input_rel", abs(rel.ceva_product(t, feet, tol) - 1.0), cfg.eps),
    ]


# --- carnot -------------------------------------------------------------------

def _carnot_sample(rng, cfg):
    inp = _triangle_with_point(rng, cfg)
    inp["side"] = rng.randrange(3)
    inp["sign"] = rng.choice((-1, 1))
    inp["free_feet"] = [rng.uniform(-0.5, 1.5) for _ in range(3)]
    return inp


def _carnot_check(inp, cfg):
    t = _tri(inp)
    P = _dec(inp["P"])
    tol = cfg.tolerance
    L2 = t.scale ** 2
    feet = list(cons.pedal_triangle(t, P, tol))
    sides = [t.side_points(s) for s in cons.SIDES]
    k = inp["side"]
    Pk, Qk = sides[k]
    perturbed = list(feet)
    perturbed[k] = feet[k] + (Qk - Pk).unit() * (inp["sign"] * 1e-3 * t.scale)
    # converse direction: independent feet, concurrency of perpendiculars vs the sum
    free = [p + (q - p) * u for (p, q), u in zip(sides, inp["free_feet"])]
    perps = [Line.through_point(f, line_through(p, q).direction) for f, (p, q) in zip(free, sides)]
    concur = rel.concurrence(perps, list(t) + free, tol).concurrent
    zero_sum = tol.is_zero(rel.carnot_sum(t, free), L2)
    return [
        Check("carnot_pedal", abs(rel.carnot_sum(t, feet)) / L2, cfg.eps),
        Check("carnot_perturbed", abs(rel.carnot_sum(t, perturbed)) / L2, 10 * cfg.eps,
              op="ge", hard=False),
        Check("iff_agreement", _flag(concur == zero_sum), 0.0),
    ]


# --- orthology_symmetry / pedal_orthology ---------------------------------------

def _orthology_sample(rng, cfg):
    inp = _triangle_with_point(rng, cfg)
    inp["other"] = _enc_tri(sample_triangle(rng, cfg))
    return inp


def _orthology_check(inp, cfg):
    t = _tri(inp)
    other = _tri({"triangle": inp["other"]})
    tol = cfg.tolerance
    pedal = cons.pedal_triangle(t, _dec(inp["P"]), tol)
    pf, pb = rel.orthology(t, pedal, tol)
    gf, gb = rel.orthology(t, other, tol)
    L2 = max(t.scale, other.scale) ** 2
    return [
        Check("pedal_pair_both_concurrent", _flag(pf.concurrent and pb.concurrent), 0.0),
        Check("generic_pair_both_not", _flag(not gf.concurrent and not gb.concurrent), 0.0),
        # the two directions' sums are exact negatives of each other
        Check("carnot_antisymmetry", abs(gf.carnot_sum + gb.carnot_sum) / L2, cfg.eps),
    ]


def _pedal_orthology_sample(rng, cfg):
    t = sample_triangle(rng, cfg)
    cc = cons.circumcircle(t)
    for _ in range(1000):
        P = Point(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if abs(power_of_point(P, cc)) > 0.05 * cc.r_sq:
            break
    return {"triangle": _enc_tri(t), "P": _enc(P)}


def _pedal_orthology_check(inp, cfg):
    t = _tri(inp)
    P = _dec(inp["P"])
    pedal = cons.pedal_triangle(t, P, cfg.tolerance)
    fwd, bwd = rel.orthology(t, pedal, cfg.tolerance)
    return [
        Check("forward_concurrent", _flag(fwd.concurrent), 0.0),
        Check("backward_center_is_P", _rel_dist(P, bwd.center, t.scale), cfg.eps),
    ]


# --- six_point ----------------------------------------------------------------

def _six_point_sample(rng, cfg):
    inp = _triangle_with_point(rng, cfg)
    inp["offset_angle"] = rng.uniform(0, 2 * math.pi)
    return inp


def _angle_between(u: Point, v: Point) -> float:
    return math.atan2(abs(u.cross(v)), u.dot(v))


def vertex_formula_radius_sq(t: Triangle, vertex: str, P1: Point, P2: Point) -> float:
    V = t.vertex(vertex)
    N = t.vertex({"A": "B", "B": "C", "C": "A"}[vertex])
    alpha = min(_angle_between(N - V, P1 - V), t.angle(vertex))
    return rel.six_point_radius_formula(V.dist(P1), V.dist(P2), alpha, t.angle(vertex), P1.dist(P2))


def _six_point_check(inp, cfg):
    t = _tri(inp)
    tol = cfg.tolerance
    P1 = _dec(inp["P"])
    P2 = cons.isogonal_conjugate(t, P1, tol)
    six = rel.six_point_circle(t, P1, P2, tol)
    r2 = six.radius ** 2
    formula = max(abs(vertex_formula_radius_sq(t, v, P1, P2) / r2 - 1.0) for v in cons.VERTICES)
    th = inp["offset_angle"]
    fake = P2 + Point(math.cos(th), math.sin(th)) * (1e-2 * t.scale)
    control = rel.six_point_circle(t, P1, fake, tol, enforce_conjugate=False)
    return [
        Check("max_deviation", six.max_deviation, cfg.eps),
        Check("formula_rel", formula, cfg.eps),
        Check("control_deviation", control.max_deviation, 100 * cfg.eps, op="ge", hard=False),
    ]


# --- power_of_point -----------------------------------------------------------

def _power_sample(rng, cfg):
    for _ in range(1000):
        center = Point(rng.uniform(-1, 1), rng.uniform(-1, 1))
        r = rng.uniform(0.2, 1.0)
        p = Point(rng.uniform(-2, 2), rng.uniform(-2, 2))
        theta = rng.uniform(0, math.pi)
        d = Point(math.cos(theta), math.sin(theta))
        line = Line.through_point(p, Point(-d.y, d.x))
        if len(line_circle_intersections(line, Circle(center, r * r), cfg.tolerance)) == 2:
            return {"center": _enc(center), "r": r, "p": _enc(p), "theta": theta}
    raise SkipTrial("no secant found")


def _power_check(inp, cfg):
    center, r, p = _dec(inp["center"]), inp["r"], _dec(inp["p"])
    d = Point(math.cos(inp["theta"]), math.sin(inp["theta"]))
    circle = Circle(center, r * r)
    line = Line.through_point(p, Point(-d.y, d.x))
    X, Y = line_circle_intersections(line, circle, cfg.tolerance)
    product = (X - p).dot(d) * (Y - p).dot(d)
    scale_sq = max_dist2([p, center, X, Y])
    return [Check("secant_vs_power",
                  abs(product - power_of_point(p, circle)) / scale_sq, cfg.eps)]


# --- terquem ------------------------------------------------------------------

def _terquem_sample(rng, cfg):
    for _ in range(1000):
        inp = _triangle_with_point(rng, cfg)
        t = _tri(inp)
        res = rel.terquem(t, cons.cevian_feet(t, _dec(inp["P"])), cfg.tolerance)
        if not any(res.tangent_sides):
            return inp
    raise SkipTrial("no configuration with all sides secant")


def _terquem_check(inp, cfg):
    t = _tri(inp)
    tol = cfg.tolerance
    P = _dec(inp["P"])
    feet = cons.cevian_feet(t, P, tol)
    res = rel.terquem(t, feet, tol)
    if any(res.tangent_sides):
        raise SkipTrial("tangent side")
    A, B, C = t
    A1, B1, C1 = feet
    A2, B2, C2 = res.second_feet
    L = t.scale
    # powers of the vertices w.r.t. the feet circle, as signed products along each side
    powers = [
        ((C1 - A).dot(C2 - A), (B1 - A).dot(B2 - A)),
        ((A1 - B).dot(A2 - B), (C1 - B).dot(C2 - B)),
        ((B1 - C).dot(B2 - C), (A1 - C).dot(A2 - C)),
    ]
    power_rel = max(abs(x - y) for x, y in powers) / (L * L)
    lhs = A.dist(C2) * B.dist(A2) * C.dist(B2)
    rhs = A.dist(B2) * B.dist(C2) * C.dist(A2)
    return [
        Check("eq37_rel", abs(rel.ceva_product(t, res.second_feet, tol) - 1.0), cfg.eps),
        Check("eq36_rel", abs(lhs - rhs) / L ** 3, cfg.eps),
        Check("F2_exists", _flag(isinstance(res.F2, Point)), 0.0),
        Check("F1_is_P", _rel_dist(P, res.F1, L), cfg.eps),
        Check("vertex_power", power_rel, cfg.eps),
        Check("on_circle", max(abs(res.circle.center.dist(q) - res.circle.radius)
                               for q in res.second_feet) / L, cfg.eps),
    ]


# --- main_theorem -------------------------------------------------------------

def _main_theorem_check(inp, cfg):
    t = _tri(inp)
    tol = cfg.tolerance
    acute = min(t.vertex_cosines()) > ACUTE_MIN_COSINE
    curated = {"incenter": CenterKind.INCENTER, "bevan": CenterKind.BEVAN}
    if acute:
        curated["circumcenter"] = CenterKind.CIRCUMCENTER
        curated["orthocenter"] = CenterKind.ORTHOCENTER
    checks = []
    for name, kind in curated.items():
        P1 = triangle_center(t, kind)
        try:
            report = rel.orthohomological_pedal_check(t, P1, tol)
        except (OnSideLine, ConjugateAtInfinity):
            # the point or its conjugate leaves the affine plane: no claim
            continue
        violated = report.homological_1 and not report.homological_2
        checks.append(Check(f"{name}_implication", _flag(not violated), 0.0))
        checks.append(Check(f"{name}_hypothesis", _flag(report.homological_1), 0.0))
        if report.homological_1:
            checks.append(Check(f"{name}_circle_center", report.center_deviation, cfg.eps))
            checks.append(Check(f"{name}_circle_radius", report.radius_deviation, cfg.eps))
    # a random point: the perspectivity hypothesis is checked, not assumed
    random_report = rel.orthohomological_pedal_check(t, _dec(inp["P"]), tol)
    if random_report.homological_1:
        checks.append(Check("random_implication", _flag(random_report.homological_2), 0.0))
    checks.append(Check("random_point_off_locus", _flag(not random_report.homological_1),
                        0.0, hard=False))
    return checks


# --- contact / extouch family ---------------------------------------------------

def _gergonne_check(inp, cfg):
    t = _tri(inp)
    tol = cfg.tolerance
    contact = cons.contact_triangle(t)
    h = rel.homology(t, contact, tol)
    I = triangle_center(t, CenterKind.INCENTER)
    pedal = cons.pedal_triangle(t, I, tol)
    return [
        Check("homology_concurrent", _flag(h.concurrent), 0.0),
        Check("center_is_gergonne", _rel_dist(triangle_center(t, CenterKind.GERGONNE), h.center, t.scale),
              cfg.eps),
        Check("ceva_rel", abs(rel.ceva_product(t, contact, tol) - 1.0), cfg.eps),
        Check("incenter_self_conjugate", _rel_dist(I, cons.isogonal_conjugate(t, I, tol), t.scale), cfg.eps),
        Check("pedal_of_incenter", max(p.dist(q) for p, q in zip(pedal, contact)) / t.scale, cfg.eps),
    ]


def _isotomic_touch_check(inp, cfg):
    t = _tri(inp)
    s = t.s
    contact = cons.contact_triangle(t)
    ext = cons.extouch_triangle(t)
    sym = max((c + e - p - q).norm() for c, e, (p, q)
              in zip(contact, ext, (t.side_points(x) for x in cons.SIDES))) / t.scale
    # CD = s - c = BD_a on BC, and the cyclic analogues
    lengths = [
        (t.C.dist(contact.fa), s - t.c), (t.B.dist(ext.fa), s - t.c),
        (t.A.dist(contact.fb), s - t.a), (t.C.dist(ext.fb), s - t.a),
        (t.B.dist(contact.fc), s - t.b), (t.A.dist(ext.fc), s - t.b),
    ]
    tangent = max(abs(got - want) for got, want in lengths) / t.scale
    circles = [cons.incircle(t)] + [cons.excircle(t, v) for v in cons.VERTICES]
    tangency = max(abs(abs(line.eval(c.center)) - c.radius) / c.radius
                   for c in circles for line in t.side_lines())
    iso = max(cons.isotomic_point_on_side(t, side, c).dist(e)
              for side, c, e in zip(cons.SIDES, contact, ext)) / t.scale
    return [
        Check("midpoint_symmetry", sym, cfg.eps),
        Check("tangent_lengths", tangent, cfg.eps),
        Check("tangency", tangency, cfg.eps),
        Check("isotomic_map", iso, cfg.eps),
    ]


def _isotomic_concurrency_check(inp, cfg):
    t = _tri(inp)
    tol = cfg.tolerance
    P = _dec(inp["P"])
    feet = cons.cevian_feet(t, P, tol)
    iso = cons.CevianFeet(*(cons.isotomic_point_on_side(t, side, f, tol)
                            for side, f in zip(cons.SIDES, feet)))
    conj = cons.isotomic_conjugate(t, P, tol)
    return [
        Check("ceva_rel", abs(rel.ceva_product(t, iso, tol) - 1.0), cfg.eps),
        Check("concurrence_vs_conjugate", _rel_dist(conj, _cevian_point(t, iso), t.scale), cfg.eps),
        Check("isotomic_involution", _rel_dist(P, cons.isotomic_conjugate(t, conj, tol), t.scale), cfg.eps),
        Check("isogonal_involution",
              _rel_dist(P, cons.isogonal_conjugate(t, cons.isogonal_conjugate(t, P, tol), tol), t.scale),
              cfg.eps),
    ]


def _nagel_check(inp, cfg):
    t = _tri(inp)
    h = rel.homology(t, cons.extouch_triangle(t), cfg.tolerance)
    return [
        Check("homology_concurrent", _flag(h.concurrent), 0.0),
        Check("center_is_nagel", _rel_dist(triangle_center(t, CenterKind.NAGEL), h.center, t.scale), cfg.eps),
    ]


def _bevan_check(inp, cfg):
    t = _tri(inp)
    tol = cfg.tolerance
    ext = cons.extouch_triangle(t)
    V = triangle_center(t, CenterKind.BEVAN)
    closed = 2.0 * triangle_center(t, CenterKind.CIRCUMCENTER) - triangle_center(t, CenterKind.INCENTER)
    perp_miss = max(abs(Line.through_point(f, line.direction).eval(V))
                    for f, line in zip(ext, t.side_lines())) / t.scale
    checks = [
        Check("carnot_extouch", abs(rel.carnot_sum(t, ext)) / t.scale ** 2, cfg.eps),
        Check("closed_form", V.dist(closed) / t.scale, cfg.eps),
        Check("perpendiculars_meet", perp_miss, cfg.eps),
    ]
    if not cons.on_circumcircle(t, V, tol):
        pedal = cons.pedal_triangle(t, V, tol)
        checks.append(Check("pedal_is_extouch", max(p.dist(q) for p, q in zip(pedal, ext)) / t.scale,
                            cfg.eps))
    return checks


def _counterexample_check(inp, cfg):
    t = _tri(inp)
    if _is_equilateral(t):
        raise SkipTrial("equilateral")
    tol = cfg.tolerance
    I = triangle_center(t, CenterKind.INCENTER)
    V = triangle_center(t, CenterKind.BEVAN)
    contact, ext = cons.contact_triangle(t), cons.extouch_triangle(t)
    try:
        conj_V = cons.isogonal_conjugate(t, V, tol)
    except (OnSideLine, ConjugateAtInfinity):
        raise SkipTrial("bevan_conjugate_undefined")
    return [
        Check("contact_homological", _flag(rel.homology(t, contact, tol).concurrent), 0.0),
        Check("extouch_homological", _flag(rel.homology(t, ext, tol).concurrent), 0.0),
        Check("pedal_I_is_contact",
              max(p.dist(q) for p, q in zip(cons.pedal_triangle(t, I, tol), contact)) / t.scale, cfg.eps),
        Check("pedal_V_is_extouch",
              max(p.dist(q) for p, q in zip(cons.pedal_triangle(t, V, tol), ext)) / t.scale, cfg.eps),
        Check("conj_bevan_vs_incenter", conj_V.dist(I) / t.scale, CONJUGATE_SEPARATION, op="ge"),
    ]


def _gergonne_nagel_check(inp, cfg):
    t = _tri(inp)
    tol = cfg.tolerance
    G = triangle_center(t, CenterKind.GERGONNE)
    N = triangle_center(t, CenterKind.NAGEL)
    checks = [
        Check("isotomic_reading", cons.isotomic_conjugate(t, G, tol).dist(N) / t.scale, cfg.eps),
    ]
    if not _is_equilateral(t):
        checks.append(Check("isogonal_reading_distance",
                            cons.isogonal_conjugate(t, G, tol).dist(N) / t.scale,
                            CONJUGATE_SEPARATION, op="ge", hard=False))
    return checks


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("steiner", _steiner_sample, _steiner_check, 10_000,
          summary="Steiner ratio identity for isogonal cevians"),
    Suite("ceva_isogonal", _triangle_with_point, _ceva_isogonal_check,
          summary="isogonal cevians of concurrent cevians concur at the isogonal conjugate"),
    Suite("carnot", _carnot_sample, _carnot_check, rates={"carnot_perturbed": 0.99},
          summary="Carnot sum vanishes exactly for concurrent perpendiculars"),
    Suite("orthology_symmetry", _orthology_sample, _orthology_check,
          summary="orthology holds in both directions or in neither"),
    Suite("pedal_orthology", _pedal_orthology_sample, _pedal_orthology_check,
          summary="a triangle and the pedal triangle of any point are orthological"),
    Suite("six_point", _six_point_sample, _six_point_check, rates={"control_deviation": 0.99},
          summary="pedal feet of an isogonal pair lie on one circle centered at the midpoint"),
    Suite("power_of_point", _power_sample, _power_check,
          summary="secant product equals the power of the point"),
    Suite("terquem", _terquem_sample, _terquem_check, 500,
          summary="second intersections of the feet circle give concurrent cevians"),
    Suite("main_theorem", _triangle_with_point, _main_theorem_check, 500,
          rates={"random_point_off_locus": 0.0},
          summary="perspective pedal triangle of P1 implies perspective pedal triangle of P2"),
    Suite("gergonne", _triangle_only, _gergonne_check,
          summary="contact triangle is perspective at the Gergonne point"),
    Suite("isotomic_touch", _triangle_only, _isotomic_touch_check,
          summary="incircle and excircle touch points on a side are isotomic"),
    Suite("isotomic_concurrency", _triangle_with_point, _isotomic_concurrency_check,
          summary="isotomic cevians of concurrent cevians concur at the isotomic conjugate"),
    Suite("nagel", _triangle_only, _nagel_check,
          summary="extouch triangle is perspective at the Nagel point"),
    Suite("bevan", _triangle_only, _bevan_check,
          summary="perpendiculars at the extouch points concur at the Bevan point"),
    Suite("counterexample", _triangle_only, _counterexample_check, 500,
          summary="homological pedal triangles without an isogonal pair (converse fails)"),
    Suite("gergonne_nagel_conjugacy", _triangle_only, _gergonne_nagel_check,
          rates={"isogonal_reading_distance": 0.99},
          summary="Gergonne and Nagel points: isotomic, not isogonal, conjugates"),
]}


def suite_notes(suite: Suite, max_values: dict[str, float], cfg: SuiteConfig) -> dict[str, Any]:
    """Suite-specific verdicts recorded alongside the raw residuals."""
    if suite.name == "gergonne_nagel_conjugacy":
        iso = max_values.get("isotomic_reading")
        isog = max_values.get("isogonal_reading_distance")
        return {"isotomic_reading_holds": iso is not None and iso <= cfg.eps,
                "isogonal_reading_holds": isog is not None and isog <= cfg.eps}
    return {}

