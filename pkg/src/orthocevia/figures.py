"""Schematic SVG sketches of the classic configurations.

Coordinates are emitted in world units with the y axis flipped; the viewBox is
the bounding box of everything drawn plus a 10% margin.
"""
from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import Optional

from . import constructions as cons
from . import relations as rel
from .constructions import CenterKind, Triangle, triangle_center
from .kernel import DEFAULT_TOL, AtInfinity, Circle, Point, Tolerance, foot_of_perpendicular, line_through

SVG_NS = "http://www.w3.org/2000/svg"
FIGURES = ("fig3_contact", "fig5_orthology", "fig7_sixpoint", "fig9_terquem", "fig10_excircle")


def _num(v: float) -> str:
    text = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _point_id(label: str) -> str:
    return "pt-" + label.replace("'", "_prime").replace("Γ", "Gamma")


class Sketch:
    def __init__(self, title: str):
        self.title = title
        self.items: list[tuple[str, dict, Optional[str]]] = []
        self.xs: list[float] = []
        self.ys: list[float] = []

    def _see(self, p: Point, pad: float = 0.0):
        self.xs += [p.x - pad, p.x + pad]
        self.ys += [p.y - pad, p.y + pad]

    def polygon(self, pts, cls: str):
        for p in pts:
            self._see(p)
        self.items.append(("polygon", {"class": cls, "points": " ".join(
            f"{_num(p.x)},{_num(-p.y)}" for p in pts)}, None))

    def segment(self, p: Point, q: Point, cls: str):
        self._see(p)
        self._see(q)
        self.items.append(("line", {"class": cls, "x1": _num(p.x), "y1": _num(-p.y),
                                    "x2": _num(q.x), "y2": _num(-q.y)}, None))

    def circle(self, c: Circle, cls: str):
        self._see(c.center, c.radius)
        self.items.append(("circle", {"class": cls, "cx": _num(c.center.x), "cy": _num(-c.center.y),
                                      "r": _num(c.radius)}, None))

    def point(self, p: Point, label: str):
        self._see(p)
        self.items.append(("point", {"x": p.x, "y": p.y}, label))

    def render(self, size: int = 600) -> str:
        xmin, xmax = min(self.xs), max(self.xs)
        ymin, ymax = min(-y for y in self.ys), max(-y for y in self.ys)
        extent = max(xmax - xmin, ymax - ymin) or 1.0
        m = 0.1 * extent
        vb = (xmin - m, ymin - m, xmax - xmin + 2 * m, ymax - ymin + 2 * m)
        width = size if vb[2] >= vb[3] else size * vb[2] / vb[3]
        height = size if vb[3] >= vb[2] else size * vb[3] / vb[2]
        stroke = extent / 400
        root = ET.Element("svg", {
            "xmlns": SVG_NS, "version": "1.1",
            "width": _num(width), "height": _num(height),
            "viewBox": " ".join(_num(v) for v in vb),
        })
        ET.SubElement(root, "title").text = self.title
        style = ET.SubElement(root, "style")
        style.text = (
            f"line,polygon,circle{{fill:none;stroke:#222;stroke-width:{_num(stroke)}}}"
            f" .aux{{stroke:#888;stroke-dasharray:{_num(4 * stroke)}}}"
            f" circle.point{{fill:#c00;stroke:none}}"
            f" text{{font-family:sans-serif;font-size:{_num(extent / 30)}px}}"
        )
        for tag, attrs, label in self.items:
            if tag == "point":
                g = ET.SubElement(root, "g", {"class": "labeled-point", "id": _point_id(label)})
                ET.SubElement(g, "circle", {"class": "point", "cx": _num(attrs["x"]),
                                            "cy": _num(-attrs["y"]), "r": _num(2.5 * stroke)})
                txt = ET.SubElement(g, "text", {"x": _num(attrs["x"] + 4 * stroke),
                                                "y": _num(-attrs["y"] - 4 * stroke)})
                txt.text = label
            else:
                ET.SubElement(root, tag, attrs)
        ET.indent(root)
        return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def _labels(sk: Sketch, t: Triangle):
    sk.polygon(list(t), "triangle")
    for name, p in zip("ABC", t):
        sk.point(p, name)


def _point_or_default(points: dict, key: str, t: Triangle, default: CenterKind) -> Point:
    p = points.get(key)
    return p if p is not None else triangle_center(t, default)


def fig3_contact(t: Triangle, points: dict, tol: Tolerance) -> Sketch:
    sk = Sketch("contact triangle and Gergonne point")
    _labels(sk, t)
    sk.circle(cons.incircle(t), "incircle")
    contact = cons.contact_triangle(t)
    sk.polygon(list(contact), "contact-triangle")
    for V, f, name in zip(t, contact, ("A'", "B'", "C'")):
        sk.segment(V, f, "cevian aux")
        sk.point(f, name)
    sk.point(triangle_center(t, CenterKind.INCENTER), "I")
    sk.point(triangle_center(t, CenterKind.GERGONNE), "Γ")
    return sk


def fig5_orthology(t: Triangle, points: dict, tol: Tolerance) -> Sketch:
    sk = Sketch("orthological triangles")
    _labels(sk, t)
    P = _point_or_default(points, "P1", t, CenterKind.CENTROID)
    other = list(cons.pedal_triangle(t, P, tol))
    sk.polygon(other, "other-triangle")
    for p, name in zip(other, ("A'", "B'", "C'")):
        sk.point(p, name)
    for src, dst in ((list(t), other), (other, list(t))):
        for V, (p, q) in zip(src, ((dst[1], dst[2]), (dst[2], dst[0]), (dst[0], dst[1]))):
            sk.segment(V, foot_of_perpendicular(V, line_through(p, q)), "perpendicular aux")
    fwd, bwd = rel.orthology(t, other, tol)
    if fwd.center is not None:
        sk.point(fwd.center, "M")
    if bwd.center is not None:
        sk.point(bwd.center, "M'")
    return sk


def fig7_sixpoint(t: Triangle, points: dict, tol: Tolerance) -> Sketch:
    sk = Sketch("circle of six points")
    _labels(sk, t)
    P1 = _point_or_default(points, "P1", t, CenterKind.CENTROID)
    P2 = points.get("P2")
    if P2 is None:
        P2 = cons.isogonal_conjugate(t, P1, tol)
    six = rel.six_point_circle(t, P1, P2, tol)
    sk.circle(Circle(six.center, six.radius ** 2), "six-point-circle")
    for k, (f1, f2) in enumerate(zip(six.feet1, six.feet2)):
        v = "ABC"[k]
        sk.segment(P1, f1, "perpendicular aux")
        sk.segment(P2, f2, "perpendicular aux")
        sk.point(f1, f"{v}1")
        sk.point(f2, f"{v}2")
    sk.point(P1, "P1")
    sk.point(P2, "P2")
    sk.point(six.center, "P")
    return sk


def fig9_terquem(t: Triangle, points: dict, tol: Tolerance) -> Sketch:
    sk = Sketch("Terquem points")
    _labels(sk, t)
    P = _point_or_default(points, "P1", t, CenterKind.CENTROID)
    feet = cons.cevian_feet(t, P, tol)
    res = rel.terquem(t, feet, tol)
    sk.circle(res.circle, "terquem-circle")
    for k, (V, f1, f2) in enumerate(zip(t, feet, res.second_feet)):
        v = "ABC"[k]
        sk.segment(V, f1, "cevian")
        sk.segment(V, f2, "cevian aux")
        sk.point(f1, f"{v}1")
        sk.point(f2, f"{v}2")
    for name, F in (("F1", res.F1), ("F2", res.F2)):
        if not isinstance(F, AtInfinity):
            sk.point(F, name)
    return sk


def fig10_excircle(t: Triangle, points: dict, tol: Tolerance) -> Sketch:
    sk = Sketch("incircle and excircle touch points")
    _labels(sk, t)
    inc, exc = cons.incircle(t), cons.excircle(t, "A")
    sk.circle(inc, "incircle")
    sk.circle(exc, "excircle")
    D = cons.contact_triangle(t).fa
    Da = cons.extouch_triangle(t).fa
    # extend AB and AC to the excircle's tangency points
    for side in ("AB", "CA"):
        touch = foot_of_perpendicular(exc.center, t.side_line(side))
        sk.segment(t.A, touch, "extension aux")
    sk.point(inc.center, "I")
    sk.point(exc.center, "I_a")
    sk.point(D, "D")
    sk.point(Da, "D_a")
    return sk


_BUILDERS = {
    "fig3_contact": fig3_contact,
    "fig5_orthology": fig5_orthology,
    "fig7_sixpoint": fig7_sixpoint,
    "fig9_terquem": fig9_terquem,
    "fig10_excircle": fig10_excircle,
}

DEFAULT_TRIANGLES = {
    "fig3_contact": "T345", "fig5_orthology": "TACU", "fig7_sixpoint": "TACU",
    "fig9_terquem": "TACU", "fig10_excircle": "T345",
}


def render_figure(figure_id: str, t: Triangle, points: Optional[dict] = None,
                  size: int = 600, tol: Tolerance = DEFAULT_TOL) -> str:
    if figure_id not in _BUILDERS:
        raise KeyError(f"unknown figure {figure_id!r}; known: {', '.join(FIGURES)}")
    if not (isinstance(size, int) and size > 0):
        raise ValueError(f"size must be a positive integer, got {size}")
    return _BUILDERS[figure_id](t, points or {}, tol).render(size)
