"""Command-line frontend.

Exit codes: 0 success / relation holds, 1 relation does not hold or a suite
failed, 2 bad input (parse error, unknown suite or figure, missing argument),
3 degenerate triangle, 4 geometric precondition violated.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Optional

from . import constructions as cons
from . import relations as rel
from .constructions import CenterKind, Triangle, all_centers
from .errors import DegenerateTriangle, GeometryError
from .figures import DEFAULT_TRIANGLES, FIGURES, render_figure
from .kernel import DEFAULT_TOL, AtInfinity, Point, Tolerance
from .verify import SUITES, default_config, get_suite, run_suite
from .verify.report import dumps

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_DEGENERATE, EXIT_PRECONDITION = 0, 1, 2, 3, 4
EPS_ENV = "ORTHOCEVIA_EPS"

FIXTURES = {
    "T345": [[0.0, 0.0], [4.0, 0.0], [0.0, 3.0]],
    "TACU": [[0.0, 0.0], [4.0, 0.0], [1.0, 3.0]],
}
RELATIONS = ("homology", "orthology", "bilogical", "orthohomological", "sixpoint", "terquem", "theorem7")
DERIVED = {"contact", "extouch", "medial", "orthic"}


class UsageError(Exception):
    pass


# --- parsing ------------------------------------------------------------------

def parse_point(text: str) -> Point:
    try:
        x, y = text.split(",")
        return Point(float(x), float(y))
    except ValueError as exc:
        raise UsageError(f"bad point {text!r}: expected 'x,y'") from exc


def parse_triangle(text: str) -> list[Point]:
    if text in FIXTURES:
        return [Point(*v) for v in FIXTURES[text]]
    parts = text.split()
    if len(parts) != 3:
        raise UsageError(f"bad triangle {text!r}: expected 'ax,ay bx,by cx,cy'")
    return [parse_point(p) for p in parts]


def _decode_point(v: Any, name: str) -> Point:
    try:
        x, y = v
        return Point(float(x), float(y))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad coordinates for {name}: {v!r}") from exc


def load_scene(args) -> dict[str, Any]:
    """Triangle, named points, optional second triangle and tolerance from flags/files."""
    data: dict[str, Any] = {}
    if args.scene:
        try:
            with open(args.scene) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read scene {args.scene}: {exc}") from exc
        if not isinstance(data, dict):
            raise UsageError("scene must be a JSON object")
    if args.triangle:
        verts = parse_triangle(args.triangle)
    elif "triangle" in data:
        if not isinstance(data["triangle"], list) or len(data["triangle"]) != 3:
            raise UsageError("scene triangle must have three vertices")
        verts = [_decode_point(v, "triangle vertex") for v in data["triangle"]]
    elif getattr(args, "default_triangle", None):
        verts = parse_triangle(args.default_triangle)
    else:
        raise UsageError("no triangle given (use --triangle or --scene)")
    # points from a scene; a centers document contributes its centers as points
    named = {}
    for key in ("centers", "points"):
        for name, v in (data.get(key) or {}).items():
            named[name] = _decode_point(v, name)
    raw = dict(p.split("=", 1) for p in (args.point or []) if "=" in p)
    if len(raw) != len(args.point or []):
        raise UsageError("points must be given as NAME=x,y or NAME=<center name>")
    eps = getattr(args, "eps", None) or data.get("options", {}).get("eps") or os.environ.get(EPS_ENV)
    try:
        tol = Tolerance(rel_eps=float(eps)) if eps else DEFAULT_TOL
    except ValueError as exc:
        raise UsageError(f"bad tolerance {eps!r}") from exc
    return {"verts": verts, "named": named, "raw_points": raw, "other": getattr(args, "other", None)
            or data.get("other"), "tol": tol}


def resolve_points(scene: dict, t: Triangle) -> dict[str, Point]:
    points = dict(scene["named"])
    for name, text in scene["raw_points"].items():
        if "," in text:
            points[name] = parse_point(text)
        elif text in points:
            points[name] = points[text]
        else:
            try:
                points[name] = cons.triangle_center(t, CenterKind(text))
            except ValueError as exc:
                raise UsageError(f"{name}: {text!r} is neither 'x,y' nor a center name") from exc
    return points


# --- JSON helpers -------------------------------------------------------------

def enc(v: Any) -> Any:
    if isinstance(v, Point):
        return [v.x, v.y]
    if isinstance(v, AtInfinity):
        return {"at_infinity": [v.direction.x, v.direction.y]}
    if isinstance(v, cons.CevianFeet):
        return [enc(p) for p in v]
    if isinstance(v, (list, tuple)):
        return [enc(x) for x in v]
    return v


def _emit(doc: dict, out=None):
    (out or sys.stdout).write(dumps(doc) + "\n")


# --- commands -----------------------------------------------------------------

def cmd_centers(args) -> int:
    scene = load_scene(args)
    t = Triangle(*scene["verts"])
    _emit({
        "triangle": [enc(p) for p in t],
        "sides": {"a": t.a, "b": t.b, "c": t.c, "s": t.s},
        "centers": {k: enc(p) for k, p in all_centers(t).items()},
    })
    return EXIT_OK


def _second_triangle(scene: dict, t: Triangle, points: dict, tol: Tolerance):
    other = scene["other"]
    if other is None:
        if "P1" in points:
            return cons.pedal_triangle(t, points["P1"], tol)
        raise UsageError("this relation needs --other or a point P1 (whose pedal triangle is used)")
    if isinstance(other, str):
        if other in DERIVED:
            return getattr(cons, f"{other}_triangle")(t)
        if other.startswith("pedal:"):
            name = other.split(":", 1)[1]
            if name not in points:
                raise UsageError(f"unknown point {name!r} in --other")
            return cons.pedal_triangle(t, points[name], tol)
        return Triangle(*parse_triangle(other))
    return Triangle(*(_decode_point(v, "other vertex") for v in other))


def _need(points: dict, name: str, relation: str) -> Point:
    if name not in points:
        raise UsageError(f"relation {relation} needs --point {name}=...")
    return points[name]


def cmd_check(args) -> int:
    scene = load_scene(args)
    tol = scene["tol"]
    t = Triangle(*scene["verts"])
    points = resolve_points(scene, t)
    relation = args.relation
    doc: dict[str, Any] = {"relation": relation, "tolerance": tol.rel_eps}
    if relation in ("homology", "orthology", "bilogical", "orthohomological"):
        other = _second_triangle(scene, t, points, tol)
        doc["other"] = enc(list(other))
        if relation == "homology":
            h = rel.homology(t, other, tol)
            doc.update(concurrent=h.concurrent, center=enc(h.center), residual=h.residual)
            holds = h.concurrent
        elif relation == "orthology":
            fwd, bwd = rel.orthology(t, other, tol)
            doc.update(forward=_orth(fwd), backward=_orth(bwd))
            holds = fwd.concurrent and bwd.concurrent
        elif relation == "bilogical":
            fwd, bwd = rel.orthology(t, other, tol)
            holds = rel.is_bilogical(t, other, tol)
            doc.update(forward=_orth(fwd), backward=_orth(bwd), bilogical=holds)
        else:
            fwd, _ = rel.orthology(t, other, tol)
            h = rel.homology(t, other, tol)
            holds = rel.is_orthohomological(t, other, tol)
            doc.update(orthology=_orth(fwd), homology={"concurrent": h.concurrent,
                       "center": enc(h.center), "residual": h.residual},
                       orthohomological=holds)
    elif relation == "sixpoint":
        P1 = _need(points, "P1", relation)
        P2 = points.get("P2")
        if P2 is None:
            P2 = cons.isogonal_conjugate(t, P1, tol)
        six = rel.six_point_circle(t, P1, P2, tol)
        holds = six.max_deviation <= tol.rel_eps
        doc.update(P1=enc(P1), P2=enc(P2), center=enc(six.center), radii=list(six.radii),
                   max_deviation=six.max_deviation, feet1=enc(six.feet1), feet2=enc(six.feet2))
    elif relation == "terquem":
        P1 = _need(points, "P1", relation)
        res = rel.terquem(t, cons.cevian_feet(t, P1, tol), tol)
        second_ceva = rel.ceva_product(t, res.second_feet, tol)
        holds = isinstance(res.F2, Point) and tol.is_zero(second_ceva - 1.0, 1.0)
        doc.update(circle={"center": enc(res.circle.center), "r_sq": res.circle.r_sq},
                   second_feet=enc(res.second_feet), F1=enc(res.F1), F2=enc(res.F2),
                   tangent_sides=list(res.tangent_sides), second_ceva_product=second_ceva)
    elif relation == "theorem7":
        P1 = _need(points, "P1", relation)
        r = rel.orthohomological_pedal_check(t, P1, tol)
        holds = bool(r.homological_1 and r.homological_2)
        doc.update(P1=enc(r.P1), P2=enc(r.P2), homological_1=r.homological_1,
                   homological_2=r.homological_2, F1=enc(r.F1), F2=enc(r.F2),
                   six_feet_concyclic=r.six_feet_concyclic, center_deviation=r.center_deviation,
                   radius_deviation=r.radius_deviation)
    else:
        raise UsageError(f"unknown relation {relation!r}; known: {', '.join(RELATIONS)}")
    doc["holds"] = holds
    _emit(doc)
    return EXIT_OK if holds else EXIT_FALSE


def _orth(r: rel.OrthologyResult) -> dict:
    return {"concurrent": r.concurrent, "center": enc(r.center), "carnot_sum": r.carnot_sum}


def cmd_verify(args) -> int:
    get_suite(args.suite)
    overrides: dict[str, Any] = {"seed": args.seed}
    if args.trials is not None:
        overrides["trials"] = args.trials
    eps = args.eps or os.environ.get(EPS_ENV)
    if eps:
        overrides["tolerance"] = Tolerance(rel_eps=float(eps))
    report = run_suite(args.suite, default_config(args.suite, **overrides), workers=args.workers)
    text = report.to_json()
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    if args.json != "-":
        summary = {"suite": report.suite, "passed": report.passed, "trials": report.trials,
                   "failures": len(report.failures), "max_residuals": report.max_residuals}
        _emit(summary)
    return EXIT_OK if report.passed else EXIT_FALSE


def cmd_figure(args) -> int:
    if args.figure not in FIGURES:
        raise UsageError(f"unknown figure {args.figure!r}; known: {', '.join(FIGURES)}")
    args.default_triangle = DEFAULT_TRIANGLES[args.figure]
    scene = load_scene(args)
    t = Triangle(*scene["verts"])
    svg = render_figure(args.figure, t, resolve_points(scene, t), args.size, scene["tol"])
    if args.out in (None, "-"):
        sys.stdout.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return EXIT_OK


# --- entry point --------------------------------------------------------------

def _scene_args(p: argparse.ArgumentParser):
    p.add_argument("--triangle", help="'ax,ay bx,by cx,cy' or a fixture name (T345, TACU)")
    p.add_argument("--scene", help="JSON scene file (a 'centers' output is accepted too)")
    p.add_argument("--point", action="append", metavar="NAME=x,y",
                   help="named point; the value may also be a center name, e.g. P1=incenter")
    p.add_argument("--eps", help=f"relative tolerance (default ${EPS_ENV} or 1e-9)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orthocevia", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("centers", help="triangle centers, side lengths and semiperimeter")
    _scene_args(p)
    p.set_defaults(func=cmd_centers)

    p = sub.add_parser("check", help="check a relation on a scene")
    p.add_argument("relation", help=", ".join(RELATIONS))
    _scene_args(p)
    p.add_argument("--other", help="second triangle: 'x,y x,y x,y', contact, extouch, medial, "
                                   "orthic or pedal:NAME")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run a randomized verification suite")
    p.add_argument("suite", help=", ".join(SUITES))
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--eps")
    p.add_argument("--json", metavar="PATH", help="write the full report here ('-' for stdout)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", help="write an SVG sketch")
    p.add_argument("figure", help=", ".join(FIGURES))
    _scene_args(p)
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--size", type=int, default=600, help="larger pixel dimension")
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, KeyError) as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateTriangle as exc:
        print(f"error: degenerate triangle: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except GeometryError as exc:
        print(f"error: precondition failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
