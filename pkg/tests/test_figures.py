import xml.etree.ElementTree as ET

import pytest

from orthocevia import Point, make_triangle
from orthocevia.figures import FIGURES, render_figure

NS = {"svg": "http://www.w3.org/2000/svg"}
T345 = make_triangle(Point(0, 0), Point(4, 0), Point(0, 3))
TACU = make_triangle(Point(0, 0), Point(4, 0), Point(1, 3))


def parse(svg):
    return ET.fromstring(svg.split("\n", 1)[1])


def labels(root):
    return {g.find("svg:text", NS).text for g in root.iterfind(".//svg:g[@class='labeled-point']", NS)}


@pytest.mark.parametrize("fig", FIGURES)
def test_well_formed_with_viewbox(fig):
    t = T345 if fig in ("fig3_contact", "fig10_excircle") else TACU
    root = parse(render_figure(fig, t))
    assert root.tag == "{http://www.w3.org/2000/svg}svg"
    assert len(root.get("viewBox").split()) == 4
    assert root.find("svg:polygon[@class='triangle']", NS) is not None


def test_fig7_one_circle_six_feet():
    root = parse(render_figure("fig7_sixpoint", TACU, {"P1": Point(2, 1)}))
    assert len(root.findall(".//svg:circle[@class='six-point-circle']", NS)) == 1
    feet = {"A1", "A2", "B1", "B2", "C1", "C2"}
    assert feet <= labels(root)
    c = root.find(".//svg:circle[@class='six-point-circle']", NS)
    assert (float(c.get("cx")), float(c.get("cy"))) == (1.5, -1.0)


def test_fig10_content():
    root = parse(render_figure("fig10_excircle", T345))
    assert root.find(".//svg:circle[@class='incircle']", NS) is not None
    ex = root.find(".//svg:circle[@class='excircle']", NS)
    assert (float(ex.get("cx")), float(ex.get("cy")), float(ex.get("r"))) == (6, -6, 6)
    assert {"D", "D_a"} <= labels(root)


def test_deterministic():
    assert render_figure("fig9_terquem", TACU) == render_figure("fig9_terquem", TACU)


def test_bad_inputs():
    with pytest.raises(KeyError):
        render_figure("fig1", TACU)
    with pytest.raises(ValueError):
        render_figure("fig3_contact", T345, size=0)
