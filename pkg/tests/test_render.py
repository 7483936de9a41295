from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from carnot.configuration import build_config
from carnot.conic import UNIT_CIRCLE
from carnot.errors import NothingVisible
from carnot.generator import carnot_from_parameters
from carnot.projective import ProjPoint
from carnot.render import affine_type, conic_branches, render_svg

from conftest import carnot_config, quad_config

NS = {"svg": "http://www.w3.org/2000/svg"}
# sends the circle to y^2 - x^2 = z^2, a hyperbola with one branch per sign of y
SWAP_YZ = ((1, 0, 0), (0, 0, 1), (0, 1, 0))


def _tree(svg: str):
    return ET.fromstring(svg.split("\n", 1)[1])


def _by_class(root, tag, cls):
    return [e for e in root.iter(f"{{{NS['svg']}}}{tag}") if e.get("class") == cls]


@pytest.fixture(scope="module")
def hyperbola_config():
    tri, pts = carnot_from_parameters([1, 2, -1, -3, 3, Fraction(-1, 2)], SWAP_YZ)
    return build_config(tri, *pts)


def test_circle_base_figure(circle_config):
    root = _tree(render_svg(circle_config, "base"))
    points = _by_class(root, "circle", "point")
    assert len(points) == 9
    assert {p.get("data-label") for p in points} == {"A", "B", "C", "A1", "A2", "B1", "B2", "C1", "C2"}
    assert len(_by_class(root, "text", "label")) == 9
    assert len(_by_class(root, "line", "side")) == 3
    assert len(_by_class(root, "polyline", "conic")) == 1


def test_output_is_byte_identical():
    cfg = carnot_config(3)
    for labels in ("base", "derived", "bradley", "all"):
        assert render_svg(cfg, labels) == render_svg(carnot_config(3), labels)


def test_points_at_infinity_are_listed_not_drawn(circle_config):
    svg = render_svg(circle_config, "all")
    root = _tree(svg)
    desc = root.find("svg:desc", NS).text
    assert "C4" in desc
    drawn = {p.get("data-label") for p in _by_class(root, "circle", "point")}
    assert "C4" not in drawn and "A1" in drawn


def test_drawn_positions_match_exact_coordinates():
    cfg = carnot_config(0)
    root = _tree(render_svg(cfg, "all"))
    for el in _by_class(root, "circle", "point"):
        x, y = cfg[el.get("data-label")].affine()
        cx, cy = float(el.get("cx")), -float(el.get("cy"))
        for drawn, exact in ((cx, x), (cy, y)):
            assert abs(Fraction(drawn) - exact) <= Fraction(1, 10**9) * max(1, abs(exact))


def test_viewport_has_five_percent_margin():
    cfg = carnot_config(1)
    root = _tree(render_svg(cfg, "base"))
    x0, y0, w, h = map(float, root.get("viewBox").split())
    xs = [float(cfg[k].affine()[0]) for k in ("A", "B", "C", "A1", "A2", "B1", "B2", "C1", "C2")]
    span = max(xs) - min(xs)
    assert w == pytest.approx(span * 1.1)
    assert x0 == pytest.approx(min(xs) - 0.05 * span)


def test_hyperbola_draws_two_separate_branches(hyperbola_config):
    assert affine_type(hyperbola_config.base_conic) == "hyperbola"
    root = _tree(render_svg(hyperbola_config, "base"))
    conics = _by_class(root, "polyline", "conic")
    assert len(conics) == 2
    # y^2 - x^2 = 1: one branch has y >= 1, the other y <= -1 (svg y is flipped)
    signs = []
    for poly in conics:
        ys = [-float(pair.split(",")[1]) for pair in poly.get("points").split()]
        assert all(y >= 1 - 1e-9 for y in ys) or all(y <= -1 + 1e-9 for y in ys)
        signs.append(ys[0] > 0)
    assert sorted(signs) == [False, True]


def test_ellipse_is_one_closed_polyline():
    box = (-2.0, -2.0, 2.0, 2.0)
    (branch,) = conic_branches(UNIT_CIRCLE, ProjPoint(1, 0, 1), box)
    assert branch[0] == branch[-1]
    assert all(abs(x * x + y * y - 1) < 1e-9 for x, y in branch)


def test_quad_figure_draws_four_conics():
    svg = render_svg(quad_config(1), "all")
    root = _tree(svg)
    labels = {p.get("data-label") for p in _by_class(root, "polyline", "conic")}
    assert labels == {"C1", "C2", "C3", "C4"}
    assert len(_by_class(root, "line", "axis")) == 1
    assert len(_by_class(root, "line", "side")) == 8


def test_label_sets_grow():
    cfg = carnot_config(2)
    counts = [len(re.findall('class="point"', render_svg(cfg, s))) for s in ("base", "derived", "all")]
    assert counts == sorted(counts) and counts[0] == 9


def test_nothing_visible():
    with pytest.raises(NothingVisible):
        render_svg({"P": ProjPoint(1, 0, 0), "Q": ProjPoint(0, 1, 0)})


def test_unknown_label_set():
    with pytest.raises(ValueError):
        render_svg(carnot_config(0), "everything")
