from __future__ import annotations

from fractions import Fraction

import pytest

from carnot.configuration import ALL_LABELS, BASE_LABELS, verify_t1
from carnot.errors import ExhaustedRetries
from carnot.generator import (
    carnot_from_parameters,
    circle_point,
    config_is_generic,
    gen_carnot,
    gen_generic_points,
    gen_quad_pair,
    perturb,
    perturb_points,
)
from carnot.projective import ProjPoint, carnot_product, collinear, incident, join
from carnot.quadrilateral import build_quad_config, verify_quad_conics

from conftest import carnot_config


def test_circle_parametrization():
    assert circle_point(0) == (1, 0, 1)
    assert circle_point(2) == (-3, 4, 5)
    assert circle_point(Fraction(1, 2)) == (3, 4, 5)
    assert circle_point(None) == (-1, 0, 1)


def test_identity_map_gives_circle_configuration():
    tri, pts = carnot_from_parameters((0, 1, 2, 3, -1, -2))
    assert pts[0] == ProjPoint(1, 0, 1)
    assert pts[2] == ProjPoint(-3, 4, 5)
    assert incident(pts[0], join(tri.b_vertex, tri.c_vertex))
    assert carnot_product(tri, *pts) == 1


@pytest.mark.parametrize("seed", range(15))
def test_generated_sextuple_satisfies_carnot(seed):
    tri, pts = gen_carnot(seed)
    assert carnot_product(tri, *pts) == 1


def test_generated_configs_are_generic_and_distinct():
    seen = set()
    for seed in range(10):
        cfg = carnot_config(seed)
        assert config_is_generic(cfg)
        key = tuple(cfg[x] for x in ("A", "B", "C") + BASE_LABELS)
        assert key not in seen
        seen.add(key)
    assert len(ALL_LABELS) - 3 == len(set(carnot_config(0).points.values()))


def test_generation_is_deterministic():
    assert gen_carnot(11) == gen_carnot(11)
    assert gen_quad_pair(11) == gen_quad_pair(11)
    assert gen_generic_points(11) == gen_generic_points(11)


def test_zero_retry_budget_exhausts():
    with pytest.raises(ExhaustedRetries):
        gen_carnot(0, retries=0)
    with pytest.raises(ExhaustedRetries):
        gen_quad_pair(0, retries=0)


@pytest.mark.parametrize("seed", range(6))
def test_quad_pair_accepted_and_all_conics_hold(seed):
    abcd, pqrs = gen_quad_pair(seed)
    qc = build_quad_config(abcd, pqrs)
    assert all(p.is_finite for p in qc.points.values())
    assert not any(incident(v, qc.axis) for v in abcd)
    assert verify_quad_conics(qc) == (True, True, True, True)


def test_perturb_zero_offset_is_identity():
    pts = carnot_config(0).base_points()
    assert perturb_points(pts, "C2", 5, offset=0) == pts
    assert perturb_points(pts, "A1", 5, mode="free", offset=0) == pts


def test_perturb_c2_along_its_side():
    cfg = carnot_config(1)
    pts = perturb_points(cfg.base_points(), "C2", 3)
    assert pts["C2"] != cfg["C2"]
    assert collinear(pts["A"], pts["B"], pts["C2"])
    assert carnot_product(cfg.triangle, *(pts[x] for x in BASE_LABELS)) != 1
    assert all(pts[x] == cfg[x] for x in BASE_LABELS[:5])


def test_perturbed_config_fails_t1():
    for seed in range(5):
        assert not verify_t1(perturb(carnot_config(seed), seed))


def test_generic_points_are_distinct_and_labelled():
    pts = gen_generic_points(2, count=10)
    assert list(pts) == [f"P{i}" for i in range(1, 11)]
    assert len(set(pts.values())) == 10
