from __future__ import annotations

from itertools import combinations

from carnot.configuration import (
    DERIVED_LABELS,
    GENERIC_COINCIDENCES,
    LMN_TRIPLE,
    T2_TRIPLES,
    T5_SEXTUPLES,
    T_TRIPLE,
    XY_SEXTUPLE,
)
from carnot.conic import coconic
from carnot.generator import gen_generic_points
from carnot.mining import IncidenceReport, incidence_mine, mine_intersected
from carnot.projective import collinear
from carnot.quadrilateral import QUAD_SEXTUPLES

from conftest import carnot_config, quad_config

SIDE_OF = {"A": "a", "D": "a", "B": "b", "E": "b", "C": "c", "F": "c"}


def _has(groups, wanted):
    keys = {frozenset(g) for g in groups}
    return frozenset(wanted) in keys


def _one_per_side_triples(report):
    derived = set(DERIVED_LABELS)
    out = set()
    for t in report.collinear_triples:
        if set(t) <= derived and {SIDE_OF[x[0]] for x in t} == {"a", "b", "c"}:
            out.add(frozenset(t))
    return out


def test_carnot_report_contains_known_incidences():
    report = mine_intersected(carnot_config(s) for s in (7, 8, 9))
    for t in T2_TRIPLES + (T_TRIPLE,):
        assert _has(report.collinear_triples, t)
    for s in T5_SEXTUPLES + (XY_SEXTUPLE,):
        assert _has(report.coconic_sextuples, s)
    assert {frozenset(p) for p in report.coincident_pairs} == {frozenset(p) for p in GENERIC_COINCIDENCES}


def test_pascal_triple_is_forced_but_collinear():
    # L, M, N are found as collinear unless their labels coincide with t1 points
    cfg = carnot_config(0)
    assert collinear(*(cfg[x] for x in LMN_TRIPLE))


def test_mined_t2_list_equals_shipped_list():
    shipped = {frozenset(t) for t in T2_TRIPLES}
    for seed in range(20):
        assert _one_per_side_triples(incidence_mine(carnot_config(seed))) == shipped


def test_quad_report_is_exactly_the_four_conics():
    report = mine_intersected(quad_config(s) for s in (0, 1, 2))
    assert {frozenset(s) for s in report.coconic_sextuples} == {frozenset(s) for s in QUAD_SEXTUPLES}
    assert report.collinear_triples == ()
    assert report.concurrent_line_triples == ()


def test_generic_points_give_empty_reports_after_intersection():
    # coordinates are bounded integers, so a single instance could hold an
    # accidental incidence; independent instances do not share one
    for start in range(0, 15, 3):
        report = mine_intersected(gen_generic_points(s) for s in range(start, start + 3))
        assert report.is_empty()


def test_single_generic_instances_have_no_incidences():
    assert all(incidence_mine(gen_generic_points(seed)).is_empty() for seed in range(10))


def test_small_coordinates_can_collide_by_accident():
    pts = gen_generic_points(0, bound=30)
    assert not incidence_mine(pts).is_empty()
    assert mine_intersected(gen_generic_points(s, bound=30) for s in range(3)).is_empty()


def test_reported_sextuples_are_coconic_and_triples_collinear():
    cfg = carnot_config(4)
    report = incidence_mine(cfg)
    for s in report.coconic_sextuples:
        pts = [cfg[x] for x in s]
        assert coconic(pts)
        assert not any(collinear(*t) for t in combinations(pts, 3))
    for t in report.collinear_triples:
        assert collinear(*(cfg[x] for x in t))


def test_intersection_is_monotone():
    one = incidence_mine(carnot_config(7))
    three = mine_intersected(carnot_config(s) for s in (7, 8, 9))
    for field in ("collinear_triples", "concurrent_line_triples", "coconic_sextuples", "coincident_pairs"):
        assert set(getattr(three, field)) <= set(getattr(one, field))


def test_max_arity_below_six_skips_conics():
    report = incidence_mine(carnot_config(1), max_arity=3)
    assert report.coconic_sextuples == ()
    assert report.collinear_triples


def test_empty_intersection_is_empty_report():
    assert mine_intersected([]) == IncidenceReport()
    assert IncidenceReport().to_json()["coconic_sextuples"] == []
