"""Exhaustive incidence search over a configuration's named objects.

The search covers every point triple (collinearity) and every named-line
triple (concurrence). Co-conic sextuples are searched in two families:

* two points on each side of a reference triangle, via the Carnot product
  (exact, and cheap once the side ratios are tabulated);
* six points off every reference side, via a 6x6 determinant filtered
  modulo two primes and confirmed exactly.

Incidences implied by the construction are dropped, as are sextuples with
three collinear points (line-pair conics are products of two collinear
triples already reported).  Reports from several random instances of the
same construction can be intersected to discard coincidences.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from . import exact
from .conic import coconic
from .configuration import BASE_LABELS, SECOND_LABELS, CarnotConfig
from .errors import GeometryError
from .projective import (
    ProjLine,
    ProjPoint,
    Triangle,
    collinear,
    concurrent,
    directed_ratio,
    incident,
    meet,
)
from .quadrilateral import ABCD_SIDES, PQRS_SIDES, QuadConfig

_PRIMES = (2_147_483_647, 1_000_000_007)


@dataclass(frozen=True)
class IncidenceReport:
    collinear_triples: tuple[tuple[str, ...], ...] = ()
    concurrent_line_triples: tuple[tuple[str, ...], ...] = ()
    coconic_sextuples: tuple[tuple[str, ...], ...] = ()
    coincident_pairs: tuple[tuple[str, ...], ...] = ()

    def intersect(self, other: "IncidenceReport") -> "IncidenceReport":
        def common(a, b):
            keep = set(b)
            return tuple(x for x in a if x in keep)

        return IncidenceReport(
            common(self.collinear_triples, other.collinear_triples),
            common(self.concurrent_line_triples, other.concurrent_line_triples),
            common(self.coconic_sextuples, other.coconic_sextuples),
            common(self.coincident_pairs, other.coincident_pairs),
        )

    def is_empty(self) -> bool:
        return not (
            self.collinear_triples
            or self.concurrent_line_triples
            or self.coconic_sextuples
            or self.coincident_pairs
        )

    def to_json(self) -> dict:
        return {
            "collinear_triples": [list(t) for t in self.collinear_triples],
            "concurrent_line_triples": [list(t) for t in self.concurrent_line_triples],
            "coconic_sextuples": [list(t) for t in self.coconic_sextuples],
            "coincident_pairs": [list(t) for t in self.coincident_pairs],
        }


@dataclass
class IncidenceStructure:
    """What the miner needs to know about a configuration."""

    points: Mapping[str, ProjPoint]
    lines: Mapping[str, ProjLine] = field(default_factory=dict)
    line_members: Mapping[str, frozenset[str]] = field(default_factory=dict)
    forced_conics: Sequence[frozenset[str]] = ()
    # reference triangles with their side lines (a, b, c)
    triangles: Sequence[tuple[Triangle, tuple[ProjLine, ProjLine, ProjLine]]] = ()


def structure_of(obj) -> IncidenceStructure:
    if isinstance(obj, IncidenceStructure):
        return obj
    if isinstance(obj, CarnotConfig):
        second_of = dict(zip(BASE_LABELS, SECOND_LABELS))
        off = {x for b in obj.auxiliary_conics for x in (b, second_of[b])}
        on_base = frozenset(BASE_LABELS + SECOND_LABELS) - off
        tri = obj.triangle
        return IncidenceStructure(
            points=obj.points,
            lines=obj.lines,
            line_members=obj.line_members,
            forced_conics=[on_base],
            triangles=[(tri, (obj.lines["a"], obj.lines["b"], obj.lines["c"]))],
        )
    if isinstance(obj, QuadConfig):
        triangles = []
        for sides in (ABCD_SIDES, PQRS_SIDES):
            for k in range(1, 5):
                la, lb, lc = (obj.lines[sides[i]] for i in range(1, 5) if i != k)
                try:
                    tri = Triangle(meet(lb, lc), meet(lc, la), meet(la, lb))
                except GeometryError:
                    continue
                triangles.append((tri, (la, lb, lc)))
        return IncidenceStructure(
            points=obj.points, lines=obj.lines, line_members=obj.line_members, triangles=triangles
        )
    if isinstance(obj, Mapping):
        return IncidenceStructure(points=dict(obj))
    raise TypeError(f"cannot mine {type(obj).__name__}")


def _forced_collinear(triple: Sequence[str], members: Mapping[str, frozenset[str]]) -> bool:
    return any(all(x in m for x in triple) for m in members.values())


def _forced_concurrent(triple: Sequence[str], members: Mapping[str, frozenset[str]]) -> bool:
    common = members.get(triple[0], frozenset())
    for label in triple[1:]:
        common = common & members.get(label, frozenset())
    return bool(common)


def _modp_singular(vecs: Sequence[Sequence[int]]) -> bool:
    return all(exact.modp_det(vecs, p) == 0 for p in _PRIMES)


def _veronese(v: Sequence[int]) -> list[int]:
    x, y, z = v
    return [x * x, y * y, z * z, 2 * x * y, 2 * x * z, 2 * y * z]


def incidence_mine(obj, max_arity: int = 6) -> IncidenceReport:
    """Mine one instance; max_arity < 6 skips the sextuple search."""
    st = structure_of(obj)
    labels = list(st.points)
    order = {lab: i for i, lab in enumerate(labels)}
    pts = st.points

    by_point: dict[ProjPoint, list[str]] = defaultdict(list)
    for lab in labels:
        by_point[pts[lab]].append(lab)
    coincident = tuple(
        pair for group in by_point.values() for pair in combinations(group, 2)
    )
    same = {frozenset(p) for p in coincident}

    def distinct(group: Iterable[str]) -> bool:
        return not any(frozenset(pair) in same for pair in combinations(group, 2))

    triples = []
    for t in combinations(labels, 3):
        if distinct(t) and collinear(*(pts[x] for x in t)) and not _forced_collinear(t, st.line_members):
            triples.append(t)

    line_labels = list(st.lines)
    line_triples = []
    for t in combinations(line_labels, 3):
        ls = [st.lines[x] for x in t]
        if len(set(ls)) < 3:
            continue
        if concurrent(*ls) and not _forced_concurrent(t, st.line_members):
            line_triples.append(t)

    sextuples: set[tuple[str, ...]] = set()
    if max_arity >= 6:
        sextuples |= _side_sextuples(st, labels, order, distinct)
        sextuples |= _off_side_sextuples(st, labels, distinct)
    forced = [set(g) for g in st.forced_conics]
    kept = []
    for s in sorted(sextuples, key=lambda s: [order[x] for x in s]):
        if any(set(s) <= g for g in forced):
            continue
        if any(collinear(*(pts[x] for x in t)) for t in combinations(s, 3)):
            continue
        kept.append(s)

    return IncidenceReport(
        collinear_triples=tuple(triples),
        concurrent_line_triples=tuple(line_triples),
        coconic_sextuples=tuple(kept),
        coincident_pairs=coincident,
    )


def _side_sextuples(st: IncidenceStructure, labels, order, distinct) -> set[tuple[str, ...]]:
    found = set()
    for tri, sides in st.triangles:
        verts = set(tri.vertices)
        if not all(v.is_finite for v in verts):
            continue
        ends = ((tri.b_vertex, tri.c_vertex), (tri.c_vertex, tri.a_vertex), (tri.a_vertex, tri.b_vertex))
        pair_products = []
        for line, (start, end) in zip(sides, ends):
            on = []
            for lab in labels:
                p = st.points[lab]
                if p in verts or not p.is_finite or not incident(p, line):
                    continue
                on.append((lab, directed_ratio(start, end, p)))
            pairs: dict[tuple[str, str], Fraction] = {}
            for (l1, r1), (l2, r2) in combinations(on, 2):
                if distinct((l1, l2)):
                    pairs[(l1, l2)] = r1 * r2
            pair_products.append(pairs)
        # invert the third factor so the test is a dictionary lookup
        by_value: dict[Fraction, list[tuple[str, str]]] = defaultdict(list)
        for key, value in pair_products[2].items():
            if value != 0:
                by_value[1 / value].append(key)
        for (ka, va), (kb, vb) in product(pair_products[0].items(), pair_products[1].items()):
            for kc in by_value.get(va * vb, ()):
                s = ka + kb + kc
                if len(set(s)) == 6 and distinct(s):
                    found.add(tuple(sorted(s, key=order.__getitem__)))
    # exact confirmation of every hit by the determinant test
    return {s for s in found if coconic([st.points[x] for x in s])}


def _off_side_sextuples(st: IncidenceStructure, labels, distinct) -> set[tuple[str, ...]]:
    side_lines = [line for _, sides in st.triangles for line in sides]
    free = [
        lab for lab in labels
        if not any(incident(st.points[lab], line) for line in side_lines)
    ]
    # one representative per distinct point
    seen: set[ProjPoint] = set()
    reps = []
    for lab in free:
        if st.points[lab] not in seen:
            seen.add(st.points[lab])
            reps.append(lab)
    vecs = {lab: _veronese(st.points[lab].coords) for lab in reps}
    found = set()
    for s in combinations(reps, 6):
        rows = [vecs[x] for x in s]
        if _modp_singular(rows) and exact.bareiss_det(rows) == 0:
            found.add(s)
    return found


def mine_intersected(configs: Iterable) -> IncidenceReport:
    """Intersection of the reports of several instances."""
    report = None
    for cfg in configs:
        r = incidence_mine(cfg)
        report = r if report is None else report.intersect(r)
    return report if report is not None else IncidenceReport()
