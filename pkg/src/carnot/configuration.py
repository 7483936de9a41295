"""The named Carnot configuration and the exact theorem verifiers.

Given a triangle ABC and six points (A1, A2 on BC; B1, B2 on CA; C1, C2 on
AB) on one conic, ``build_config`` constructs every derived point:

* D1..F2: second intersections of the cevians AA1..CC2 with the conic;
* A3..F4: meets of chords through base and second-intersection points;
* X1..X3, Y1..Y3: pairwise meets of the index-1 and index-2 cevians;
* T1..T3: meets of the X/Y chords, and the Pascal points L, M, N.

Labels that the construction describes only for one vertex are completed by
the cyclic relabeling A->B->C->A, D->E->F->D (subscripts kept), and
X_i, Y_i, T_i -> index i+1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from .conic import (
    Conic,
    coconic_by_fit,
    contains,
    fit_conic,
    fit_dual_conic,
    second_intersection,
)
from .errors import (
    CarnotRelationViolated,
    GeneralPosition,
    GeometryError,
    IdenticalLines,
    IdenticalPoints,
)
from .projective import (
    ProjLine,
    ProjPoint,
    Triangle,
    carnot_product,
    collinear,
    incident,
    join,
    meet,
    menelaus_product,
)

BASE_LABELS = ("A1", "A2", "B1", "B2", "C1", "C2")
VERTEX_LABELS = ("A", "B", "C")
SECOND_LABELS = ("D1", "D2", "E1", "E2", "F1", "F2")
DERIVED_LABELS = tuple(
    f"{letter}{i}" for letter in "ABCDEF" for i in (3, 4)
)
BRADLEY_LABELS = ("X1", "X2", "X3", "Y1", "Y2", "Y3", "T1", "T2", "T3")
PASCAL_LABELS = ("L", "M", "N")
ALL_LABELS = (
    VERTEX_LABELS + BASE_LABELS + SECOND_LABELS + DERIVED_LABELS + BRADLEY_LABELS + PASCAL_LABELS
)
LABEL_ORDER = {label: i for i, label in enumerate(ALL_LABELS)}

SIDE_NAMES = {"a": ("B", "C"), "b": ("C", "A"), "c": ("A", "B")}
CEVIANS = ("AA1", "AA2", "BB1", "BB2", "CC1", "CC2")

_LETTER_CYCLE = {"A": "B", "B": "C", "C": "A", "D": "E", "E": "F", "F": "D"}


def rotate_label(label: str) -> str:
    """Image of a point label under the cyclic relabeling."""
    head, index = label[0], label[1:]
    if head in "XYT":
        return f"{head}{int(index) % 3 + 1}"
    return _LETTER_CYCLE[head] + index


def line_label(p: str, q: str) -> str:
    first, second = sorted((p, q), key=LABEL_ORDER.__getitem__)
    return first + second


def _orbit(label: str, pair1: tuple[str, str], pair2: tuple[str, str]):
    out = {}
    for _ in range(3):
        out[label] = (pair1, pair2)
        label = rotate_label(label)
        pair1 = (rotate_label(pair1[0]), rotate_label(pair1[1]))
        pair2 = (rotate_label(pair2[0]), rotate_label(pair2[1]))
    return out


# each derived point is the meet of two chords, given by their endpoint labels
CHORD_MEETS: dict[str, tuple[tuple[str, str], tuple[str, str]]] = {}
CHORD_MEETS.update(_orbit("B3", ("A1", "C2"), ("F1", "D2")))
CHORD_MEETS.update(_orbit("B4", ("C1", "A2"), ("D1", "F2")))
CHORD_MEETS.update(_orbit("E3", ("A1", "C1"), ("D2", "F2")))
CHORD_MEETS.update(_orbit("E4", ("A2", "C2"), ("D1", "F1")))
CHORD_MEETS.update(_orbit("T2", ("X1", "Y3"), ("X3", "Y1")))

CEVIAN_MEETS = {
    "X1": ("AA1", "BB1"),
    "X2": ("BB1", "CC1"),
    "X3": ("CC1", "AA1"),
    "Y1": ("AA2", "BB2"),
    "Y2": ("BB2", "CC2"),
    "Y3": ("CC2", "AA2"),
}

# Pascal points of the hexagon A1 C1 C2 B1 B2 A2
PASCAL_MEETS = {
    "L": (("A1", "C1"), "b"),
    "M": (("B1", "C2"), "a"),
    "N": (("A2", "B2"), "c"),
}

# Literal lists as printed, and the lists shipped by the verifiers.
PRINTED_T2_TRIPLES = (
    ("A3", "B3", "C3"),
    ("D3", "E3", "C4"),
    ("A3", "E4", "F3"),
    ("D3", "B3", "F4"),
    ("A4", "E3", "F4"),
    ("D4", "E3", "C3"),
    ("D4", "B4", "F3"),
    ("A4", "B4", "C4"),
)
# ("D3", "E3", "C4") is never collinear; mining gives ("D3", "E4", "C4")
T2_TRIPLES = tuple(
    ("D3", "E4", "C4") if t == ("D3", "E3", "C4") else t for t in PRINTED_T2_TRIPLES
)

# E3 and L are both A1C1 meet CA (by t1), and cyclically for A4/M, F4/N
GENERIC_COINCIDENCES = (("A4", "M"), ("E3", "L"), ("F4", "N"))

T1_INCIDENCES = {
    "b": ("B3", "B4", "E3", "E4"),
    "c": ("C3", "C4", "F3", "F4"),
    "a": ("A3", "A4", "D3", "D4"),
}

T5_SEXTUPLES = (
    ("D3", "D4", "E3", "E4", "F3", "F4"),
    ("A3", "A4", "B3", "B4", "F3", "F4"),
    ("A3", "A4", "E3", "E4", "C3", "C4"),
    ("D3", "D4", "B3", "B4", "C3", "C4"),
)
XY_SEXTUPLE = ("X1", "X2", "X3", "Y1", "Y2", "Y3")
T_TRIPLE = ("T1", "T2", "T3")
LMN_TRIPLE = ("L", "M", "N")


@dataclass(frozen=True)
class CarnotConfig:
    triangle: Triangle
    base_conic: Conic
    points: Mapping[str, ProjPoint]
    lines: Mapping[str, ProjLine]
    # point labels lying on each named line by construction
    line_members: Mapping[str, frozenset[str]]
    validated: bool = True
    # conics used for base points off the base conic (unvalidated builds only)
    auxiliary_conics: Mapping[str, Conic] = field(default_factory=dict)

    def __getitem__(self, label: str) -> ProjPoint:
        return self.points[label]

    def base_points(self) -> dict[str, ProjPoint]:
        return {k: self.points[k] for k in VERTEX_LABELS + BASE_LABELS}


class _Builder:
    def __init__(self):
        self.points: dict[str, ProjPoint] = {}
        self.lines: dict[str, ProjLine] = {}
        self.members: dict[str, set[str]] = {}

    def add_line(self, label: str, line: ProjLine, members) -> None:
        self.lines[label] = line
        self.members.setdefault(label, set()).update(members)

    def chord(self, p: str, q: str) -> str:
        label = line_label(p, q)
        if label not in self.lines:
            try:
                line = join(self.points[p], self.points[q])
            except IdenticalPoints:
                raise GeneralPosition(f"{p} and {q} coincide") from None
            self.add_line(label, line, (p, q))
        return label

    def meet_into(self, label: str, l1: str, l2: str) -> None:
        try:
            self.points[label] = meet(self.lines[l1], self.lines[l2])
        except IdenticalLines:
            raise GeneralPosition(f"lines {l1} and {l2} coincide while constructing {label}") from None
        self.members[l1].add(label)
        self.members[l2].add(label)


def build_config(
    t: Triangle,
    a1: ProjPoint,
    a2: ProjPoint,
    b1: ProjPoint,
    b2: ProjPoint,
    c1: ProjPoint,
    c2: ProjPoint,
    *,
    validate: bool = True,
) -> CarnotConfig:
    """Construct the full named configuration.

    With ``validate=False`` the co-conic hypothesis is not checked; base
    points off the conic through A1, A2, B1, B2, C1 get their second
    intersections from the conic through A1, A2, B1, B2 and themselves.
    Used to build negative controls.
    """
    base = dict(zip(BASE_LABELS, (a1, a2, b1, b2, c1, c2)))
    if validate:
        product = carnot_product(t, a1, a2, b1, b2, c1, c2)
        if product != 1:
            raise CarnotRelationViolated(f"Carnot product is {product}, not 1")
    if len(set(base.values()) | set(t.vertices)) != 9:
        raise GeneralPosition("base points and vertices must be nine distinct points")
    try:
        conic = fit_conic([a1, a2, b1, b2, c1])
    except GeometryError as exc:
        raise GeneralPosition(f"base conic is not determined: {exc}") from None
    if conic.is_degenerate:
        raise GeneralPosition("base conic is degenerate")

    aux: dict[str, Conic] = {}
    if not contains(conic, c2):
        if validate:
            raise CarnotRelationViolated("C2 is not on the conic through the other five")
        try:
            aux["C2"] = fit_conic([a1, a2, b1, b2, c2])
        except GeometryError as exc:
            raise GeneralPosition(f"auxiliary conic for C2: {exc}") from None
        if aux["C2"].is_degenerate:
            raise GeneralPosition("auxiliary conic for C2 is degenerate")

    bld = _Builder()
    bld.points.update(zip(VERTEX_LABELS, t.vertices))
    bld.points.update(base)
    for name, (u, v) in SIDE_NAMES.items():
        bld.add_line(name, join(bld.points[u], bld.points[v]), (u, v))
    bld.members["a"].update(("A1", "A2"))
    bld.members["b"].update(("B1", "B2"))
    bld.members["c"].update(("C1", "C2"))

    for cevian, second in zip(CEVIANS, SECOND_LABELS):
        vertex, foot = cevian[0], cevian[1:]
        label = bld.chord(vertex, foot)
        host = aux.get(foot, conic)
        point, tangent = second_intersection(host, bld.points[foot], bld.lines[label])
        if tangent:
            raise GeneralPosition(f"cevian {cevian} is tangent to the conic")
        bld.points[second] = point
        bld.members[label].add(second)

    for label in DERIVED_LABELS:
        (p1, q1), (p2, q2) = CHORD_MEETS[label]
        bld.meet_into(label, bld.chord(p1, q1), bld.chord(p2, q2))

    for label, (l1, l2) in CEVIAN_MEETS.items():
        bld.meet_into(label, l1, l2)

    for label in ("T1", "T2", "T3"):
        (p1, q1), (p2, q2) = CHORD_MEETS[label]
        bld.meet_into(label, bld.chord(p1, q1), bld.chord(p2, q2))

    for label, ((p, q), side) in PASCAL_MEETS.items():
        bld.meet_into(label, bld.chord(p, q), side)

    return CarnotConfig(
        triangle=t,
        base_conic=conic,
        points=dict(bld.points),
        lines=dict(bld.lines),
        line_members={k: frozenset(v) for k, v in bld.members.items()},
        validated=validate,
        auxiliary_conics=aux,
    )


# --- verifiers --------------------------------------------------------------
# Each check_* returns the label groups that fail; verify_* is its emptiness.


def _side_of(label: str) -> str:
    return {"A": "a", "D": "a", "B": "b", "E": "b", "C": "c", "F": "c"}[label[0]]


def check_t1(cfg: CarnotConfig) -> list[tuple[str, ...]]:
    fails = []
    for side, labels in T1_INCIDENCES.items():
        for label in labels:
            if not incident(cfg[label], cfg.lines[side]):
                fails.append((label, side))
    return fails


def check_t2(cfg: CarnotConfig) -> list[tuple[str, ...]]:
    return [t for t in T2_TRIPLES if not collinear(*(cfg[x] for x in t))]


def _sextuple_carnot(cfg: CarnotConfig, labels) -> bool:
    """Carnot product over ABC for a sextuple with two points on each side."""
    by_side: dict[str, list[ProjPoint]] = {"a": [], "b": [], "c": []}
    for label in labels:
        by_side[_side_of(label)].append(cfg[label])
    try:
        return carnot_product(cfg.triangle, *by_side["a"], *by_side["b"], *by_side["c"]) == 1
    except GeometryError:
        return False


def t4_by_conic(cfg: CarnotConfig) -> bool:
    return coconic_by_fit([cfg[x] for x in T5_SEXTUPLES[0]])


def t4_by_carnot(cfg: CarnotConfig) -> bool:
    return _sextuple_carnot(cfg, T5_SEXTUPLES[0])


def check_t4(cfg: CarnotConfig) -> list[tuple[str, ...]]:
    ok = t4_by_conic(cfg) and t4_by_carnot(cfg)
    return [] if ok else [T5_SEXTUPLES[0]]


def check_t5(cfg: CarnotConfig) -> list[tuple[str, ...]]:
    return [
        s for s in T5_SEXTUPLES
        if not (coconic_by_fit([cfg[x] for x in s]) and _sextuple_carnot(cfg, s))
    ]


def t_side_feet(cfg: CarnotConfig) -> dict[str, tuple[ProjPoint, ProjPoint]]:
    """For each T, the two points where its defining chords cross its side."""
    out = {}
    for label, side in (("T1", "c"), ("T2", "a"), ("T3", "b")):
        (p1, q1), (p2, q2) = CHORD_MEETS[label]
        feet = []
        for p, q in ((p1, q1), (p2, q2)):
            try:
                feet.append(meet(cfg.lines[line_label(p, q)], cfg.lines[side]))
            except IdenticalLines:
                feet.append(None)
        out[label] = tuple(feet)
    return out


def check_t_on_sides(cfg: CarnotConfig) -> list[tuple[str, ...]]:
    fails = []
    feet = t_side_feet(cfg)
    for label, side in (("T1", "c"), ("T2", "a"), ("T3", "b")):
        f1, f2 = feet[label]
        if not incident(cfg[label], cfg.lines[side]) or f1 is None or f1 != f2:
            fails.append((label, side))
    return fails


def xy_by_conic(cfg: CarnotConfig) -> bool:
    return coconic_by_fit([cfg[x] for x in XY_SEXTUPLE])


def xy_by_carnot(cfg: CarnotConfig) -> bool:
    """Carnot product over the triangle cut out by AA1, AA2 and X2Y2.

    X1, X3 lie on AA1, Y1, Y3 on AA2 and X2, Y2 on X2Y2.
    """
    try:
        x2y2 = join(cfg["X2"], cfg["Y2"])
        apex = meet(cfg.lines["AA1"], cfg.lines["AA2"])
        tri = Triangle(apex, meet(cfg.lines["AA2"], x2y2), meet(x2y2, cfg.lines["AA1"]))
        product = carnot_product(
            tri, cfg["X2"], cfg["Y2"], cfg["X1"], cfg["X3"], cfg["Y1"], cfg["Y3"]
        )
    except GeometryError:
        return False
    return product == 1


def check_xy_conic(cfg: CarnotConfig) -> list[tuple[str, ...]]:
    return [] if xy_by_conic(cfg) else [XY_SEXTUPLE]


def t_line_by_menelaus(cfg: CarnotConfig) -> bool:
    try:
        return menelaus_product(cfg.triangle, cfg["T2"], cfg["T3"], cfg["T1"]) == -1
    except GeometryError:
        return False


def check_t_line(cfg: CarnotConfig) -> list[tuple[str, ...]]:
    return [] if collinear(*(cfg[x] for x in T_TRIPLE)) else [T_TRIPLE]


def lmn_by_menelaus(cfg: CarnotConfig) -> bool:
    try:
        return menelaus_product(cfg.triangle, cfg["M"], cfg["L"], cfg["N"]) == -1
    except GeometryError:
        return False


def check_pascal_lmn(cfg: CarnotConfig) -> list[tuple[str, ...]]:
    ok = collinear(*(cfg[x] for x in LMN_TRIPLE)) and lmn_by_menelaus(cfg)
    return [] if ok else [LMN_TRIPLE]


def bradley_dual_conic(cfg: CarnotConfig) -> Conic:
    """Line-conic tangent to the first five cevians."""
    return fit_dual_conic([cfg.lines[c] for c in CEVIANS[:5]])


def check_bradley_tangent(cfg: CarnotConfig) -> list[tuple[str, ...]]:
    try:
        dual = bradley_dual_conic(cfg)
    except GeometryError:
        return [CEVIANS]
    return [] if dual.form(cfg.lines["CC2"].coords) == 0 else [("CC2",)]


def check_carnot(cfg: CarnotConfig) -> list[tuple[str, ...]]:
    """Carnot product and the fitted conic agree that the base six are co-conic."""
    pts = [cfg[x] for x in BASE_LABELS]
    try:
        by_product = carnot_product(cfg.triangle, *pts) == 1
    except GeometryError:
        by_product = False
    return [] if by_product and coconic_by_fit(pts) else [BASE_LABELS]


CARNOT_CHECKS: dict[str, Callable[[CarnotConfig], list]] = {
    "carnot": check_carnot,
    "t1": check_t1,
    "t2": check_t2,
    "t4": check_t4,
    "t5": check_t5,
    "t_on_sides": check_t_on_sides,
    "xy_conic": check_xy_conic,
    "t_line": check_t_line,
    "pascal_lmn": check_pascal_lmn,
    "bradley_tangent": check_bradley_tangent,
}


def verify_t1(cfg: CarnotConfig) -> bool:
    return not check_t1(cfg)


def verify_t2(cfg: CarnotConfig) -> bool:
    return not check_t2(cfg)


def verify_t4(cfg: CarnotConfig) -> bool:
    return not check_t4(cfg)


def verify_t5(cfg: CarnotConfig) -> bool:
    return not check_t5(cfg)


def verify_T_on_sides(cfg: CarnotConfig) -> bool:
    return not check_t_on_sides(cfg)


def verify_corollary_xy_conic(cfg: CarnotConfig) -> bool:
    return not check_xy_conic(cfg)


def verify_corollary_t_line(cfg: CarnotConfig) -> bool:
    return not check_t_line(cfg)


def verify_pascal_LMN(cfg: CarnotConfig) -> bool:
    return not check_pascal_lmn(cfg)


def verify_bradley_tangent(cfg: CarnotConfig) -> bool:
    return not check_bradley_tangent(cfg)
