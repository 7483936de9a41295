"""Two quadrilaterals in axial perspective and their four cross-point conics.

Sides are numbered 1: AB / PQ, 2: BC / QR, 3: CD / RS, 4: DA / SP.  The
cross point "ij" is side i of ABCD met with side j of PQRS; the diagonal
meets 11, 22, 33, 44 are the perspective points T, U, V, W.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .conic import coconic_by_fit
from .errors import (
    DegenerateQuadrilateral,
    GeneralPosition,
    GeometryError,
    IdenticalLines,
    NotAxiallyPerspective,
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

ABCD_LABELS = ("A", "B", "C", "D")
PQRS_LABELS = ("P", "Q", "R", "S")
PERSPECTIVE_LABELS = ("T", "U", "V", "W")
CROSS_LABELS = tuple(f"{i}{j}" for i in range(1, 5) for j in range(1, 5) if i != j)
QUAD_LABELS = ABCD_LABELS + PQRS_LABELS + PERSPECTIVE_LABELS + CROSS_LABELS

ABCD_SIDES = {1: "AB", 2: "BC", 3: "CD", 4: "DA"}
PQRS_SIDES = {1: "PQ", 2: "QR", 3: "RS", 4: "SP"}


def sextuple_for(k: int) -> tuple[str, ...]:
    """Cross points avoiding index k on both sides."""
    return tuple(
        f"{i}{j}" for i in range(1, 5) for j in range(1, 5) if len({i, j, k}) == 3
    )


QUAD_SEXTUPLES = tuple(sextuple_for(k) for k in range(1, 5))
# as printed: the second list has 42 where the index pattern gives 41
PRINTED_QUAD_SEXTUPLES = (
    ("23", "24", "32", "34", "42", "43"),
    ("13", "14", "31", "34", "42", "43"),
    ("12", "14", "21", "24", "41", "42"),
    ("12", "13", "21", "23", "31", "32"),
)


@dataclass(frozen=True)
class QuadConfig:
    abcd: tuple[ProjPoint, ProjPoint, ProjPoint, ProjPoint]
    pqrs: tuple[ProjPoint, ProjPoint, ProjPoint, ProjPoint]
    axis: ProjLine
    perspective_points: tuple[ProjPoint, ProjPoint, ProjPoint, ProjPoint]
    cross_points: Mapping[str, ProjPoint]
    points: Mapping[str, ProjPoint]
    lines: Mapping[str, ProjLine]
    line_members: Mapping[str, frozenset[str]]
    validated: bool = True

    def __getitem__(self, label: str) -> ProjPoint:
        return self.points[label]


def _check_quadrilateral(pts: Sequence[ProjPoint], name: str) -> None:
    if len(set(pts)) != 4 or any(collinear(*t) for t in combinations(pts, 3)):
        raise DegenerateQuadrilateral(f"{name} has three collinear vertices")


def build_quad_config(
    abcd: Sequence[ProjPoint], pqrs: Sequence[ProjPoint], *, validate: bool = True
) -> QuadConfig:
    abcd, pqrs = tuple(abcd), tuple(pqrs)
    _check_quadrilateral(abcd, "ABCD")
    _check_quadrilateral(pqrs, "PQRS")
    points = dict(zip(ABCD_LABELS + PQRS_LABELS, abcd + pqrs))
    lines: dict[str, ProjLine] = {}
    members: dict[str, set[str]] = {}
    for sides in (ABCD_SIDES, PQRS_SIDES):
        for name in sides.values():
            lines[name] = join(points[name[0]], points[name[1]])
            members[name] = set(name)

    for i, side in ABCD_SIDES.items():
        for j, other in PQRS_SIDES.items():
            label = PERSPECTIVE_LABELS[i - 1] if i == j else f"{i}{j}"
            try:
                points[label] = meet(lines[side], lines[other])
            except IdenticalLines:
                raise GeneralPosition(f"sides {side} and {other} coincide") from None
            members[side].add(label)
            members[other].add(label)

    persp = tuple(points[x] for x in PERSPECTIVE_LABELS)
    pairs = [(p, q) for p, q in combinations(persp, 2) if p != q]
    if not pairs:
        raise NotAxiallyPerspective("perspective points all coincide")
    axis = join(*pairs[0])
    if validate and not all(incident(p, axis) for p in persp):
        raise NotAxiallyPerspective("T, U, V, W are not collinear")
    lines["axis"] = axis
    members["axis"] = {x for x in PERSPECTIVE_LABELS if incident(points[x], axis)}

    return QuadConfig(
        abcd=abcd,
        pqrs=pqrs,
        axis=axis,
        perspective_points=persp,
        cross_points={k: points[k] for k in CROSS_LABELS},
        points=points,
        lines=lines,
        line_members={k: frozenset(v) for k, v in members.items()},
        validated=validate,
    )


def quad_conic_by_fit(qc: QuadConfig, labels: Sequence[str]) -> bool:
    return coconic_by_fit([qc[x] for x in labels])


def side_triangle(qc: QuadConfig, k: int) -> tuple[Triangle, tuple[int, int, int]]:
    """Triangle cut out by the sides of ABCD other than side k.

    Returns the triangle and the side indices opposite its vertices a, b, c.
    """
    s1, s2, s3 = [i for i in range(1, 5) if i != k]
    l1, l2, l3 = (qc.lines[ABCD_SIDES[i]] for i in (s1, s2, s3))
    return Triangle(meet(l2, l3), meet(l3, l1), meet(l1, l2)), (s1, s2, s3)


def quad_conic_by_carnot(qc: QuadConfig, k: int, labels: Sequence[str] | None = None) -> bool:
    """Carnot product over the side triangle of ABCD omitting side k."""
    labels = sextuple_for(k) if labels is None else labels
    try:
        tri, (s1, s2, s3) = side_triangle(qc, k)
        on = {s: [qc[x] for x in labels if int(x[0]) == s] for s in (s1, s2, s3)}
        if any(len(v) != 2 for v in on.values()):
            return False
        return carnot_product(tri, *on[s1], *on[s2], *on[s3]) == 1
    except GeometryError:
        return False


def menelaus_route_first_conic(qc: QuadConfig) -> tuple[bool, list[Fraction]]:
    """Co-conicity of {23,24,32,34,42,43} from four Menelaus relations.

    Over triangle X D C with X = AD meet BC, the transversals SP, QR, RS and
    the axis each give a product of -1; their quotient
    (SP)(QR)(RS)/(axis) is the Carnot product of the six cross points.
    """
    x = meet(qc.lines["DA"], qc.lines["BC"])
    tri = Triangle(x, qc["D"], qc["C"])
    # menelaus_product(tri, on DC, on CX, on XD)
    m_sp = menelaus_product(tri, qc["34"], qc["24"], qc["W"])
    m_qr = menelaus_product(tri, qc["32"], qc["U"], qc["42"])
    m_rs = menelaus_product(tri, qc["V"], qc["23"], qc["43"])
    m_axis = menelaus_product(tri, qc["V"], qc["U"], qc["W"])
    products = [m_sp, m_qr, m_rs, m_axis]
    return m_sp * m_qr * m_rs / m_axis == 1, products


def verify_quad_conics(qc: QuadConfig) -> tuple[bool, bool, bool, bool]:
    return tuple(quad_conic_by_fit(qc, s) for s in QUAD_SEXTUPLES)  # type: ignore[return-value]


def quad_metadata(qc: QuadConfig) -> dict:
    """Printed vs shipped sextuple lists with their verdicts on this instance."""
    return {
        "shipped_sextuples": [list(s) for s in QUAD_SEXTUPLES],
        "printed_sextuples": [list(s) for s in PRINTED_QUAD_SEXTUPLES],
        "printed_verdicts": [quad_conic_by_fit(qc, s) for s in PRINTED_QUAD_SEXTUPLES],
    }
