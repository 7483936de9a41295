"""Conics as exact symmetric quadratic forms.

A conic stores (a, b, c, d, e, f) for
    a x^2 + b y^2 + c z^2 + 2d xy + 2e xz + 2f yz
and a role: a point-conic is evaluated on point coordinates, a line-conic
(dual conic) on line coordinates.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import exact
from .errors import (
    DegenerateConic,
    DuplicateLines,
    DuplicatePoints,
    LineNotThroughPoint,
    PointNotOnConic,
    UnderDetermined,
)
from .projective import ProjLine, ProjPoint, collinear, incident, scalar_str

POINT = "point"
LINE = "line"


class Conic:
    __slots__ = ("coefficients", "role")

    def __init__(self, coefficients: Iterable, role: str = POINT):
        coefficients = tuple(coefficients)
        if len(coefficients) != 6:
            raise ValueError("a conic has six coefficients (a, b, c, d, e, f)")
        if role not in (POINT, LINE):
            raise ValueError(f"unknown conic role {role!r}")
        try:
            canon = exact.primitive([Fraction(v) for v in coefficients])
        except ValueError:
            raise ValueError("conic coefficients cannot all be zero") from None
        object.__setattr__(self, "coefficients", canon)
        object.__setattr__(self, "role", role)

    def __setattr__(self, name, value):
        raise AttributeError("Conic is immutable")

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence], role: str = POINT) -> "Conic":
        return cls((m[0][0], m[1][1], m[2][2], m[0][1], m[0][2], m[1][2]), role)

    @property
    def matrix(self) -> list[list[int]]:
        a, b, c, d, e, f = self.coefficients
        return [[a, d, e], [d, b, f], [e, f, c]]

    @property
    def rank(self) -> int:
        return exact.bareiss_rank(self.matrix)

    @property
    def is_degenerate(self) -> bool:
        return exact.bareiss_det(self.matrix) == 0

    def form(self, v: Sequence[int]) -> int:
        """Quadratic form v^T M v."""
        return exact.dot(v, exact.matvec(self.matrix, v))

    def bilinear(self, u: Sequence[int], v: Sequence[int]) -> int:
        return exact.dot(u, exact.matvec(self.matrix, v))

    def __eq__(self, other):
        return (
            isinstance(other, Conic)
            and other.coefficients == self.coefficients
            and other.role == self.role
        )

    def __hash__(self):
        return hash((self.coefficients, self.role))

    def __repr__(self):
        return f"Conic({self.coefficients}, role={self.role!r})"

    def to_json(self) -> dict:
        return {"coefficients": [scalar_str(v) for v in self.coefficients], "role": self.role}

    @classmethod
    def from_json(cls, data: dict) -> "Conic":
        return cls([Fraction(s) for s in data["coefficients"]], data.get("role", POINT))


UNIT_CIRCLE = Conic((1, 1, -1, 0, 0, 0))


def _veronese(v: Sequence[int]) -> list[int]:
    x, y, z = v
    return [x * x, y * y, z * z, 2 * x * y, 2 * x * z, 2 * y * z]


def _fit(triples: Sequence[Sequence[int]], role: str) -> Conic:
    rows = [_veronese(t) for t in triples]
    rank = exact.bareiss_rank(rows)
    if rank < 5:
        raise UnderDetermined(f"incidence matrix has rank {rank}; the conic is not unique")
    return Conic(exact.kernel_vector(rows), role)


def fit_conic(points: Sequence[ProjPoint]) -> Conic:
    """The unique point-conic through five points."""
    if len(points) != 5:
        raise ValueError("fit_conic needs exactly five points")
    if len(set(points)) != 5:
        raise DuplicatePoints("fit_conic needs five distinct points")
    return _fit([p.coords for p in points], POINT)


def fit_dual_conic(lines: Sequence[ProjLine]) -> Conic:
    """The line-conic tangent to five lines (vanishes on their coordinates)."""
    if len(lines) != 5:
        raise ValueError("fit_dual_conic needs exactly five lines")
    if len(set(lines)) != 5:
        raise DuplicateLines("fit_dual_conic needs five distinct lines")
    return _fit([l.coords for l in lines], LINE)


def coconic(points: Sequence[ProjPoint]) -> bool:
    """Six points lie on one (possibly degenerate) conic: 6x6 determinant test."""
    return exact.bareiss_det([_veronese(p.coords) for p in points]) == 0


def contains(c: Conic, p: ProjPoint) -> bool:
    return c.form(p.coords) == 0


def _require_nondegenerate(c: Conic) -> None:
    if c.is_degenerate:
        raise DegenerateConic(f"{c!r} has rank {c.rank}")


def second_intersection(c: Conic, p: ProjPoint, l: ProjLine) -> tuple[ProjPoint, bool]:
    """Other intersection of l with c, given p on both.

    Returns (point, tangent); for a tangent line the point is p itself.
    """
    _require_nondegenerate(c)
    if not contains(c, p):
        raise PointNotOnConic(f"{p!r} is not on {c!r}")
    if not incident(p, l):
        raise LineNotThroughPoint(f"{l!r} does not pass through {p!r}")
    # q = l x p lies on l and differs from p (p . p > 0 while q . p = 0)
    q = exact.cross(l.coords, p.coords)
    b = c.bilinear(p.coords, q)
    if b == 0:
        return p, True
    # on the line through p and q the form is u(2 s B(p,q) + u Q(q)); other root:
    qq = c.form(q)
    other = tuple(qq * pi - 2 * b * qi for pi, qi in zip(p.coords, q))
    return ProjPoint(other), False


def tangent_at(c: Conic, p: ProjPoint) -> ProjLine:
    _require_nondegenerate(c)
    if not contains(c, p):
        raise PointNotOnConic(f"{p!r} is not on {c!r}")
    return ProjLine(exact.matvec(c.matrix, p.coords))


def dual_conic(c: Conic) -> Conic:
    """Adjugate conic with the role flipped."""
    _require_nondegenerate(c)
    return Conic.from_matrix(exact.adjugate3(c.matrix), LINE if c.role == POINT else POINT)


def is_tangent_line(c: Conic, l: ProjLine) -> bool:
    """Tangency of l to the point-conic c (a line-conic is evaluated directly)."""
    if c.role == LINE:
        return c.form(l.coords) == 0
    return dual_conic(c).form(l.coords) == 0


def coconic_by_fit(points: Sequence[ProjPoint]) -> bool:
    """Fit a conic through five of six points and test the sixth.

    Tries each choice of five until one is well-posed; False if none is.
    """
    if len(points) != 6:
        raise ValueError("need six points")
    for drop in range(5, -1, -1):
        five = [p for i, p in enumerate(points) if i != drop]
        try:
            conic = fit_conic(five)
        except (UnderDetermined, DuplicatePoints):
            continue
        return contains(conic, points[drop])
    return False


def has_collinear_triple(points: Sequence[ProjPoint]) -> bool:
    return any(collinear(*t) for t in combinations(points, 3))
