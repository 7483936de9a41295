"""Exact homogeneous points and lines in the real projective plane.

Coordinates are stored in canonical form: coprime integers whose first
nonzero entry is positive, so equality is plain tuple comparison.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from . import exact
from .errors import (
    DegenerateTriangle,
    IdenticalLines,
    IdenticalPoints,
    NotCollinear,
    PointAtInfinity,
    PointNotOnSide,
    RatioUndefined,
)

Scalar = Fraction
Number = Union[int, Fraction, str]


def to_scalar(value: Number) -> Fraction:
    return Fraction(value)


def scalar_str(value: int | Fraction) -> str:
    """'p/q', with '/q' dropped when q == 1."""
    return str(Fraction(value))


class _Homogeneous:
    __slots__ = ("coords",)

    def __init__(self, *coords: Number | Iterable[Number]):
        if len(coords) == 1:
            coords = tuple(coords[0])  # type: ignore[arg-type]
        if len(coords) != 3:
            raise ValueError(f"expected 3 homogeneous coordinates, got {len(coords)}")
        try:
            canon = exact.primitive([Fraction(c) for c in coords])
        except ValueError:
            raise ValueError(f"{type(self).__name__} cannot have all-zero coordinates") from None
        object.__setattr__(self, "coords", canon)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other):
        return type(other) is type(self) and other.coords == self.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        return f"{type(self).__name__}({':'.join(map(str, self.coords))})"

    def to_json(self) -> list[str]:
        return [scalar_str(c) for c in self.coords]

    @classmethod
    def from_json(cls, data: Iterable[str]):
        return cls(*(Fraction(s) for s in data))


class ProjPoint(_Homogeneous):
    __slots__ = ()

    @classmethod
    def from_affine(cls, x: Number, y: Number) -> "ProjPoint":
        return cls(Fraction(x), Fraction(y), 1)

    @property
    def is_finite(self) -> bool:
        return self.coords[2] != 0

    def affine(self) -> tuple[Fraction, Fraction]:
        x, y, z = self.coords
        if z == 0:
            raise PointAtInfinity(f"{self!r} has no affine coordinates")
        return Fraction(x, z), Fraction(y, z)


class ProjLine(_Homogeneous):
    __slots__ = ()


def incident(p: ProjPoint, l: ProjLine) -> bool:
    return exact.dot(p.coords, l.coords) == 0


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    c = exact.cross(p.coords, q.coords)
    if c == (0, 0, 0):
        raise IdenticalPoints(f"cannot join {p!r} with itself")
    return ProjLine(c)


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    c = exact.cross(l.coords, m.coords)
    if c == (0, 0, 0):
        raise IdenticalLines(f"cannot meet {l!r} with itself")
    return ProjPoint(c)


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    return exact.det3(p.coords, q.coords, r.coords) == 0


def concurrent(l: ProjLine, m: ProjLine, n: ProjLine) -> bool:
    return exact.det3(l.coords, m.coords, n.coords) == 0


def directed_ratio(a: ProjPoint, b: ProjPoint, p: ProjPoint) -> Fraction:
    """Signed t with vector(a->p) = t * vector(p->b), in the chart z = 1."""
    for pt in (a, b, p):
        if not pt.is_finite:
            raise PointAtInfinity(f"{pt!r} is at infinity")
    if a == b:
        raise IdenticalPoints("directed ratio needs two distinct endpoints")
    if not collinear(a, b, p):
        raise NotCollinear(f"{p!r} is not on the line through {a!r} and {b!r}")
    if p == b:
        raise RatioUndefined("point coincides with the second endpoint")
    (ax, ay), (bx, by), (px, py) = a.affine(), b.affine(), p.affine()
    if bx != px:
        return (px - ax) / (bx - px)
    return (py - ay) / (by - py)


class _Infinity:
    """Value of a cross ratio whose denominator vanishes."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"


INFINITY = _Infinity()


def cross_ratio(a: ProjPoint, b: ProjPoint, c: ProjPoint, d: ProjPoint) -> Fraction | _Infinity:
    """(a, b; c, d) = (ac * bd) / (bc * ad), computed projectively.

    Returns INFINITY when d = a or c = b.
    """
    pts = (a, b, c, d)
    line = None
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] != pts[j]:
                line = join(pts[i], pts[j])
                break
        if line is not None:
            break
    if line is None:
        raise RatioUndefined("all four points coincide")
    if not all(incident(p, line) for p in pts):
        raise NotCollinear("cross ratio needs four collinear points")
    # project from a coordinate vertex off the line
    k = next(i for i in range(3) if line.coords[i] != 0)
    i, j = [n for n in range(3) if n != k]

    def bracket(p: ProjPoint, q: ProjPoint) -> int:
        return p.coords[i] * q.coords[j] - p.coords[j] * q.coords[i]

    num = bracket(a, c) * bracket(b, d)
    den = bracket(b, c) * bracket(a, d)
    if den == 0:
        if num == 0:
            raise RatioUndefined("cross ratio is 0/0 for this coincidence pattern")
        return INFINITY
    return Fraction(num, den)


@dataclass(frozen=True)
class Triangle:
    a_vertex: ProjPoint
    b_vertex: ProjPoint
    c_vertex: ProjPoint

    def __post_init__(self):
        if collinear(self.a_vertex, self.b_vertex, self.c_vertex):
            raise DegenerateTriangle("triangle vertices are collinear")

    @property
    def vertices(self) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
        return (self.a_vertex, self.b_vertex, self.c_vertex)

    @property
    def side_a(self) -> ProjLine:
        return join(self.b_vertex, self.c_vertex)

    @property
    def side_b(self) -> ProjLine:
        return join(self.c_vertex, self.a_vertex)

    @property
    def side_c(self) -> ProjLine:
        return join(self.a_vertex, self.b_vertex)

    def side_ratio(self, side: str, p: ProjPoint) -> Fraction:
        """Directed ratio of p on side 'a' (B->C), 'b' (C->A) or 'c' (A->B)."""
        start, end = {
            "a": (self.b_vertex, self.c_vertex),
            "b": (self.c_vertex, self.a_vertex),
            "c": (self.a_vertex, self.b_vertex),
        }[side]
        if not collinear(start, end, p):
            raise PointNotOnSide(f"{p!r} is not on side {side}")
        if p in self.vertices:
            raise RatioUndefined(f"{p!r} is a vertex of the triangle")
        return directed_ratio(start, end, p)


def menelaus_product(t: Triangle, p_bc: ProjPoint, p_ca: ProjPoint, p_ab: ProjPoint) -> Fraction:
    """(AP_ab/P_abB) (BP_bc/P_bcC) (CP_ca/P_caA); equals -1 iff collinear."""
    return t.side_ratio("c", p_ab) * t.side_ratio("a", p_bc) * t.side_ratio("b", p_ca)


def carnot_product(
    t: Triangle,
    a1: ProjPoint,
    a2: ProjPoint,
    b1: ProjPoint,
    b2: ProjPoint,
    c1: ProjPoint,
    c2: ProjPoint,
) -> Fraction:
    """Six-fold side-ratio product; equals 1 iff the six points are co-conic."""
    return (
        t.side_ratio("c", c1)
        * t.side_ratio("c", c2)
        * t.side_ratio("a", a1)
        * t.side_ratio("a", a2)
        * t.side_ratio("b", b1)
        * t.side_ratio("b", b2)
    )
