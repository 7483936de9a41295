"""Seeded exact instances: Carnot configurations and perspective quadrilaterals.

Carnot instances place six points on the image of the rational circle
parametrization (1 - t^2 : 2t : 1 + t^2) under a random invertible integer
matrix, so every point is rational and the six are co-conic by construction.

Digit budget: parameters t = p/q with |p| <= 6, 1 <= q <= 4 and matrix
entries in [-3, 3] keep base coordinates below 4 digits; derived points
stay well under a few hundred digits.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from . import exact
from .configuration import (
    ALL_LABELS,
    BASE_LABELS,
    GENERIC_COINCIDENCES,
    SIDE_NAMES,
    CarnotConfig,
    build_config,
)
from .errors import ExhaustedRetries, GeometryError
from .projective import ProjPoint, Triangle, carnot_product, join, meet
from .quadrilateral import (
    QuadConfig,
    build_quad_config,
    menelaus_route_first_conic,
    sextuple_for,
    side_triangle,
)

DEFAULT_RETRIES = 64
IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def circle_point(t: Fraction | int | None) -> tuple[int, int, int]:
    """Integer coordinates of (1 - t^2 : 2t : 1 + t^2); None is t = infinity."""
    if t is None:
        return (-1, 0, 1)
    t = Fraction(t)
    p, q = t.numerator, t.denominator
    return (q * q - p * p, 2 * p * q, q * q + p * p)


def carnot_from_parameters(
    params: Sequence[Fraction | int | None],
    matrix: Sequence[Sequence[int]] = IDENTITY,
) -> tuple[Triangle, list[ProjPoint]]:
    """Triangle of chords A1A2, B1B2, C1C2 through six parametrized points."""
    pts = [ProjPoint(exact.matvec(matrix, circle_point(t))) for t in params]
    a1, a2, b1, b2, c1, c2 = pts
    side_a, side_b, side_c = join(a1, a2), join(b1, b2), join(c1, c2)
    tri = Triangle(meet(side_b, side_c), meet(side_c, side_a), meet(side_a, side_b))
    return tri, pts


def _random_matrix(rng: random.Random, lo: int = -3, hi: int = 3) -> list[list[int]]:
    while True:
        m = [[rng.randint(lo, hi) for _ in range(3)] for _ in range(3)]
        if exact.bareiss_det(m) != 0:
            return m


def _random_parameters(rng: random.Random, count: int = 6) -> list[Fraction]:
    params: list[Fraction] = []
    while len(params) < count:
        t = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if t not in params:
            params.append(t)
    return params


def config_is_generic(cfg: CarnotConfig) -> bool:
    """All named points finite and distinct, apart from the known identifications."""
    pts = cfg.points
    if not all(p.is_finite for p in pts.values()):
        return False
    same = set(GENERIC_COINCIDENCES)
    for u, v in combinations(ALL_LABELS, 2):
        if (pts[u] == pts[v]) != ((u, v) in same or (v, u) in same):
            return False
    return True


def gen_carnot(seed: int, retries: int = DEFAULT_RETRIES) -> tuple[Triangle, list[ProjPoint]]:
    rng = random.Random(seed)
    for _ in range(retries):
        matrix = _random_matrix(rng)
        params = _random_parameters(rng)
        try:
            tri, pts = carnot_from_parameters(params, matrix)
            cfg = build_config(tri, *pts)
        except GeometryError:
            continue
        if config_is_generic(cfg):
            return tri, pts
    raise ExhaustedRetries(f"no generic Carnot configuration for seed {seed}")


def gen_carnot_config(seed: int) -> CarnotConfig:
    return build_config(*_flatten(gen_carnot(seed)))


def _flatten(pair):
    tri, pts = pair
    return (tri, *pts)


def _random_point(rng: random.Random, bound: int = 8) -> ProjPoint:
    return ProjPoint(rng.randint(-bound, bound), rng.randint(-bound, bound), 1)


def _point_on_line(rng: random.Random, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """Affine combination p + s (q - p) with a small nonzero rational s != 1."""
    (px, py), (qx, qy) = p.affine(), q.affine()
    while True:
        s = Fraction(rng.choice([-1, 1]) * rng.randint(1, 6), rng.randint(1, 3))
        if s != 1:
            return ProjPoint.from_affine(px + s * (qx - px), py + s * (qy - py))


def quad_is_generic(qc: QuadConfig) -> bool:
    pts = list(qc.points.values())
    # the diagonal points AB.CD and BC.DA are vertices of the side triangles
    extra = [meet(qc.lines["AB"], qc.lines["CD"]), meet(qc.lines["BC"], qc.lines["DA"])]
    everything = pts + extra
    if not all(p.is_finite for p in everything) or len(set(everything)) != len(everything):
        return False
    try:
        menelaus_route_first_conic(qc)
        for k in range(1, 5):
            tri, sides = side_triangle(qc, k)
            labels = sextuple_for(k)
            on = [qc[x] for s in sides for x in labels if int(x[0]) == s]
            carnot_product(tri, *on)
    except GeometryError:
        return False
    return True


def gen_quad_pair(
    seed: int, retries: int = DEFAULT_RETRIES
) -> tuple[tuple[ProjPoint, ...], tuple[ProjPoint, ...]]:
    """ABCD and PQRS whose corresponding sides meet on one axis.

    P is free, Q is on PT, R on QU, and S is forced as RV meet PW.
    """
    rng = random.Random(seed)
    for _ in range(retries):
        abcd = tuple(_random_point(rng) for _ in range(4))
        try:
            axis_pts = (_random_point(rng), _random_point(rng))
            axis = join(*axis_pts)
            a, b, c, d = abcd
            if any(exact.dot(v.coords, axis.coords) == 0 for v in abcd):
                continue
            t, u, v, w = (meet(join(x, y), axis) for x, y in ((a, b), (b, c), (c, d), (d, a)))
            if not all(pt.is_finite for pt in (t, u, v, w)):
                continue
            p = _random_point(rng)
            q = _point_on_line(rng, p, t)
            r = _point_on_line(rng, q, u)
            s = meet(join(r, v), join(p, w))
            qc = build_quad_config(abcd, (p, q, r, s))
        except (GeometryError, ZeroDivisionError):
            continue
        if quad_is_generic(qc):
            return qc.abcd, qc.pqrs
    raise ExhaustedRetries(f"no generic quadrilateral pair for seed {seed}")


def gen_quad_config(seed: int) -> QuadConfig:
    return build_quad_config(*gen_quad_pair(seed))


# --- negative controls -------------------------------------------------------

_SIDE_OF_BASE = {"A1": "a", "A2": "a", "B1": "b", "B2": "b", "C1": "c", "C2": "c"}


def _offset(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(2, 11))


def perturb_points(
    points: Mapping[str, ProjPoint],
    label: str,
    seed: int,
    *,
    mode: str = "along",
    offset: Fraction | None = None,
) -> dict[str, ProjPoint]:
    """Move one labelled point; other labels are copied unchanged.

    ``mode="along"`` keeps a base point on its side line (needs the vertex
    labels A, B, C); ``mode="free"`` moves it in both affine directions.
    An explicit ``offset`` of 0 returns an unchanged copy.
    """
    rng = random.Random(seed)
    out = dict(points)
    x, y = points[label].affine()
    step = _offset(rng) if offset is None else Fraction(offset)
    if mode == "along":
        u, v = SIDE_NAMES[_SIDE_OF_BASE[label]]
        (ux, uy), (vx, vy) = points[u].affine(), points[v].affine()
        out[label] = ProjPoint.from_affine(x + step * (vx - ux), y + step * (vy - uy))
    elif mode == "free":
        step_y = _offset(rng) if offset is None else Fraction(offset)
        out[label] = ProjPoint.from_affine(x + step, y + step_y)
    else:
        raise ValueError(f"unknown perturbation mode {mode!r}")
    return out


def perturb(obj, seed: int, label: str | None = None, *, mode: str | None = None, retries: int = DEFAULT_RETRIES):
    """Negative-control copy of a configuration or of a point map.

    For a CarnotConfig a base point (default chosen by the seed) moves along
    its side and the configuration is rebuilt without validation.  For a
    QuadConfig a vertex of PQRS (default chosen by the seed) moves freely.
    Degenerate results are resampled.
    """
    rng = random.Random(seed)
    if isinstance(obj, CarnotConfig):
        label = label or rng.choice(BASE_LABELS)
        for _ in range(retries):
            pts = perturb_points(obj.base_points(), label, rng.getrandbits(32), mode=mode or "along")
            try:
                cfg = build_config(
                    obj.triangle, *(pts[x] for x in BASE_LABELS), validate=False
                )
                if carnot_product(obj.triangle, *(pts[x] for x in BASE_LABELS)) == 1:
                    continue
            except GeometryError:
                continue
            if all(p.is_finite for p in cfg.points.values()):
                return cfg
        raise ExhaustedRetries(f"could not perturb {label} for seed {seed}")
    if isinstance(obj, QuadConfig):
        label = label or rng.choice("PQRS")
        for _ in range(retries):
            pts = perturb_points(dict(obj.points), label, rng.getrandbits(32), mode=mode or "free")
            try:
                qc = build_quad_config(
                    [pts[x] for x in "ABCD"], [pts[x] for x in "PQRS"], validate=False
                )
            except GeometryError:
                continue
            if all(p.is_finite for p in qc.points.values()):
                return qc
        raise ExhaustedRetries(f"could not perturb {label} for seed {seed}")
    return perturb_points(obj, label, seed, mode=mode or "free")


def gen_generic_points(seed: int, count: int = 12, bound: int = 1000) -> dict[str, ProjPoint]:
    """Independent random points labelled P1..Pn (no incidences expected)."""
    rng = random.Random(seed)
    pts: dict[str, ProjPoint] = {}
    while len(pts) < count:
        p = _random_point(rng, bound)
        if p not in pts.values():
            pts[f"P{len(pts) + 1}"] = p
    return pts
