"""SVG figures of configurations.

Floating point appears only here.  Points are printed with ``repr(float)``
in world coordinates (the viewBox flips y), so a drawn position is the
exact rational rounded once.  Conics are sampled through the pencil of
lines at a rational point on the conic, which handles ellipses, parabolas
and both hyperbola branches the same way.
"""
from __future__ import annotations

import math
from typing import Mapping, Sequence
from xml.sax.saxutils import escape

from . import exact
from .configuration import (
    BASE_LABELS,
    BRADLEY_LABELS,
    CEVIANS,
    DERIVED_LABELS,
    PASCAL_LABELS,
    SECOND_LABELS,
    VERTEX_LABELS,
    CarnotConfig,
    bradley_dual_conic,
)
from .conic import Conic, contains, dual_conic, fit_conic
from .errors import GeometryError, NothingVisible
from .projective import ProjPoint
from .quadrilateral import (
    ABCD_LABELS,
    ABCD_SIDES,
    CROSS_LABELS,
    PERSPECTIVE_LABELS,
    PQRS_LABELS,
    PQRS_SIDES,
    QUAD_SEXTUPLES,
    QuadConfig,
)

LABEL_SETS = ("base", "derived", "bradley", "all")
MARGIN = 0.05
WIDTH = 800
SAMPLES = 720
# samples farther than this many view-diagonals from the view centre are cut
FAR = 4.0

_COLOURS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")


def affine_type(conic: Conic) -> str:
    """ellipse / parabola / hyperbola in the z = 1 chart (nondegenerate conics)."""
    a, b, _, d, _, _ = conic.coefficients
    disc = a * b - d * d
    if disc > 0:
        return "ellipse"
    if disc == 0:
        return "parabola"
    return "hyperbola"


# --- what to draw -------------------------------------------------------------


def _carnot_scene(cfg: CarnotConfig, labels: str):
    point_labels = list(VERTEX_LABELS + BASE_LABELS)
    lines = [(name, "side") for name in ("a", "b", "c")]
    conics: list[tuple[str, Conic, ProjPoint]] = [("base", cfg.base_conic, cfg["A1"])]
    if labels in ("derived", "all"):
        point_labels += SECOND_LABELS + DERIVED_LABELS + PASCAL_LABELS
    if labels in ("bradley", "all"):
        if labels == "bradley":
            point_labels += SECOND_LABELS
        point_labels += BRADLEY_LABELS
        lines += [(c, "cevian") for c in CEVIANS]
        try:
            dual = bradley_dual_conic(cfg)
            inner = dual_conic(dual)
            touch = ProjPoint(exact.matvec(dual.matrix, cfg.lines["AA1"].coords))
            if not inner.is_degenerate and contains(inner, touch):
                conics.append(("bradley", inner, touch))
        except GeometryError:
            pass
    seen = set()
    point_labels = [x for x in point_labels if not (x in seen or seen.add(x))]
    return (
        [(x, cfg[x]) for x in point_labels],
        [(name, cfg.lines[name], cls) for name, cls in lines],
        conics,
    )


def _quad_scene(qc: QuadConfig, labels: str):
    point_labels = list(ABCD_LABELS + PQRS_LABELS)
    lines = [(s, "side") for s in ABCD_SIDES.values()] + [(s, "side") for s in PQRS_SIDES.values()]
    conics = []
    if labels != "base":
        point_labels += PERSPECTIVE_LABELS + CROSS_LABELS
        lines.append(("axis", "axis"))
        for k, sextuple in enumerate(QUAD_SEXTUPLES, start=1):
            try:
                c = fit_conic([qc[x] for x in sextuple[:5]])
            except GeometryError:
                continue
            if not c.is_degenerate:
                conics.append((f"C{k}", c, qc[sextuple[0]]))
    return (
        [(x, qc[x]) for x in point_labels],
        [(name, qc.lines[name], cls) for name, cls in lines],
        conics,
    )


# --- float geometry -------------------------------------------------------------


def _clip_line(coeffs: Sequence[float], box) -> tuple[float, float, float, float] | None:
    """Segment of a*x + b*y + c = 0 inside the box, or None."""
    a, b, c = coeffs
    xmin, ymin, xmax, ymax = box
    hits = []
    if b != 0:
        for x in (xmin, xmax):
            y = -(a * x + c) / b
            if ymin <= y <= ymax:
                hits.append((x, y))
    if a != 0:
        for y in (ymin, ymax):
            x = -(b * y + c) / a
            if xmin <= x <= xmax:
                hits.append((x, y))
    hits = sorted(set(hits))
    if len(hits) < 2:
        return None
    (x1, y1), (x2, y2) = hits[0], hits[-1]
    if (x1, y1) == (x2, y2):
        return None
    return x1, y1, x2, y2


def _independent_pair(p0: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    for i in range(3):
        for j in range(i + 1, 3):
            if exact.det3(p0, basis[i], basis[j]) != 0:
                return basis[i], basis[j]
    raise ValueError("zero point")


def conic_branches(conic: Conic, p0: ProjPoint, box, samples: int = SAMPLES) -> list[list[tuple[float, float]]]:
    """Polylines of the conic inside an enlarged box around the view."""
    m = [[float(v) for v in row] for row in conic.matrix]
    scale = max(abs(v) for v in p0.coords)
    p = [v / scale for v in p0.coords]
    u, v = _independent_pair(p0.coords)

    def form(x, y):
        return sum(x[i] * m[i][j] * y[j] for i in range(3) for j in range(3))

    xmin, ymin, xmax, ymax = box
    cx, cy = (xmin + xmax) / 2, (ymin + ymax) / 2
    reach = FAR * math.hypot(xmax - xmin, ymax - ymin)

    def at(th: float) -> tuple[float, float, float]:
        q = [math.cos(th) * u[i] + math.sin(th) * v[i] for i in range(3)]
        qq, pq = form(q, q), form(p, q)
        return tuple(qq * p[i] - 2 * pq * q[i] for i in range(3))

    def near(w) -> bool:
        if w[2] == 0:
            return False
        return math.hypot(w[0] / w[2] - cx, w[1] / w[2] - cy) <= reach

    def edge(inside: float, outside: float, sign: bool) -> tuple[float, float]:
        # bisect to the last point that is still near and on the same side of infinity
        for _ in range(48):
            mid = (inside + outside) / 2
            w = at(mid)
            if near(w) and (w[2] > 0) == sign:
                inside = mid
            else:
                outside = mid
        w = at(inside)
        return (w[0] / w[2], w[1] / w[2])

    step = math.pi / samples
    pts = [at(k * step) for k in range(samples)]

    def joined(k: int) -> bool:
        a, b = pts[k - 1], pts[k]
        return near(a) and near(b) and (a[2] > 0) == (b[2] > 0)

    breaks = [k for k in range(samples) if not joined(k)]
    if not breaks:
        ring = [(w[0] / w[2], w[1] / w[2]) for w in pts]
        branches = [ring + ring[:1]]
    else:
        branches = []
        current: list[tuple[float, float]] = []
        start = breaks[0]
        for j in range(samples + 1):
            k = (start + j) % samples
            th = (start + j) * step
            w = pts[k]
            if not joined(k):
                prev = pts[k - 1]
                if current:
                    current.append(edge(th - step, th, prev[2] > 0))
                    branches.append(current)
                current = []
                if near(w) and j < samples:
                    current = [edge(th, th - step, w[2] > 0)]
            if near(w) and j < samples:
                current.append((w[0] / w[2], w[1] / w[2]))
        if current:
            branches.append(current)
    return [b for b in branches if len(b) > 1 and _touches(b, box)]


def _touches(poly, box) -> bool:
    xmin, ymin, xmax, ymax = box
    return any(xmin <= x <= xmax and ymin <= y <= ymax for x, y in poly)


# --- labels -----------------------------------------------------------------------

_DIRECTIONS = ((1, 1), (1, -1), (-1, 1), (-1, -1), (1, 0), (0, 1), (-1, 0), (0, -1))


def _place_labels(points, font: float, radius: float):
    """Deterministic collision nudging: first free candidate offset wins."""
    placed: list[tuple[float, float, float, float]] = []
    dots = [(x, y) for _, x, y in points]
    out = []

    def clash(box):
        x0, y0, x1, y1 = box
        if any(x0 < b[2] and b[0] < x1 and y0 < b[3] and b[1] < y1 for b in placed):
            return True
        return any(x0 - radius < x < x1 + radius and y0 - radius < y < y1 + radius for x, y in dots)

    for label, x, y in points:
        w, h = 0.62 * font * len(label), font
        chosen = None
        for ring in (1, 2, 3):
            for dx, dy in _DIRECTIONS:
                ox = x + dx * ring * 1.6 * radius + (0 if dx >= 0 else -w) - (w / 2 if dx == 0 else 0)
                oy = y + dy * ring * 1.6 * radius + (0 if dy >= 0 else -h) - (h / 2 if dy == 0 else 0)
                box = (ox, oy, ox + w, oy + h)
                if not clash(box):
                    chosen = box
                    break
            if chosen:
                break
        if chosen is None:
            ox, oy = x + 1.6 * radius, y + 1.6 * radius
            chosen = (ox, oy, ox + w, oy + h)
        placed.append(chosen)
        out.append((label, chosen[0], chosen[1]))
    return out


# --- SVG ------------------------------------------------------------------------------


def _f(v: float) -> str:
    return repr(float(v))


def _g(v: float) -> str:
    return format(v, ".9g")


def render_svg(obj, labels: str = "base", width: int = WIDTH) -> str:
    """SVG 1.1 document for a CarnotConfig, QuadConfig or labelled point map.

    ``labels`` selects which named points are drawn: base, derived,
    bradley, or all.  Points at infinity are listed in a <desc> element.
    """
    if labels not in LABEL_SETS:
        raise ValueError(f"labels must be one of {', '.join(LABEL_SETS)}")
    if isinstance(obj, CarnotConfig):
        points, lines, conics = _carnot_scene(obj, labels)
    elif isinstance(obj, QuadConfig):
        points, lines, conics = _quad_scene(obj, labels)
    elif isinstance(obj, Mapping):
        points, lines, conics = list(obj.items()), [], []
    else:
        raise TypeError(f"cannot render {type(obj).__name__}")

    finite = [(lab, p.affine()) for lab, p in points if p.is_finite]
    dropped = [lab for lab, p in points if not p.is_finite]
    if not finite:
        raise NothingVisible("every requested point is at infinity")

    xs = [float(x) for _, (x, _) in finite]
    ys = [float(y) for _, (_, y) in finite]
    xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
    span = max(xmax - xmin, ymax - ymin) or 1.0
    w0 = (xmax - xmin) or span
    h0 = (ymax - ymin) or span
    cx, cy = (xmin + xmax) / 2, (ymin + ymax) / 2
    w, h = w0 * (1 + 2 * MARGIN), h0 * (1 + 2 * MARGIN)
    box = (cx - w / 2, cy - h / 2, cx + w / 2, cy + h / 2)
    unit = max(w, h)
    stroke, radius, font = unit * 0.002, unit * 0.006, unit * 0.022
    height = max(1, round(width * h / w))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="{_f(box[0])} {_f(-box[3])} {_f(w)} {_f(h)}">',
    ]
    if dropped:
        names = " ".join(dropped)
        out.append(f"<desc>points at infinity not drawn: {escape(names)}</desc>")
        out.append(f"<!-- warning: at infinity: {escape(names)} -->")
    out.append(f'<g fill="none" stroke-width="{_g(stroke)}">')
    for i, (name, conic, p0) in enumerate(conics):
        colour = _COLOURS[i % len(_COLOURS)]
        for branch in conic_branches(conic, p0, box):
            coords = " ".join(f"{_g(x)},{_g(-y)}" for x, y in branch)
            out.append(
                f'<polyline class="conic" data-label="{escape(name)}" stroke="{colour}" points="{coords}"/>'
            )
    for name, line, cls in lines:
        seg = _clip_line([float(c) for c in line.coords[:2]] + [float(line.coords[2])], box)
        if seg is None:
            continue
        x1, y1, x2, y2 = seg
        dash = ' stroke-dasharray="{0},{0}"'.format(_g(4 * stroke)) if cls != "side" else ""
        out.append(
            f'<line class="{cls}" data-label="{escape(name)}" stroke="#444"{dash} '
            f'x1="{_g(x1)}" y1="{_g(-y1)}" x2="{_g(x2)}" y2="{_g(-y2)}"/>'
        )
    out.append("</g>")

    out.append('<g fill="#000">')
    for lab, (x, y) in finite:
        out.append(
            f'<circle class="point" data-label="{escape(lab)}" cx="{_f(x)}" cy="{_f(-y)}" r="{_g(radius)}"/>'
        )
    out.append("</g>")

    placed = _place_labels([(lab, float(x), float(y)) for lab, (x, y) in finite], font, radius)
    out.append(f'<g font-family="serif" font-size="{_g(font)}" fill="#000">')
    for lab, x, y in placed:
        out.append(f'<text class="label" data-label="{escape(lab)}" x="{_g(x)}" y="{_g(-y)}">{escape(lab)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


__all__ = ["LABEL_SETS", "affine_type", "conic_branches", "render_svg"]
