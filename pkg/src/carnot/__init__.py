"""Exact projective geometry for Carnot-type conic configurations.

Points, lines and conics carry integer homogeneous coordinates; every
predicate (incidence, collinearity, co-conicity, tangency) is decided
exactly.  Floating point is confined to SVG rendering.
"""
from __future__ import annotations

from .conic import (
    Conic,
    coconic,
    contains,
    dual_conic,
    fit_conic,
    fit_dual_conic,
    is_tangent_line,
    second_intersection,
    tangent_at,
)
from .configuration import (
    CarnotConfig,
    build_config,
    verify_bradley_tangent,
    verify_corollary_t_line,
    verify_corollary_xy_conic,
    verify_pascal_LMN,
    verify_T_on_sides,
    verify_t1,
    verify_t2,
    verify_t4,
    verify_t5,
)
from .errors import ExhaustedRetries, GeometryError
from .generator import gen_carnot, gen_carnot_config, gen_quad_config, gen_quad_pair, perturb
from .mining import IncidenceReport, incidence_mine, mine_intersected
from .projective import (
    INFINITY,
    ProjLine,
    ProjPoint,
    Triangle,
    carnot_product,
    collinear,
    concurrent,
    cross_ratio,
    directed_ratio,
    incident,
    join,
    meet,
    menelaus_product,
)
from .quadrilateral import QuadConfig, build_quad_config, verify_quad_conics
from .render import render_svg

__version__ = "0.1.0"

__all__ = [
    "build_config",
    "build_quad_config",
    "carnot_product",
    "CarnotConfig",
    "coconic",
    "collinear",
    "concurrent",
    "Conic",
    "contains",
    "cross_ratio",
    "directed_ratio",
    "dual_conic",
    "ExhaustedRetries",
    "fit_conic",
    "fit_dual_conic",
    "gen_carnot",
    "gen_carnot_config",
    "gen_quad_config",
    "gen_quad_pair",
    "GeometryError",
    "incidence_mine",
    "IncidenceReport",
    "incident",
    "INFINITY",
    "is_tangent_line",
    "join",
    "meet",
    "menelaus_product",
    "mine_intersected",
    "perturb",
    "ProjLine",
    "ProjPoint",
    "QuadConfig",
    "render_svg",
    "second_intersection",
    "tangent_at",
    "Triangle",
    "verify_bradley_tangent",
    "verify_corollary_t_line",
    "verify_corollary_xy_conic",
    "verify_pascal_LMN",
    "verify_quad_conics",
    "verify_t1",
    "verify_t2",
    "verify_t4",
    "verify_t5",
    "verify_T_on_sides",
]
