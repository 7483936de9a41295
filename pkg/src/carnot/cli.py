"""Command-line entry point: generate, verify, mine, render.

Exit codes: 0 success / all requested theorems verified, 1 some theorem
falsified, 2 invalid input or generation failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .configuration import (
    BASE_LABELS,
    CARNOT_CHECKS,
    PRINTED_T2_TRIPLES,
    T2_TRIPLES,
    CarnotConfig,
    t4_by_carnot,
    t4_by_conic,
)
from .errors import ExhaustedRetries, GeometryError
from .generator import gen_carnot_config, gen_generic_points, gen_quad_config, perturb
from .mining import mine_intersected
from .projective import collinear
from .quadrilateral import (
    ABCD_LABELS,
    PQRS_LABELS,
    QUAD_SEXTUPLES,
    QuadConfig,
    quad_conic_by_fit,
    quad_metadata,
)
from .render import LABEL_SETS, render_svg
from .serialize import ConfigFormatError, dumps, loads

EXIT_OK, EXIT_FALSIFIED, EXIT_INVALID = 0, 1, 2
KINDS = ("carnot", "quad", "generic")
QUAD_CHECKS = ("quad_conics",)


class InputError(Exception):
    pass


def _generate(kind: str, seed: int):
    if kind == "carnot":
        return gen_carnot_config(seed)
    if kind == "quad":
        return gen_quad_config(seed)
    return gen_generic_points(seed)


def _load(args):
    """Configuration from --in or --seed/--kind."""
    if args.infile:
        try:
            text = Path(args.infile).read_text() if args.infile != "-" else sys.stdin.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.infile}: {exc.strerror}") from None
        return loads(text)
    return _generate(args.kind, args.seed)


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _labels(groups) -> list[list[str]]:
    return [list(g) for g in groups]


def verify_report(obj, theorems: list[str] | None = None) -> dict:
    """Verdicts, failing label groups and metadata for a configuration."""
    if isinstance(obj, CarnotConfig):
        names = list(CARNOT_CHECKS) if theorems is None else theorems
        unknown = [n for n in names if n not in CARNOT_CHECKS]
        if unknown:
            raise InputError(f"unknown theorems for a Carnot configuration: {', '.join(unknown)}")
        failures = {n: _labels(CARNOT_CHECKS[n](obj)) for n in names}
        meta = {
            "validated": obj.validated,
            "t2_shipped_triples": _labels(T2_TRIPLES),
            "t2_printed_triples": _labels(PRINTED_T2_TRIPLES),
            "t2_printed_verdicts": [collinear(*(obj[x] for x in t)) for t in PRINTED_T2_TRIPLES],
            "t4_routes": {"conic_fit": t4_by_conic(obj), "carnot_product": t4_by_carnot(obj)},
        }
        kind = "carnot"
    elif isinstance(obj, QuadConfig):
        names = list(QUAD_CHECKS) if theorems is None else theorems
        unknown = [n for n in names if n not in QUAD_CHECKS]
        if unknown:
            raise InputError(f"unknown theorems for a quadrilateral pair: {', '.join(unknown)}")
        failures = {
            "quad_conics": [list(s) for s in QUAD_SEXTUPLES if not quad_conic_by_fit(obj, s)]
        }
        meta = {"validated": obj.validated, **quad_metadata(obj)}
        kind = "quad"
    else:
        raise InputError("a plain point set carries no theorems to verify")
    return {
        "kind": kind,
        "verdicts": {n: not f for n, f in failures.items()},
        "counterexamples": {n: f for n, f in failures.items() if f},
        "metadata": meta,
    }


def cmd_generate(args) -> int:
    obj = _generate(args.kind, args.seed)
    if args.perturb:
        if args.kind == "generic":
            raise InputError("--perturb applies to carnot and quad configurations")
        movable = BASE_LABELS if args.kind == "carnot" else ABCD_LABELS + PQRS_LABELS
        if args.perturb not in movable:
            raise InputError(f"--perturb must be one of {', '.join(movable)}")
        obj = perturb(obj, args.seed, args.perturb)
    _emit(dumps(obj, seed=args.seed), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    obj = _load(args)
    theorems = None
    if args.theorems != "all":
        theorems = [t.strip() for t in args.theorems.split(",") if t.strip()]
    report = verify_report(obj, theorems)
    _emit(json.dumps(report, indent=2) + "\n", None)
    if all(report["verdicts"].values()):
        return EXIT_OK
    failed = ", ".join(n for n, ok in report["verdicts"].items() if not ok)
    print(f"falsified: {failed}", file=sys.stderr)
    return EXIT_FALSIFIED


def cmd_mine(args) -> int:
    if args.seeds_intersect < 1:
        raise InputError("--seeds-intersect must be at least 1")
    if args.infile:
        configs = [_load(args)]
    else:
        configs = (_generate(args.kind, args.seed + i) for i in range(args.seeds_intersect))
    report = mine_intersected(configs)
    _emit(json.dumps(report.to_json(), indent=2) + "\n", None)
    return EXIT_OK


def cmd_render(args) -> int:
    obj = _load(args)
    _emit(render_svg(obj, labels=args.labels), args.out)
    return EXIT_OK


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--in", dest="infile", metavar="FILE", help="configuration JSON ('-' for stdin)")
    src.add_argument("--seed", type=int, default=0, help="generate the configuration from a seed")
    p.add_argument("--kind", choices=KINDS, default="carnot", help="what to generate for --seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="carnot",
        description="Exact construction and verification of Carnot-type conic configurations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a seeded configuration as JSON")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--kind", choices=KINDS, default="carnot")
    g.add_argument("--perturb", metavar="LABEL", help="move one point to make a negative control")
    g.add_argument("--out", metavar="FILE", help="output file (default stdout)")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check the incidence theorems on a configuration")
    _add_source(v)
    v.add_argument(
        "--theorems",
        default="all",
        help="comma-separated names or 'all'; Carnot: " + ",".join(CARNOT_CHECKS)
        + "; quad: " + ",".join(QUAD_CHECKS),
    )
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("mine", help="search a configuration for incidences")
    _add_source(m)
    m.add_argument(
        "--seeds-intersect", type=int, default=1, metavar="K",
        help="intersect the reports of seeds N..N+K-1 (ignored with --in)",
    )
    m.set_defaults(func=cmd_mine)

    r = sub.add_parser("render", help="draw a configuration as SVG")
    _add_source(r)
    r.add_argument("--labels", choices=LABEL_SETS, default="base")
    r.add_argument("--out", metavar="FILE.svg", help="output file (default stdout)")
    r.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GeometryError, ConfigFormatError, InputError, ExhaustedRetries) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
