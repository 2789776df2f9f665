"""Command-line front end.

    golden-triangle construct 1 --triangle "0,0 1,0 0.5,0.8660254"
    golden-triangle suite --seed 42 --count 1000
    golden-triangle render 3 --triangle "0,0 4,0 1,3" --out fig.svg
    golden-triangle verify --lemma 3 --triangle "0,0 4,0 1,3" --bary 1:2:3

Exit status: 0 when every check passes, 1 when a check fails, 2 for bad input
or usage. Errors are written to stdout as a JSON document of kind "error".
Configuration comes from flags only.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import formats
from .constructions import construct
from .kernel import Circle, GeometryError, Tolerance, Triangle, circumcircle
from .svg import emit_svg
from .verifier import (
    CHECK_GROUPS,
    CONSTRUCTION_TOL,
    CyclicQuad,
    SamplerConfig,
    check_lemma1,
    check_lemma3,
    check_ptolemy,
    proof_identities,
    run_suite,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # raise instead of printing and exiting
        raise UsageError(message)


class UsageError(Exception):
    pass


def _add_triangle_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--triangle", help='inline vertices "x1,y1 x2,y2 x3,y3"')
    src.add_argument("--input", type=Path, help="file holding the inline vertex text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="golden-triangle", description="Golden-ratio constructions in a triangle.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="run one construction and print its report")
    p.add_argument("construction_id", type=int, choices=range(1, 5))
    _add_triangle_source(p)
    p.add_argument("--tol", type=float, default=CONSTRUCTION_TOL, help="relative tolerance (default 1e-9)")
    p.add_argument("--json", type=Path, help="also write the report to this path")

    p = sub.add_parser("suite", help="run the seeded randomized checks")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--checks", help=f"comma-separated subset of: {','.join(CHECK_GROUPS)}")
    p.add_argument("--min-angle", type=float, default=15.0)
    p.add_argument("--max-angle", type=float, default=150.0)
    p.add_argument("--max-side-ratio", type=float, default=20.0)
    p.add_argument("--json", type=Path, help="also write the summary to this path")

    p = sub.add_parser("render", help="draw a construction as SVG")
    p.add_argument("construction_id", type=int, choices=range(1, 5))
    _add_triangle_source(p)
    p.add_argument("--tol", type=float, default=CONSTRUCTION_TOL)
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("verify", help="check one lemma on given input, or over a seeded sample")
    p.add_argument("--lemma", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--quad", help='lemmas 1-2: four concyclic vertices "x,y x,y x,y x,y" in circular order')
    p.add_argument("--triangle", help="lemma 3: inline triangle")
    p.add_argument("--bary", help="lemma 3: interior point as x:y:z")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=1000)
    return parser


def _read_triangle(args: argparse.Namespace) -> Triangle:
    text = args.triangle if args.triangle is not None else args.input.read_text(encoding="utf-8")
    return formats.parse_triangle(text)


def _emit(doc: dict, out: TextIO, path: Optional[Path] = None) -> None:
    text = formats.dumps(doc)
    if path is not None:
        path.write_text(text, encoding="utf-8")
    out.write(text)


def _cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    tol = Tolerance(eps_rel=args.tol)
    t = _read_triangle(args)
    report = construct(args.construction_id, t, tol)
    identities = proof_identities(t, report, args.tol)
    doc = formats.construction_document(t, report, identities, args.tol)
    _emit(doc, out, args.json)
    return EXIT_OK if doc["result"]["passed"] else EXIT_FAILED


def _cmd_suite(args: argparse.Namespace, out: TextIO) -> int:
    cfg = SamplerConfig(args.seed, args.count, args.min_angle, args.max_angle, args.max_side_ratio)
    which = None if args.checks is None else [c.strip() for c in args.checks.split(",") if c.strip()]
    summary = run_suite(cfg, which)
    _emit(formats.suite_document(summary), out, args.json)
    return EXIT_OK if summary.passed else EXIT_FAILED


def _cmd_render(args: argparse.Namespace, out: TextIO) -> int:
    t = _read_triangle(args)
    report = construct(args.construction_id, t, Tolerance(eps_rel=args.tol))
    args.out.write_text(emit_svg(report, t), encoding="utf-8")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    name = {1: "lemma1", 2: "ptolemy", 3: "lemma3"}[args.lemma]
    if args.lemma in (1, 2) and args.quad is not None:
        pts = formats.parse_points(args.quad, 4)
        circle: Circle = circumcircle(Triangle(*pts[:3]))
        quad = CyclicQuad(circle, *pts)
        result = (check_lemma1 if args.lemma == 1 else check_ptolemy)(quad)
        _emit(formats.check_document(name, {"quad": [[p.x, p.y] for p in pts]}, result), out)
        return EXIT_OK if result.passed else EXIT_FAILED
    if args.lemma == 3 and (args.triangle is not None or args.bary is not None):
        if args.triangle is None or args.bary is None:
            raise UsageError("lemma 3 needs both --triangle and --bary")
        t = formats.parse_triangle(args.triangle)
        bary = formats.parse_bary(args.bary)
        result = check_lemma3(t, bary)
        inputs = {"triangle": formats.triangle_to_dict(t), "bary": [bary.x, bary.y, bary.z]}
        _emit(formats.check_document(name, inputs, result), out)
        return EXIT_OK if result.passed else EXIT_FAILED
    summary = run_suite(SamplerConfig(args.seed, args.count), [name])
    _emit(formats.suite_document(summary), out)
    return EXIT_OK if summary.passed else EXIT_FAILED


COMMANDS = {
    "construct": _cmd_construct,
    "suite": _cmd_suite,
    "render": _cmd_render,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except (UsageError, formats.ParseError, GeometryError, ValueError, OSError) as exc:
        out.write(formats.dumps(formats.error_document(exc)))
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
