"""Input grammar and the JSON report document.

Triangle input is three whitespace-separated ``x,y`` pairs::

    0,0 1,0 0.5,0.8660254

Reals are written with Python's shortest round-trip representation, which is
at most 17 significant digits and always parses back to the same double.
"""

from __future__ import annotations

import json
import re
from typing import Any

from . import __version__
from .constructions import ConstructionReport
from .kernel import BarycentricCoords, Point, Triangle
from .verifier import CheckResult, SuiteSummary

SCHEMA_VERSION = "1.0"
TOOL_NAME = "golden-triangle"

_REAL = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_PAIR = re.compile(rf"({_REAL}),({_REAL})")
_BARY = re.compile(rf"({_REAL}):({_REAL}):({_REAL})")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at character {position})")
        self.position = position


def parse_points(text: str, expected: int) -> list[Point]:
    points = []
    for m in re.finditer(r"\S+", text):
        token = m.group(0)
        pair = _PAIR.fullmatch(token)
        if pair is None:
            raise ParseError(f"malformed vertex {token!r}; expected x,y", m.start())
        points.append(Point(float(pair.group(1)), float(pair.group(2))))
        if len(points) > expected:
            raise ParseError(f"expected {expected} vertices, found more", m.start())
    if len(points) != expected:
        raise ParseError(f"expected {expected} vertices, found {len(points)}", len(text))
    return points


def parse_triangle(text: str) -> Triangle:
    """Parse ``"x1,y1 x2,y2 x3,y3"``; raises ParseError or DegenerateTriangle."""
    return Triangle(*parse_points(text, 3))


def parse_bary(text: str) -> BarycentricCoords:
    m = _BARY.fullmatch(text.strip())
    if m is None:
        raise ParseError(f"malformed barycentrics {text!r}; expected x:y:z", 0)
    return BarycentricCoords(*(float(g) for g in m.groups()))


def _xy(p: Point) -> list[float]:
    return [p.x, p.y]


def triangle_to_dict(t: Triangle) -> dict[str, Any]:
    return {"A": _xy(t.A), "B": _xy(t.B), "C": _xy(t.C)}


def triangle_from_dict(d: dict[str, Any]) -> Triangle:
    return Triangle(*(Point(*d[k]) for k in "ABC"))


def check_to_dict(r: CheckResult) -> dict[str, Any]:
    return {"lhs": r.lhs, "rhs": r.rhs, "residual": r.residual, "passed": r.passed, "tol": r.tol}


def report_to_dict(r: ConstructionReport) -> dict[str, Any]:
    return {
        "construction_id": r.construction_id,
        "ratio_name": r.ratio_name,
        "ratio_value": r.ratio_value,
        "phi": r.phi,
        "deviation": r.deviation,
        "ratio_segments": [list(s) for s in r.ratio_segments],
        "points": {k: _xy(p) for k, p in r.points.items()},
        "measures": dict(r.measures),
        "flags": list(r.flags),
    }


def report_from_dict(d: dict[str, Any]) -> ConstructionReport:
    return ConstructionReport(
        construction_id=d["construction_id"],
        points={k: Point(*v) for k, v in d["points"].items()},
        ratio_name=d["ratio_name"],
        ratio_value=d["ratio_value"],
        ratio_segments=tuple(tuple(s) for s in d["ratio_segments"]),
        measures=dict(d["measures"]),
        flags=list(d["flags"]),
        phi=d["phi"],
    )


def _envelope(kind: str, inputs: dict[str, Any], result: dict[str, Any]) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": TOOL_NAME,
        "tool_version": __version__,
        "kind": kind,
        "input": inputs,
        "result": result,
    }


def construction_document(
    t: Triangle, report: ConstructionReport, identities: dict[str, CheckResult], tol: float
) -> dict[str, Any]:
    result = report_to_dict(report)
    result["tolerance"] = tol
    result["identities"] = {k: check_to_dict(v) for k, v in identities.items()}
    result["passed"] = report.passes(tol) and all(v.passed for v in identities.values())
    inputs = {"construction_id": report.construction_id, "triangle": triangle_to_dict(t), "tol": tol}
    return _envelope("construction", inputs, result)


def suite_document(summary: SuiteSummary) -> dict[str, Any]:
    cfg = summary.config
    inputs = {
        "seed": cfg.seed,
        "count": cfg.count,
        "min_angle": cfg.min_angle,
        "max_angle": cfg.max_angle,
        "max_side_ratio": cfg.max_side_ratio,
        "checks": list(summary.checks),
    }
    checks = {
        name: {
            "tol": c.tol,
            "count": c.count,
            "max_residual": c.max_residual,
            "failures": [
                {"trial": f.trial, "residual": f.residual, "error": f.error} for f in c.failures
            ],
        }
        for name, c in summary.checks.items()
    }
    result = {"checks": checks, "failure_count": summary.failure_count, "passed": summary.passed}
    return _envelope("suite", inputs, result)


def check_document(name: str, inputs: dict[str, Any], result: CheckResult) -> dict[str, Any]:
    return _envelope("check", {"check": name, **inputs}, check_to_dict(result))


def error_document(exc: BaseException) -> dict[str, Any]:
    err: dict[str, Any] = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        err["position"] = exc.position
    return _envelope("error", {}, {"error": err})


def dumps(doc: dict[str, Any]) -> str:
    # allow_nan=False: a NaN or infinity anywhere is a bug, never silently emitted
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"
