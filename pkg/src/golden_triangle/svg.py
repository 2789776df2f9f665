"""Static SVG figures for a construction report.

The y axis points up, as in a textbook figure. The view box fits every point
and circle with a 10% margin. Output is a pure function of the inputs, so
identical inputs give byte-identical files.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .constructions import ConstructionReport
from .kernel import Circle, Point, Triangle, circumcircle, dist, midpoint

WIDTH = 800.0
MARGIN = 0.10
NOTE_LINE = 20.0

STYLE = """
.tri { stroke: #222; stroke-width: 2; fill: none; }
.aux { stroke: #4a7ab5; stroke-width: 1.2; fill: none; }
.ext { stroke: #4a7ab5; stroke-width: 1; fill: none; stroke-dasharray: 5 4; }
.circ { stroke: #7a7a7a; stroke-width: 1.2; fill: none; }
.ratio { stroke: #d9480f; stroke-width: 4; fill: none; stroke-linecap: round; }
.dot { fill: #111; }
.label { font: 15px sans-serif; fill: #111; }
.note { font: 14px sans-serif; fill: #111; }
.flag { font: 14px sans-serif; fill: #c92a2a; }
"""


def _circles(report: ConstructionReport, t: Triangle) -> list[Circle]:
    p = report.points
    k = report.construction_id
    if k in (1, 2):
        return [circumcircle(t)]
    if k == 3:
        return [Circle(p["D"], t.a / 2.0), Circle(p["N"], report.measures["radius"])]
    return [Circle(p["K"], dist(p["K"], t.A))]


def _extreme_pair(pts: list[Point]) -> tuple[Point, Point]:
    """The two farthest-apart points of a collinear set."""
    best = (pts[0], pts[0])
    for i, u in enumerate(pts):
        for v in pts[i + 1 :]:
            if dist(u, v) > dist(*best):
                best = (u, v)
    return best


def _segments(report: ConstructionReport, t: Triangle) -> list[tuple[Point, Point, str]]:
    p = {"A": t.A, "B": t.B, "C": t.C, **report.points}
    k = report.construction_id
    segs: list[tuple[Point, Point, str]] = []
    if k in (1, 2):
        foot = "E" if k == 1 else "D"
        origin = "B" if k == 1 else "A"
        segs += [(p[origin], p[foot], "aux"), (p["C"], p["F"], "aux"), (p[foot], p["P"], "aux")]
        segs.append((*_extreme_pair([p["P"], p["Q"], p["R"], p["S"]]), "aux"))
        segs += [(p["A"], p["Q"], "ext"), (p["A"], p["R"], "ext")]
    elif k == 3:
        segs += [(p["D"], p["E"], "aux"), (p["E"], p["F"], "aux"), (p["F"], p["D"], "aux")]
        segs += [(p["N"], p["D"], "aux"), (p["S"], p["T"], "aux"), (p["L"], p["G"], "aux")]
    else:
        segs += [(p["B"], p["E"], "aux"), (p["F"], p["G"], "aux"), (p["A"], p["G"], "ext")]
        segs += [(p["K"], midpoint(p["A"], p["G"]), "ext"), (p["K"], midpoint(p["B"], p["C"]), "ext")]
        segs.append((*_extreme_pair([p["B"], p["C"], p["M"], p["N"]]), "ext"))
    return segs


def emit_svg(report: ConstructionReport, t: Triangle) -> str:
    labelled = {"A": t.A, "B": t.B, "C": t.C, **report.points}
    circles = _circles(report, t)

    xs = [q.x for q in labelled.values()]
    ys = [q.y for q in labelled.values()]
    for c in circles:
        xs += [c.center.x - c.radius, c.center.x + c.radius]
        ys += [c.center.y - c.radius, c.center.y + c.radius]
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    pad = MARGIN * span
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    k = WIDTH / (x1 - x0)
    fig_h = (y1 - y0) * k

    def X(v: float) -> str:
        return f"{(v - x0) * k:.3f}"

    def Y(v: float) -> str:
        return f"{(y1 - v) * k:.3f}"

    notes = [f"{report.ratio_name} = {report.ratio_value!r}  (golden ratio {report.phi!r})"]
    notes.append(f"relative deviation {report.deviation:.3e}")
    flags = [f"flag: {f}" for f in report.flags]
    height = fig_h + NOTE_LINE * (len(notes) + len(flags) + 1)

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0f}" '
        f'height="{height:.3f}" viewBox="0 0 {WIDTH:.0f} {height:.3f}">',
        f"<title>Construction {report.construction_id}: {escape(report.ratio_name)}</title>",
        f"<style>{STYLE}</style>",
        '<rect x="0" y="0" width="100%" height="100%" fill="#fff"/>',
    ]
    for c in circles:
        out.append(
            f'<circle class="circ" cx="{X(c.center.x)}" cy="{Y(c.center.y)}" r="{c.radius * k:.3f}"/>'
        )
    out.append(
        f'<polygon class="tri" points="{X(t.A.x)},{Y(t.A.y)} {X(t.B.x)},{Y(t.B.y)} {X(t.C.x)},{Y(t.C.y)}"/>'
    )
    for u, v, cls in _segments(report, t):
        out.append(f'<line class="{cls}" x1="{X(u.x)}" y1="{Y(u.y)}" x2="{X(v.x)}" y2="{Y(v.y)}"/>')
    for a, b in report.ratio_segments:
        u, v = labelled[a], labelled[b]
        out.append(
            f'<line class="ratio" data-segment="{a}{b}" x1="{X(u.x)}" y1="{Y(u.y)}" x2="{X(v.x)}" y2="{Y(v.y)}"/>'
        )
    for name, q in labelled.items():
        out.append(
            f'<g class="point" id="pt-{name}"><circle class="dot" cx="{X(q.x)}" cy="{Y(q.y)}" r="3"/>'
            f'<text class="label" x="{(q.x - x0) * k + 6:.3f}" y="{(y1 - q.y) * k - 6:.3f}">{name}</text></g>'
        )
    y = fig_h + NOTE_LINE
    for line in notes:
        out.append(f'<text class="note" x="10" y="{y:.3f}">{escape(line)}</text>')
        y += NOTE_LINE
    for line in flags:
        out.append(f'<text class="flag" x="10" y="{y:.3f}">{escape(line)}</text>')
        y += NOTE_LINE
    out.append("</svg>")
    return "\n".join(out) + "\n"
