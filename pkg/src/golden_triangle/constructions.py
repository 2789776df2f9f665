"""The four golden-ratio constructions in an arbitrary triangle.

Each ``constructN`` takes a :class:`Triangle` and returns a
:class:`ConstructionReport` holding every named point, the measured ratio
and its relative deviation from the golden ratio.

Selection rules that the geometry leaves open are fixed here:

* "ray XY" in constructions 1 and 2 starts at X and passes through Y.
* In construction 3, G is the meeting point of line EF with the circle on the
  far side of E from F, so that E lies between F and G.
* In construction 4, M is the meeting point nearer B.
* Q and R are taken on the full lines AB and AC. Landing outside the segment
  is reported as a flag, not an error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .kernel import (
    DEFAULT_TOL,
    Circle,
    Line,
    NoRealIntersection,
    Point,
    Real,
    Tolerance,
    Triangle,
    circumcircle,
    dist,
    line_circle_intersect,
    line_line_intersect,
    midpoint,
    parallel_through,
    perpendicular_bisector,
    perpendicular_through,
    ray_circle_hit,
    second_intersection,
)
from .toolkit import midpoints, nine_point, symmedian_foot

PHI: Real = (1.0 + math.sqrt(5.0)) / 2.0

TANGENT = "Tangent"
Q_OUTSIDE_AB = "QOutsideSegmentAB"
R_OUTSIDE_AC = "ROutsideSegmentAC"
F_OUTSIDE_AE = "FOutsideSegmentAE"

POINT_LABELS = {
    1: ("E", "F", "P", "Q", "R", "S"),
    2: ("D", "F", "P", "Q", "R", "S"),
    3: ("N", "D", "E", "F", "S", "T", "G", "L"),
    4: ("E", "F", "G", "K", "M", "N"),
}


@dataclass
class ConstructionReport:
    construction_id: int
    points: dict[str, Point]
    ratio_name: str
    ratio_value: Real
    ratio_segments: tuple[tuple[str, str], tuple[str, str]]
    measures: dict[str, Real] = field(default_factory=dict)
    flags: list[str] = field(default_factory=list)
    phi: Real = PHI
    deviation: Real = field(init=False)

    def __post_init__(self) -> None:
        missing = [k for k in POINT_LABELS[self.construction_id] if k not in self.points]
        if missing:
            raise ValueError(f"construction {self.construction_id} report lacks points {missing}")
        self.deviation = abs(self.ratio_value - self.phi) / self.phi

    def passes(self, eps: Real = DEFAULT_TOL.eps_rel) -> bool:
        return self.deviation <= eps


def _outside_segment(x: Point, u: Point, v: Point, tol: Tolerance) -> bool:
    d = v - u
    s = (x - u).dot(d) / d.dot(d)
    return s < -tol.eps_rel or s > 1.0 + tol.eps_rel


def _parallel_chord(t: Triangle, start: Point, through: Point, tol: Tolerance):
    """Shared tail of constructions 1 and 2.

    Hit the circumcircle along the ray start->through at P, draw the parallel to
    BC through P, and cut it with AB (Q), AC (R) and the circle again (S).
    """
    omega = circumcircle(t)
    P = ray_circle_hit(start, through, omega, tol)
    chord = parallel_through(P, Line.through(t.B, t.C))
    Q = line_line_intersect(chord, Line.through(t.A, t.B), tol)
    R = line_line_intersect(chord, Line.through(t.A, t.C), tol)
    S, tangent = second_intersection(chord, omega, P, tol)
    flags = []
    if tangent:
        flags.append(TANGENT)
    if _outside_segment(Q, t.A, t.B, tol):
        flags.append(Q_OUTSIDE_AB)
    if _outside_segment(R, t.A, t.C, tol):
        flags.append(R_OUTSIDE_AC)
    measures = {
        "PA": dist(P, t.A),
        "PB": dist(P, t.B),
        "PC": dist(P, t.C),
        "RQ": dist(R, Q),
        "RS": dist(R, S),
        "QS": dist(Q, S),
    }
    return P, Q, R, S, measures, flags


def construct1(t: Triangle, tol: Tolerance = DEFAULT_TOL) -> ConstructionReport:
    """Symmedians BE and CF; ray EF meets the circumcircle at P; R divides QS."""
    E = symmedian_foot(t, "B").foot
    F = symmedian_foot(t, "C").foot
    P, Q, R, S, measures, flags = _parallel_chord(t, E, F, tol)
    return ConstructionReport(
        construction_id=1,
        points={"E": E, "F": F, "P": P, "Q": Q, "R": R, "S": S},
        ratio_name="RQ/RS",
        ratio_value=measures["RQ"] / measures["RS"],
        ratio_segments=(("R", "Q"), ("R", "S")),
        measures=measures,
        flags=flags,
    )


def construct2(t: Triangle, tol: Tolerance = DEFAULT_TOL) -> ConstructionReport:
    """Symmedians AD and CF; ray DF meets the circumcircle at P; R divides SQ."""
    D = symmedian_foot(t, "A").foot
    F = symmedian_foot(t, "C").foot
    P, Q, R, S, measures, flags = _parallel_chord(t, D, F, tol)
    return ConstructionReport(
        construction_id=2,
        points={"D": D, "F": F, "P": P, "Q": Q, "R": R, "S": S},
        ratio_name="RS/RQ",
        ratio_value=measures["RS"] / measures["RQ"],
        ratio_segments=(("R", "S"), ("R", "Q")),
        measures=measures,
        flags=flags,
    )


def construct3(t: Triangle, tol: Tolerance = DEFAULT_TOL) -> ConstructionReport:
    """Nine-point center N, circle on diameter BC, circle about N through its
    chord ST, and the medial line EF extended past E to G."""
    D, E, F = midpoints(t)
    N = nine_point(t).center
    half_bc = t.a / 2.0
    bc_circle = Circle(D, half_bc)
    # D lies on the nine-point circle, so |ND| is its radius and never zero
    nd = dist(N, D)
    chord = perpendicular_through(D, Line.through(N, D))
    S, T = line_circle_intersect(chord, bc_circle, tol)
    omega_big = Circle(N, math.hypot(nd, half_bc))
    hits = line_circle_intersect(Line.through(F, E), omega_big, tol)
    if len(hits) != 2:
        raise NoRealIntersection("line EF does not cross the circle about N")
    L, G = hits
    measures = {
        "FE": dist(F, E),
        "EG": dist(E, G),
        "GF": dist(G, F),
        "EL": dist(E, L),
        "BD": dist(t.B, D),
        "NT": dist(N, T),
        "ND": nd,
        "radius": omega_big.radius,
    }
    return ConstructionReport(
        construction_id=3,
        points={"N": N, "D": D, "E": E, "F": F, "S": S, "T": T, "G": G, "L": L},
        ratio_name="FE/EG",
        ratio_value=measures["FE"] / measures["EG"],
        ratio_segments=(("F", "E"), ("E", "G")),
        measures=measures,
        flags=[],
    )


def construct4(t: Triangle, tol: Tolerance = DEFAULT_TOL) -> ConstructionReport:
    """Symmedian BE, F with FE/EC = 1/5 towards A, G on AB with FG parallel to BE,
    circle about K through A cutting BC at M and N."""
    E = symmedian_foot(t, "B").foot
    ec = dist(E, t.C)
    ea = dist(E, t.A)
    # E lies on CA, so C->A is the direction from E towards A
    F = E + (t.A - t.C).unit() * (ec / 5.0)
    flags = []
    if ea < ec / 5.0:
        flags.append(F_OUTSIDE_AE)
    G = line_line_intersect(parallel_through(F, Line.through(t.B, E)), Line.through(t.A, t.B), tol)
    # G lies on AB, so the bisector of AG is the normal to AB at its midpoint;
    # taking the direction from AB keeps it defined as G approaches A
    ab = Line.through(t.A, t.B)
    bisector_ag = perpendicular_through(midpoint(t.A, G), ab)
    K = line_line_intersect(bisector_ag, perpendicular_bisector(t.B, t.C, tol), tol)
    circle_k = Circle(K, dist(K, t.A))
    hits = line_circle_intersect(Line.through(t.B, t.C), circle_k, tol)
    if not hits:
        raise NoRealIntersection("circle about K misses line BC")
    if len(hits) == 1:
        flags.append(TANGENT)
        M = N = hits[0]
    else:
        M, N = sorted(hits, key=lambda p: dist(p, t.B))
    measures = {
        "BM": dist(t.B, M),
        "BN": dist(t.B, N),
        "MN": dist(M, N),
        "CN": dist(t.C, N),
        "BG": dist(t.B, G),
        "EA": ea,
        "EC": ec,
        "EF": dist(E, F),
    }
    return ConstructionReport(
        construction_id=4,
        points={"E": E, "F": F, "G": G, "K": K, "M": M, "N": N},
        ratio_name="MN/MB",
        ratio_value=measures["MN"] / measures["BM"],
        ratio_segments=(("M", "N"), ("M", "B")),
        measures=measures,
        flags=flags,
    )


CONSTRUCTIONS = {1: construct1, 2: construct2, 3: construct3, 4: construct4}


def construct(construction_id: int, t: Triangle, tol: Tolerance = DEFAULT_TOL) -> ConstructionReport:
    try:
        fn = CONSTRUCTIONS[construction_id]
    except KeyError:
        raise ValueError(f"construction id must be 1..4, got {construction_id!r}") from None
    return fn(t, tol)
