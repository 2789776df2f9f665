"""Numerical oracles for the supporting lemmas and proof identities, and the
seeded sampler that drives the randomized suites.

Every sample is a pure function of ``(seed, trial)``: each trial gets its own
generator seeded from ``(seed, stream, trial)``, so trials can be reordered or
run concurrently without changing any result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .constructions import CONSTRUCTIONS, ConstructionReport
from .kernel import (
    BarycentricCoords,
    Circle,
    GeometryError,
    Line,
    NonInteriorPoint,
    Point,
    Real,
    Triangle,
    bary_to_cart,
    circumcircle,
    dist,
    line_line_intersect,
    orientation,
    power_of_point,
    ray_circle_hit,
)

LEMMA_TOL = 1e-10
CONSTRUCTION_TOL = 1e-9
RELAXED_TOL = 1e-6

# envelope inside which the tight construction tolerance applies
ENVELOPE_MIN_ANGLE = 15.0
ENVELOPE_MAX_ANGLE = 150.0
ENVELOPE_SIDE_RATIO = 20.0
MIN_ARC_GAP_DEG = 5.0
MAX_RETRIES = 10_000

_STREAM_TRIANGLE = 1
_STREAM_QUAD = 2
_STREAM_LEMMA3 = 3


class SamplerExhausted(RuntimeError):
    """Rejection sampling ran out of retries; the config is unsatisfiable."""


@dataclass(frozen=True)
class CheckResult:
    lhs: Real
    rhs: Real
    residual: Real
    passed: bool
    tol: Real

    @classmethod
    def compare(cls, lhs: Real, rhs: Real, tol: Real = LEMMA_TOL) -> CheckResult:
        scale = max(abs(lhs), abs(rhs))
        residual = 0.0 if scale == 0.0 else abs(lhs - rhs) / scale
        # NaN residual compares False, so it can never pass
        return cls(lhs, rhs, residual, bool(residual <= tol), tol)


@dataclass(frozen=True)
class CyclicQuad:
    circle: Circle
    A: Point
    B: Point
    C: Point
    D: Point

    def __post_init__(self) -> None:
        r = self.circle.radius
        for label, p in zip("ABCD", self.points):
            if abs(dist(p, self.circle.center) - r) > 1e-9 * r:
                raise GeometryError(f"vertex {label} is not on the circle")
        pts = self.points
        turns = [orientation(pts[i], pts[(i + 1) % 4], pts[(i + 2) % 4]) for i in range(4)]
        if not (all(v > 0.0 for v in turns) or all(v < 0.0 for v in turns)):
            raise GeometryError("vertices are not in strict circular order")

    @property
    def points(self) -> tuple[Point, Point, Point, Point]:
        return (self.A, self.B, self.C, self.D)

    @classmethod
    def from_unordered(cls, circle: Circle, points: Sequence[Point]) -> CyclicQuad:
        """Sort concyclic points counterclockwise about the center."""
        c = circle.center
        ordered = sorted(points, key=lambda p: math.atan2(p.y - c.y, p.x - c.x))
        return cls(circle, *ordered)


@dataclass(frozen=True)
class SamplerConfig:
    seed: int
    count: int
    min_angle: Real = ENVELOPE_MIN_ANGLE
    max_angle: Real = ENVELOPE_MAX_ANGLE
    max_side_ratio: Real = ENVELOPE_SIDE_RATIO

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.count < 0:
            raise ValueError(f"count must be non-negative, got {self.count}")
        if not 0.0 < self.min_angle <= 60.0 <= self.max_angle < 180.0:
            raise ValueError("angle bounds must satisfy 0 < min <= 60 <= max < 180")
        if self.max_angle + 2.0 * self.min_angle > 180.0 + 1e-9:
            raise ValueError("max_angle leaves no room for two angles >= min_angle")
        if self.max_side_ratio < 1.0:
            raise ValueError("max_side_ratio must be >= 1")

    @property
    def in_envelope(self) -> bool:
        return (
            self.min_angle >= ENVELOPE_MIN_ANGLE
            and self.max_angle <= ENVELOPE_MAX_ANGLE
            and self.max_side_ratio <= ENVELOPE_SIDE_RATIO
        )

    @property
    def construction_tol(self) -> Real:
        return CONSTRUCTION_TOL if self.in_envelope else RELAXED_TOL


def _rng(cfg: SamplerConfig, stream: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([cfg.seed, stream, trial])


def triangle_angles(t: Triangle) -> tuple[Real, Real, Real]:
    """Interior angles at A, B, C in degrees (law of cosines)."""
    a, b, c = t.a, t.b, t.c

    def angle(opp: Real, s1: Real, s2: Real) -> Real:
        cosv = (s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2)
        return math.degrees(math.acos(max(-1.0, min(1.0, cosv))))

    return angle(a, b, c), angle(b, c, a), angle(c, a, b)


def _triangle_from_rng(cfg: SamplerConfig, rng: np.random.Generator) -> Triangle:
    lo, hi = cfg.min_angle, cfg.max_angle
    for _ in range(MAX_RETRIES):
        alpha, beta = rng.uniform(lo, hi, size=2)
        gamma = 180.0 - alpha - beta
        if not lo <= gamma <= hi:
            continue
        angles = [float(alpha), float(beta), float(gamma)]
        sines = [math.sin(math.radians(v)) for v in angles]
        if max(sines) / min(sines) > cfg.max_side_ratio:
            continue
        perm = rng.permutation(3)
        ang_b = angles[perm[1]]
        side = [sines[i] for i in perm]
        top = max(side)
        a, c = side[0] / top, side[2] / top
        # B at origin, C on the x-axis, A above; then a random similarity
        B = (0.0, 0.0)
        C = (a, 0.0)
        A = (c * math.cos(math.radians(ang_b)), c * math.sin(math.radians(ang_b)))
        theta = float(rng.uniform(0.0, 2.0 * math.pi))
        shift = rng.uniform(-1.0, 1.0, size=2)
        flip = bool(rng.integers(0, 2))
        verts = [_similarity(p, theta, 1.0, (float(shift[0]), float(shift[1])), flip) for p in (A, B, C)]
        return Triangle(*verts)
    raise SamplerExhausted(f"no triangle satisfied {cfg} in {MAX_RETRIES} draws")


def sample_triangle(cfg: SamplerConfig, trial: int) -> Triangle:
    return _triangle_from_rng(cfg, _rng(cfg, _STREAM_TRIANGLE, trial))


def sample_cyclic_quad(cfg: SamplerConfig, trial: int) -> CyclicQuad:
    rng = _rng(cfg, _STREAM_QUAD, trial)
    min_gap = math.radians(MIN_ARC_GAP_DEG)
    for _ in range(MAX_RETRIES):
        angles = np.sort(rng.uniform(0.0, 2.0 * math.pi, size=4))
        gaps = np.diff(np.append(angles, angles[0] + 2.0 * math.pi))
        if gaps.min() < min_gap:
            continue
        pts = [Point(math.cos(float(v)), math.sin(float(v))) for v in angles]
        return CyclicQuad(Circle(Point(0.0, 0.0), 1.0), *pts)
    raise SamplerExhausted(f"no cyclic quad with {MIN_ARC_GAP_DEG} degree gaps in {MAX_RETRIES} draws")


def sample_interior_point(cfg: SamplerConfig, trial: int) -> tuple[Triangle, BarycentricCoords]:
    """A triangle and strictly interior barycentrics, each weight in [0.05, 1)."""
    rng = _rng(cfg, _STREAM_LEMMA3, trial)
    t = _triangle_from_rng(cfg, rng)
    x, y, z = (float(v) for v in rng.uniform(0.05, 1.0, size=3))
    return t, BarycentricCoords(x, y, z)


def _similarity(p, theta: Real, scale: Real, shift: tuple[Real, Real], reflect: bool) -> Point:
    x, y = (p.x, p.y) if isinstance(p, Point) else p
    if reflect:
        y = -y
    ct, st = math.cos(theta), math.sin(theta)
    return Point(scale * (ct * x - st * y) + shift[0], scale * (st * x + ct * y) + shift[1])


def transform_triangle(
    t: Triangle, theta: Real, scale: Real, shift: tuple[Real, Real], reflect: bool = False
) -> Triangle:
    """Image of ``t`` under reflect-then-rotate-scale-translate."""
    return Triangle(*(_similarity(p, theta, scale, shift, reflect) for p in t.vertices))


def check_lemma1(q: CyclicQuad, tol: Real = LEMMA_TOL) -> CheckResult:
    """Diagonal split PA/PC against (AB*AD)/(CB*CD)."""
    P = line_line_intersect(Line.through(q.A, q.C), Line.through(q.B, q.D))
    lhs = dist(P, q.A) / dist(P, q.C)
    rhs = dist(q.A, q.B) * dist(q.A, q.D) / (dist(q.C, q.B) * dist(q.C, q.D))
    return CheckResult.compare(lhs, rhs, tol)


def check_ptolemy(q: CyclicQuad, tol: Real = LEMMA_TOL) -> CheckResult:
    A, B, C, D = q.points
    lhs = dist(A, C) * dist(B, D)
    rhs = dist(A, B) * dist(C, D) + dist(A, D) * dist(B, C)
    return CheckResult.compare(lhs, rhs, tol)


def check_lemma3(t: Triangle, p_bary: BarycentricCoords, tol: Real = LEMMA_TOL) -> CheckResult:
    """Cevian feet E=(x:0:z), F=(x:y:0); ray EF meets the circumcircle at Q;
    compare CA/(y QB) with BC/(x QA) + AB/(z QC)."""
    x, y, z = p_bary.x, p_bary.y, p_bary.z
    if not (x > 0 and y > 0 and z > 0) and not (x < 0 and y < 0 and z < 0):
        raise NonInteriorPoint(f"({x}:{y}:{z}) is not strictly inside the triangle")
    E = bary_to_cart(t, BarycentricCoords(x, 0.0, z))
    F = bary_to_cart(t, BarycentricCoords(x, y, 0.0))
    Q = ray_circle_hit(E, F, circumcircle(t))
    lhs = t.b / (y * dist(Q, t.B))
    rhs = t.a / (x * dist(Q, t.A)) + t.c / (z * dist(Q, t.C))
    return CheckResult.compare(lhs, rhs, tol)


def _chord_identities(t: Triangle, report: ConstructionReport, tol: Real) -> dict[str, CheckResult]:
    m = report.measures
    a, b, c = t.a, t.b, t.c
    pa, pb, pc = m["PA"], m["PB"], m["PC"]
    quad = CyclicQuad.from_unordered(circumcircle(t), [t.A, t.B, t.C, report.points["P"]])
    out = {
        "chord_ratio": CheckResult.compare(m["RQ"] / m["RS"], a * pa / (b * pb), tol),
        "ptolemy": check_ptolemy(quad, tol),
    }
    if report.construction_id == 1:
        x = a * pa / (b * pb)
        out["parallel_ratio"] = CheckResult.compare(m["QS"] / m["RS"], c * pc / (b * pb), tol)
        out["reciprocal"] = CheckResult.compare(1.0 / (b * pb), 1.0 / (a * pa) + 1.0 / (c * pc), tol)
        out["golden"] = CheckResult.compare(x - 1.0 / x, 1.0, tol)
    else:
        y = b * pb / (a * pa)
        out["reciprocal"] = CheckResult.compare(1.0 / (a * pa), 1.0 / (c * pc) + 1.0 / (b * pb), tol)
        out["golden"] = CheckResult.compare(y - 1.0 / y, 1.0, tol)
    return out


def _nine_point_identities(t: Triangle, report: ConstructionReport, tol: Real) -> dict[str, CheckResult]:
    m = report.measures
    ef2 = m["FE"] ** 2
    N = report.points["N"]
    big = Circle(N, m["radius"])
    return {
        "golden_product": CheckResult.compare(m["EG"] * m["GF"], ef2, tol),
        "midline": CheckResult.compare(m["FE"], m["BD"], tol),
        "power": CheckResult.compare(-power_of_point(report.points["E"], big), ef2, tol),
        "radius_through_t": CheckResult.compare(m["NT"], m["radius"], tol),
    }


def _circle_k_identities(t: Triangle, report: ConstructionReport, tol: Real) -> dict[str, CheckResult]:
    m = report.measures
    bm, bn, bc = m["BM"], m["BN"], t.a
    return {
        "product": CheckResult.compare(bm * bn, bc * bc / 5.0, tol),
        "sum": CheckResult.compare(bm + bn, bc, tol),
        "square": CheckResult.compare((bm + bn) ** 2, 5.0 * bm * bn, tol),
        "split": CheckResult.compare(m["EA"] / m["EF"], 5.0 * t.c**2 / t.a**2, tol),
        "power": CheckResult.compare(bm * bn, m["BG"] * t.c, tol),
        "mirror": CheckResult.compare(bm, m["CN"], tol),
    }


def proof_identities(
    t: Triangle, report: ConstructionReport, tol: Real = CONSTRUCTION_TOL
) -> dict[str, CheckResult]:
    """The intermediate equalities each golden-ratio argument passes through,
    evaluated on the construction's own points."""
    if report.construction_id in (1, 2):
        return _chord_identities(t, report, tol)
    if report.construction_id == 3:
        return _nine_point_identities(t, report, tol)
    return _circle_k_identities(t, report, tol)


# ---------------------------------------------------------------------------
# suite runner
# ---------------------------------------------------------------------------

CHECK_GROUPS = ("lemma1", "ptolemy", "lemma3", "construct1", "construct2", "construct3", "construct4", "identities")


@dataclass
class Failure:
    trial: int
    residual: Optional[Real]
    error: Optional[str] = None


@dataclass
class CheckSummary:
    tol: Real
    count: int = 0
    max_residual: Optional[Real] = None
    failures: list[Failure] = field(default_factory=list)

    def record(self, trial: int, result: CheckResult) -> None:
        self.count += 1
        if self.max_residual is None or result.residual > self.max_residual:
            self.max_residual = result.residual
        if not result.passed:
            self.failures.append(Failure(trial, result.residual))

    def record_error(self, trial: int, exc: Exception) -> None:
        self.count += 1
        self.failures.append(Failure(trial, None, f"{type(exc).__name__}: {exc}"))


@dataclass
class SuiteSummary:
    config: SamplerConfig
    checks: dict[str, CheckSummary]

    @property
    def failure_count(self) -> int:
        return sum(len(c.failures) for c in self.checks.values())

    @property
    def passed(self) -> bool:
        return self.failure_count == 0


def _run_trials(summary: CheckSummary, count: int, one: Callable[[int], CheckResult]) -> None:
    for trial in range(count):
        try:
            summary.record(trial, one(trial))
        except GeometryError as exc:
            summary.record_error(trial, exc)


def run_suite(cfg: SamplerConfig, which: Optional[Iterable[str]] = None) -> SuiteSummary:
    selected = tuple(CHECK_GROUPS if which is None else which)
    unknown = [w for w in selected if w not in CHECK_GROUPS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; choose from {', '.join(CHECK_GROUPS)}")
    ctol = cfg.construction_tol
    checks: dict[str, CheckSummary] = {}

    if "lemma1" in selected:
        checks["lemma1"] = CheckSummary(LEMMA_TOL)
        _run_trials(checks["lemma1"], cfg.count, lambda i: check_lemma1(sample_cyclic_quad(cfg, i)))
    if "ptolemy" in selected:
        checks["ptolemy"] = CheckSummary(LEMMA_TOL)
        _run_trials(checks["ptolemy"], cfg.count, lambda i: check_ptolemy(sample_cyclic_quad(cfg, i)))
    if "lemma3" in selected:
        checks["lemma3"] = CheckSummary(LEMMA_TOL)
        _run_trials(checks["lemma3"], cfg.count, lambda i: check_lemma3(*sample_interior_point(cfg, i)))

    wanted = [k for k in CONSTRUCTIONS if f"construct{k}" in selected]
    with_identities = "identities" in selected
    if wanted or with_identities:
        ids = sorted(CONSTRUCTIONS) if with_identities else wanted
        for k in wanted:
            checks[f"construct{k}"] = CheckSummary(ctol)
        for trial in range(cfg.count):
            t = sample_triangle(cfg, trial)
            for k in ids:
                try:
                    report = CONSTRUCTIONS[k](t)
                except GeometryError as exc:
                    if k in wanted:
                        checks[f"construct{k}"].record_error(trial, exc)
                    if with_identities:
                        checks.setdefault(f"identities.c{k}", CheckSummary(ctol)).record_error(trial, exc)
                    continue
                if k in wanted:
                    dev = report.deviation
                    checks[f"construct{k}"].record(
                        trial, CheckResult(report.ratio_value, report.phi, dev, dev <= ctol, ctol)
                    )
                if with_identities:
                    for name, res in proof_identities(t, report, ctol).items():
                        checks.setdefault(f"identities.c{k}.{name}", CheckSummary(ctol)).record(trial, res)
    return SuiteSummary(cfg, checks)
