"""Plane geometry primitives: points, lines, circles, triangles and intersections.

Every comparison goes through a :class:`Tolerance`. Distances are compared
relative to a natural scale (circle radius, direction length, or the largest
side of a triangle); orientation degeneracy is compared against scale squared.
All functions are pure and deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

# Single scalar alias so an extended-precision backend can replace float later.
Real = float


class GeometryError(ValueError):
    """Base class for every geometric failure raised by this package."""


class DegenerateTriangle(GeometryError):
    pass


class DegenerateLine(GeometryError):
    pass


class ParallelLines(GeometryError):
    pass


class OriginOutsideCircle(GeometryError):
    pass


class KnownNotOnCircle(GeometryError):
    pass


class PointAtInfinity(GeometryError):
    pass


class CoincidentPoints(GeometryError):
    pass


class NoRealIntersection(GeometryError):
    pass


class NonInteriorPoint(GeometryError):
    pass


@dataclass(frozen=True)
class Tolerance:
    eps_rel: Real = 1e-9
    eps_area: Real = 1e-12

    def __post_init__(self) -> None:
        if not 0.0 < self.eps_rel < 1e-3:
            raise ValueError(f"eps_rel must lie in (0, 1e-3), got {self.eps_rel!r}")
        if not self.eps_area > 0.0:
            raise ValueError(f"eps_area must be positive, got {self.eps_area!r}")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Point:
    x: Real
    y: Real

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"non-finite point ({self.x!r}, {self.y!r})")

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: Real) -> Point:
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k: Real) -> Point:
        return Point(self.x / k, self.y / k)

    def dot(self, other: Point) -> Real:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> Real:
        return self.x * other.y - self.y * other.x

    def norm(self) -> Real:
        return math.hypot(self.x, self.y)

    def unit(self) -> Point:
        n = self.norm()
        if n == 0.0:
            raise DegenerateLine("cannot normalise a zero vector")
        return Point(self.x / n, self.y / n)

    def perp(self) -> Point:
        """Rotate by +90 degrees."""
        return Point(-self.y, self.x)

    def as_tuple(self) -> tuple[Real, Real]:
        return (self.x, self.y)


def dist(p: Point, q: Point) -> Real:
    return math.hypot(p.x - q.x, p.y - q.y)


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2.0, (p.y + q.y) / 2.0)


@dataclass(frozen=True)
class Line:
    anchor: Point
    direction: Point

    def __post_init__(self) -> None:
        if self.direction.x == 0.0 and self.direction.y == 0.0:
            raise DegenerateLine("line direction must be nonzero")

    @classmethod
    def through(cls, p: Point, q: Point) -> Line:
        if p == q:
            raise CoincidentPoints(f"no unique line through {p} and itself")
        return cls(p, q - p)

    def at(self, t: Real) -> Point:
        return self.anchor + self.direction * t

    def project(self, p: Point) -> Point:
        d = self.direction
        t = (p - self.anchor).dot(d) / d.dot(d)
        return self.at(t)

    def distance_to(self, p: Point) -> Real:
        d = self.direction
        return abs(d.cross(p - self.anchor)) / d.norm()

    def coincides(self, other: Line, scale: Real = 1.0, tol: Tolerance = DEFAULT_TOL) -> bool:
        """Same point set, regardless of anchor or direction length and sign."""
        u, v = self.direction.unit(), other.direction.unit()
        if abs(u.cross(v)) > tol.eps_rel:
            return False
        return self.distance_to(other.anchor) <= tol.eps_rel * scale


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: Real

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise GeometryError(f"circle radius must be positive and finite, got {self.radius!r}")


@dataclass(frozen=True)
class BarycentricCoords:
    x: Real
    y: Real
    z: Real

    def __post_init__(self) -> None:
        if self.x == 0.0 and self.y == 0.0 and self.z == 0.0:
            raise GeometryError("barycentric coordinates (0:0:0) denote no point")

    def scaled(self, k: Real) -> BarycentricCoords:
        return BarycentricCoords(self.x * k, self.y * k, self.z * k)

    def normalized(self) -> BarycentricCoords:
        s = self.x + self.y + self.z
        return BarycentricCoords(self.x / s, self.y / s, self.z / s)


def orientation(p: Point, q: Point, r: Point) -> Real:
    """Twice the signed area of pqr; positive when counterclockwise."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


@dataclass(frozen=True)
class Triangle:
    A: Point
    B: Point
    C: Point
    tol: Tolerance = DEFAULT_TOL

    def __post_init__(self) -> None:
        a, b, c = self.a, self.b, self.c
        scale = max(a, b, c)
        if scale == 0.0:
            raise DegenerateTriangle("all three vertices coincide")
        area2 = orientation(self.A, self.B, self.C)
        if abs(area2) <= self.tol.eps_area * scale * scale:
            raise DegenerateTriangle(f"vertices are collinear (twice signed area {area2!r})")
        if not (a < b + c and b < c + a and c < a + b):
            raise DegenerateTriangle("side lengths violate the strict triangle inequality")

    @property
    def a(self) -> Real:
        return dist(self.B, self.C)

    @property
    def b(self) -> Real:
        return dist(self.C, self.A)

    @property
    def c(self) -> Real:
        return dist(self.A, self.B)

    @property
    def scale(self) -> Real:
        return max(self.a, self.b, self.c)

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.A, self.B, self.C)

    def vertex(self, label: str) -> Point:
        try:
            return {"A": self.A, "B": self.B, "C": self.C}[label]
        except KeyError:
            raise ValueError(f"unknown vertex label {label!r}") from None


def line_line_intersect(l1: Line, l2: Line, tol: Tolerance = DEFAULT_TOL) -> Point:
    d, e = l1.direction, l2.direction
    cross = d.cross(e)
    if abs(cross) <= tol.eps_rel * d.norm() * e.norm():
        raise ParallelLines("lines are parallel within tolerance")
    t = (l2.anchor - l1.anchor).cross(e) / cross
    return l1.at(t)


def line_circle_intersect(l: Line, c: Circle, tol: Tolerance = DEFAULT_TOL) -> tuple[Point, ...]:
    """Intersections ordered by increasing parameter along ``l.direction``.

    Returns two points, one point on tangency, or an empty tuple.
    """
    foot = l.project(c.center)
    h = dist(foot, c.center)
    if h > c.radius * (1.0 + tol.eps_rel):
        return ()
    if abs(h - c.radius) <= tol.eps_rel * c.radius:
        return (foot,)
    # (r - h)(r + h) avoids cancellation in r^2 - h^2 for near-tangent chords
    half = math.sqrt((c.radius - h) * (c.radius + h))
    u = l.direction.unit()
    return (foot - u * half, foot + u * half)


def ray_circle_hit(origin: Point, through: Point, c: Circle, tol: Tolerance = DEFAULT_TOL) -> Point:
    """Where the ray from ``origin`` towards ``through`` leaves the circle."""
    if power_of_point(origin, c) >= -tol.eps_rel * c.radius * c.radius:
        raise OriginOutsideCircle(f"ray origin {origin} is not strictly inside the circle")
    hits = line_circle_intersect(Line.through(origin, through), c, tol)
    # origin strictly inside: one hit behind it, one ahead
    return hits[-1]


class SecondHit(NamedTuple):
    point: Point
    tangent: bool


def second_intersection(l: Line, c: Circle, known: Point, tol: Tolerance = DEFAULT_TOL) -> SecondHit:
    """The other point where ``l`` meets ``c``, given one known meeting point.

    The answer is the reflection of ``known`` in the foot of the perpendicular
    from the center, so it never depends on which root a solver reports first.
    """
    if abs(dist(known, c.center) - c.radius) > tol.eps_rel * c.radius:
        raise KnownNotOnCircle(f"{known} is not on the circle")
    foot = l.project(c.center)
    if dist(known, foot) <= tol.eps_rel * c.radius:
        return SecondHit(known, True)
    return SecondHit(foot * 2.0 - known, False)


def circumcircle(t: Triangle) -> Circle:
    # translate to A first; keeps the determinant well scaled far from the origin
    bx, by = t.B.x - t.A.x, t.B.y - t.A.y
    cx, cy = t.C.x - t.A.x, t.C.y - t.A.y
    d = 2.0 * (bx * cy - by * cx)
    if d == 0.0:
        raise DegenerateTriangle("collinear vertices have no circumcircle")
    b2, c2 = bx * bx + by * by, cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    return Circle(Point(t.A.x + ux, t.A.y + uy), math.hypot(ux, uy))


def bary_to_cart(t: Triangle, b: BarycentricCoords, tol: Tolerance = DEFAULT_TOL) -> Point:
    s = b.x + b.y + b.z
    if abs(s) <= tol.eps_rel * (abs(b.x) + abs(b.y) + abs(b.z)):
        raise PointAtInfinity(f"({b.x}:{b.y}:{b.z}) has coordinate sum ~0")
    return Point(
        (b.x * t.A.x + b.y * t.B.x + b.z * t.C.x) / s,
        (b.x * t.A.y + b.y * t.B.y + b.z * t.C.y) / s,
    )


def cart_to_bary(t: Triangle, p: Point) -> BarycentricCoords:
    """Normalised barycentrics from signed sub-triangle areas."""
    total = orientation(t.A, t.B, t.C)
    if total == 0.0:
        raise DegenerateTriangle("collinear vertices")
    return BarycentricCoords(
        orientation(p, t.B, t.C) / total,
        orientation(t.A, p, t.C) / total,
        orientation(t.A, t.B, p) / total,
    )


def parallel_through(p: Point, l: Line) -> Line:
    return Line(p, l.direction)


def perpendicular_through(p: Point, l: Line) -> Line:
    return Line(p, l.direction.perp())


def perpendicular_bisector(p: Point, q: Point, tol: Tolerance = DEFAULT_TOL) -> Line:
    d = q - p
    if d.norm() <= tol.eps_rel * max(p.norm(), q.norm()):
        raise CoincidentPoints(f"{p} and {q} coincide; bisector undefined")
    return Line(midpoint(p, q), d.perp())


def power_of_point(p: Point, c: Circle) -> Real:
    d = dist(p, c.center)
    return (d - c.radius) * (d + c.radius)
