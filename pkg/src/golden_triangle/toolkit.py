"""Triangle-derived objects: side midpoints, symmedian feet, the symmedian point
and the nine-point circle."""

from __future__ import annotations

from dataclasses import dataclass

from .kernel import (
    BarycentricCoords,
    Point,
    Real,
    Triangle,
    bary_to_cart,
    circumcircle,
    midpoint,
)

_OPPOSITE = {"A": "BC", "B": "CA", "C": "AB"}


@dataclass(frozen=True)
class CevianFoot:
    vertex: str
    foot: Point
    side: str


@dataclass(frozen=True)
class NinePointData:
    center: Point
    radius: Real
    midpoints: tuple[Point, Point, Point]

    @property
    def D(self) -> Point:
        return self.midpoints[0]

    @property
    def E(self) -> Point:
        return self.midpoints[1]

    @property
    def F(self) -> Point:
        return self.midpoints[2]


def midpoints(t: Triangle) -> tuple[Point, Point, Point]:
    """Midpoints (D, E, F) of BC, CA and AB."""
    return midpoint(t.B, t.C), midpoint(t.C, t.A), midpoint(t.A, t.B)


def _squared_sides(t: Triangle) -> tuple[Real, Real, Real]:
    a, b, c = t.a, t.b, t.c
    return a * a, b * b, c * c


def symmedian_foot(t: Triangle, vertex: str) -> CevianFoot:
    """Where the symmedian from ``vertex`` meets the opposite side.

    The foot splits the side in the ratio of the squares of the two adjacent
    sides; e.g. the foot E from B has barycentrics (a^2 : 0 : c^2).
    """
    a2, b2, c2 = _squared_sides(t)
    weights = {
        "A": (0.0, b2, c2),
        "B": (a2, 0.0, c2),
        "C": (a2, b2, 0.0),
    }
    if vertex not in weights:
        raise ValueError(f"unknown vertex label {vertex!r}")
    foot = bary_to_cart(t, BarycentricCoords(*weights[vertex]))
    return CevianFoot(vertex, foot, _OPPOSITE[vertex])


def symmedian_point(t: Triangle) -> Point:
    return bary_to_cart(t, BarycentricCoords(*_squared_sides(t)))


def nine_point(t: Triangle) -> NinePointData:
    """Nine-point center and radius, taken as the circumcircle of the medial triangle."""
    mids = midpoints(t)
    circle = circumcircle(Triangle(*mids, tol=t.tol))
    return NinePointData(circle.center, circle.radius, mids)


def side_lengths_squared(t: Triangle) -> BarycentricCoords:
    """(a^2 : b^2 : c^2), the barycentrics of the symmedian point."""
    return BarycentricCoords(*_squared_sides(t))

