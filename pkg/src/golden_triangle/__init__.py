"""Golden-ratio constructions in an arbitrary triangle, with numerical checks."""

__version__ = "0.1.0"

from .constructions import PHI, ConstructionReport, construct, construct1, construct2, construct3, construct4
from .kernel import BarycentricCoords, Circle, GeometryError, Line, Point, Tolerance, Triangle

__all__ = [
    "PHI",
    "BarycentricCoords",
    "Circle",
    "ConstructionReport",
    "GeometryError",
    "Line",
    "Point",
    "Tolerance",
    "Triangle",
    "construct",
    "construct1",
    "construct2",
    "construct3",
    "construct4",
]
