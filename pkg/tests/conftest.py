import math

import pytest
from hypothesis import strategies as st

from golden_triangle.kernel import Point, Triangle

SQ3 = math.sqrt(3.0)
SQ5 = math.sqrt(5.0)


@pytest.fixture
def equilateral():
    """Side 1 with BC on the x-axis: B(0,0), C(1,0), A(1/2, sqrt3/2)."""
    return Triangle(Point(0.5, SQ3 / 2.0), Point(0.0, 0.0), Point(1.0, 0.0))


@st.composite
def envelope_triangles(draw, min_angle=15.0, max_angle=150.0):
    """Triangles with every angle in [min_angle, max_angle], placed by a random
    similarity. Built from angles, so no rejection is needed for shape."""
    alpha = draw(st.floats(min_angle, max_angle))
    lo = max(min_angle, 180.0 - alpha - max_angle)
    hi = min(max_angle, 180.0 - alpha - min_angle)
    beta = draw(st.floats(lo, hi))
    scale = draw(st.floats(1e-3, 1e3))
    theta = draw(st.floats(0.0, 2.0 * math.pi))
    # offsets scale with the triangle so coordinates keep their relative precision
    dx = draw(st.floats(-10.0, 10.0)) * scale
    dy = draw(st.floats(-10.0, 10.0)) * scale
    gamma = 180.0 - alpha - beta
    # law of sines: side opposite each angle
    a = math.sin(math.radians(alpha)) * scale
    c = math.sin(math.radians(gamma)) * scale
    raw = [(c * math.cos(math.radians(beta)), c * math.sin(math.radians(beta))), (0.0, 0.0), (a, 0.0)]
    ct, s = math.cos(theta), math.sin(theta)
    pts = [Point(ct * x - s * y + dx, s * x + ct * y + dy) for x, y in raw]
    return Triangle(*pts)


# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
