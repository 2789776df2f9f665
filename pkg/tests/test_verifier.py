import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from golden_triangle.constructions import construct1, construct2, construct3, construct4
from golden_triangle.kernel import (
    BarycentricCoords,
    Circle,
    GeometryError,
    NonInteriorPoint,
    Point,
    Triangle,
    dist,
)
from golden_triangle.toolkit import side_lengths_squared
from golden_triangle.verifier import (
    CHECK_GROUPS,
    CheckResult,
    CyclicQuad,
    SamplerConfig,
    check_lemma1,
    check_lemma3,
    check_ptolemy,
    proof_identities,
    run_suite,
    sample_cyclic_quad,
    sample_interior_point,
    sample_triangle,
    triangle_angles,
)

from conftest import SQ3, SQ5, envelope_triangles

UNIT = Circle(Point(0.0, 0.0), 1.0)


def on_unit(deg):
    return Point(math.cos(math.radians(deg)), math.sin(math.radians(deg)))


SQUARE = CyclicQuad(UNIT, on_unit(45), on_unit(135), on_unit(225), on_unit(315))


class TestCheckResult:
    def test_residual_recomputable(self):
        r = CheckResult.compare(2.0, 2.000001, 1e-10)
        assert r.residual == abs(2.0 - 2.000001) / 2.000001
        assert not r.passed

    def test_both_zero(self):
        assert CheckResult.compare(0.0, 0.0).residual == 0.0

    def test_nan_never_passes(self):
        assert not CheckResult.compare(float("nan"), 1.0).passed


class TestCyclicQuad:
    def test_rejects_off_circle(self):
        with pytest.raises(GeometryError):
            CyclicQuad(UNIT, on_unit(0), on_unit(90), on_unit(180), Point(0.0, -0.9))

    def test_rejects_crossed_order(self):
        with pytest.raises(GeometryError):
            CyclicQuad(UNIT, on_unit(0), on_unit(180), on_unit(90), on_unit(270))

    def test_clockwise_order_accepted(self):
        CyclicQuad(UNIT, on_unit(270), on_unit(180), on_unit(90), on_unit(0))

    def test_from_unordered(self):
        q = CyclicQuad.from_unordered(UNIT, [on_unit(0), on_unit(180), on_unit(90), on_unit(270)])
        assert check_ptolemy(q).passed


class TestLemma1:
    def test_square(self):
        r = check_lemma1(SQUARE)
        assert r.lhs == pytest.approx(1.0, abs=1e-15) and r.rhs == pytest.approx(1.0, abs=1e-15)
        assert r.passed

    def test_trapezoid(self):
        q = CyclicQuad(UNIT, on_unit(100), on_unit(80), on_unit(20), on_unit(160))
        # direct evaluation, independent of check_lemma1's intersection
        A, B, C, D = q.points
        # diagonals AC and BD: solve A + s(C-A) = B + u(D-B) by Cramer's rule
        ax, ay = C.x - A.x, C.y - A.y
        bx, by = D.x - B.x, D.y - B.y
        det = ax * (-by) - ay * (-bx)
        s = ((B.x - A.x) * (-by) - (B.y - A.y) * (-bx)) / det
        P = Point(A.x + s * ax, A.y + s * ay)
        expected = dist(P, A) / dist(P, C)
        r = check_lemma1(q)
        assert r.lhs == pytest.approx(expected, rel=1e-13)
        assert r.residual <= 1e-10

    def test_sampled(self):
        cfg = SamplerConfig(42, 1000)
        assert all(check_lemma1(sample_cyclic_quad(cfg, i)).passed for i in range(1000))


class TestPtolemy:
    def test_square(self):
        r = check_ptolemy(SQUARE)
        assert r.lhs == pytest.approx(4.0, rel=1e-15)  # diagonals are diameters on the unit circle
        assert r.passed

    def test_unit_side_square(self):
        h = math.sqrt(0.5)
        c = Circle(Point(0.5, 0.5), h)
        q = CyclicQuad(c, Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1))
        r = check_ptolemy(q)
        assert r.lhs == pytest.approx(2.0, rel=1e-15) and r.rhs == pytest.approx(2.0, rel=1e-15)

    def test_limit_d_to_a(self):
        # analytic limit: AC*BA = AB*CA + 0*BC
        A, B, C = on_unit(10), on_unit(130), on_unit(250)
        lhs = dist(A, C) * dist(B, A)
        rhs = dist(A, B) * dist(C, A) + 0.0 * dist(B, C)
        assert lhs == pytest.approx(rhs, rel=1e-15)

    def test_sampled(self):
        cfg = SamplerConfig(42, 1000)
        assert all(check_ptolemy(sample_cyclic_quad(cfg, i)).passed for i in range(1000))


class TestLemma3:
    def test_equilateral_centroid(self, equilateral):
        r = check_lemma3(equilateral, BarycentricCoords(1, 1, 1))
        Q = Point(0.5 - SQ5 / 4, SQ3 / 4)
        qa, qb, qc = (dist(Q, v) for v in equilateral.vertices)
        assert qa == pytest.approx(math.sqrt(0.5), abs=1e-12)
        assert qb == pytest.approx(0.4370160, abs=1e-7)
        assert qc == pytest.approx(1.1441228, abs=1e-7)
        assert 1 / qb == pytest.approx(1 / qa + 1 / qc, rel=1e-12)
        assert r.lhs == pytest.approx(1 / qb, rel=1e-12)
        assert r.passed

    def test_non_interior(self, equilateral):
        with pytest.raises(NonInteriorPoint):
            check_lemma3(equilateral, BarycentricCoords(1, -1, 1))
        with pytest.raises(NonInteriorPoint):
            check_lemma3(equilateral, BarycentricCoords(1, 0, 1))

    @given(envelope_triangles(), st.floats(0.05, 1), st.floats(0.05, 1), st.floats(0.05, 1), st.floats(0.01, 100))
    def test_homogeneous(self, t, x, y, z, k):
        r1 = check_lemma3(t, BarycentricCoords(x, y, z))
        r2 = check_lemma3(t, BarycentricCoords(x, y, z).scaled(k))
        assert r1.residual <= 1e-10
        assert abs(r1.lhs * 1 - r2.lhs * k) <= 1e-12 * abs(r1.lhs)

    @given(envelope_triangles())
    def test_symmedian_point_matches_construct1(self, t):
        """Two code paths, one truth: the lemma at (a^2:b^2:c^2) versus the
        reciprocal identity evaluated on construct1's P."""
        r = check_lemma3(t, side_lengths_squared(t))
        m = construct1(t).measures
        lhs = 1 / (t.b * m["PB"])
        rhs = 1 / (t.a * m["PA"]) + 1 / (t.c * m["PC"])
        # with weights (a^2:b^2:c^2) each lemma term collapses to 1/(side * distance)
        assert r.lhs == pytest.approx(lhs, rel=1e-12)
        assert r.rhs == pytest.approx(rhs, rel=1e-12)
        assert abs(r.residual - CheckResult.compare(lhs, rhs).residual) <= 1e-12

    def test_sampled(self):
        cfg = SamplerConfig(42, 1000)
        assert all(check_lemma3(*sample_interior_point(cfg, i)).passed for i in range(1000))


class TestSampler:
    def test_deterministic(self):
        cfg = SamplerConfig(42, 10)
        assert sample_triangle(cfg, 0) == sample_triangle(cfg, 0)
        assert sample_cyclic_quad(cfg, 3) == sample_cyclic_quad(cfg, 3)
        assert sample_interior_point(cfg, 5) == sample_interior_point(cfg, 5)
        assert sample_triangle(cfg, 0) != sample_triangle(cfg, 1)
        assert sample_triangle(cfg, 0) != sample_triangle(SamplerConfig(43, 10), 0)

    def test_angles_in_envelope(self):
        cfg = SamplerConfig(42, 1000)
        for i in range(1000):
            t = sample_triangle(cfg, i)
            angs = triangle_angles(t)
            assert sum(angs) == pytest.approx(180.0, abs=1e-9)
            assert min(angs) >= 15.0 - 1e-9 and max(angs) <= 150.0 + 1e-9
            assert max(t.a, t.b, t.c) / min(t.a, t.b, t.c) <= 20.0
            assert t.scale == pytest.approx(1.0, abs=1e-12)

    def test_quad_gaps(self):
        cfg = SamplerConfig(42, 1000)
        for i in range(1000):
            q = sample_cyclic_quad(cfg, i)
            angs = sorted(math.degrees(math.atan2(p.y, p.x)) % 360 for p in q.points)
            gaps = [b - a for a, b in zip(angs, angs[1:])] + [360 - angs[-1] + angs[0]]
            assert min(gaps) >= 5.0 - 1e-9

    @pytest.mark.parametrize(
        "kwargs",
        [dict(seed=-1, count=1), dict(seed=2**64, count=1), dict(seed=1, count=-1),
         dict(seed=1, count=1, min_angle=70), dict(seed=1, count=1, max_angle=170, min_angle=15),
         dict(seed=1, count=1, max_side_ratio=0.5)],
    )
    def test_config_validation(self, kwargs):
        with pytest.raises(ValueError):
            SamplerConfig(**kwargs)

    def test_envelope_property(self):
        assert SamplerConfig(1, 1).in_envelope
        assert SamplerConfig(1, 1).construction_tol == 1e-9
        wide = SamplerConfig(1, 1, min_angle=2.9, max_angle=170.0)
        assert not wide.in_envelope and wide.construction_tol == 1e-6


class TestIdentities:
    @given(envelope_triangles())
    def test_all_hold(self, t):
        for fn in (construct1, construct2, construct3, construct4):
            for name, res in proof_identities(t, fn(t)).items():
                assert res.passed, (fn.__name__, name, res)

    def test_ptolemy_arrangement_by_circle_order(self):
        # P lands on different arcs for construct1 and construct2; both must pass
        t = Triangle(Point(0.1, 0.0), Point(2.0, 0.2), Point(0.7, 1.4))
        for fn in (construct1, construct2):
            assert proof_identities(t, fn(t))["ptolemy"].passed


class TestRunSuite:
    def test_empty(self):
        s = run_suite(SamplerConfig(42, 0))
        assert s.passed
        assert all(c.count == 0 and c.max_residual is None for c in s.checks.values())

    def test_selector(self):
        s = run_suite(SamplerConfig(42, 5), ["lemma1", "construct3"])
        assert list(s.checks) == ["lemma1", "construct3"]

    def test_unknown_selector(self):
        with pytest.raises(ValueError):
            run_suite(SamplerConfig(42, 5), ["lemma4"])

    def test_defaults_pass(self):
        s = run_suite(SamplerConfig(42, 1000))
        assert s.failure_count == 0
        for g in CHECK_GROUPS[:7]:
            assert s.checks[g].count == 1000

    def test_extreme_config_relaxed(self):
        cfg = SamplerConfig(42, 1000, min_angle=2.9, max_angle=170.0, max_side_ratio=20.0)
        s = run_suite(cfg, ["construct1", "construct2", "construct3", "construct4", "identities"])
        assert s.passed
        assert all(c.tol == 1e-6 for k, c in s.checks.items() if k.startswith("construct"))

    def test_failures_carry_trial_index(self):
        s = run_suite(SamplerConfig(7, 20), ["lemma1"])
        s.checks["lemma1"].record(13, CheckResult.compare(1.0, 2.0))
        assert [f.trial for f in s.checks["lemma1"].failures] == [13]
        assert not s.passed

    def test_order_independent(self):
        cfg = SamplerConfig(42, 50)
        summary = run_suite(cfg, ["construct2"]).checks["construct2"]
        reversed_max = max(construct2(sample_triangle(cfg, i)).deviation for i in reversed(range(50)))
        assert summary.max_residual == reversed_max
