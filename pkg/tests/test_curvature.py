import math

import pytest

from bccurve.compose import compose
from bccurve.curvature import (
    ViolationKind,
    check_bounded_concave_curvature,
    check_bounded_convex_curvature,
    find_violation_witness,
    unit_disk_at,
    verify_witness,
    winds_positively,
)
from bccurve.curve import Location, point_location, scaled
from bccurve.errors import LocalViolation, PreconditionFailed
from bccurve.kernel import Disk, Point, dist
from bccurve.shapes import circle, polygon, rounded_rect, stadium

from genutil import random_disk_composition


@pytest.fixture(scope="module")
def two_disk_blob():
    return compose(circle(1.0), circle(1.0, center=Point(1, 0)))


class TestConvexCheck:
    def test_unit_circle_ok(self, unit_circle):
        assert check_bounded_convex_curvature(unit_circle).ok

    def test_small_circle_too_sharp(self):
        report = check_bounded_convex_curvature(circle(0.5))
        assert not report.ok
        assert all(v.kind is ViolationKind.CONVEX_ARC_TOO_SHARP for v in report.violations)

    def test_two_disk_composition_ok_with_reflex_corners(self, two_disk_blob):
        assert check_bounded_convex_curvature(two_disk_blob).ok

    def test_square_fails_at_corners(self):
        sq = polygon([Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)])
        report = check_bounded_convex_curvature(sq)
        assert not report.ok
        assert sum(v.kind is ViolationKind.CONVEX_CORNER for v in report.violations) == 4

    def test_violation_witnesses_verify(self):
        report = check_bounded_convex_curvature(circle(0.5))
        for v in report.violations:
            assert verify_witness(circle(0.5), v.q, v.D2)

    def test_radius_bound_parameter(self):
        assert check_bounded_convex_curvature(circle(0.5), R=0.5).ok
        assert not check_bounded_convex_curvature(circle(0.5), R=0.6).ok


class TestConcaveCheck:
    def test_small_circle_ok(self):
        assert check_bounded_concave_curvature(circle(0.5)).ok

    def test_big_circle_ok(self):
        assert check_bounded_concave_curvature(circle(2.0)).ok

    def test_two_disk_composition_fails_at_reflex(self, two_disk_blob):
        report = check_bounded_concave_curvature(two_disk_blob)
        assert not report.ok
        assert any(v.kind is ViolationKind.REFLEX_CORNER for v in report.violations)


class TestInvariances:
    def test_mirror_symmetry(self, rng):
        from bccurve.curve import mirrored_x

        for _ in range(6):
            curve = random_disk_composition(rng, k=3)
            mirrored = mirrored_x(curve).reversed()
            assert check_bounded_convex_curvature(curve).ok \
                == check_bounded_convex_curvature(mirrored).ok

    @pytest.mark.parametrize("s", [0.25, 0.5, 2.0, 7.5])
    def test_scale_covariance_circle(self, s):
        base_ok = check_bounded_convex_curvature(circle(0.8)).ok
        scaled_ok = check_bounded_convex_curvature(scaled(circle(0.8), s), R=s).ok
        assert base_ok == scaled_ok

    def test_scale_covariance_random(self, rng):
        for _ in range(8):
            curve = random_disk_composition(rng, k=2)
            s = float(rng.uniform(0.3, 4.0))
            a = check_bounded_convex_curvature(curve, 1.0)
            b = check_bounded_convex_curvature(scaled(curve, s), s)
            assert a.ok == b.ok
            assert len(a.violations) == len(b.violations)


class TestUnitDiskAt:
    def test_circle_returns_own_disk(self, unit_circle):
        x = unit_circle.point_on(0, 0.3)
        w = unit_disk_at(unit_circle, x)
        assert dist(w.U.center, Point(0, 0)) < 1e-9
        assert w.epsilon > 0

    def test_stadium_wall_midpoint(self, unit_stadium):
        x = unit_stadium.point_on(0, 0.5)
        w = unit_disk_at(unit_stadium, x)
        assert dist(w.U.center, Point(0, 0)) < 1e-9
        assert w.epsilon > 0

    def test_reflex_corner_bisector_disk(self, two_disk_blob):
        corner = two_disk_blob.locate(Point(0.5, math.sqrt(3) / 2))
        w = unit_disk_at(two_disk_blob, corner)
        # Tangent at the corner within tolerance and locally interior.
        assert abs(dist(w.U.center, corner.coords) - 1.0) < 1e-9
        assert w.epsilon > 0

    def test_convex_corner_rejected(self):
        sq = polygon([Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)])
        x = sq.point_on(1, 0.0)
        with pytest.raises(LocalViolation):
            unit_disk_at(sq, x)

    def test_witness_probes_hold_at_random_points(self, rng, unit_stadium):
        for _ in range(25):
            s = rng.uniform(0, len(unit_stadium.pieces))
            x = unit_stadium.point_at_s(float(s))
            w = unit_disk_at(unit_stadium, x)
            assert w.epsilon > 0
            for _ in range(20):
                ang = rng.uniform(0, 2 * math.pi)
                r = w.epsilon * math.sqrt(rng.uniform(0, 1))
                probe = Point(x.coords.x + r * math.cos(ang), x.coords.y + r * math.sin(ang))
                if dist(probe, w.U.center) >= w.U.radius - 1e-9:
                    continue
                if unit_stadium.min_distance(probe) <= 1e-8:
                    continue
                assert point_location(unit_stadium, probe) is Location.INTERIOR


class TestWindsPositively:
    def test_interior_disk_positive(self, unit_stadium):
        from bccurve.disks import max_tangent_disk

        z = unit_stadium.point_on(0, 0.5)
        w = unit_disk_at(unit_stadium, z)
        disk, contacts = max_tangent_disk(unit_stadium, z, w.U)
        a, b = contacts[0], contacts[1]
        assert winds_positively(unit_stadium, a, b, disk)

    def test_mirror_configuration_negative(self):
        # Ring-like: the interval wraps the disk from outside; bridge points
        # on a circle around the curve's far side.
        g = circle(0.4, center=Point(0.0, 0.9))
        D = Disk(Point(0, 0), 0.5)
        a = g.locate(Point(-0.3998, 0.6, ))
        # Points of the small circle on D's boundary:
        # solve |p| = 0.5 with |p - (0, 0.9)| = 0.4
        ys = (0.5 ** 2 - 0.4 ** 2 + 0.9 ** 2) / (2 * 0.9)
        xs = math.sqrt(0.5 ** 2 - ys ** 2)
        a = g.locate(Point(-xs, ys))
        b = g.locate(Point(xs, ys))
        assert not winds_positively(g, a, b, D)

    def test_endpoints_off_disk_rejected(self, unit_circle):
        a = unit_circle.point_on(0, 0.25)
        b = unit_circle.point_on(1, 0.25)
        with pytest.raises(PreconditionFailed):
            winds_positively(unit_circle, a, b, Disk(Point(5, 5), 0.5))


def _pinched_config(rho, ang_a_deg, ang_b_deg, d, containing_center):
    g = circle(rho)
    a = g.locate(Point(rho * math.cos(math.radians(ang_a_deg)),
                       rho * math.sin(math.radians(ang_a_deg))))
    b = g.locate(Point(rho * math.cos(math.radians(ang_b_deg)),
                       rho * math.sin(math.radians(ang_b_deg))))
    cr = Point(0.0, -d)
    rr = dist(a.coords, cr)
    return g, a, b, Disk(cr, rr), Disk(containing_center, 1.0)


class TestViolationWitness:
    def test_symmetric_bump_case1(self):
        g, a, b, Dr, Dc = _pinched_config(0.3, 60, 120, 0.1, Point(0, 0))
        w = find_violation_witness(g, a, b, Dr, Dc)
        assert w.kind is ViolationKind.LEMMA4_CONSTRUCTION
        assert verify_witness(g, w.q, w.D2)
        # The pin lands on the far side of the bump from the small disk.
        assert w.q.coords.y == pytest.approx(0.3, abs=1e-6)

    def test_offset_containing_disk(self):
        g, a, b, Dr, Dc = _pinched_config(0.35, 45, 150, 0.12, Point(0.2, 0.1))
        w = find_violation_witness(g, a, b, Dr, Dc)
        assert verify_witness(g, w.q, w.D2)

    def test_mirror_branch(self):
        g, a, b, Dr, Dc = _pinched_config(0.35, 45, 150, 0.12, Point(-0.2, 0.1))
        w = find_violation_witness(g, a, b, Dr, Dc)
        assert verify_witness(g, w.q, w.D2)

    def test_identical_endpoints_rejected(self):
        g, a, b, Dr, Dc = _pinched_config(0.3, 60, 120, 0.1, Point(0, 0))
        with pytest.raises(PreconditionFailed):
            find_violation_witness(g, a, a, Dr, Dc)

    def test_winding_precondition_rejected(self):
        # Same geometry but the interval runs the long way (winds negatively).
        g, a, b, Dr, Dc = _pinched_config(0.3, 60, 120, 0.1, Point(0, 0))
        with pytest.raises(PreconditionFailed):
            find_violation_witness(g, b, a, Dr, Dc)

    def test_self_disk_fails_verification(self, unit_circle):
        q = unit_circle.point_on(0, 0.25)
        assert not verify_witness(unit_circle, q, Disk(Point(0, 0), 1.0))

    def test_internally_tangent_disk_verifies(self):
        c05 = circle(0.5)
        q = c05.point_on(0, 0.5)
        D = Disk(Point(-q.coords.x, -q.coords.y), 1.0)
        assert verify_witness(c05, q, D)
