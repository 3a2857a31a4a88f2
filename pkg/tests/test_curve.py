import json
import math

import pytest

from bccurve.curve import (
    JordanCurve,
    Location,
    Orientation,
    lobe_decomposition,
    orientation,
    point_location,
    splice,
    subcurve,
    validate,
    winding_number,
)
from bccurve.errors import (
    CurveInsideDisk,
    EndpointMismatch,
    IdenticalEndpoints,
    InvalidCurve,
    PointOnCurve,
)
from bccurve.io import curve_from_dict, curve_to_dict
from bccurve.kernel import Arc, Disk, Point, Segment, dist
from bccurve.shapes import circle, polygon, rounded_rect, stadium


class TestValidate:
    def test_circle_ok(self, unit_circle):
        assert validate(unit_circle).ok

    def test_open_polyline_gap(self):
        chain = JordanCurve([Segment(Point(0, 0), Point(1, 0)),
                             Segment(Point(1, 0), Point(1, 1))], validated=True)
        report = validate(chain)
        assert not report.ok
        assert report.closure_gaps

    def test_figure_eight_self_intersection(self):
        # Two tangent circles traversed as one chain touch at the origin.
        chain = JordanCurve([
            Arc(Point(-1, 0), 1.0, 0.0, 2 * math.pi, True),
            Arc(Point(1, 0), 1.0, math.pi, 3 * math.pi, True),
        ], validated=True)
        report = validate(chain)
        assert not report.ok
        assert report.self_intersections
        x, y = report.self_intersections[0][2].x, report.self_intersections[0][2].y
        assert (x, y) == pytest.approx((0.0, 0.0), abs=1e-9)

    def test_zero_length_piece(self):
        chain = JordanCurve([Segment(Point(0, 0), Point(1, 0)),
                             Segment(Point(1, 0), Point(1, 0)),
                             Segment(Point(1, 0), Point(0, 0))], validated=True)
        report = validate(chain)
        assert 1 in report.zero_length

    def test_constructor_raises_on_invalid(self):
        with pytest.raises(InvalidCurve):
            JordanCurve([Segment(Point(0, 0), Point(1, 0))])


class TestWinding:
    def test_ccw_circle_center(self, unit_circle):
        assert winding_number(unit_circle, Point(0, 0)) == 1

    def test_ccw_circle_outside(self, unit_circle):
        assert winding_number(unit_circle, Point(3, 0)) == 0

    def test_cw_circle_center(self):
        assert winding_number(circle(1.0, ccw=False), Point(0, 0)) == -1

    def test_point_on_curve_raises(self, unit_circle):
        with pytest.raises(PointOnCurve):
            winding_number(unit_circle, Point(1, 0))

    def test_constant_on_components(self, unit_stadium, rng):
        """Probe pairs joined by a straight path avoiding the curve agree."""
        from bccurve.kernel import piece_piece_intersection

        checked = 0
        tries = 0
        while checked < 100 and tries < 4000:
            tries += 1
            p = Point(rng.uniform(-3, 3), rng.uniform(-2, 2))
            q = Point(rng.uniform(-3, 3), rng.uniform(-2, 2))
            if dist(p, q) <= 1e-6:
                continue
            seg = Segment(p, q)
            blocked = False
            for piece in unit_stadium.pieces:
                pts, overlap = piece_piece_intersection(seg, piece)
                if pts or overlap:
                    blocked = True
                    break
            if blocked or unit_stadium.min_distance(p) <= 1e-6 \
                    or unit_stadium.min_distance(q) <= 1e-6:
                continue
            assert winding_number(unit_stadium, p) == winding_number(unit_stadium, q)
            checked += 1
        assert checked == 100

    def test_zero_beyond_bounding_radius(self, rng):
        curves = [stadium(), rounded_rect(4, 4, 1), circle(2.0)]
        for curve in curves:
            R = curve.bounding_radius() + 1.0
            for _ in range(20):
                ang = rng.uniform(0, 2 * math.pi)
                r = R + rng.uniform(0.0, 3.0)
                assert winding_number(curve, Point(r * math.cos(ang), r * math.sin(ang))) == 0

    def test_interior_is_plus_one_for_positive(self, unit_stadium, rng):
        for _ in range(50):
            p = Point(rng.uniform(-2, 2), rng.uniform(-1, 1))
            if unit_stadium.min_distance(p) <= 1e-6:
                continue
            w = winding_number(unit_stadium, p)
            assert w in (0, 1)


class TestOrientation:
    def test_ccw_positive(self, unit_circle):
        assert orientation(unit_circle) is Orientation.POSITIVE

    def test_cw_negative(self):
        assert orientation(circle(1.0, ccw=False)) is Orientation.NEGATIVE

    def test_stadium_positive(self, unit_stadium):
        assert orientation(unit_stadium) is Orientation.POSITIVE
        assert winding_number(unit_stadium, Point(0, 0)) == 1


class TestPointLocation:
    @pytest.mark.parametrize("p,where", [
        (Point(0.5, 0), Location.INTERIOR),
        (Point(1, 0), Location.BOUNDARY),
        (Point(2, 0), Location.EXTERIOR),
    ])
    def test_unit_circle(self, unit_circle, p, where):
        assert point_location(unit_circle, p) is where


class TestSubcurveSplice:
    def test_circle_half_interval(self, unit_circle):
        a = unit_circle.locate(Point(1, 0))
        b = unit_circle.locate(Point(-1, 0))
        interval = subcurve(unit_circle, a, b)
        # ccw from (1,0) to (-1,0) is the upper half
        mid = interval.pieces[0].point_at(0.5) if len(interval.pieces) == 1 else None
        top = Point(0, 1)
        assert min(interval.pieces[k].point_at(0.5).y for k in range(len(interval.pieces))) > -1e-9
        assert any(dist(interval.pieces[k].point_at(u / 8), top) < 1e-6
                   for k in range(len(interval.pieces)) for u in range(9))

    def test_partition_covers_curve(self, unit_stadium):
        a = unit_stadium.point_on(0, 0.5)
        b = unit_stadium.point_on(2, 0.5)
        first = subcurve(unit_stadium, a, b)
        second = subcurve(unit_stadium, b, a)
        assert first.length() + second.length() == pytest.approx(unit_stadium.length(), abs=1e-9)

    def test_one_semicircle_between_wall_midpoints(self, unit_stadium):
        a = unit_stadium.point_on(0, 0.5)  # bottom wall midpoint
        b = unit_stadium.point_on(2, 0.5)  # top wall midpoint
        interval = subcurve(unit_stadium, a, b)
        arcs = [p for p in interval.pieces if isinstance(p, Arc)]
        assert len(arcs) == 1
        assert arcs[0].sweep == pytest.approx(math.pi)

    def test_identical_endpoints(self, unit_circle):
        a = unit_circle.point_on(0, 0.25)
        with pytest.raises(IdenticalEndpoints):
            subcurve(unit_circle, a, a)

    def test_splice_halves_into_circle(self, unit_circle):
        a = unit_circle.locate(Point(1, 0))
        b = unit_circle.locate(Point(-1, 0))
        upper = subcurve(unit_circle, a, b)
        cap = Arc(Point(0, 0), 1.0, math.pi, 2 * math.pi, True)
        closed = splice(upper, cap)
        assert len(closed.pieces) >= 2
        assert winding_number(closed, Point(0, 0)) == 1

    def test_splice_endpoint_mismatch(self, unit_circle):
        a = unit_circle.locate(Point(1, 0))
        b = unit_circle.locate(Point(-1, 0))
        upper = subcurve(unit_circle, a, b)
        cap = Arc(Point(0.5, 0), 1.0, math.pi, 2 * math.pi, True)
        with pytest.raises(EndpointMismatch):
            splice(upper, cap)


class TestLobeDecomposition:
    def test_probe_partition_on_circle(self, unit_circle, rng):
        p = unit_circle.locate(Point(1, 0))
        split = lobe_decomposition(unit_circle, p, Disk(p.coords, 0.5))
        self._check_partition(unit_circle, split, p.coords, 0.5, rng)

    def test_probe_partition_on_rounded_square(self, rounded_square, rng):
        p = rounded_square.locate(Point(0, -2))
        split = lobe_decomposition(rounded_square, p, Disk(p.coords, 0.1))
        self._check_partition(rounded_square, split, p.coords, 0.1, rng)

    @staticmethod
    def _check_partition(curve, split, center, radius, rng):
        inner_hits = outer_hits = checked = 0
        for _ in range(600):
            ang = rng.uniform(0, 2 * math.pi)
            r = radius * math.sqrt(rng.uniform(0, 1)) * 0.98
            q = Point(center.x + r * math.cos(ang), center.y + r * math.sin(ang))
            if (curve.min_distance(q) <= 1e-7
                    or split.inner.min_distance(q) <= 1e-7
                    or split.outer.min_distance(q) <= 1e-7):
                continue
            a = point_location(split.inner, q) is Location.INTERIOR
            b = point_location(split.outer, q) is Location.INTERIOR
            assert a != b, f"probe {q} in {int(a) + int(b)} lobes"
            checked += 1
            inner_hits += a
            outer_hits += b
        assert checked > 300
        assert inner_hits > 0 and outer_hits > 0

    def test_inner_lobe_matches_interior_near_point(self, unit_circle):
        p = unit_circle.locate(Point(1, 0))
        split = lobe_decomposition(unit_circle, p, Disk(p.coords, 0.5))
        probe_in = Point(0.98, 0.0)
        probe_out = Point(1.02, 0.0)
        assert point_location(split.inner, probe_in) is Location.INTERIOR
        assert point_location(split.outer, probe_out) is Location.INTERIOR

    def test_curve_inside_disk(self, unit_circle):
        p = unit_circle.locate(Point(1, 0))
        with pytest.raises(CurveInsideDisk):
            lobe_decomposition(unit_circle, p, Disk(p.coords, 5.0))


class TestJson:
    def test_round_trip_bitwise(self, unit_stadium):
        data = curve_to_dict(unit_stadium)
        text = json.dumps(data)
        again, _ = curve_from_dict(json.loads(text))
        assert curve_to_dict(again) == data

    def test_negative_orientation_reversed_on_load(self):
        data = curve_to_dict(circle(1.0, ccw=False))
        curve, report = curve_from_dict(data)
        assert report.auto_reversed
        assert orientation(curve) is Orientation.POSITIVE

    def test_mixed_polygon_round_trip(self):
        curve = polygon([Point(0, 0), Point(2, 0), Point(2.5, 1.75), Point(0.25, 1.25)])
        data = curve_to_dict(curve)
        again, _ = curve_from_dict(data)
        assert curve_to_dict(again) == data
