import math

import pytest

from bccurve.errors import CoincidentCircles, OverlapDegenerate, PointOnCurve
from bccurve.kernel import (
    Arc,
    Disk,
    Point,
    Segment,
    arg_variation,
    circle_circle_intersection,
    dist,
    farthest_point_on_piece,
    piece_circle_intersection,
    piece_min_distance,
    piece_piece_intersection,
    point_piece_distance,
)

from conftest import sampled_max_distance, sampled_min_distance


class TestPointPieceDistance:
    def test_perpendicular_foot(self):
        seg = Segment(Point(-1, 0), Point(1, 0))
        assert point_piece_distance(Point(0, 2), seg) == pytest.approx(2.0, abs=1e-12)

    def test_center_of_full_circle(self):
        arc = Arc(Point(0, 0), 1.0, 0.0, 2 * math.pi, True)
        assert point_piece_distance(Point(0, 0), arc) == pytest.approx(1.0, abs=1e-12)

    def test_first_quadrant_arc_from_outside(self):
        # Expected value computed against the dense sampling oracle below.
        arc = Arc(Point(0, 0), 1.0, 0.0, 0.5 * math.pi, True)
        p = Point(2, 2)
        d = point_piece_distance(p, arc)
        assert d == pytest.approx(2 * math.sqrt(2) - 1, abs=1e-12)
        assert d == pytest.approx(sampled_min_distance(p, arc), abs=1e-6)

    def test_clamps_to_arc_endpoint(self):
        arc = Arc(Point(0, 0), 1.0, 0.0, 0.5 * math.pi, True)
        p = Point(0, -3)  # radial direction points away from the arc span
        d = point_piece_distance(p, arc)
        assert d == pytest.approx(sampled_min_distance(p, arc), abs=1e-6)


class TestFarthestPoint:
    def test_segment_endpoint(self):
        seg = Segment(Point(1, 0), Point(3, 0))
        t, q, d = farthest_point_on_piece(Point(0, 0), seg)
        assert (q.x, q.y) == (3, 0)
        assert d == pytest.approx(3.0)

    def test_arc_tie_breaks_to_smaller_parameter(self):
        arc = Arc(Point(2, 0), 1.0, 0.5 * math.pi, 1.5 * math.pi, True)
        t, q, d = farthest_point_on_piece(Point(0, 0), arc)
        assert d == pytest.approx(math.sqrt(5), abs=1e-12)
        assert d == pytest.approx(sampled_max_distance(Point(0, 0), arc), abs=1e-6)
        assert t == 0.0
        assert q.y == pytest.approx(1.0)

    def test_segment_tie_breaks_to_smaller_parameter(self):
        seg = Segment(Point(0, -1), Point(0, 1))
        t, q, d = farthest_point_on_piece(Point(5, 0), seg)
        assert d == pytest.approx(math.sqrt(26), abs=1e-12)
        assert t == 0.0
        assert q.y == pytest.approx(-1.0)

    def test_arc_antipode(self):
        arc = Arc(Point(0, 0), 2.0, 0.0, 2 * math.pi, True)
        p = Point(1, 0)
        t, q, d = farthest_point_on_piece(p, arc)
        assert d == pytest.approx(3.0, abs=1e-12)
        assert d == pytest.approx(sampled_max_distance(p, arc), abs=1e-6)


class TestCircleCircleIntersection:
    def test_external_tangency_single_point(self):
        pts = circle_circle_intersection(Disk(Point(0, 0), 1), Disk(Point(2, 0), 1))
        assert len(pts) == 1
        assert (pts[0].x, pts[0].y) == pytest.approx((1.0, 0.0))

    def test_two_points_satisfy_both_equations(self):
        pts = circle_circle_intersection(Disk(Point(0, 0), 1), Disk(Point(1, 0), 1))
        assert len(pts) == 2
        ys = sorted(p.y for p in pts)
        assert ys[0] == pytest.approx(-0.8660254, abs=1e-7)
        assert ys[1] == pytest.approx(0.8660254, abs=1e-7)
        for p in pts:
            assert dist(p, Point(0, 0)) == pytest.approx(1.0, abs=1e-12)
            assert dist(p, Point(1, 0)) == pytest.approx(1.0, abs=1e-12)

    def test_disjoint(self):
        assert circle_circle_intersection(Disk(Point(0, 0), 1), Disk(Point(5, 0), 1)) == []

    def test_coincident_raises(self):
        with pytest.raises(CoincidentCircles):
            circle_circle_intersection(Disk(Point(0, 0), 1), Disk(Point(0, 0), 1))

    def test_internal_tangency(self):
        pts = circle_circle_intersection(Disk(Point(0, 0), 2), Disk(Point(1, 0), 1))
        assert len(pts) == 1
        assert (pts[0].x, pts[0].y) == pytest.approx((2.0, 0.0))

    def test_at_most_two_points_randomized(self, rng):
        for _ in range(200):
            c1 = Disk(Point(rng.uniform(-2, 2), rng.uniform(-2, 2)), rng.uniform(0.1, 3))
            c2 = Disk(Point(rng.uniform(-2, 2), rng.uniform(-2, 2)), rng.uniform(0.1, 3))
            try:
                pts = circle_circle_intersection(c1, c2)
            except CoincidentCircles:
                continue
            assert len(pts) <= 2


class TestPieceCircleIntersection:
    def test_segment_through_circle(self):
        seg = Segment(Point(-2, 0), Point(2, 0))
        hits = piece_circle_intersection(seg, Disk(Point(0, 0), 1))
        assert [h[1].x for h in hits] == pytest.approx([-1.0, 1.0])

    def test_half_arc_against_offset_circle(self):
        arc = Arc(Point(0, 0), 1.0, -0.5 * math.pi, 0.5 * math.pi, True)
        hits = piece_circle_intersection(arc, Disk(Point(1, 0), 1))
        ys = sorted(h[1].y for h in hits)
        assert ys == pytest.approx([-0.8660254, 0.8660254], abs=1e-7)
        assert all(h[1].x == pytest.approx(0.5, abs=1e-9) for h in hits)

    def test_miss(self):
        seg = Segment(Point(0, 2), Point(1, 2))
        assert piece_circle_intersection(seg, Disk(Point(0, 0), 1)) == []

    def test_tangent_segment_single_hit(self):
        seg = Segment(Point(-1, 1), Point(1, 1))
        hits = piece_circle_intersection(seg, Disk(Point(0, 0), 1))
        assert len(hits) == 1
        assert hits[0][1].y == pytest.approx(1.0)

    def test_arc_on_circle_overlap_flagged(self):
        arc = Arc(Point(0, 0), 1.0, 0.0, math.pi, True)
        with pytest.raises(OverlapDegenerate):
            piece_circle_intersection(arc, Disk(Point(0, 0), 1))


class TestArgVariation:
    def test_full_circle_around_center(self):
        arc = Arc(Point(0, 0), 1.0, 0.0, 2 * math.pi, True)
        assert arg_variation(arc, Point(0, 0)) == pytest.approx(2 * math.pi, abs=1e-9)

    def test_segment_quarter_turn(self):
        seg = Segment(Point(1, -1), Point(1, 1))
        expected = math.atan2(1, 1) - math.atan2(-1, 1)
        assert arg_variation(seg, Point(0, 0)) == pytest.approx(expected, abs=1e-12)
        assert expected == pytest.approx(0.5 * math.pi)

    def test_collinear_away_from_probe(self):
        seg = Segment(Point(3, 0), Point(4, 0))
        assert arg_variation(seg, Point(0, 0)) == 0.0

    def test_probe_on_piece_raises(self):
        seg = Segment(Point(-1, 0), Point(1, 0))
        with pytest.raises(PointOnCurve):
            arg_variation(seg, Point(0.25, 0))

    def test_cw_circle_is_negative(self):
        arc = Arc(Point(0, 0), 1.0, 0.0, -2 * math.pi, False)
        assert arg_variation(arc, Point(0, 0)) == pytest.approx(-2 * math.pi, abs=1e-9)


class TestPiecePiece:
    def test_crossing_segments(self):
        a = Segment(Point(-1, 0), Point(1, 0))
        b = Segment(Point(0, -1), Point(0, 1))
        pts, overlap = piece_piece_intersection(a, b)
        assert not overlap
        assert len(pts) == 1
        assert pts[0][2].x == pytest.approx(0.0)

    def test_collinear_overlap(self):
        a = Segment(Point(0, 0), Point(2, 0))
        b = Segment(Point(1, 0), Point(3, 0))
        pts, overlap = piece_piece_intersection(a, b)
        assert overlap

    def test_shared_endpoint_only(self):
        a = Segment(Point(0, 0), Point(1, 0))
        b = Segment(Point(1, 0), Point(1, 1))
        pts, overlap = piece_piece_intersection(a, b)
        assert not overlap
        assert len(pts) == 1

    def test_same_circle_arcs_overlap(self):
        a = Arc(Point(0, 0), 1.0, 0.0, math.pi, True)
        b = Arc(Point(0, 0), 1.0, 0.5 * math.pi, 1.5 * math.pi, True)
        pts, overlap = piece_piece_intersection(a, b)
        assert overlap

    def test_same_circle_arcs_touching(self):
        a = Arc(Point(0, 0), 1.0, 0.0, math.pi, True)
        b = Arc(Point(0, 0), 1.0, math.pi, 2 * math.pi, True)
        pts, overlap = piece_piece_intersection(a, b)
        assert not overlap
        assert len(pts) == 2  # both junctions of the half-circle pair

    def test_min_distance_segment_arc(self):
        seg = Segment(Point(-1, 3), Point(1, 3))
        arc = Arc(Point(0, 0), 1.0, 0.0, math.pi, True)
        assert piece_min_distance(seg, arc) == pytest.approx(2.0, abs=1e-12)
