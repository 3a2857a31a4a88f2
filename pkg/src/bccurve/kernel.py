"""Closed-form primitives on points, disks, segments and circular arcs.

Everything here is exact-up-to-floating-point: distances and farthest points
by projection/clamping, circle intersections by the radical-line formula, and
argument variation by adaptive chord subdivision.  Coincidence and tangency
predicates use a single absolute tolerance ``eps`` (default 1e-9), suitable
for coordinates of magnitude 1..100.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CoincidentCircles, NumericalInconsistency, OverlapDegenerate, PointOnCurve

TWO_PI = 2.0 * math.pi
DEFAULT_EPS = 1e-9


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> "Point":
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def unit(self) -> "Point":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize zero vector")
        return Point(self.x / n, self.y / n)

    def perp(self) -> "Point":
        """Rotate by +90 degrees (left normal of a direction vector)."""
        return Point(-self.y, self.x)

    def angle(self) -> float:
        return math.atan2(self.y, self.x)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)


def dot(a: Point, b: Point) -> float:
    return a.x * b.x + a.y * b.y


def cross(a: Point, b: Point) -> float:
    return a.x * b.y - a.y * b.x


def dist(a: Point, b: Point) -> float:
    return math.hypot(a.x - b.x, a.y - b.y)


def normalize_angle(a: float) -> float:
    """Map an angle to [0, 2*pi)."""
    a = math.fmod(a, TWO_PI)
    return a + TWO_PI if a < 0.0 else a


@dataclass(frozen=True)
class Disk:
    center: Point
    radius: float

    def __post_init__(self):
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise ValueError(f"disk radius must be positive and finite, got {self.radius}")

    def contains(self, p: Point, tol: float = 0.0) -> bool:
        """Membership in the open disk, shrunk/grown by tol."""
        return dist(self.center, p) < self.radius + tol

    def point_at(self, angle: float) -> Point:
        return Point(self.center.x + self.radius * math.cos(angle),
                     self.center.y + self.radius * math.sin(angle))


@dataclass(frozen=True)
class Segment:
    p0: Point
    p1: Point

    @property
    def start(self) -> Point:
        return self.p0

    @property
    def end(self) -> Point:
        return self.p1

    def length(self) -> float:
        return dist(self.p0, self.p1)

    def point_at(self, t: float) -> Point:
        return Point(self.p0.x + (self.p1.x - self.p0.x) * t,
                     self.p0.y + (self.p1.y - self.p0.y) * t)

    def tangent_at(self, t: float) -> Point:
        return (self.p1 - self.p0).unit()

    def reversed(self) -> "Segment":
        return Segment(self.p1, self.p0)

    def trimmed(self, t0: float, t1: float) -> "Segment":
        return Segment(self.point_at(t0), self.point_at(t1))


@dataclass(frozen=True)
class Arc:
    center: Point
    radius: float
    start_angle: float
    end_angle: float
    ccw: bool

    @property
    def sweep(self) -> float:
        """Traversed angle in (0, 2*pi]; equal endpoint angles mean a full circle."""
        raw = self.end_angle - self.start_angle if self.ccw else self.start_angle - self.end_angle
        m = normalize_angle(raw)
        return TWO_PI if m == 0.0 else m

    @property
    def direction(self) -> float:
        return 1.0 if self.ccw else -1.0

    def angle_at(self, t: float) -> float:
        return self.start_angle + self.direction * self.sweep * t

    def point_at(self, t: float) -> Point:
        a = self.angle_at(t)
        return Point(self.center.x + self.radius * math.cos(a),
                     self.center.y + self.radius * math.sin(a))

    @property
    def start(self) -> Point:
        return self.point_at(0.0)

    @property
    def end(self) -> Point:
        return self.point_at(1.0)

    def tangent_at(self, t: float) -> Point:
        a = self.angle_at(t)
        d = self.direction
        return Point(-d * math.sin(a), d * math.cos(a))

    def length(self) -> float:
        return self.sweep * self.radius

    def reversed(self) -> "Arc":
        return Arc(self.center, self.radius, self.end_angle, self.start_angle, not self.ccw)

    def trimmed(self, t0: float, t1: float) -> "Arc":
        return Arc(self.center, self.radius, self.angle_at(t0), self.angle_at(t1), self.ccw)

    def param_of_angle(self, angle: float, tol_angle: float = 0.0):
        """Parameter in [0,1] of a circle angle on this arc, or None if outside.

        tol_angle extends the admissible range at both ends.
        """
        u = normalize_angle(self.direction * (angle - self.start_angle))
        sw = self.sweep
        if u <= sw + tol_angle:
            return min(u / sw, 1.0)
        if u >= TWO_PI - tol_angle:
            return 0.0
        return None


Piece = Segment | Arc


def piece_midpoint(piece: Piece) -> Point:
    return piece.point_at(0.5)


def closest_point_on_piece(p: Point, piece: Piece) -> tuple[float, Point]:
    """Parameter and coordinates of the point of the piece nearest to p."""
    if isinstance(piece, Segment):
        d = piece.p1 - piece.p0
        L2 = dot(d, d)
        t = 0.0 if L2 == 0.0 else dot(p - piece.p0, d) / L2
        t = min(1.0, max(0.0, t))
        return t, piece.point_at(t)
    # Arc: clamp the angle of p as seen from the center onto the arc range.
    v = p - piece.center
    if v.norm() == 0.0:
        # Center: every arc point is equidistant; smallest parameter wins.
        return 0.0, piece.point_at(0.0)
    t = piece.param_of_angle(v.angle())
    if t is not None:
        return t, piece.point_at(t)
    q0, q1 = piece.point_at(0.0), piece.point_at(1.0)
    if dist(p, q0) <= dist(p, q1):
        return 0.0, q0
    return 1.0, q1


def point_piece_distance(p: Point, piece: Piece) -> float:
    """Euclidean distance from p to the point set of the piece."""
    _, q = closest_point_on_piece(p, piece)
    return dist(p, q)


def farthest_point_on_piece(p: Point, piece: Piece) -> tuple[float, Point, float]:
    """Point of the piece maximizing distance to p; ties go to the smaller parameter.

    Returns (parameter, point, distance).
    """
    if isinstance(piece, Segment):
        candidates = [0.0, 1.0]
    else:
        candidates = [0.0, 1.0]
        v = p - piece.center
        if v.norm() > 0.0:
            t = piece.param_of_angle(v.angle() + math.pi)
            if t is not None:
                candidates.append(t)
    candidates.sort()
    best_t, best_q, best_d = 0.0, piece.point_at(0.0), -1.0
    for t in candidates:
        q = piece.point_at(t)
        d = dist(p, q)
        if d > best_d + 1e-12 * (1.0 + d):
            best_t, best_q, best_d = t, q, d
    return best_t, best_q, best_d


def circle_circle_intersection(d1: Disk, d2: Disk, eps: float = DEFAULT_EPS) -> list[Point]:
    """Intersection points of the two circles; tangency is reported as one point.

    Raises CoincidentCircles when centers and radii agree within eps.
    Always returns at most 2 points for distinct circles.
    """
    c1, c2, r1, r2 = d1.center, d2.center, d1.radius, d2.radius
    d = dist(c1, c2)
    if d <= eps and abs(r1 - r2) <= eps:
        raise CoincidentCircles(f"circles coincide within eps={eps}")
    if d > r1 + r2 + eps:
        return []
    if d < abs(r1 - r2) - eps:
        return []
    if d > eps:
        u = (c2 - c1) * (1.0 / d)
    else:
        u = Point(1.0, 0.0)
    if abs(d - (r1 + r2)) <= eps:
        return [c1 + u * r1]
    if abs(d - abs(r1 - r2)) <= eps:
        sign = 1.0 if r1 >= r2 else -1.0
        return [c1 + u * (sign * r1)]
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    h2 = r1 * r1 - a * a
    h = math.sqrt(max(h2, 0.0))
    base = c1 + u * a
    off = u.perp() * h
    pts = [base + off, base - off]
    assert len(pts) <= 2
    return pts


def _segment_circle_params(seg: Segment, disk: Disk, eps: float) -> list[float]:
    """Parameters in [0,1] where the segment meets the circle boundary."""
    d = seg.p1 - seg.p0
    f = seg.p0 - disk.center
    L = d.norm()
    if L == 0.0:
        return []
    # Line-circle clearance decides tangency robustly.
    dline = abs(cross(d, f)) / L
    tol_t = eps / L
    a = dot(d, d)
    b = 2.0 * dot(f, d)
    c0 = dot(f, f) - disk.radius * disk.radius
    if abs(dline - disk.radius) <= eps:
        t = -b / (2.0 * a)
        return [min(1.0, max(0.0, t))] if -tol_t <= t <= 1.0 + tol_t else []
    disc = b * b - 4.0 * a * c0
    if disc <= 0.0:
        return []
    s = math.sqrt(disc)
    out = []
    for t in ((-b - s) / (2.0 * a), (-b + s) / (2.0 * a)):
        if -tol_t <= t <= 1.0 + tol_t:
            out.append(min(1.0, max(0.0, t)))
    out.sort()
    if len(out) == 2 and abs(out[0] - out[1]) * L <= eps:
        out = out[:1]
    return out


def piece_circle_intersection(piece: Piece, disk: Disk,
                              eps: float = DEFAULT_EPS) -> list[tuple[float, Point]]:
    """Points of the piece on the circle boundary, sorted by parameter.

    Tangential contacts appear once.  Raises OverlapDegenerate when an arc
    piece lies on the circle over a positive-length subarc.
    """
    if isinstance(piece, Segment):
        return [(t, piece.point_at(t)) for t in _segment_circle_params(piece, disk, eps)]
    try:
        pts = circle_circle_intersection(Disk(piece.center, piece.radius), disk, eps)
    except CoincidentCircles:
        raise OverlapDegenerate(0.0, 1.0)
    tol_angle = eps / piece.radius
    hits = []
    for q in pts:
        t = piece.param_of_angle((q - piece.center).angle(), tol_angle)
        if t is not None:
            hits.append((t, piece.point_at(t)))
    hits.sort(key=lambda h: h[0])
    dedup: list[tuple[float, Point]] = []
    for t, q in hits:
        if dedup and dist(dedup[-1][1], q) <= eps:
            continue
        dedup.append((t, q))
    return dedup


def _principal(a: Point, b: Point) -> float:
    return math.atan2(cross(a, b), dot(a, b))


def _arc_var(piece: Arc, p: Point, t0: float, t1: float, depth: int) -> float:
    a = piece.point_at(t0) - p
    b = piece.point_at(t1) - p
    d = _principal(a, b)
    # Accept the principal value once the sub-chord subtends < pi/2 as seen
    # from p and the sub-arc spans at most pi/3; under those two bounds the
    # continuous variation cannot differ from the principal value.
    if abs(d) < 0.5 * math.pi and (t1 - t0) * piece.sweep <= math.pi / 3.0:
        return d
    if depth >= 64:
        raise NumericalInconsistency("argument variation subdivision did not terminate")
    tm = 0.5 * (t0 + t1)
    return _arc_var(piece, p, t0, tm, depth + 1) + _arc_var(piece, p, tm, t1, depth + 1)


def arg_variation(piece: Piece, p: Point, eps: float = DEFAULT_EPS) -> float:
    """Continuous change of angle of (curve point - p) along the piece.

    Raises PointOnCurve when p is within eps of the piece.
    """
    if point_piece_distance(p, piece) <= eps:
        raise PointOnCurve(f"probe {p} lies on the piece within eps={eps}")
    if isinstance(piece, Segment):
        # A segment subtends less than pi from any point off its line, and 0
        # from points on the line outside it, so the principal value is exact.
        return _principal(piece.p0 - p, piece.p1 - p)
    return _arc_var(piece, p, 0.0, 1.0, 0)


def _ccw_span(arc: Arc) -> tuple[float, float]:
    """Point set of the arc as a ccw angular interval (base, base + sweep)."""
    if arc.ccw:
        return normalize_angle(arc.start_angle), arc.sweep
    return normalize_angle(arc.end_angle), arc.sweep


def _angle_interval_overlap(a: Arc, b: Arc, eps: float) -> tuple[float, float] | None:
    """Positive-length overlap of two arcs on one circle, as a param range on `a`."""
    tol = eps / a.radius
    a0, asw = _ccw_span(a)
    b0, bsw = _ccw_span(b)
    best = None
    # b's interval can straddle a's base; test both unwrappings.
    rel = normalize_angle(b0 - a0)
    for start in (rel, rel - TWO_PI):
        lo = max(0.0, start)
        hi = min(asw, start + bsw)
        if hi - lo > tol:
            if best is None or (hi - lo) > (best[1] - best[0]):
                best = (lo, hi)
    if best is None:
        return None
    lo_t = best[0] / asw
    hi_t = best[1] / asw
    if not a.ccw:
        lo_t, hi_t = 1.0 - hi_t, 1.0 - lo_t
    return lo_t, hi_t


def piece_piece_intersection(a: Piece, b: Piece,
                             eps: float = DEFAULT_EPS) -> tuple[list[tuple[float, float, Point]], bool]:
    """Intersections of two pieces: list of (t_a, t_b, point) plus an overlap flag.

    The overlap flag is set when the pieces share a positive-length portion;
    in that case the point list may be empty.
    """
    if a.length() <= 1e-12 or b.length() <= 1e-12:
        return [], False
    if isinstance(a, Segment) and isinstance(b, Segment):
        return _seg_seg(a, b, eps)
    if isinstance(a, Segment) and isinstance(b, Arc):
        pts, flag = _seg_arc(a, b, eps)
        return pts, flag
    if isinstance(a, Arc) and isinstance(b, Segment):
        pts, flag = _seg_arc(b, a, eps)
        return [(ta, tb, q) for (tb, ta, q) in pts], flag
    return _arc_arc(a, b, eps)


def _seg_seg(a: Segment, b: Segment, eps: float):
    da, db = a.p1 - a.p0, b.p1 - b.p0
    denom = cross(da, db)
    La, Lb = da.norm(), db.norm()
    if abs(denom) <= eps * La * Lb / max(La, Lb, 1.0):
        # Parallel: check collinearity by distance between supporting lines.
        gap = abs(cross(da, b.p0 - a.p0)) / La
        if gap > eps:
            return [], False
        ta0 = dot(b.p0 - a.p0, da) / (La * La)
        ta1 = dot(b.p1 - a.p0, da) / (La * La)
        lo, hi = min(ta0, ta1), max(ta0, ta1)
        lo, hi = max(lo, 0.0), min(hi, 1.0)
        if hi - lo > eps / La:
            return [], True
        if abs(hi - lo) <= eps / La and 0.0 <= lo <= 1.0:
            t = 0.5 * (lo + hi)
            tb = dot(a.point_at(t) - b.p0, db) / (Lb * Lb)
            if -eps / Lb <= tb <= 1.0 + eps / Lb:
                return [(t, min(1.0, max(0.0, tb)), a.point_at(t))], False
        return [], False
    r = b.p0 - a.p0
    ta = cross(r, db) / denom
    tb = cross(r, da) / denom
    if -eps / La <= ta <= 1.0 + eps / La and -eps / Lb <= tb <= 1.0 + eps / Lb:
        ta = min(1.0, max(0.0, ta))
        tb = min(1.0, max(0.0, tb))
        return [(ta, tb, a.point_at(ta))], False
    return [], False


def _seg_arc(seg: Segment, arc: Arc, eps: float):
    hits = []
    tol_angle = eps / arc.radius
    for t, q in piece_circle_intersection(seg, Disk(arc.center, arc.radius), eps):
        u = arc.param_of_angle((q - arc.center).angle(), tol_angle)
        if u is not None:
            hits.append((t, u, q))
    return hits, False


def _arc_arc(a: Arc, b: Arc, eps: float):
    try:
        pts = circle_circle_intersection(Disk(a.center, a.radius), Disk(b.center, b.radius), eps)
    except CoincidentCircles:
        ov = _angle_interval_overlap(a, b, eps)
        if ov is not None:
            return [], True
        # Same circle, at most point contact at shared endpoints.
        hits = []
        tol = eps / a.radius
        for t in (0.0, 1.0):
            u = b.param_of_angle(a.angle_at(t), tol)
            if u is not None:
                hits.append((t, u, a.point_at(t)))
        seen: list[tuple[float, float, Point]] = []
        for h in hits:
            if not any(dist(h[2], s[2]) <= eps for s in seen):
                seen.append(h)
        return seen, False
    tol_a = eps / a.radius
    tol_b = eps / b.radius
    hits = []
    for q in pts:
        ta = a.param_of_angle((q - a.center).angle(), tol_a)
        tb = b.param_of_angle((q - b.center).angle(), tol_b)
        if ta is not None and tb is not None:
            hits.append((ta, tb, q))
    return hits, False


def piece_min_distance(a: Piece, b: Piece, eps: float = DEFAULT_EPS) -> float:
    """Minimum distance between two pieces (0 when they intersect or overlap)."""
    pts, overlap = piece_piece_intersection(a, b, eps)
    if pts or overlap:
        return 0.0
    candidates = []
    for t in (0.0, 1.0):
        candidates.append(point_piece_distance(a.point_at(t), b))
        candidates.append(point_piece_distance(b.point_at(t), a))
    # Interior-interior critical pairs: the common normal of a segment/arc pair
    # passes through the arc center, so the segment point nearest the center
    # is one end of it.
    if isinstance(b, Arc):
        _, q = closest_point_on_piece(b.center, a)
        candidates.append(point_piece_distance(q, b))
    if isinstance(a, Arc):
        _, q = closest_point_on_piece(a.center, b)
        candidates.append(point_piece_distance(q, a))
    if isinstance(a, Arc) and isinstance(b, Arc):
        d = dist(a.center, b.center)
        if d > 0.0:
            u = (b.center - a.center) * (1.0 / d)
            for qa in (a.center + u * a.radius, a.center - u * a.radius):
                if a.param_of_angle((qa - a.center).angle()) is not None:
                    candidates.append(point_piece_distance(qa, b))
            for qb in (b.center - u * b.radius, b.center + u * b.radius):
                if b.param_of_angle((qb - b.center).angle()) is not None:
                    candidates.append(point_piece_distance(qb, a))
    return min(candidates)


def piece_bbox(piece: Piece) -> tuple[float, float, float, float]:
    """Tight axis-aligned bounding box (xmin, ymin, xmax, ymax)."""
    if isinstance(piece, Segment):
        return (min(piece.p0.x, piece.p1.x), min(piece.p0.y, piece.p1.y),
                max(piece.p0.x, piece.p1.x), max(piece.p0.y, piece.p1.y))
    xs = [piece.start.x, piece.end.x]
    ys = [piece.start.y, piece.end.y]
    for k, ang in enumerate((0.0, 0.5 * math.pi, math.pi, 1.5 * math.pi)):
        if piece.param_of_angle(ang) is not None:
            q = Point(piece.center.x + piece.radius * math.cos(ang),
                      piece.center.y + piece.radius * math.sin(ang))
            xs.append(q.x)
            ys.append(q.y)
    return min(xs), min(ys), max(xs), max(ys)
