"""Closed piecewise arc/segment Jordan curves.

A curve is an ordered head-to-tail chain of directed pieces.  Validation
checks closure, nonzero piece lengths and simplicity (all-pairs piece
intersection; fine at desk scale).  Point classification is winding-number
based, built on the kernel's argument variation.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from . import kernel as K
from .errors import (
    CurveInsideDisk,
    DegenerateCurve,
    EndpointMismatch,
    IdenticalEndpoints,
    InvalidCurve,
    NumericalInconsistency,
    PointOnCurve,
    SelfIntersection,
    TangentialCrossing,
)
from .kernel import DEFAULT_EPS, TWO_PI, Arc, Disk, Piece, Point, Segment, dist


class Location(enum.Enum):
    INTERIOR = "interior"
    EXTERIOR = "exterior"
    BOUNDARY = "boundary"


class Orientation(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class CurvePoint:
    """A point on a curve addressed as (piece index, parameter) plus coordinates."""
    piece_index: int
    t: float
    coords: Point

    @property
    def s(self) -> float:
        """Global parameter: piece_index + t."""
        return self.piece_index + self.t


@dataclass
class ValidationReport:
    ok: bool = True
    closure_gaps: list = field(default_factory=list)      # (piece_index, gap)
    self_intersections: list = field(default_factory=list)  # (i, j, Point)
    zero_length: list = field(default_factory=list)       # piece indices
    auto_reversed: bool = False

    def __str__(self):
        if self.ok:
            return "ok"
        parts = []
        if self.closure_gaps:
            parts.append(f"closure gaps at {[(i, round(g, 12)) for i, g in self.closure_gaps]}")
        if self.self_intersections:
            locs = [(i, j, (round(p.x, 6), round(p.y, 6))) for i, j, p in self.self_intersections[:8]]
            parts.append(f"self-intersections {locs}")
        if self.zero_length:
            parts.append(f"zero-length pieces {self.zero_length}")
        return "; ".join(parts)

    def to_dict(self):
        return {
            "ok": self.ok,
            "closure_gaps": [[i, g] for i, g in self.closure_gaps],
            "self_intersections": [[i, j, [p.x, p.y]] for i, j, p in self.self_intersections],
            "zero_length": list(self.zero_length),
            "auto_reversed": self.auto_reversed,
        }


class JordanCurve:
    """Immutable closed chain of pieces.  Construction validates by default."""

    def __init__(self, pieces, eps: float = DEFAULT_EPS, validated: bool = False):
        self.pieces: tuple[Piece, ...] = tuple(pieces)
        self.eps = eps
        self._orientation: Orientation | None = None
        if not validated:
            report = validate(self, eps)
            if not report.ok:
                raise InvalidCurve(report)

    def __len__(self):
        return len(self.pieces)

    def point_on(self, piece_index: int, t: float) -> CurvePoint:
        piece_index %= len(self.pieces)
        return CurvePoint(piece_index, t, self.pieces[piece_index].point_at(t))

    def point_at_s(self, s: float) -> CurvePoint:
        n = len(self.pieces)
        s = math.fmod(s, n)
        if s < 0:
            s += n
        i = min(int(s), n - 1)
        return self.point_on(i, s - i)

    def junction(self, i: int) -> Point:
        return self.pieces[i % len(self.pieces)].start

    def min_distance(self, p: Point) -> float:
        return min(K.point_piece_distance(p, piece) for piece in self.pieces)

    def locate(self, p: Point) -> CurvePoint:
        """Nearest curve point to p."""
        best = None
        for i, piece in enumerate(self.pieces):
            t, q = K.closest_point_on_piece(p, piece)
            d = dist(p, q)
            if best is None or d < best[0]:
                best = (d, i, t, q)
        _, i, t, q = best
        return CurvePoint(i, t, q)

    def bbox(self) -> tuple[float, float, float, float]:
        boxes = [K.piece_bbox(piece) for piece in self.pieces]
        return (min(b[0] for b in boxes), min(b[1] for b in boxes),
                max(b[2] for b in boxes), max(b[3] for b in boxes))

    def bounding_radius(self) -> float:
        x0, y0, x1, y1 = self.bbox()
        return 0.5 * math.hypot(x1 - x0, y1 - y0)

    def length(self) -> float:
        return sum(p.length() for p in self.pieces)

    def reversed(self) -> "JordanCurve":
        rev = [p.reversed() for p in reversed(self.pieces)]
        out = JordanCurve(rev, self.eps, validated=True)
        if self._orientation is not None:
            out._orientation = (Orientation.NEGATIVE if self._orientation is Orientation.POSITIVE
                                else Orientation.POSITIVE)
        return out

    @property
    def orientation_cached(self) -> Orientation | None:
        return self._orientation


def validate(curve: JordanCurve, eps: float = DEFAULT_EPS) -> ValidationReport:
    """Closure, nonzero length and simplicity checks; ok iff no findings."""
    report = ValidationReport()
    pieces = curve.pieces
    n = len(pieces)
    if n == 0:
        report.ok = False
        report.closure_gaps.append((0, math.inf))
        return report
    for i, piece in enumerate(pieces):
        if piece.length() <= eps:
            report.zero_length.append(i)
        if isinstance(piece, Segment) and not (piece.p0.is_finite() and piece.p1.is_finite()):
            report.zero_length.append(i)
    for i, piece in enumerate(pieces):
        gap = dist(piece.end, pieces[(i + 1) % n].start)
        if gap > eps:
            report.closure_gaps.append((i, gap))
    # Two junctions at one point means the traversal visits it twice.
    if n >= 2:
        for i in range(n):
            for j in range(i + 1, n):
                if dist(pieces[i].start, pieces[j].start) <= eps:
                    report.self_intersections.append((i, j, pieces[i].start))
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = (j == i + 1) or (i == 0 and j == n - 1)
            if n == 1:
                break
            if n == 2:
                adjacent = True
            pts, overlap = K.piece_piece_intersection(pieces[i], pieces[j], eps)
            if overlap:
                report.self_intersections.append((i, j, pieces[i].point_at(0.5)))
                continue
            if not adjacent:
                for _, _, q in pts:
                    report.self_intersections.append((i, j, q))
                continue
            junctions = [pieces[i].end if j == i + 1 else pieces[j].end]
            if n == 2:
                junctions = [pieces[i].end, pieces[i].start]
            for _, _, q in pts:
                if not any(dist(q, jp) <= 2.0 * eps for jp in junctions):
                    report.self_intersections.append((i, j, q))
    report.ok = not (report.closure_gaps or report.self_intersections or report.zero_length)
    return report


def winding_number(curve: JordanCurve, p: Point, eps: float = DEFAULT_EPS) -> int:
    """Sum of per-piece argument variations over 2*pi, rounded to an integer.

    Raises PointOnCurve when p lies on the curve, NumericalInconsistency when
    the rounding residue exceeds a quarter turn.
    """
    if curve.min_distance(p) <= eps:
        raise PointOnCurve(f"probe {p} on curve")
    total = 0.0
    for piece in curve.pieces:
        total += K.arg_variation(piece, p, eps)
    w = total / TWO_PI
    r = round(w)
    if abs(w - r) >= 0.25:
        raise NumericalInconsistency(f"winding residue {w - r:.3f} too large at {p}")
    return int(r)


def point_location(curve: JordanCurve, p: Point, eps: float = DEFAULT_EPS) -> Location:
    if curve.min_distance(p) <= eps:
        return Location.BOUNDARY
    return Location.INTERIOR if winding_number(curve, p, eps) != 0 else Location.EXTERIOR


def orientation(curve: JordanCurve, eps: float = DEFAULT_EPS) -> Orientation:
    """Positive iff the winding number at an interior probe is +1.

    The probe starts at the midpoint of the longest piece and steps along the
    normal with decreasing step until classification succeeds.
    """
    if curve._orientation is not None:
        return curve._orientation
    longest = max(range(len(curve.pieces)), key=lambda i: curve.pieces[i].length())
    piece = curve.pieces[longest]
    mid = piece.point_at(0.5)
    normal = piece.tangent_at(0.5).perp()
    step = piece.length() / 8.0
    for _ in range(40):
        for sign in (1.0, -1.0):
            probe = mid + normal * (sign * step)
            if curve.min_distance(probe) <= max(eps, 0.25 * step):
                continue
            try:
                w = winding_number(curve, probe, eps)
            except (PointOnCurve, NumericalInconsistency):
                continue
            if w == 1:
                curve._orientation = Orientation.POSITIVE
                return curve._orientation
            if w == -1:
                curve._orientation = Orientation.NEGATIVE
                return curve._orientation
        step *= 0.5
    raise DegenerateCurve("no interior probe classified after 40 halvings")


@dataclass
class CurveInterval:
    """Connected portion of a curve from `start` to `end` along positive traversal.

    ``sources[k]`` records (parent_piece_index, t_lo, t_hi) for pieces[k].
    """
    start: CurvePoint
    end: CurvePoint
    pieces: list
    sources: list

    def to_parent(self, k: int, u: float) -> tuple[int, float]:
        i, lo, hi = self.sources[k]
        return i, lo + u * (hi - lo)

    def parent_point(self, k: int, u: float) -> CurvePoint:
        i, t = self.to_parent(k, u)
        return CurvePoint(i, t, self.pieces[k].point_at(u))

    def farthest_from(self, p: Point) -> tuple[CurvePoint, float]:
        best = None
        for k, piece in enumerate(self.pieces):
            u, q, d = K.farthest_point_on_piece(p, piece)
            if best is None or d > best[1] + 1e-12:
                best = (self.parent_point(k, u), d)
        return best

    def length(self) -> float:
        return sum(p.length() for p in self.pieces)


PARAM_TOL = 1e-9


def _split_piece(piece: Piece, lo: float, hi: float) -> Piece:
    if lo <= PARAM_TOL and hi >= 1.0 - PARAM_TOL:
        return piece
    return piece.trimmed(lo, hi)


def subcurve(curve: JordanCurve, a: CurvePoint, b: CurvePoint,
             eps: float = DEFAULT_EPS) -> CurveInterval:
    """Closed interval of the curve from a to b along positive traversal.

    Pieces are split at a and b as needed.  Raises IdenticalEndpoints when
    a and b coincide in parameter and coordinates.
    """
    n = len(curve.pieces)
    sa, sb = a.s % n, b.s % n
    if abs(sa - sb) <= PARAM_TOL or abs(abs(sa - sb) - n) <= PARAM_TOL:
        if dist(a.coords, b.coords) <= eps:
            raise IdenticalEndpoints("interval endpoints coincide")
    pieces: list[Piece] = []
    sources: list[tuple[int, float, float]] = []

    def emit(idx: int, lo: float, hi: float):
        if hi - lo <= PARAM_TOL:
            return
        pieces.append(_split_piece(curve.pieces[idx], lo, hi))
        sources.append((idx, lo, hi))

    ia, ta = a.piece_index % n, a.t
    ib, tb = b.piece_index % n, b.t
    if ia == ib and ta < tb - PARAM_TOL:
        emit(ia, ta, tb)
    else:
        emit(ia, ta, 1.0)
        i = (ia + 1) % n
        while i != ib:
            emit(i, 0.0, 1.0)
            i = (i + 1) % n
        emit(ib, 0.0, tb)
    if not pieces:
        raise IdenticalEndpoints("interval endpoints coincide")
    return CurveInterval(start=a, end=b, pieces=pieces, sources=sources)


def splice(interval: CurveInterval, cap: Arc, eps: float = DEFAULT_EPS) -> JordanCurve:
    """Jordan curve formed by the interval followed by the cap arc."""
    if dist(cap.start, interval.end.coords) > eps or dist(cap.end, interval.start.coords) > eps:
        raise EndpointMismatch(
            f"cap runs {cap.start}->{cap.end}, interval runs "
            f"{interval.start.coords}->{interval.end.coords}")
    chain = list(interval.pieces) + [cap]
    probe = JordanCurve(chain, eps, validated=True)
    report = validate(probe, eps)
    if report.self_intersections:
        raise SelfIntersection(str(report))
    if not report.ok:
        raise EndpointMismatch(str(report))
    return probe


@dataclass
class LobeSplit:
    """The two Jordan lobes a small disk is cut into by the curve through its center.

    `inner` coincides with the curve interior near the center point, `outer`
    with the exterior.  The disk minus the curve portion is the disjoint union
    of the interiors of the two lobes.
    """
    a: CurvePoint
    b: CurvePoint
    inner: JordanCurve
    outer: JordanCurve


def _crossing_is_transversal(piece: Piece, t: float, center: Point, angle_tol: float = 1e-6) -> bool:
    q = piece.point_at(t)
    radial = (q - center)
    if radial.norm() == 0.0:
        return False
    tangent = piece.tangent_at(t)
    # Angle between curve tangent and circle tangent at the crossing.
    return abs(K.dot(radial.unit(), tangent)) > angle_tol


def _scan_for_crossing(curve: JordanCurve, disk: Disk, start: CurvePoint, forward: bool,
                       eps: float) -> CurvePoint:
    """First boundary crossing of `disk` when walking from `start`."""
    n = len(curve.pieces)
    s0 = start.s % n
    cands = []
    for idx, piece in enumerate(curve.pieces):
        for t, q in K.piece_circle_intersection(piece, disk, eps):
            s = idx + t
            rel = (s - s0) % n if forward else (s0 - s) % n
            if rel <= PARAM_TOL or rel >= n - PARAM_TOL:
                continue
            cands.append((rel, idx, t, q))
    if not cands:
        raise CurveInsideDisk("no boundary crossing found")
    rel, idx, t, q = min(cands, key=lambda c: c[0])
    if not _crossing_is_transversal(curve.pieces[idx], t, disk.center):
        raise TangentialCrossing(f"curve touches disk boundary non-transversally at {q}")
    return CurvePoint(idx, t, q)


def lobe_decomposition(curve: JordanCurve, p: CurvePoint, U: Disk,
                       eps: float = DEFAULT_EPS) -> LobeSplit:
    """Split the neighborhood disk U centered at a curve point into two lobes.

    Walking from p, `a` is the first disk-boundary crossing backwards and `b`
    forwards; the lobes are the curve portion closed off by the two arcs of
    the disk boundary.
    """
    if dist(U.center, p.coords) > eps:
        raise ValueError("disk must be centered at the curve point")
    far = max(K.farthest_point_on_piece(U.center, piece)[2] for piece in curve.pieces)
    if far < U.radius:
        raise CurveInsideDisk("curve contained in disk")
    b = _scan_for_crossing(curve, U, p, forward=True, eps=eps)
    a = _scan_for_crossing(curve, U, p, forward=False, eps=eps)
    mid = subcurve(curve, a, b, eps)
    th_a = (a.coords - U.center).angle()
    th_b = (b.coords - U.center).angle()
    plus_cap = Arc(U.center, U.radius, th_b, th_a, ccw=True)
    minus_cap = Arc(U.center, U.radius, th_b, th_a, ccw=False)
    inner = splice(mid, plus_cap, eps)
    outer = splice(mid, minus_cap, eps)
    return LobeSplit(a=a, b=b, inner=inner, outer=outer)


def turn_angle(curve: JordanCurve, i: int) -> float:
    """Signed tangent turn at the junction between pieces i and i+1, in (-pi, pi].

    Positive = left (convex for a positively oriented curve), negative = right
    (reflex), zero = tangent-continuous.
    """
    n = len(curve.pieces)
    t_out = curve.pieces[i % n].tangent_at(1.0)
    t_in = curve.pieces[(i + 1) % n].tangent_at(0.0)
    ang = math.atan2(K.cross(t_out, t_in), K.dot(t_out, t_in))
    if ang <= -math.pi + 1e-15:
        ang = math.pi
    return ang


def transform_curve(curve: JordanCurve, fn, validated: bool = True) -> JordanCurve:
    """Apply a rigid/similarity point map to every piece.

    fn must be given as (point_map, angle_offset, scale, mirror) to keep arcs
    exact; use the helpers below instead of calling this directly.
    """
    point_map, angle_offset, scale, mirror = fn
    out = []
    for piece in curve.pieces:
        out.append(_transform_piece(piece, point_map, angle_offset, scale, mirror))
    return JordanCurve(out, curve.eps, validated=validated)


def _transform_piece(piece: Piece, point_map, angle_offset: float, scale: float, mirror: bool):
    if isinstance(piece, Segment):
        return Segment(point_map(piece.p0), point_map(piece.p1))
    c = point_map(piece.center)
    if mirror:
        a0 = math.pi - piece.start_angle + angle_offset
        a1 = math.pi - piece.end_angle + angle_offset
        return Arc(c, piece.radius * scale, a0, a1, not piece.ccw)
    return Arc(c, piece.radius * scale, piece.start_angle + angle_offset,
               piece.end_angle + angle_offset, piece.ccw)


def translated(curve: JordanCurve, v: Point) -> JordanCurve:
    return transform_curve(curve, (lambda p: p + v, 0.0, 1.0, False))


def rotated(curve: JordanCurve, angle: float, about: Point = Point(0.0, 0.0)) -> JordanCurve:
    ca, sa = math.cos(angle), math.sin(angle)

    def rot(p: Point) -> Point:
        q = p - about
        return Point(about.x + ca * q.x - sa * q.y, about.y + sa * q.x + ca * q.y)

    return transform_curve(curve, (rot, angle, 1.0, False))


def scaled(curve: JordanCurve, s: float, about: Point = Point(0.0, 0.0)) -> JordanCurve:
    if s <= 0.0:
        raise ValueError("scale must be positive")

    def sc(p: Point) -> Point:
        return Point(about.x + s * (p.x - about.x), about.y + s * (p.y - about.y))

    return transform_curve(curve, (sc, 0.0, s, False))


def mirrored_x(curve: JordanCurve) -> JordanCurve:
    """Reflect across the y-axis.  Note: this reverses orientation."""
    return transform_curve(curve, (lambda p: Point(-p.x, p.y), 0.0, 1.0, True))
