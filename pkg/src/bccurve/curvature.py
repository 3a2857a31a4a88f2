"""Curvature-bound checking and violation witnesses.

A positively oriented piecewise curve keeps its convex curvature below 1/R
exactly when every left-turning arc has radius >= R and every junction is
tangent-continuous or reflex (interior angle >= pi).  Right-turning arcs,
segments and reflex corners are unconstrained.  The concave check is the
mirror image.  A short equivalence argument ships in the package docs.

`find_violation_witness` turns a pinched configuration (an interval inside a
unit disk that winds positively around a small disk touching its endpoints)
into a point/disk pair that provably breaks the bound; `verify_witness`
probes the two defining conditions of such a pair.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum

from . import kernel as K
from .curve import (
    CurvePoint,
    JordanCurve,
    Location,
    point_location,
    splice,
    subcurve,
    turn_angle,
    winding_number,
)
from .errors import (
    CoverageInfeasible,
    LocalViolation,
    NumericalInconsistency,
    PreconditionFailed,
)
from .kernel import DEFAULT_EPS, Arc, Disk, Piece, Point, Segment, dist

ANGLE_TOL = 1e-7          # below this a junction counts as tangent-continuous
RADIUS_TOL = 1e-9


class ViolationKind(Enum):
    CONVEX_ARC_TOO_SHARP = "ConvexArcTooSharp"
    CONVEX_CORNER = "ConvexCorner"
    LEMMA4_CONSTRUCTION = "Construction"
    CONCAVE_ARC_TOO_SHARP = "ConcaveArcTooSharp"
    REFLEX_CORNER = "ReflexCorner"


@dataclass
class WitnessDisk:
    """Tangent disk certifying the curvature bound at one boundary point."""
    at: CurvePoint
    U: Disk
    epsilon: float


@dataclass
class ViolationWitness:
    """Point/disk pair certifying a curvature-bound violation."""
    q: CurvePoint
    D2: Disk
    epsilon: float
    kind: ViolationKind

    def to_dict(self):
        return {
            "q": [self.q.coords.x, self.q.coords.y],
            "piece": self.q.piece_index,
            "t": self.q.t,
            "D2": {"c": [self.D2.center.x, self.D2.center.y], "r": self.D2.radius},
            "epsilon": self.epsilon,
            "kind": self.kind.value,
        }


@dataclass
class CurvatureReport:
    ok: bool
    radius_bound: float
    violations: list

    def to_dict(self):
        return {"ok": self.ok, "radius_bound": self.radius_bound,
                "violations": [v.to_dict() for v in self.violations]}


def _arc_turns_left(arc: Arc) -> bool:
    """Left-turning arcs of a positively oriented curve bound the interior
    on the center side."""
    return arc.ccw


def _inward_normal(curve: JordanCurve, i: int, t: float) -> Point:
    """Left normal of the travel direction (interior side for positive
    orientation)."""
    return curve.pieces[i].tangent_at(t).perp()


def _junction_param(cp: CurvePoint, n: int) -> int | None:
    """Index of the junction the point sits on, or None if mid-piece."""
    if cp.t <= 1e-9:
        return cp.piece_index % n
    if cp.t >= 1.0 - 1e-9:
        return (cp.piece_index + 1) % n
    return None


def check_bounded_convex_curvature(curve: JordanCurve, R: float = 1.0,
                                   eps: float = DEFAULT_EPS) -> CurvatureReport:
    """Decide the convex-curvature bound with witness disks for each failure."""
    violations = []
    n = len(curve.pieces)
    for i, piece in enumerate(curve.pieces):
        if isinstance(piece, Arc) and _arc_turns_left(piece) and piece.radius < R - RADIUS_TOL:
            q = curve.point_on(i, 0.5)
            n_in = (piece.center - q.coords).unit()
            D2 = Disk(q.coords + n_in * R, R)
            violations.append(ViolationWitness(
                q=q, D2=D2, epsilon=_witness_epsilon(curve, q, D2, eps),
                kind=ViolationKind.CONVEX_ARC_TOO_SHARP))
    for i in range(n):
        ang = turn_angle(curve, i)
        if ang > ANGLE_TOL:
            j = (i + 1) % n
            q = curve.point_on(j, 0.0)
            b_in = _corner_bisector(curve, i)
            D2 = Disk(q.coords + b_in * R, R)
            violations.append(ViolationWitness(
                q=q, D2=D2, epsilon=_witness_epsilon(curve, q, D2, eps),
                kind=ViolationKind.CONVEX_CORNER))
    return CurvatureReport(ok=not violations, radius_bound=R, violations=violations)


def check_bounded_concave_curvature(curve: JordanCurve, R: float = 1.0,
                                    eps: float = DEFAULT_EPS) -> CurvatureReport:
    """Mirror check: right-turning arcs need radius >= R, reflex corners are
    forbidden, convex corners are fine."""
    violations = []
    n = len(curve.pieces)
    for i, piece in enumerate(curve.pieces):
        if isinstance(piece, Arc) and not _arc_turns_left(piece) and piece.radius < R - RADIUS_TOL:
            q = curve.point_on(i, 0.5)
            # Right-turning arc: exterior is on the center side.
            n_out = (piece.center - q.coords).unit()
            D2 = Disk(q.coords + n_out * R, R)
            violations.append(ViolationWitness(
                q=q, D2=D2, epsilon=0.0, kind=ViolationKind.CONCAVE_ARC_TOO_SHARP))
    for i in range(n):
        ang = turn_angle(curve, i)
        if ang < -ANGLE_TOL:
            j = (i + 1) % n
            q = curve.point_on(j, 0.0)
            b_out = _corner_bisector(curve, i) * -1.0
            D2 = Disk(q.coords + b_out * R, R)
            violations.append(ViolationWitness(
                q=q, D2=D2, epsilon=0.0, kind=ViolationKind.REFLEX_CORNER))
    return CurvatureReport(ok=not violations, radius_bound=R, violations=violations)


def _corner_bisector(curve: JordanCurve, i: int) -> Point:
    """Inward bisector direction at the junction between pieces i and i+1."""
    n = len(curve.pieces)
    n1 = curve.pieces[i % n].tangent_at(1.0).perp()
    n2 = curve.pieces[(i + 1) % n].tangent_at(0.0).perp()
    s = n1 + n2
    if s.norm() <= 1e-12:
        # Full reversal spike: the pieces occupy the backward direction, so
        # the open side is forward along the incoming tangent.
        return curve.pieces[i % n].tangent_at(1.0)
    return s.unit()


def _nonadjacent_clearance(curve: JordanCurve, cp: CurvePoint) -> float:
    """Distance from cp to the nearest feature that is not its own contact:
    non-adjacent pieces plus every junction other than the point itself."""
    n = len(curve.pieces)
    exclude = {cp.piece_index % n, (cp.piece_index - 1) % n, (cp.piece_index + 1) % n}
    best = math.inf
    for i, piece in enumerate(curve.pieces):
        if i in exclude:
            continue
        best = min(best, K.point_piece_distance(cp.coords, piece))
    for j in range(n):
        d = dist(cp.coords, curve.junction(j))
        if d > 1e-9:
            best = min(best, d)
    if not math.isfinite(best):
        best = 0.25 * curve.pieces[cp.piece_index % n].length()
    return best


def _probe_ball_in_disk(curve: JordanCurve, x: Point, U: Disk, epsilon: float,
                        eps: float, samples: int = 32) -> bool:
    """All probes of B(x, epsilon) inside U must classify interior."""
    checked = 0
    for ring in (0.35, 0.65, 0.95):
        r = epsilon * ring
        for k in range(samples):
            ang = 2.0 * math.pi * (k + 0.5 * (ring > 0.5)) / samples
            p = Point(x.x + r * math.cos(ang), x.y + r * math.sin(ang))
            if dist(p, U.center) >= U.radius - 1e-12:
                continue
            if curve.min_distance(p) <= 10.0 * eps:
                return False
            if point_location(curve, p, eps) is not Location.INTERIOR:
                return False
            checked += 1
    return checked > 0


def _witness_epsilon(curve: JordanCurve, q: CurvePoint, D: Disk, eps: float) -> float:
    """A positive radius around q within which the interior stays inside D.

    Search by halving from the local feature scale; 0.0 when no radius down
    to the floor verifies (reported, not raised: the witness caller decides).
    """
    epsilon = 0.5 * min(_nonadjacent_clearance(curve, q),
                        D.radius, curve.pieces[q.piece_index].length())
    for _ in range(40):
        if epsilon < 1e-12:
            return 0.0
        if _ball_interior_within(curve, q.coords, D, epsilon, eps):
            return epsilon
        epsilon *= 0.5
    return 0.0


def _ball_interior_within(curve: JordanCurve, x: Point, D: Disk, epsilon: float,
                          eps: float, samples: int = 40) -> bool:
    """Do all interior-classified probes of B(x, epsilon) lie in closure(D)?"""
    rng = random.Random(12345)
    found = 0
    for _ in range(samples * 4):
        ang = rng.uniform(0.0, 2.0 * math.pi)
        r = epsilon * math.sqrt(rng.uniform(0.0, 1.0))
        p = Point(x.x + r * math.cos(ang), x.y + r * math.sin(ang))
        if curve.min_distance(p) <= 10.0 * eps:
            continue
        try:
            loc = point_location(curve, p, eps)
        except NumericalInconsistency:
            continue
        if loc is Location.INTERIOR:
            found += 1
            if dist(p, D.center) > D.radius + 1e-9:
                return False
        if found >= samples:
            break
    return found > 0


def unit_disk_at(curve: JordanCurve, x: CurvePoint, R: float = 1.0,
                 eps: float = DEFAULT_EPS) -> WitnessDisk:
    """Explicit tangent disk of radius R at x certifying the local bound.

    On a segment or right-turning arc the disk is tangent on the interior
    side; on a left-turning arc of radius >= R it is internally tangent to
    the osculating circle; at a reflex corner it is tangent to the inward
    bisector.  Raises LocalViolation at convex corners and too-sharp arcs.
    """
    n = len(curve.pieces)
    junction = _junction_param(x, n)
    if junction is not None:
        i_prev = (junction - 1) % n
        ang = turn_angle(curve, i_prev)
        if ang > ANGLE_TOL:
            raise LocalViolation(f"convex corner at junction {junction}")
        if abs(ang) <= ANGLE_TOL:
            direction = _inward_normal(curve, junction, 0.0)
            for k in (junction, i_prev):
                piece = curve.pieces[k]
                if isinstance(piece, Arc) and piece.ccw and piece.radius < R - RADIUS_TOL:
                    raise LocalViolation(f"arc {k} radius {piece.radius} below bound {R}")
        else:
            direction = _corner_bisector(curve, i_prev)
    else:
        piece = curve.pieces[x.piece_index]
        if isinstance(piece, Arc) and piece.ccw and piece.radius < R - RADIUS_TOL:
            raise LocalViolation(
                f"arc {x.piece_index} radius {piece.radius} below bound {R}")
        direction = _inward_normal(curve, x.piece_index, x.t)
    U = Disk(x.coords + direction * R, R)
    epsilon = 0.5 * min(_nonadjacent_clearance(curve, x), R)
    for _ in range(40):
        if epsilon < 1e-12:
            raise NumericalInconsistency(f"no verifiable clearance at {x.coords}")
        if _probe_ball_in_disk(curve, x.coords, U, epsilon, eps):
            break
        epsilon *= 0.5
    return WitnessDisk(at=x, U=U, epsilon=epsilon)


def winds_positively(curve: JordanCurve, a: CurvePoint, b: CurvePoint, D: Disk,
                     eps: float = DEFAULT_EPS) -> bool:
    """Does the interval from a to b leave the disk outside the region it
    bounds with the disk's boundary arc?

    True when the closed chain interval + reversed boundary arc has winding 0
    around the disk center (disk outside the region), False on +-1.
    """
    for name, cp in (("a", a), ("b", b)):
        if abs(dist(cp.coords, D.center) - D.radius) > max(eps, 1e-7):
            raise PreconditionFailed(f"{name} not on disk boundary")
    interval = subcurve(curve, a, b, eps)
    _require_interval_clear_of_disk(interval, D, eps)
    th_a = (a.coords - D.center).angle()
    th_b = (b.coords - D.center).angle()
    cap = Arc(D.center, D.radius, th_b, th_a, ccw=False)
    chain = splice(interval, cap, max(eps, 1e-7))
    w = winding_number(chain, D.center, eps)
    if w == 0:
        return True
    if abs(w) == 1:
        return False
    raise NumericalInconsistency(f"unexpected winding {w}")


def _require_interval_clear_of_disk(interval, D: Disk, eps: float):
    tol = max(eps, 1e-7)
    for k, piece in enumerate(interval.pieces):
        _, q = K.closest_point_on_piece(D.center, piece)
        d = dist(q, D.center)
        if d < D.radius - tol:
            raise PreconditionFailed("interval enters the closed disk")
        if d <= D.radius + tol:
            near_start = k == 0 and dist(q, interval.start.coords) <= 1e-6
            near_end = k == len(interval.pieces) - 1 and dist(q, interval.end.coords) <= 1e-6
            if not (near_start or near_end):
                raise PreconditionFailed("interval touches the closed disk between endpoints")


def _cover_radius(pieces: list[Piece], c: Point) -> float:
    return max(K.farthest_point_on_piece(c, piece)[2] for piece in pieces)


def find_violation_witness(curve: JordanCurve, a: CurvePoint, b: CurvePoint,
                           Dr: Disk, Dcontaining: Disk,
                           eps: float = DEFAULT_EPS) -> ViolationWitness:
    """Construct a violation witness from a pinched interval configuration.

    Preconditions: radius(Dr) <= 1; the interval from a to b stays inside the
    open unit disk `Dcontaining`, meets closure(Dr) exactly at a and b, and
    winds positively around Dr.  The witness disk is found by sliding a unit
    disk along a canonical line until it pins the interval; the witness point
    is the smallest-parameter pin.
    """
    if Dr.radius > 1.0 + RADIUS_TOL:
        raise PreconditionFailed("small disk radius exceeds 1")
    if abs(Dcontaining.radius - 1.0) > RADIUS_TOL:
        raise PreconditionFailed("containing disk must have radius 1")
    if a.piece_index == b.piece_index and abs(a.t - b.t) <= 1e-12:
        raise PreconditionFailed("a equals b")
    for name, cp in (("a", a), ("b", b)):
        if abs(dist(cp.coords, Dr.center) - Dr.radius) > max(eps, 1e-7):
            raise PreconditionFailed(f"{name} not on the small disk boundary")
    interval = subcurve(curve, a, b, eps)
    if _cover_radius(interval.pieces, Dcontaining.center) >= Dcontaining.radius:
        raise PreconditionFailed("interval not inside the open containing disk")
    _require_interval_clear_of_disk(interval, Dr, eps)
    if not winds_positively(curve, a, b, Dr, eps):
        raise PreconditionFailed("interval winds negatively around the small disk")

    # Canonical frame: Dr centered at the origin, chord a-b horizontal with a
    # on the right; mirror so the containing center lands at x >= 0.
    shift = Point(-Dr.center.x, -Dr.center.y)
    a0 = a.coords + shift
    b0 = b.coords + shift
    phi = -(a0 - b0).angle()
    cphi, sphi = math.cos(phi), math.sin(phi)

    def fwd(p: Point) -> Point:
        q = p + shift
        return Point(cphi * q.x - sphi * q.y, sphi * q.x + cphi * q.y)

    d_center = fwd(Dcontaining.center)
    mirrored = d_center.x < 0.0
    if mirrored:
        d_center = Point(-d_center.x, d_center.y)

    canon_pieces: list[Piece] = []
    for piece in interval.pieces:
        canon_pieces.append(_map_piece(piece, fwd, phi, mirrored))
    if mirrored:
        canon_pieces = [p.reversed() for p in reversed(canon_pieces)]

    s1, t1 = d_center.x, d_center.y

    def covers(c: Point) -> bool:
        return _cover_radius(canon_pieces, c) <= 1.0

    if covers(Point(0.0, t1)):
        # Case 1: slide down the vertical line to the minimal feasible height.
        lo, hi = t1 - 2.5, t1
        for _ in range(24):
            if not covers(Point(0.0, lo)):
                break
            lo -= 2.0
        else:
            raise CoverageInfeasible("vertical slide found no infeasible bracket")
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if covers(Point(0.0, mid)):
                hi = mid
            else:
                lo = mid
        c2 = Point(0.0, hi)
    else:
        # Case 2: slide right from the axis to the minimal feasible offset.
        if not covers(Point(s1, t1)):
            raise CoverageInfeasible("containing disk fails to cover in canonical frame")
        lo, hi = 0.0, s1
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if covers(Point(mid, t1)):
                hi = mid
            else:
                lo = mid
        c2 = Point(hi, t1)

    contact_tol = 1e-9
    contacts = []
    for k, piece in enumerate(canon_pieces):
        cands = [(0.0,), (1.0,)]
        if isinstance(piece, Arc):
            v = c2 - piece.center
            if v.norm() > 0.0:
                t_far = piece.param_of_angle(v.angle() + math.pi)
                if t_far is not None:
                    cands.append((t_far,))
        for (t,) in cands:
            q = piece.point_at(t)
            if dist(q, c2) >= 1.0 - contact_tol:
                contacts.append((k, t, q))
    if not contacts:
        raise CoverageInfeasible("no contact at the minimal covering disk")
    contacts.sort(key=lambda c: c[0] + c[1])
    k, t, _ = contacts[0]

    # Map the pin back to the original frame via the interval sources.
    if mirrored:
        k = len(interval.pieces) - 1 - k
        t = 1.0 - t
    q_parent = interval.parent_point(k, t)

    inv_center = _unmap_point(c2, shift, phi, mirrored)
    D2 = Disk(inv_center, 1.0)
    epsilon = _witness_epsilon(curve, q_parent, D2, eps)
    return ViolationWitness(q=q_parent, D2=D2, epsilon=epsilon,
                            kind=ViolationKind.LEMMA4_CONSTRUCTION)


def _map_piece(piece: Piece, fwd, phi: float, mirrored: bool) -> Piece:
    if isinstance(piece, Segment):
        p0, p1 = fwd(piece.p0), fwd(piece.p1)
        if mirrored:
            p0, p1 = Point(-p0.x, p0.y), Point(-p1.x, p1.y)
        return Segment(p0, p1)
    c = fwd(piece.center)
    a0 = piece.start_angle + phi
    a1 = piece.end_angle + phi
    ccw = piece.ccw
    if mirrored:
        c = Point(-c.x, c.y)
        a0, a1 = math.pi - a0, math.pi - a1
        ccw = not ccw
    return Arc(c, piece.radius, a0, a1, ccw)


def _unmap_point(p: Point, shift: Point, phi: float, mirrored: bool) -> Point:
    if mirrored:
        p = Point(-p.x, p.y)
    c, s = math.cos(-phi), math.sin(-phi)
    q = Point(c * p.x - s * p.y, s * p.x + c * p.y)
    return q - shift


def verify_witness(curve: JordanCurve, q: CurvePoint, D: Disk,
                   eps: float = DEFAULT_EPS) -> bool:
    """Probe the two conditions making (q, D) a curvature-violation witness:
    (i) near q the interior lies inside D, and (ii) the curve enters D
    arbitrarily close to q (checked down to eta = 1e-6).
    """
    if abs(D.radius - 1.0) > 1e-6:
        raise PreconditionFailed("witness disk must have radius 1")
    if abs(dist(q.coords, D.center) - D.radius) > 1e-6:
        raise PreconditionFailed("witness point not on the disk boundary")
    epsilon = _witness_epsilon(curve, q, D, eps)
    if epsilon <= 0.0:
        return False
    for expo in range(2, 7):
        eta = 10.0 ** (-expo)
        if not _curve_enters_disk_near(curve, q, D, eta):
            return False
    return True


def _curve_enters_disk_near(curve: JordanCurve, q: CurvePoint, D: Disk, eta: float) -> bool:
    """Is there a curve point within eta of q strictly inside D?"""
    n = len(curve.pieces)
    for direction in (1.0, -1.0):
        remaining = eta
        idx = q.piece_index
        t = q.t
        for _ in range(3):
            piece = curve.pieces[idx % n]
            plen = piece.length()
            for frac in (1.0, 0.75, 0.5, 0.25, 0.1, 0.02):
                dt = direction * (remaining * frac) / plen
                tt = t + dt
                if 0.0 <= tt <= 1.0:
                    p = piece.point_at(tt)
                    if dist(p, q.coords) < eta and dist(p, D.center) < D.radius - 1e-13:
                        return True
            # Continue into the neighbor piece with the leftover arc length.
            if direction > 0:
                consumed = (1.0 - t) * plen
                idx, t = (idx + 1) % n, 0.0
            else:
                consumed = t * plen
                idx, t = (idx - 1) % n, 1.0
            remaining -= consumed
            if remaining <= 0.0:
                break
    return False
