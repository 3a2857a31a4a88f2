"""Inward boundary offsets and corner treatment for pocket toolpaths.

`offset` moves every piece toward the interior: segments translate, arcs
change radius, reflex corners of the input roll into radius-r arcs and
convex corners of the offset are trimmed to their intersection.  `round_corners`
replaces convex corners by tangent fillet arcs and optionally miters concave
rolling arcs into tangent-line pairs, producing paths that pass the
convex-curvature check at the rounding radius.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import kernel as K
from .curve import JordanCurve, turn_angle
from .errors import CornerTooTight, FeatureTooNarrow, PreconditionFailed
from .kernel import DEFAULT_EPS, Arc, Piece, Point, Segment, dist

ANGLE_TOL = 1e-7


class ConcaveMode(Enum):
    ROLL = "roll"
    MITER = "miter"


@dataclass
class ToolpathSpec:
    tool_radius: float
    round_radius: float
    concave_mode: ConcaveMode = ConcaveMode.ROLL

    def __post_init__(self):
        if self.tool_radius <= 0 or self.round_radius <= 0:
            raise ValueError("radii must be positive")


def _offset_piece(piece: Piece, r: float) -> Piece:
    """Move a piece distance r toward the interior side (left of travel)."""
    if isinstance(piece, Segment):
        n = piece.tangent_at(0.0).perp()
        return Segment(piece.p0 + n * r, piece.p1 + n * r)
    if piece.ccw:
        new_r = piece.radius - r
        if new_r <= DEFAULT_EPS:
            raise FeatureTooNarrow(
                f"left-turning arc of radius {piece.radius} cannot offset by {r}",
                pieces=(piece,))
    else:
        new_r = piece.radius + r
        if new_r <= DEFAULT_EPS:
            raise FeatureTooNarrow(
                f"right-turning arc of radius {piece.radius} cannot offset by {r}",
                pieces=(piece,))
    return Arc(piece.center, new_r, piece.start_angle, piece.end_angle, piece.ccw)


def _support_intersections(a: Piece, b: Piece) -> list[Point]:
    """Intersections of the supporting line/circle of two pieces."""
    if isinstance(a, Segment) and isinstance(b, Segment):
        da, db = a.p1 - a.p0, b.p1 - b.p0
        denom = K.cross(da, db)
        if abs(denom) <= 1e-14 * da.norm() * db.norm():
            return []
        t = K.cross(b.p0 - a.p0, db) / denom
        return [a.p0 + da * t]
    if isinstance(a, Segment) or isinstance(b, Segment):
        seg, arc = (a, b) if isinstance(a, Segment) else (b, a)
        d = seg.p1 - seg.p0
        f = seg.p0 - arc.center
        A = K.dot(d, d)
        B = 2.0 * K.dot(f, d)
        C = K.dot(f, f) - arc.radius * arc.radius
        disc = B * B - 4.0 * A * C
        if disc < 0.0:
            return []
        s = math.sqrt(disc)
        return [seg.p0 + d * ((-B - s) / (2 * A)), seg.p0 + d * ((-B + s) / (2 * A))]
    try:
        return K.circle_circle_intersection(K.Disk(a.center, a.radius),
                                            K.Disk(b.center, b.radius))
    except Exception:
        return []


def _param_on_support(piece: Piece, p: Point) -> float:
    """Parameter of p on the piece's support, unclamped for segments."""
    if isinstance(piece, Segment):
        d = piece.p1 - piece.p0
        return K.dot(p - piece.p0, d) / K.dot(d, d)
    u = K.normalize_angle(piece.direction * ((p - piece.center).angle() - piece.start_angle))
    sw = piece.sweep
    if u > sw and u - 2.0 * math.pi > -0.25 * sw:
        # Interpret a slight wrap past the start as a negative parameter.
        u -= 2.0 * math.pi
    return u / sw


def _check_global_clearance(curve: JordanCurve, r: float, eps: float):
    n = len(curve.pieces)
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            d = K.piece_min_distance(curve.pieces[i], curve.pieces[j], eps)
            if d < 2.0 * r - eps:
                raise FeatureTooNarrow(
                    f"pieces {i} and {j} are {d:.6g} apart, need {2 * r:.6g}",
                    pieces=(curve.pieces[i], curve.pieces[j]))


def offset(curve: JordanCurve, r: float, eps: float = DEFAULT_EPS) -> JordanCurve:
    """Inward offset by r > 0 (outward for r < 0, tangent-continuous curves only)."""
    if r == 0.0:
        return curve
    n = len(curve.pieces)
    if r < 0.0:
        for i in range(n):
            if abs(turn_angle(curve, i)) > ANGLE_TOL:
                raise PreconditionFailed(
                    "outward offset supports tangent-continuous curves only")
    else:
        _check_global_clearance(curve, r, eps)
    moved = [_offset_piece(p, r) for p in curve.pieces]
    bounds = [[0.0, 1.0] for _ in range(n)]
    inserts: dict[int, Piece] = {}
    for i in range(n):
        j = (i + 1) % n
        ang = turn_angle(curve, i)
        if abs(ang) <= ANGLE_TOL or dist(moved[i].point_at(1.0), moved[j].point_at(0.0)) <= eps:
            continue
        if ang < 0.0:
            # Reflex corner: roll around the original vertex.
            v = curve.pieces[i].point_at(1.0)
            a0 = (moved[i].point_at(1.0) - v).angle()
            a1 = (moved[j].point_at(0.0) - v).angle()
            inserts[i] = Arc(v, abs(r), a0, a1, ccw=False)
            continue
        # Convex corner of the offset: trim both pieces to their intersection.
        cands = _support_intersections(moved[i], moved[j])
        v = curve.pieces[i].point_at(1.0)
        cands = [q for q in cands if dist(q, v) <= 4.0 * abs(r) + curve.pieces[i].length()]
        if not cands:
            raise FeatureTooNarrow(f"offset pieces at corner {i} do not meet",
                                   pieces=(curve.pieces[i], curve.pieces[j]))
        q = min(cands, key=lambda p: dist(p, v))
        ti = _param_on_support(moved[i], q)
        tj = _param_on_support(moved[j], q)
        if not (-1e-9 <= ti <= 1.0 + 1e-9) or not (-1e-9 <= tj <= 1.0 + 1e-9):
            raise FeatureTooNarrow(f"offset intersection leaves the pieces at corner {i}",
                                   pieces=(curve.pieces[i], curve.pieces[j]))
        bounds[i][1] = min(bounds[i][1], max(0.0, min(1.0, ti)))
        bounds[j][0] = max(bounds[j][0], max(0.0, min(1.0, tj)))
    out: list[Piece] = []
    for i in range(n):
        lo, hi = bounds[i]
        if hi - lo <= 1e-9:
            raise FeatureTooNarrow(f"piece {i} vanishes under offset",
                                   pieces=(curve.pieces[i],))
        piece = moved[i] if (lo <= 0.0 and hi >= 1.0) else moved[i].trimmed(lo, hi)
        out.append(piece)
        if i in inserts:
            out.append(inserts[i])
    try:
        return JordanCurve(out, eps)
    except Exception as exc:
        raise FeatureTooNarrow(f"offset result is not a Jordan curve: {exc}")


def round_corners(curve: JordanCurve, spec: ToolpathSpec,
                  eps: float = DEFAULT_EPS) -> JordanCurve:
    """Replace convex corners by tangent arcs of the rounding radius.

    In MITER mode, concave rolling arcs (right-turning, tangent-continuous,
    sweep < pi) become the two tangent extensions meeting at a reflex vertex.
    """
    rho = spec.round_radius
    n = len(curve.pieces)
    bounds = [[0.0, 1.0] for _ in range(n)]
    fillets: dict[int, Arc] = {}
    for i in range(n):
        ang = turn_angle(curve, i)
        if ang <= ANGLE_TOL:
            continue
        j = (i + 1) % n
        sup_i = _offset_piece(curve.pieces[i], rho)
        sup_j = _offset_piece(curve.pieces[j], rho)
        v = curve.pieces[i].point_at(1.0)
        cands = _support_intersections(sup_i, sup_j)
        if not cands:
            raise CornerTooTight(f"no fillet center of radius {rho} at corner {i}")
        c = min(cands, key=lambda p: dist(p, v))
        ti = _param_on_support(sup_i, c)
        tj = _param_on_support(sup_j, c)
        if not (-1e-9 <= ti <= 1.0 + 1e-9) or not (-1e-9 <= tj <= 1.0 + 1e-9):
            raise CornerTooTight(f"fillet of radius {rho} leaves the pieces at corner {i}")
        q1 = curve.pieces[i].point_at(max(0.0, min(1.0, ti)))
        q2 = curve.pieces[j].point_at(max(0.0, min(1.0, tj)))
        fillets[i] = Arc(c, rho, (q1 - c).angle(), (q2 - c).angle(), ccw=True)
        bounds[i][1] = min(bounds[i][1], max(0.0, min(1.0, ti)))
        bounds[j][0] = max(bounds[j][0], max(0.0, min(1.0, tj)))
    out: list[Piece] = []
    for i in range(n):
        lo, hi = bounds[i]
        if hi - lo <= 1e-9:
            raise CornerTooTight(f"piece {i} vanishes under corner rounding")
        piece = curve.pieces[i] if (lo <= 0.0 and hi >= 1.0) else curve.pieces[i].trimmed(lo, hi)
        out.append(piece)
        if i in fillets:
            out.append(fillets[i])
    if spec.concave_mode is ConcaveMode.MITER:
        out = _miter_pass(out)
    try:
        return JordanCurve(out, eps)
    except Exception as exc:
        raise CornerTooTight(f"rounded result is not a Jordan curve: {exc}")


def _miter_pass(pieces: list[Piece]) -> list[Piece]:
    out: list[Piece] = []
    n = len(pieces)
    for k, piece in enumerate(pieces):
        if not (isinstance(piece, Arc) and not piece.ccw and piece.sweep < math.pi - 1e-6):
            out.append(piece)
            continue
        prev_t = pieces[(k - 1) % n].tangent_at(1.0)
        next_t = pieces[(k + 1) % n].tangent_at(0.0)
        smooth = (abs(K.cross(prev_t, piece.tangent_at(0.0))) <= ANGLE_TOL and
                  abs(K.cross(piece.tangent_at(1.0), next_t)) <= ANGLE_TOL)
        if not smooth:
            out.append(piece)
            continue
        p0, p1 = piece.point_at(0.0), piece.point_at(1.0)
        t0, t1 = piece.tangent_at(0.0), piece.tangent_at(1.0)
        denom = K.cross(t0, t1)
        if abs(denom) <= 1e-12:
            out.append(piece)
            continue
        u = K.cross(p1 - p0, t1) / denom
        m = p0 + t0 * u
        if u <= 0.0 or K.dot(p1 - m, t1) <= 0.0:
            out.append(piece)
            continue
        out.append(Segment(p0, m))
        out.append(Segment(m, p1))
    return out
