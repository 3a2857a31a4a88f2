"""Outer-boundary composition of two curves.

`compose` traces the boundary of the unbounded component of the common
exterior: starting from the globally lowest boundary point it walks each
curve positively and switches curve at every transversal crossing, verifying
each continuation with a winding probe offset to its right.  Corners created
by switching are reflex, which is what makes the composition preserve the
convex-curvature bound (`verify_composition` checks exactly that).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernel as K
from .curvature import check_bounded_convex_curvature
from .curve import JordanCurve, Location, point_location
from .errors import PreconditionFailed, TangentialOverlap
from .kernel import DEFAULT_EPS, Arc, Piece, Point, Segment, dist

PROBE_OFFSET = 1e-6
ANGLE_TOL = 1e-7


@dataclass
class NotJordan:
    """Composition result that is not a single simple closed curve."""
    reason: str

    def to_dict(self):
        return {"not_jordan": self.reason}


def _lowest_point(curve: JordanCurve) -> tuple[float, float, int, float]:
    """(y, x, piece_index, t) of the curve's lowest point, ties to smaller x."""
    best = None
    for i, piece in enumerate(curve.pieces):
        cands = [(0.0, piece.point_at(0.0)), (1.0, piece.point_at(1.0))]
        if isinstance(piece, Arc):
            t = piece.param_of_angle(1.5 * math.pi)
            if t is not None:
                cands.append((t, piece.point_at(t)))
        for t, q in cands:
            key = (q.y, q.x, i, t)
            if best is None or key[:2] < best[:2]:
                best = key
    return best


def _crossings(c1: JordanCurve, c2: JordanCurve, eps: float):
    """All crossing points as (s1, s2, point); raises on overlap, returns
    None on any non-transversal touch."""
    out = []
    for i, p1 in enumerate(c1.pieces):
        for j, p2 in enumerate(c2.pieces):
            pts, overlap = K.piece_piece_intersection(p1, p2, eps)
            if overlap:
                raise TangentialOverlap(
                    f"curves share a positive-length portion near piece pair {(i, j)}")
            for t1, t2, q in pts:
                tg1 = p1.tangent_at(t1)
                tg2 = p2.tangent_at(t2)
                if abs(K.cross(tg1, tg2)) <= ANGLE_TOL:
                    return None
                out.append((i + t1, j + t2, q))
    dedup = []
    for s1, s2, q in sorted(out, key=lambda c: c[0]):
        if any(dist(q, d[2]) <= 10.0 * eps for d in dedup):
            continue
        dedup.append((s1, s2, q))
    return dedup


def _split_params(curve: JordanCurve, params: list[float]) -> list[tuple[float, float, Piece]]:
    """Cut the curve at the global parameters; returns (s_start, s_end, piece) edges."""
    n = len(curve.pieces)
    cuts = sorted(p % n for p in params)
    edges = []
    m = len(cuts)
    for k in range(m):
        s0 = cuts[k]
        s1 = cuts[(k + 1) % m]
        span = (s1 - s0) % n
        if span <= 1e-12:
            span = n if m == 1 else span
        sub = _materialize(curve, s0, span)
        edges.append((s0, (s0 + span) % n, sub))
    return edges


def _materialize(curve: JordanCurve, s0: float, span: float) -> list[Piece]:
    n = len(curve.pieces)
    pieces = []
    s = s0 % n
    remaining = span
    while remaining > 1e-9:
        i = int(math.floor(s)) % n
        t = s - math.floor(s)
        if 1.0 - t <= 1e-12:
            s = float((i + 1) % n)
            continue
        take = min(1.0 - t, remaining)
        piece = curve.pieces[i]
        if t <= 1e-12 and take >= 1.0 - 1e-12:
            pieces.append(piece)
        else:
            pieces.append(piece.trimmed(t, t + take))
        remaining -= take
        s += take
        if s >= n:
            s -= n
    return pieces


def compose(c1: JordanCurve, c2: JordanCurve, eps: float = DEFAULT_EPS):
    """Outer boundary of the unbounded component of the common exterior.

    Returns the composed JordanCurve, an input curve when one contains the
    other, or NotJordan with a reason.  Raises TangentialOverlap when the
    curves share a positive-length portion.
    """
    crossings = _crossings(c1, c2, eps)
    if crossings is None:
        return NotJordan("tangential degeneracy")
    if not crossings:
        probe2 = c2.pieces[0].point_at(0.0)
        probe1 = c1.pieces[0].point_at(0.0)
        if point_location(c1, probe2, eps) is Location.INTERIOR:
            return c1
        if point_location(c2, probe1, eps) is Location.INTERIOR:
            return c2
        return NotJordan("disjoint curves")

    curves = (c1, c2)
    edge_lists = (
        _split_params(c1, [s1 for s1, _, _ in crossings]),
        _split_params(c2, [s2 for _, s2, _ in crossings]),
    )

    def node_of(point: Point) -> int:
        for k, (_, _, q) in enumerate(crossings):
            if dist(point, q) <= 1e-6:
                return k
        return -1

    # Outgoing edge of each curve at each node.
    outgoing: dict[tuple[int, int], int] = {}
    for ci in (0, 1):
        for ei, (s0, s1, sub) in enumerate(edge_lists[ci]):
            node = node_of(sub[0].point_at(0.0))
            outgoing[(ci, node)] = ei

    low1 = _lowest_point(c1)
    low2 = _lowest_point(c2)
    start_curve = 0 if (low1[0], low1[1]) <= (low2[0], low2[1]) else 1
    low = low1 if start_curve == 0 else low2
    s_low = low[2] + low[3]

    def edge_containing(ci: int, s: float) -> int:
        n = len(curves[ci].pieces)
        for ei, (s0, s1, sub) in enumerate(edge_lists[ci]):
            span = (s1 - s0) % n
            if span == 0:
                span = n
            if (s - s0) % n <= span + 1e-12:
                return ei
        raise AssertionError("parameter not covered by edges")

    def right_probe_ok(ci: int, ei: int) -> bool:
        sub = edge_lists[ci][ei][2]
        k = len(sub) // 2
        mid = sub[k].point_at(0.5)
        tangent = sub[k].tangent_at(0.5)
        delta = PROBE_OFFSET
        for _ in range(8):
            p = Point(mid.x + delta * tangent.y, mid.y - delta * tangent.x)
            if curves[0].min_distance(p) > eps and curves[1].min_distance(p) > eps:
                return (point_location(curves[0], p, eps) is Location.EXTERIOR and
                        point_location(curves[1], p, eps) is Location.EXTERIOR)
            delta *= 0.5
        return False

    ci = start_curve
    ei = edge_containing(ci, s_low)
    start = (ci, ei)
    chain: list[Piece] = []
    budget = 2 * (len(edge_lists[0]) + len(edge_lists[1])) + 4
    for _ in range(budget):
        if not right_probe_ok(ci, ei):
            return NotJordan("traversal left the outer boundary")
        sub = edge_lists[ci][ei][2]
        chain.extend(sub)
        end_node = node_of(sub[-1].point_at(1.0))
        if end_node < 0:
            return NotJordan("traversal failure: edge end is not a crossing")
        nxt = (1 - ci, outgoing[(1 - ci, end_node)])
        if nxt == start:
            break
        ci, ei = nxt
    else:
        return NotJordan("traversal did not close")
    try:
        return JordanCurve(chain, eps)
    except Exception as exc:  # validation failure
        return NotJordan(f"composed chain invalid: {exc}")


def verify_composition(c1: JordanCurve, c2: JordanCurve, R: float = 1.0,
                       eps: float = DEFAULT_EPS) -> bool:
    """Does composing two bound-respecting curves keep the bound?

    Executed as a test oracle: both inputs must pass the convex check; the
    result is the checker verdict on the composition.
    """
    if not check_bounded_convex_curvature(c1, R, eps).ok:
        raise PreconditionFailed("first curve fails the convex-curvature check")
    if not check_bounded_convex_curvature(c2, R, eps).ok:
        raise PreconditionFailed("second curve fails the convex-curvature check")
    out = compose(c1, c2, eps)
    if isinstance(out, NotJordan):
        raise PreconditionFailed(f"composition is not a Jordan curve: {out.reason}")
    return check_bounded_convex_curvature(out, R, eps).ok
