"""Clearance, maximal disks and the certified unit-disk search.

`find_unit_disk` runs the constructive chain: grow a maximal tangent disk at
a boundary point, and while it stays below the target radius, cut the region
down to the curve interval beyond the disk, jump to the interval's farthest
point and grow again.  Every step deposits a pairwise-disjoint bookkeeping
disk whose area is charged against the fixed interior area, which bounds the
iteration count; the recorded steps form a machine-checkable certificate.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from . import kernel as K
from .curvature import check_bounded_convex_curvature, find_violation_witness, unit_disk_at
from .curve import (
    CurveInterval,
    CurvePoint,
    JordanCurve,
    Location,
    point_location,
    splice,
    subcurve,
    winding_number,
)
from .errors import (
    BadTangentData,
    CurvatureViolationDetected,
    InvalidCurve,
    IterationBudgetExceeded,
    NumericalInconsistency,
)
from .kernel import DEFAULT_EPS, Arc, Disk, Point, Segment, dist

EPS_CONTACT = 1e-7  # contact detection; coarser than eps, bisection limited


def clearance(curve: JordanCurve, x: Point, eps: float = DEFAULT_EPS) -> float:
    """Radius of the largest disk centered at x inside the interior; 0 outside."""
    d = curve.min_distance(x)
    if d <= eps:
        return d if _interior_or_boundary(curve, x, eps) else 0.0
    if winding_number(curve, x, eps) == 0:
        return 0.0
    return d


def _interior_or_boundary(curve: JordanCurve, x: Point, eps: float) -> bool:
    return point_location(curve, x, eps) is not Location.EXTERIOR


def interior_area(curve: JordanCurve) -> float:
    """Area of the interior via the piecewise line-integral formula.

    Positive for positive orientation.
    """
    total = 0.0
    for piece in curve.pieces:
        if isinstance(piece, Segment):
            total += 0.5 * (piece.p0.x * piece.p1.y - piece.p1.x * piece.p0.y)
        else:
            sigma = piece.direction * piece.sweep
            p0, p1 = piece.start, piece.end
            total += 0.5 * sigma * piece.radius * piece.radius
            total += 0.5 * (piece.center.x * (p1.y - p0.y) - piece.center.y * (p1.x - p0.x))
    return total


@dataclass
class InscribedDisk:
    disk: Disk
    contacts: list


def max_inscribed_disk(curve: JordanCurve, eps: float = DEFAULT_EPS,
                       precision: float = 1e-9) -> InscribedDisk:
    """Largest disk inside the curve: global quadtree search plus local refine.

    The quadtree ranks cells by clearance(center) + half-diagonal, an upper
    bound on any clearance inside the cell (clearance is 1-Lipschitz), and
    runs at coarse precision so flat clearance ridges cannot blow up the cell
    count.  An 8-direction compass descent then refines the winner to
    `precision`.  Contacts are the boundary points within EPS_CONTACT of the
    final radius.
    """
    x0, y0, x1, y1 = curve.bbox()
    cx, cy = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
    half = 0.5 * max(x1 - x0, y1 - y0)
    coarse = max(1e-3, 2e-3 * half)

    def clear(px, py):
        return clearance(curve, Point(px, py), eps)

    best_c = clear(cx, cy)
    best = (cx, cy)
    heap = [(-(best_c + half * math.sqrt(2.0)), cx, cy, half)]
    while heap:
        neg_bound, px, py, h = heapq.heappop(heap)
        if -neg_bound <= best_c + coarse:
            break
        h2 = 0.5 * h
        for dx in (-h2, h2):
            for dy in (-h2, h2):
                qx, qy = px + dx, py + dy
                c = clear(qx, qy)
                if c > best_c:
                    best_c, best = c, (qx, qy)
                b = c + h2 * math.sqrt(2.0)
                if b > best_c + coarse:
                    heapq.heappush(heap, (-b, qx, qy, h2))
    if best_c <= 0.0:
        raise InvalidCurve("no interior point found for inscribed disk")
    # Compass refinement: halve the step whenever no direction improves.
    px, py = best
    step = 2.0 * coarse
    dirs = [(math.cos(k * math.pi / 4.0), math.sin(k * math.pi / 4.0)) for k in range(8)]
    while step > precision:
        moved = False
        for dx, dy in dirs:
            c = clear(px + step * dx, py + step * dy)
            if c > best_c:
                best_c, px, py = c, px + step * dx, py + step * dy
                moved = True
        if not moved:
            step *= 0.5
    best_pt = Point(px, py)
    contacts = _contact_points(curve, best_pt, best_c)
    return InscribedDisk(disk=Disk(best_pt, best_c), contacts=contacts)


def _contact_points(curve: JordanCurve, center: Point, radius: float,
                    tol: float = EPS_CONTACT) -> list:
    contacts = []
    for i, piece in enumerate(curve.pieces):
        t, q = K.closest_point_on_piece(center, piece)
        if dist(q, center) <= radius + tol:
            cp = CurvePoint(i, t, q)
            if not any(dist(q, c.coords) <= 1e-6 for c in contacts):
                contacts.append(cp)
    return contacts


def max_tangent_disk(region: JordanCurve, z: CurvePoint, Uz: Disk,
                     eps: float = DEFAULT_EPS) -> tuple[Disk, list]:
    """Largest disk inside the region, tangent to Uz at z from inside.

    The center runs along the inward normal ray at z; the one-parameter
    family is nested, so containment is decided by bisection.  Returns the
    disk and its boundary contacts (z always included; at least one more,
    otherwise the growth was not maximal and we report an inconsistency).
    """
    if K.point_piece_distance(z.coords, region.pieces[z.piece_index % len(region.pieces)]) > 1e-7:
        raise BadTangentData("anchor point is not on the region boundary")
    if abs(dist(z.coords, Uz.center) - Uz.radius) > 1e-7:
        raise BadTangentData("anchor point is not on the tangent disk boundary")
    n_in = (Uz.center - z.coords).unit()

    def contained(s: float) -> bool:
        # Slack well below eps so the grown disk never pokes past the
        # boundary-classification tolerance.
        c = Point(z.coords.x + s * n_in.x, z.coords.y + s * n_in.y)
        if region.min_distance(c) < s - 1e-12:
            return False
        try:
            return winding_number(region, c, eps) != 0
        except Exception:
            return False

    lo = 1e-6 * Uz.radius
    shrink = 0
    while not contained(lo):
        lo *= 0.25
        shrink += 1
        if shrink > 20:
            raise BadTangentData("no tangent disk fits at the anchor point")
    hi = max(4.0 * lo, Uz.radius)
    grow = 0
    while contained(hi):
        hi *= 2.0
        grow += 1
        if grow > 60:
            raise NumericalInconsistency("tangent disk growth did not stop")
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if contained(mid):
            lo = mid
        else:
            hi = mid
    s = lo
    center = Point(z.coords.x + s * n_in.x, z.coords.y + s * n_in.y)
    disk = Disk(center, s)
    contacts = _contact_points(region, center, s)
    others = [c for c in contacts if dist(c.coords, z.coords) > 1e-6]
    if not others:
        raise NumericalInconsistency(
            "tangent disk touches the region only at its anchor point")
    return disk, contacts


@dataclass
class ChainStep:
    """One step of the unit-disk chain.

    `z`/`Uz` anchor the tangent disk `D` grown at this step; `x`, `y` bound
    the curve interval selected beyond `D` (absent on the terminal step);
    `E` is the bookkeeping disk deposited when the step was created (absent
    at step 0) and `eta2` the radius margin of the previous disk.
    """
    n: int
    z: CurvePoint
    Uz: Disk
    D: Disk
    x: CurvePoint | None = None
    y: CurvePoint | None = None
    E: Disk | None = None
    eta2: float | None = None

    def to_dict(self):
        def pt(p):
            return [p.coords.x, p.coords.y] if p is not None else None

        def dk(d):
            return {"c": [d.center.x, d.center.y], "r": d.radius} if d is not None else None

        return {"n": self.n, "z": pt(self.z), "Uz": dk(self.Uz), "D": dk(self.D),
                "x": pt(self.x), "y": pt(self.y), "E": dk(self.E), "eta2": self.eta2}


@dataclass
class DiskChainCertificate:
    steps: list
    result: Disk | None
    area_budget: float
    area_consumed: float = 0.0

    def to_dict(self):
        res = None
        if self.result is not None:
            res = {"c": [self.result.center.x, self.result.center.y], "r": self.result.radius}
        return {"steps": [s.to_dict() for s in self.steps], "result": res,
                "area_budget": self.area_budget, "area_consumed": self.area_consumed}


HARD_ITERATION_CAP = 10 ** 6


def find_unit_disk(curve: JordanCurve, R: float = 1.0,
                   seed: CurvePoint | None = None,
                   eps: float = DEFAULT_EPS) -> DiskChainCertificate:
    """Locate a disk of radius R inside a curve with bounded convex curvature.

    Raises CurvatureViolationDetected when the checker (or the chain itself)
    uncovers a violation, IterationBudgetExceeded when the area accounting
    is exhausted (a tolerance bug by construction: the chain cannot fail on
    a genuinely bounded curve).
    """
    report = check_bounded_convex_curvature(curve, R, eps)
    if not report.ok:
        raise CurvatureViolationDetected(report.violations[0])
    budget = interior_area(curve)
    cert = DiskChainCertificate(steps=[], result=None, area_budget=budget)

    z = seed if seed is not None else curve.point_on(0, 0.5)
    witness = unit_disk_at(curve, z, R, eps)
    Dn, contacts = max_tangent_disk(curve, z, witness.U, eps)
    cert.steps.append(ChainStep(n=0, z=z, Uz=witness.U, D=Dn))

    prev_interval: tuple[float, float] | None = None
    min_E = math.inf
    n_pieces = len(curve.pieces)

    for iteration in range(HARD_ITERATION_CAP):
        step = cert.steps[-1]
        # Stop threshold below eps: the radius-R disk cotangent inside Dn then
        # overshoots the region by under 1e-9 and samples still classify as
        # boundary.
        if Dn.radius >= R - 9e-10:
            n_dir = (Dn.center - step.z.coords).unit()
            cert.result = Disk(Point(step.z.coords.x + R * n_dir.x,
                                     step.z.coords.y + R * n_dir.y), R)
            return cert

        x_cp, y_cp, z_next, far_dist = _select_interval(
            curve, contacts, Dn, prev_interval, n_pieces)
        step.x, step.y = x_cp, y_cp
        if far_dist < R:
            witness_v = find_violation_witness(
                curve, x_cp, y_cp, Dn, Disk(Dn.center, R), eps)
            raise CurvatureViolationDetected(
                witness_v, "interval beyond the tangent disk fits in a unit disk")

        eta2 = R - Dn.radius
        interval = subcurve(curve, x_cp, y_cp, eps)
        th_y = (y_cp.coords - Dn.center).angle()
        th_x = (x_cp.coords - Dn.center).angle()
        cap = Arc(Dn.center, Dn.radius, th_y, th_x, ccw=True)
        region = splice(interval, cap, max(eps, 1e-7))

        z = z_next
        witness = unit_disk_at(curve, z, R, eps)
        z_region = _interval_point(interval, z)
        Dn, region_contacts = max_tangent_disk(region, z_region, witness.U, eps)
        contacts = _contacts_to_parent(interval, region_contacts, curve)
        if len(contacts) < 2:
            raise NumericalInconsistency("tangent disk has fewer than two curve contacts")

        rho = min(Dn.radius, 0.5 * eta2)
        n_dir = (witness.U.center - z.coords).unit()
        E = Disk(Point(z.coords.x + rho * n_dir.x, z.coords.y + rho * n_dir.y), rho)
        min_E = min(min_E, rho)
        cert.area_consumed += math.pi * rho * rho
        cert.steps.append(ChainStep(n=iteration + 1, z=z, Uz=witness.U, D=Dn,
                                    E=E, eta2=eta2))
        prev_interval = (x_cp.s % n_pieces, y_cp.s % n_pieces)

        if cert.area_consumed > budget + 1e-6:
            raise IterationBudgetExceeded(
                f"consumed {cert.area_consumed} of {budget} after {iteration + 1} steps")
        if min_E > 0 and iteration + 2 > budget / (math.pi * min_E * min_E) + 8:
            raise IterationBudgetExceeded(
                f"step count exceeded the area budget at step {iteration + 1}")
    raise IterationBudgetExceeded("hard iteration cap reached")


def _interval_point(interval: CurveInterval, parent: CurvePoint) -> CurvePoint:
    """Translate a parent-curve point to interval-chain indexing."""
    for k, (idx, lo, hi) in enumerate(interval.sources):
        if idx == parent.piece_index and lo - 1e-9 <= parent.t <= hi + 1e-9:
            span = hi - lo
            u = 0.0 if span <= 0 else (parent.t - lo) / span
            u = min(1.0, max(0.0, u))
            return CurvePoint(k, u, parent.coords)
    raise NumericalInconsistency("anchor point not on the selected interval")


def _contacts_to_parent(interval: CurveInterval, region_contacts: list,
                        curve: JordanCurve) -> list:
    """Map region-chain contacts back to the parent curve, dropping any on
    the cap arc (the last region piece)."""
    out = []
    n_int = len(interval.pieces)
    for c in region_contacts:
        if c.piece_index >= n_int:
            continue
        idx, t = interval.to_parent(c.piece_index, c.t)
        cp = CurvePoint(idx, t, c.coords)
        if not any(dist(cp.coords, o.coords) <= 1e-6 for o in out):
            out.append(cp)
    return out


def _select_interval(curve: JordanCurve, contacts: list, D: Disk,
                     prev_interval: tuple[float, float] | None,
                     n_pieces: int):
    """Pick the contact-bounded interval holding the farthest curve point.

    Candidates are the intervals between cyclically consecutive contacts; when
    a previous interval is given, only candidates inside it survive.  The
    winner holds the curve point farthest from the disk center; ties go to
    the smallest start parameter.
    """
    pts = sorted(contacts, key=lambda c: c.s % n_pieces)
    if len(pts) < 2:
        raise NumericalInconsistency("fewer than two contacts to split the curve")
    candidates = []
    m = len(pts)
    for k in range(m):
        a = pts[k]
        b = pts[(k + 1) % m]
        sa, sb = a.s % n_pieces, b.s % n_pieces
        if prev_interval is not None:
            lo, hi = prev_interval
            span = (hi - lo) % n_pieces
            if not ((sa - lo) % n_pieces <= span + 1e-7 and
                    (sb - lo) % n_pieces <= span + 1e-7 and
                    (sb - lo) % n_pieces >= (sa - lo) % n_pieces - 1e-7):
                continue
        length = (sb - sa) % n_pieces
        if length <= 1e-9:
            continue
        candidates.append((a, b))
    if not candidates:
        raise NumericalInconsistency("no interval candidate inside the previous one")
    best = None
    for a, b in candidates:
        interval = subcurve(curve, a, b)
        far_cp, far_d = interval.farthest_from(D.center)
        if best is None or far_d > best[3] + 1e-12:
            best = (a, b, far_cp, far_d)
    return best
