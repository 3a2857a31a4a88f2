"""Random generators for curves that respect the convex-curvature bound."""
import math

from bccurve.compose import NotJordan, compose
from bccurve.curvature import check_bounded_convex_curvature
from bccurve.curve import turn_angle
from bccurve.errors import BccurveError
from bccurve.kernel import Point
from bccurve.shapes import circle, polygon, rounded_rect
from bccurve.toolpath import ConcaveMode, ToolpathSpec, round_corners


def random_disk_composition(rng, k=None, max_tries=60):
    """Fold-compose k unit disks whose centers form a connected overlap cluster."""
    k = k if k is not None else int(rng.integers(2, 7))
    for _ in range(max_tries):
        centers = [Point(0.0, 0.0)]
        blob = circle(1.0)
        attempts = 0
        while len(centers) < k and attempts < 40:
            attempts += 1
            base = centers[int(rng.integers(0, len(centers)))]
            ang = rng.uniform(0.0, 2.0 * math.pi)
            d = rng.uniform(0.6, 1.55)
            c = Point(base.x + d * math.cos(ang), base.y + d * math.sin(ang))
            if any(abs(math.hypot(c.x - o.x, c.y - o.y) - 2.0) < 0.1
                   or math.hypot(c.x - o.x, c.y - o.y) < 0.25 for o in centers):
                continue
            try:
                out = compose(blob, circle(1.0, center=c))
            except BccurveError:
                continue
            if isinstance(out, NotJordan):
                continue
            blob = out
            centers.append(c)
        if len(centers) == k and check_bounded_convex_curvature(blob).ok:
            return blob
    raise RuntimeError("disk composition generator exhausted its retries")


def random_rounded_polygon(rng, round_radius=None, max_tries=80):
    """Star polygon with reflex corners, convex corners rounded at >= 1."""
    rr = round_radius if round_radius is not None else float(rng.uniform(1.0, 1.3))
    for _ in range(max_tries):
        n = int(rng.integers(5, 11))
        thetas = sorted(float(a) for a in rng.uniform(0.0, 2.0 * math.pi, size=n))
        gaps = [b - a for a, b in zip(thetas, thetas[1:])]
        gaps.append(2.0 * math.pi - (thetas[-1] - thetas[0]))
        if min(gaps) < 0.25:
            continue
        radii = [float(rng.uniform(3.2, 7.0)) for _ in range(n)]
        verts = [Point(r * math.cos(t), r * math.sin(t)) for r, t in zip(radii, thetas)]
        try:
            poly = polygon(verts)
            rounded = round_corners(poly, ToolpathSpec(tool_radius=rr, round_radius=rr,
                                                       concave_mode=ConcaveMode.ROLL))
        except BccurveError:
            continue
        if check_bounded_convex_curvature(rounded).ok and has_reflex_corner(rounded):
            return rounded
    raise RuntimeError("rounded polygon generator exhausted its retries")


def has_reflex_corner(curve):
    return any(turn_angle(curve, i) < -1e-7 for i in range(len(curve.pieces)))


def dumbbell(neck_halfwidth, lobe=6.0, fillet=1.5, span=4.0):
    """Two rounded-square lobes joined by a thin rectangular neck."""
    w = neck_halfwidth
    lobeL = rounded_rect(lobe, lobe, fillet, center=Point(-lobe, 0.0))
    lobeR = rounded_rect(lobe, lobe, fillet, center=Point(lobe, 0.0))
    neck = polygon([Point(-span, -w), Point(span, -w), Point(span, w), Point(-span, w)])
    step = compose(lobeL, neck)
    assert not isinstance(step, NotJordan)
    out = compose(step, lobeR)
    assert not isinstance(out, NotJordan)
    return out


def neck_seed(curve, neck_halfwidth):
    return curve.locate(Point(0.0, -neck_halfwidth))


def random_bcc_suite(rng, n_compositions, n_polygons, n_dumbbells=0):
    """(curve, seed_or_None) pairs for the acceptance run."""
    suite = []
    for _ in range(n_compositions):
        suite.append((random_disk_composition(rng), None))
    for _ in range(n_polygons):
        suite.append((random_rounded_polygon(rng), None))
    for k in range(n_dumbbells):
        w = 0.3 + 0.12 * k
        curve = dumbbell(w)
        suite.append((curve, neck_seed(curve, w)))
    return suite
