"""Canonical test shapes: circles, stadiums, rounded boxes and polygon chains."""
from __future__ import annotations

import math

from .curve import JordanCurve
from .kernel import Arc, Point, Segment


def circle(radius: float, center: Point = Point(0.0, 0.0), ccw: bool = True) -> JordanCurve:
    """Circle as two half arcs."""
    if ccw:
        halves = [Arc(center, radius, 0.0, math.pi, True),
                  Arc(center, radius, math.pi, 2.0 * math.pi, True)]
    else:
        halves = [Arc(center, radius, 0.0, -math.pi, False),
                  Arc(center, radius, -math.pi, -2.0 * math.pi, False)]
    return JordanCurve(halves)


def stadium(half_length: float = 1.0, radius: float = 1.0,
            center: Point = Point(0.0, 0.0)) -> JordanCurve:
    """Rectangle of width 2*half_length capped by semicircles; ccw.

    The default is the unit stadium: semicircles of radius 1 at (+-1, 0),
    straight walls y = +-1.
    """
    cx, cy = center.x, center.y
    a, r = half_length, radius
    return JordanCurve([
        Segment(Point(cx - a, cy - r), Point(cx + a, cy - r)),
        Arc(Point(cx + a, cy), r, -0.5 * math.pi, 0.5 * math.pi, True),
        Segment(Point(cx + a, cy + r), Point(cx - a, cy + r)),
        Arc(Point(cx - a, cy), r, 0.5 * math.pi, 1.5 * math.pi, True),
    ])


def rounded_rect(width: float, height: float, corner_radius: float,
                 center: Point = Point(0.0, 0.0)) -> JordanCurve:
    """Axis-aligned rectangle with circular corner fillets; ccw."""
    w2, h2, r = 0.5 * width, 0.5 * height, corner_radius
    if r <= 0 or r > min(w2, h2):
        raise ValueError("corner radius must be in (0, min(width, height)/2]")
    cx, cy = center.x, center.y
    pieces = []
    if w2 > r:
        pieces.append(Segment(Point(cx - w2 + r, cy - h2), Point(cx + w2 - r, cy - h2)))
    pieces.append(Arc(Point(cx + w2 - r, cy - h2 + r), r, -0.5 * math.pi, 0.0, True))
    if h2 > r:
        pieces.append(Segment(Point(cx + w2, cy - h2 + r), Point(cx + w2, cy + h2 - r)))
    pieces.append(Arc(Point(cx + w2 - r, cy + h2 - r), r, 0.0, 0.5 * math.pi, True))
    if w2 > r:
        pieces.append(Segment(Point(cx + w2 - r, cy + h2), Point(cx - w2 + r, cy + h2)))
    pieces.append(Arc(Point(cx - w2 + r, cy + h2 - r), r, 0.5 * math.pi, math.pi, True))
    if h2 > r:
        pieces.append(Segment(Point(cx - w2, cy + h2 - r), Point(cx - w2, cy - h2 + r)))
    pieces.append(Arc(Point(cx - w2 + r, cy - h2 + r), r, math.pi, 1.5 * math.pi, True))
    return JordanCurve(pieces)


def polygon(vertices: list[Point]) -> JordanCurve:
    """Closed polygon from a ccw or cw vertex list (kept as given)."""
    n = len(vertices)
    if n < 3:
        raise ValueError("polygon needs at least 3 vertices")
    return JordanCurve([Segment(vertices[i], vertices[(i + 1) % n]) for i in range(n)])


def polygon_area(vertices: list[Point]) -> float:
    s = 0.0
    n = len(vertices)
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        s += a.x * b.y - b.x * a.y
    return 0.5 * s
