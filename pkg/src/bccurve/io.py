"""Curve JSON format.

    {"pieces": [{"kind": "segment", "from": [x, y], "to": [x, y]},
                {"kind": "arc", "center": [x, y], "radius": r,
                 "start_angle": a0, "end_angle": a1, "ccw": bool}, ...]}

Angles are radians; an arc point at angle t is center + r*(cos t, sin t),
traversed from start_angle toward end_angle in the ccw flag's direction.
Closure tolerance is 1e-9 absolute.  Numbers round-trip bit-exactly through
``json`` (shortest-repr floats).

Curves supplied with negative orientation are reversed on load and the
reversal is recorded in the returned report.
"""
from __future__ import annotations

import json

from .curve import JordanCurve, Orientation, ValidationReport, orientation, validate
from .errors import InvalidCurve
from .kernel import DEFAULT_EPS, Arc, Point, Segment


def piece_from_dict(d: dict):
    kind = d.get("kind")
    if kind == "segment":
        fx, fy = d["from"]
        tx, ty = d["to"]
        return Segment(Point(float(fx), float(fy)), Point(float(tx), float(ty)))
    if kind == "arc":
        cx, cy = d["center"]
        return Arc(Point(float(cx), float(cy)), float(d["radius"]),
                   float(d["start_angle"]), float(d["end_angle"]), bool(d["ccw"]))
    raise ValueError(f"unknown piece kind {kind!r}")


def piece_to_dict(piece) -> dict:
    if isinstance(piece, Segment):
        return {"kind": "segment", "from": [piece.p0.x, piece.p0.y],
                "to": [piece.p1.x, piece.p1.y]}
    return {"kind": "arc", "center": [piece.center.x, piece.center.y],
            "radius": piece.radius, "start_angle": piece.start_angle,
            "end_angle": piece.end_angle, "ccw": piece.ccw}


def curve_from_dict(data: dict, eps: float = DEFAULT_EPS,
                    normalize: bool = True) -> tuple[JordanCurve, ValidationReport]:
    """Build and validate a curve; optionally normalize to positive orientation."""
    pieces = [piece_from_dict(d) for d in data["pieces"]]
    curve = JordanCurve(pieces, eps, validated=True)
    report = validate(curve, eps)
    if not report.ok:
        raise InvalidCurve(report)
    if normalize and orientation(curve, eps) is Orientation.NEGATIVE:
        curve = curve.reversed()
        report.auto_reversed = True
    return curve, report


def curve_to_dict(curve: JordanCurve) -> dict:
    return {"pieces": [piece_to_dict(p) for p in curve.pieces]}


def load_curve(path, eps: float = DEFAULT_EPS,
               normalize: bool = True) -> tuple[JordanCurve, ValidationReport]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return curve_from_dict(data, eps, normalize)


def dump_curve(curve: JordanCurve, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(curve_to_dict(curve), fh, indent=1)
        fh.write("\n")


def dumps_curve(curve: JordanCurve) -> str:
    return json.dumps(curve_to_dict(curve), indent=1)
