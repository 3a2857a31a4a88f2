"""SVG 1.1 rendering: 1 user unit = 1 length unit, stroke width 0.01.

The y axis is flipped at the coordinate level so arcs stay true arcs; the
interior is filled with the nonzero winding rule.
"""
from __future__ import annotations

import math

from .curve import JordanCurve
from .kernel import Arc, Disk, Segment


def _fmt(v: float) -> str:
    return f"{v:.9g}"


def curve_path(curve: JordanCurve) -> str:
    start = curve.pieces[0].point_at(0.0)
    parts = [f"M {_fmt(start.x)} {_fmt(-start.y)}"]
    for piece in curve.pieces:
        end = piece.point_at(1.0)
        if isinstance(piece, Segment):
            parts.append(f"L {_fmt(end.x)} {_fmt(-end.y)}")
            continue
        sweep = piece.sweep
        # SVG cannot express a full circle in one A command; split it.
        chunks = 2 if sweep > 1.99 * math.pi else 1
        for k in range(chunks):
            sub = piece.trimmed(k / chunks, (k + 1) / chunks) if chunks > 1 else piece
            q = sub.point_at(1.0)
            large = 1 if sub.sweep > math.pi else 0
            sweep_flag = 0 if sub.ccw else 1
            parts.append(f"A {_fmt(sub.radius)} {_fmt(sub.radius)} 0 "
                         f"{large} {sweep_flag} {_fmt(q.x)} {_fmt(-q.y)}")
    parts.append("Z")
    return " ".join(parts)


def render_svg(curve: JordanCurve, disks: list[Disk] = (),
               fill: str = "#e8e8e8") -> str:
    x0, y0, x1, y1 = curve.bbox()
    for d in disks:
        x0 = min(x0, d.center.x - d.radius)
        y0 = min(y0, d.center.y - d.radius)
        x1 = max(x1, d.center.x + d.radius)
        y1 = max(y1, d.center.y + d.radius)
    pad = 0.05 * max(x1 - x0, y1 - y0, 1.0)
    vb = (x0 - pad, -(y1 + pad), (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(vb[0])} {_fmt(vb[1])} {_fmt(vb[2])} {_fmt(vb[3])}">',
        f'<path d="{curve_path(curve)}" fill="{fill}" fill-rule="nonzero" '
        f'stroke="black" stroke-width="0.01"/>',
    ]
    for d in disks:
        lines.append(f'<circle cx="{_fmt(d.center.x)}" cy="{_fmt(-d.center.y)}" '
                     f'r="{_fmt(d.radius)}" fill="none" stroke="black" '
                     f'stroke-width="0.01" stroke-dasharray="0.05 0.05"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
