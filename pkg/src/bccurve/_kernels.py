"""Grid kernels for the raster oracle: winding, distance and distance transform.

Two implementations ship for each kernel: a numba @njit scalar-loop version
and a vectorized numpy/scipy fallback.  Set BCCURVE_PURE_NUMPY=1 to force the
fallback (numba is also optional at import time).  Arcs are pre-split into
sub-arcs of sweep <= 2*pi/3 so every chord is well conditioned; the winding
of the chord polygon is corrected per sub-arc by membership in the circular
segment between chord and arc.
"""
from __future__ import annotations

import math
import os

import numpy as np

from .kernel import Arc, Segment

PURE_NUMPY = os.environ.get("BCCURVE_PURE_NUMPY", "") not in ("", "0")

if not PURE_NUMPY:
    try:
        import numba
    except ImportError:  # pragma: no cover
        numba = None
        PURE_NUMPY = True
else:
    numba = None

USING_NUMBA = not PURE_NUMPY

# Packed piece rows:
# 0 kind (0 segment, 1 arc), 1-4 chord x0 y0 x1 y1, 5-7 cx cy r,
# 8-9 arc midpoint, 10 direction (+1 ccw / -1 cw), 11 start angle, 12 sweep
COLS = 13


def pack_pieces(pieces) -> np.ndarray:
    rows = []
    for piece in pieces:
        if isinstance(piece, Segment):
            rows.append([0.0, piece.p0.x, piece.p0.y, piece.p1.x, piece.p1.y,
                         0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])
            continue
        assert isinstance(piece, Arc)
        parts = max(1, int(math.ceil(piece.sweep / (2.0 * math.pi / 3.0))))
        for k in range(parts):
            sub = piece.trimmed(k / parts, (k + 1) / parts)
            p0, p1, mid = sub.point_at(0.0), sub.point_at(1.0), sub.point_at(0.5)
            rows.append([1.0, p0.x, p0.y, p1.x, p1.y,
                         sub.center.x, sub.center.y, sub.radius, mid.x, mid.y,
                         sub.direction, sub.start_angle, sub.sweep])
    return np.asarray(rows, dtype=np.float64)


def _winding_cell(px, py, pieces):
    """Scalar winding of one probe; returns (winding, ok)."""
    total = 0.0
    lens = 0
    ok = True
    for r in range(pieces.shape[0]):
        x0 = pieces[r, 1] - px
        y0 = pieces[r, 2] - py
        x1 = pieces[r, 3] - px
        y1 = pieces[r, 4] - py
        crs = x0 * y1 - y0 * x1
        dt = x0 * x1 + y0 * y1
        scale = x0 * x0 + y0 * y0 + x1 * x1 + y1 * y1
        if abs(crs) <= 1e-12 * scale and dt <= 1e-12 * scale:
            ok = False
        total += math.atan2(crs, dt)
        if pieces[r, 0] == 1.0:
            dx = px - pieces[r, 5]
            dy = py - pieces[r, 6]
            rad = pieces[r, 7]
            d2 = dx * dx + dy * dy
            if abs(d2 - rad * rad) <= 1e-9 * rad * rad:
                ok = False
            elif d2 < rad * rad:
                ex = pieces[r, 3] - pieces[r, 1]
                ey = pieces[r, 4] - pieces[r, 2]
                sp = ex * (py - pieces[r, 2]) - ey * (px - pieces[r, 1])
                sm = ex * (pieces[r, 9] - pieces[r, 2]) - ey * (pieces[r, 8] - pieces[r, 1])
                e2 = ex * ex + ey * ey
                if abs(sp) <= 1e-12 * e2:
                    ok = False
                elif sp * sm > 0.0:
                    lens += 1 if pieces[r, 10] > 0.0 else -1
    w = total / (2.0 * math.pi) + lens
    wr = int(round(w))
    if abs(w - wr) > 0.25:
        ok = False
    return wr, ok


def _distance_cell(px, py, pieces):
    best = 1e300
    for r in range(pieces.shape[0]):
        x0 = pieces[r, 1]
        y0 = pieces[r, 2]
        x1 = pieces[r, 3]
        y1 = pieces[r, 4]
        if pieces[r, 0] == 0.0:
            ex = x1 - x0
            ey = y1 - y0
            L2 = ex * ex + ey * ey
            t = 0.0 if L2 == 0.0 else ((px - x0) * ex + (py - y0) * ey) / L2
            if t < 0.0:
                t = 0.0
            elif t > 1.0:
                t = 1.0
            qx = x0 + t * ex
            qy = y0 + t * ey
            d = math.hypot(px - qx, py - qy)
        else:
            cx = pieces[r, 5]
            cy = pieces[r, 6]
            rad = pieces[r, 7]
            dc = math.hypot(px - cx, py - cy)
            theta = math.atan2(py - cy, px - cx)
            u = (pieces[r, 10] * (theta - pieces[r, 11])) % (2.0 * math.pi)
            if u <= pieces[r, 12]:
                d = abs(dc - rad)
            else:
                d = min(math.hypot(px - x0, py - y0), math.hypot(px - x1, py - y1))
        if d < best:
            best = d
    return best


def _envelope_1d(f, n, out, v, z):
    k = 0
    v[0] = 0
    z[0] = -1e300
    z[1] = 1e300
    for q in range(1, n):
        s = 0.0
        while True:
            vk = v[k]
            denom = 2.0 * q - 2.0 * vk
            s = ((f[q] + q * q) - (f[vk] + vk * vk)) / denom
            if s <= z[k]:
                k -= 1
            else:
                break
        k += 1
        v[k] = q
        z[k] = s
        z[k + 1] = 1e300
    k = 0
    for q in range(n):
        while z[k + 1] < q:
            k += 1
        vk = v[k]
        out[q] = (q - vk) * (q - vk) + f[vk]


if USING_NUMBA:
    _winding_cell_jit = numba.njit(cache=True)(_winding_cell)
    _distance_cell_jit = numba.njit(cache=True)(_distance_cell)
    _envelope_1d_jit = numba.njit(cache=True)(_envelope_1d)

    @numba.njit(cache=True, parallel=True)
    def _winding_grid_numba(px, py, pieces, wind, ok):
        ny, nx = wind.shape
        for j in numba.prange(ny):
            for i in range(nx):
                w, good = _winding_cell_jit(px[i], py[j], pieces)
                wind[j, i] = w
                ok[j, i] = good

    @numba.njit(cache=True, parallel=True)
    def _distance_grid_numba(px, py, pieces, out):
        ny, nx = out.shape
        for j in numba.prange(ny):
            for i in range(nx):
                out[j, i] = _distance_cell_jit(px[i], py[j], pieces)

    @numba.njit(cache=True)
    def _edt_sq_numba(mask, out):
        ny, nx = mask.shape
        for j in range(ny):
            for i in range(nx):
                out[j, i] = 0.0 if not mask[j, i] else 1e300
        tmp = np.empty(max(nx, ny) + 1, dtype=np.float64)
        v = np.empty(max(nx, ny) + 1, dtype=np.int64)
        z = np.empty(max(nx, ny) + 2, dtype=np.float64)
        for j in range(ny):
            _envelope_1d_jit(out[j, :], nx, tmp, v, z)
            for i in range(nx):
                out[j, i] = tmp[i]
        col = np.empty(ny, dtype=np.float64)
        for i in range(nx):
            for j in range(ny):
                col[j] = out[j, i]
            _envelope_1d_jit(col, ny, tmp, v, z)
            for j in range(ny):
                out[j, i] = tmp[j]


def winding_grid_numpy(px: np.ndarray, py: np.ndarray, pieces: np.ndarray):
    """Vectorized fallback; identical semantics to the scalar kernel."""
    PX = px[None, :]
    PY = py[:, None]
    total = np.zeros((py.size, px.size), dtype=np.float64)
    lens = np.zeros_like(total, dtype=np.int64)
    bad = np.zeros_like(total, dtype=bool)
    for r in range(pieces.shape[0]):
        x0 = pieces[r, 1] - PX
        y0 = pieces[r, 2] - PY
        x1 = pieces[r, 3] - PX
        y1 = pieces[r, 4] - PY
        crs = x0 * y1 - y0 * x1
        dt = x0 * x1 + y0 * y1
        scale = x0 * x0 + y0 * y0 + x1 * x1 + y1 * y1
        bad |= (np.abs(crs) <= 1e-12 * scale) & (dt <= 1e-12 * scale)
        total += np.arctan2(crs, dt)
        if pieces[r, 0] == 1.0:
            dx = PX - pieces[r, 5]
            dy = PY - pieces[r, 6]
            rad = pieces[r, 7]
            d2 = dx * dx + dy * dy
            on_circle = np.abs(d2 - rad * rad) <= 1e-9 * rad * rad
            bad |= on_circle
            inside = (d2 < rad * rad) & ~on_circle
            ex = pieces[r, 3] - pieces[r, 1]
            ey = pieces[r, 4] - pieces[r, 2]
            e2 = ex * ex + ey * ey
            sp = ex * (PY - pieces[r, 2]) - ey * (PX - pieces[r, 1])
            sm = ex * (pieces[r, 9] - pieces[r, 2]) - ey * (pieces[r, 8] - pieces[r, 1])
            bad |= inside & (np.abs(sp) <= 1e-12 * e2)
            in_lens = inside & (sp * sm > 0.0)
            lens += np.where(in_lens, 1 if pieces[r, 10] > 0.0 else -1, 0)
    w = total / (2.0 * math.pi) + lens
    wind = np.rint(w).astype(np.int64)
    bad |= np.abs(w - wind) > 0.25
    return wind, ~bad


def distance_grid_numpy(px: np.ndarray, py: np.ndarray, pieces: np.ndarray) -> np.ndarray:
    PX = px[None, :]
    PY = py[:, None]
    best = np.full((py.size, px.size), np.inf)
    for r in range(pieces.shape[0]):
        if pieces[r, 0] == 0.0:
            x0, y0, x1, y1 = pieces[r, 1:5]
            ex, ey = x1 - x0, y1 - y0
            L2 = ex * ex + ey * ey
            t = ((PX - x0) * ex + (PY - y0) * ey) / L2 if L2 > 0 else np.zeros_like(best)
            t = np.clip(t, 0.0, 1.0)
            d = np.hypot(PX - (x0 + t * ex), PY - (y0 + t * ey))
        else:
            cx, cy, rad = pieces[r, 5:8]
            dc = np.hypot(PX - cx, PY - cy)
            theta = np.arctan2(PY - cy, PX - cx)
            u = np.mod(pieces[r, 10] * (theta - pieces[r, 11]), 2.0 * math.pi)
            on_arc = u <= pieces[r, 12]
            d_ends = np.minimum(np.hypot(PX - pieces[r, 1], PY - pieces[r, 2]),
                                np.hypot(PX - pieces[r, 3], PY - pieces[r, 4]))
            d = np.where(on_arc, np.abs(dc - rad), d_ends)
        np.minimum(best, d, out=best)
    return best


def edt_sq_numpy(mask: np.ndarray) -> np.ndarray:
    """Exact squared EDT via scipy (distance to the nearest false cell)."""
    from scipy import ndimage
    d = ndimage.distance_transform_edt(mask.astype(np.uint8))
    return d.astype(np.float64) ** 2


def winding_grid(px, py, pieces, force_numpy: bool = False):
    """(winding, ok) over the probe grid; ok=False flags ambiguous cells."""
    if USING_NUMBA and not force_numpy:
        wind = np.empty((py.size, px.size), dtype=np.int64)
        ok = np.empty((py.size, px.size), dtype=np.bool_)
        _winding_grid_numba(px, py, pieces, wind, ok)
        return wind, ok
    return winding_grid_numpy(px, py, pieces)


def distance_grid(px, py, pieces, force_numpy: bool = False):
    if USING_NUMBA and not force_numpy:
        out = np.empty((py.size, px.size), dtype=np.float64)
        _distance_grid_numba(px, py, pieces, out)
        return out
    return distance_grid_numpy(px, py, pieces)


def edt_sq(mask, force_numpy: bool = False):
    if USING_NUMBA and not force_numpy:
        out = np.empty(mask.shape, dtype=np.float64)
        _edt_sq_numba(np.ascontiguousarray(mask), out)
        return out
    return edt_sq_numpy(mask)


def winding_point(px: float, py: float, pieces: np.ndarray):
    """Single-probe version used for ambiguous-cell retries."""
    wind, ok = winding_grid_numpy(np.array([px]), np.array([py]), pieces)
    return int(wind[0, 0]), bool(ok[0, 0])
