"""Property tests for the kernel against brute-force sampling oracles."""
import math

from hypothesis import given, settings, strategies as st

from bccurve.errors import PointOnCurve
from bccurve.kernel import (
    TWO_PI,
    Arc,
    Point,
    Segment,
    arg_variation,
    farthest_point_on_piece,
    point_piece_distance,
)

from conftest import sampled_max_distance, sampled_min_distance

coords = st.floats(min_value=-20.0, max_value=20.0,
                   allow_nan=False, allow_infinity=False)
radii = st.floats(min_value=0.05, max_value=10.0)
angles = st.floats(min_value=-7.0, max_value=7.0)
sweeps = st.floats(min_value=0.05, max_value=TWO_PI)


@st.composite
def segments(draw):
    p0 = Point(draw(coords), draw(coords))
    p1 = Point(draw(coords), draw(coords))
    if math.hypot(p1.x - p0.x, p1.y - p0.y) < 1e-3:
        p1 = Point(p0.x + 1.0, p0.y)
    return Segment(p0, p1)


@st.composite
def arcs(draw):
    c = Point(draw(coords), draw(coords))
    r = draw(radii)
    a0 = draw(angles)
    sw = draw(sweeps)
    ccw = draw(st.booleans())
    a1 = a0 + sw if ccw else a0 - sw
    return Arc(c, r, a0, a1, ccw)


pieces = st.one_of(segments(), arcs())


@given(pieces, coords, coords)
@settings(max_examples=60, deadline=None)
def test_distance_matches_sampling(piece, px, py):
    p = Point(px, py)
    exact = point_piece_distance(p, piece)
    sampled = sampled_min_distance(p, piece, n=10_000)
    scale = max(1.0, piece.length())
    assert exact <= sampled + 1e-12
    assert sampled - exact <= 1e-6 * scale + 1e-7


@given(pieces, coords, coords)
@settings(max_examples=60, deadline=None)
def test_farthest_matches_sampling(piece, px, py):
    p = Point(px, py)
    _, _, exact = farthest_point_on_piece(p, piece)
    sampled = sampled_max_distance(p, piece, n=10_000)
    scale = max(1.0, piece.length())
    assert exact >= sampled - 1e-12
    assert exact - sampled <= 1e-6 * scale + 1e-7


@given(st.floats(min_value=0.2, max_value=5.0),
       st.floats(min_value=-3.0, max_value=3.0),
       st.floats(min_value=-3.0, max_value=3.0),
       st.integers(min_value=2, max_value=7),
       coords, coords)
@settings(max_examples=60, deadline=None)
def test_closed_chain_variation_is_turn_multiple(r, cx, cy, n_arcs, px, py):
    """Summed argument variation over any closed arc chain is a 2*pi multiple."""
    chain = [Arc(Point(cx, cy), r, k * TWO_PI / n_arcs, (k + 1) * TWO_PI / n_arcs, True)
             for k in range(n_arcs)]
    p = Point(px, py)
    try:
        total = sum(arg_variation(piece, p) for piece in chain)
    except PointOnCurve:
        return
    ratio = total / TWO_PI
    assert abs(ratio - round(ratio)) < 1e-6
