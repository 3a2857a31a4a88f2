import numpy as np
import pytest

from bccurve.kernel import Arc, Point, Segment, dist
from bccurve.shapes import circle, rounded_rect, stadium


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture(scope="session")
def unit_circle():
    return circle(1.0)


@pytest.fixture(scope="session")
def unit_stadium():
    return stadium()


@pytest.fixture(scope="session")
def rounded_square():
    return rounded_rect(4.0, 4.0, 1.0)


def sample_piece(piece, n):
    """n+1 points along the piece, parameter-uniform."""
    return [piece.point_at(k / n) for k in range(n + 1)]


def sampled_min_distance(p, piece, n=10_000):
    return min(dist(p, q) for q in sample_piece(piece, n))


def sampled_max_distance(p, piece, n=10_000):
    return max(dist(p, q) for q in sample_piece(piece, n))


def sampled_hausdorff(curve_a, curve_b, n=60):
    """One-sided sampled Hausdorff distance from a to b."""
    worst = 0.0
    for piece in curve_a.pieces:
        for q in sample_piece(piece, n):
            worst = max(worst, curve_b.min_distance(q))
    return worst
