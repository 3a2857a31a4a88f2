"""Geometry toolkit for curves of bounded convex curvature.

Piecewise circular-arc/segment Jordan curves: curvature-bound checking with
violation witnesses, maximal inscribed/tangent disks, a certified unit-disk
search, outer-boundary composition and pocket-machining toolpaths.
"""

from .kernel import (
    DEFAULT_EPS,
    Arc,
    Disk,
    Point,
    Segment,
    arg_variation,
    circle_circle_intersection,
    farthest_point_on_piece,
    piece_circle_intersection,
    point_piece_distance,
)
from .curve import (
    CurveInterval,
    CurvePoint,
    JordanCurve,
    Location,
    Orientation,
    ValidationReport,
    lobe_decomposition,
    orientation,
    point_location,
    splice,
    subcurve,
    validate,
    winding_number,
)
from .curvature import (
    CurvatureReport,
    ViolationWitness,
    WitnessDisk,
    check_bounded_concave_curvature,
    check_bounded_convex_curvature,
    find_violation_witness,
    unit_disk_at,
    verify_witness,
    winds_positively,
)
from .disks import (
    ChainStep,
    DiskChainCertificate,
    clearance,
    find_unit_disk,
    interior_area,
    max_inscribed_disk,
    max_tangent_disk,
)
from .compose import NotJordan, compose, verify_composition
from .toolpath import ToolpathSpec, offset, round_corners
from .oracle import RasterMask, grid_inscribed_disk, rasterize
from .io import curve_from_dict, curve_to_dict, dump_curve, load_curve

__version__ = "0.1.0"
