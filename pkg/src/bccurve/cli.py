"""Command-line front end.

Results go to stdout or -o; diagnostics are JSON lines on stderr.  Exit
codes: 0 success, 2 validation/precondition failure, 3 numerical
inconsistency, 64 usage error, 65 malformed JSON.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import disks as disks_mod
from . import io as cio
from . import oracle as oracle_mod
from .compose import NotJordan, compose
from .curvature import check_bounded_concave_curvature, check_bounded_convex_curvature
from .curve import CurvePoint, validate
from .errors import (
    BccurveError,
    CornerTooTight,
    CurvatureViolationDetected,
    FeatureTooNarrow,
    InvalidCurve,
    IterationBudgetExceeded,
    NumericalInconsistency,
    PreconditionFailed,
    TangentialOverlap,
)
from .kernel import DEFAULT_EPS, Disk, Point
from .render import render_svg
from .toolpath import ConcaveMode, ToolpathSpec, offset, round_corners

EXIT_OK = 0
EXIT_FAILURE = 2
EXIT_NUMERIC = 3
EXIT_USAGE = 64
EXIT_BADJSON = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def diag(**fields):
    sys.stderr.write(json.dumps(fields) + "\n")


def _emit(payload, out_path):
    text = json.dumps(payload, indent=1) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_text(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path, eps):
    curve, report = cio.load_curve(path, eps)
    if report.auto_reversed:
        diag(event="auto_reversed", file=str(path))
    return curve


def build_parser() -> _Parser:
    p = _Parser(prog="bccurve", description=__doc__)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS,
                   help="absolute tolerance for coincidence/tangency predicates")
    p.add_argument("--radius-bound", "-R", type=float, default=1.0,
                   help="curvature bound radius")
    p.add_argument("--verify", action="store_true",
                   help="cross-check results against the raster oracle")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("validate", help="validate a curve file")
    s.add_argument("curve")

    s = sub.add_parser("check", help="check the convex-curvature bound")
    s.add_argument("curve")

    s = sub.add_parser("check-concave", help="check the concave-curvature bound")
    s.add_argument("curve")

    s = sub.add_parser("inscribed", help="maximal inscribed disk")
    s.add_argument("curve")
    s.add_argument("-o", "--output")

    s = sub.add_parser("unit-disk", help="find an interior disk of the bound radius")
    s.add_argument("curve")
    s.add_argument("--certificate", help="write the full chain certificate here")
    s.add_argument("--seed", nargs=2, type=float, metavar=("PIECE", "T"),
                   help="starting boundary point (piece index and parameter)")
    s.add_argument("-o", "--output")

    s = sub.add_parser("compose", help="outer-boundary composition of two curves")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("-o", "--output")

    s = sub.add_parser("offset", help="inward offset")
    s.add_argument("curve")
    s.add_argument("--distance", type=float, required=True)
    s.add_argument("-o", "--output")

    s = sub.add_parser("round", help="round convex corners")
    s.add_argument("curve")
    s.add_argument("--radius", type=float, required=True)
    s.add_argument("--concave", choices=["roll", "miter"], default="roll")
    s.add_argument("--tool-radius", type=float, default=None)
    s.add_argument("-o", "--output")

    s = sub.add_parser("render", help="render a curve (and disks) to SVG")
    s.add_argument("curve")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--disk", nargs=3, type=float, action="append", default=[],
                   metavar=("CX", "CY", "R"))
    return p


def _cmd_validate(args) -> int:
    try:
        curve, report = cio.load_curve(args.curve, args.eps)
    except InvalidCurve as exc:
        _emit(exc.report.to_dict(), None)
        return EXIT_FAILURE
    _emit(report.to_dict(), None)
    return EXIT_OK


def _cmd_check(args, concave: bool) -> int:
    curve = _load(args.curve, args.eps)
    fn = check_bounded_concave_curvature if concave else check_bounded_convex_curvature
    report = fn(curve, args.radius_bound, args.eps)
    _emit(report.to_dict(), None)
    return EXIT_OK if report.ok else EXIT_FAILURE


def _cmd_inscribed(args) -> int:
    curve = _load(args.curve, args.eps)
    result = disks_mod.max_inscribed_disk(curve, args.eps)
    payload = {"c": [result.disk.center.x, result.disk.center.y],
               "r": result.disk.radius,
               "contacts": [[c.coords.x, c.coords.y] for c in result.contacts]}
    if args.verify:
        _verify_inscribed(curve, result.disk, args.eps)
    _emit(payload, args.output)
    return EXIT_OK


def _verify_inscribed(curve, disk, eps, resolution=0.01):
    mask = oracle_mod.rasterize(curve, resolution, eps)
    est = oracle_mod.grid_inscribed_disk(mask)
    gap = abs(est.radius - disk.radius)
    diag(event="oracle_check", kind="inscribed", grid_radius=est.radius,
         exact_radius=disk.radius, gap=gap, bound=2 * resolution,
         ok=bool(gap <= 2 * resolution + 1e-9))


def _cmd_unit_disk(args) -> int:
    curve = _load(args.curve, args.eps)
    seed = None
    if args.seed is not None:
        seed = curve.point_on(int(args.seed[0]), float(args.seed[1]))
    cert = disks_mod.find_unit_disk(curve, args.radius_bound, seed, args.eps)
    if args.certificate:
        with open(args.certificate, "w", encoding="utf-8") as fh:
            json.dump(cert.to_dict(), fh, indent=1)
            fh.write("\n")
    payload = cert.to_dict()["result"]
    if args.verify:
        mask = oracle_mod.rasterize(curve, 0.01, args.eps)
        est = oracle_mod.grid_inscribed_disk(mask)
        diag(event="oracle_check", kind="unit_disk", grid_radius=est.radius,
             ok=bool(est.radius >= args.radius_bound - 2 * 0.01))
    _emit(payload, args.output)
    return EXIT_OK


def _cmd_compose(args) -> int:
    a = _load(args.a, args.eps)
    b = _load(args.b, args.eps)
    out = compose(a, b, args.eps)
    if isinstance(out, NotJordan):
        diag(event="not_jordan", reason=out.reason)
        return EXIT_FAILURE
    _emit(cio.curve_to_dict(out), args.output)
    return EXIT_OK


def _cmd_offset(args) -> int:
    curve = _load(args.curve, args.eps)
    out = offset(curve, args.distance, args.eps)
    _emit(cio.curve_to_dict(out), args.output)
    return EXIT_OK


def _cmd_round(args) -> int:
    curve = _load(args.curve, args.eps)
    spec = ToolpathSpec(tool_radius=args.tool_radius or args.radius,
                        round_radius=args.radius,
                        concave_mode=ConcaveMode(args.concave))
    out = round_corners(curve, spec, args.eps)
    _emit(cio.curve_to_dict(out), args.output)
    return EXIT_OK


def _cmd_render(args) -> int:
    curve = _load(args.curve, args.eps)
    disks = [Disk(Point(cx, cy), r) for cx, cy, r in args.disk]
    _emit_text(render_svg(curve, disks), args.output)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        diag(event="usage_error", message=str(exc))
        return EXIT_USAGE
    try:
        if args.cmd == "validate":
            return _cmd_validate(args)
        if args.cmd == "check":
            return _cmd_check(args, concave=False)
        if args.cmd == "check-concave":
            return _cmd_check(args, concave=True)
        if args.cmd == "inscribed":
            return _cmd_inscribed(args)
        if args.cmd == "unit-disk":
            return _cmd_unit_disk(args)
        if args.cmd == "compose":
            return _cmd_compose(args)
        if args.cmd == "offset":
            return _cmd_offset(args)
        if args.cmd == "round":
            return _cmd_round(args)
        if args.cmd == "render":
            return _cmd_render(args)
        raise UsageError(f"unknown command {args.cmd}")
    except json.JSONDecodeError as exc:
        diag(event="bad_json", message=exc.msg, line=exc.lineno, column=exc.colno)
        return EXIT_BADJSON
    except (NumericalInconsistency, IterationBudgetExceeded) as exc:
        diag(event="numerical_inconsistency", message=str(exc))
        return EXIT_NUMERIC
    except CurvatureViolationDetected as exc:
        diag(event="curvature_violation", message=str(exc),
             witness=exc.witness.to_dict() if hasattr(exc.witness, "to_dict") else str(exc.witness))
        return EXIT_FAILURE
    except (InvalidCurve, PreconditionFailed, FeatureTooNarrow, CornerTooTight,
            TangentialOverlap) as exc:
        diag(event="failure", kind=type(exc).__name__, message=str(exc))
        return EXIT_FAILURE
    except FileNotFoundError as exc:
        diag(event="usage_error", message=str(exc))
        return EXIT_USAGE
    except BccurveError as exc:
        diag(event="failure", kind=type(exc).__name__, message=str(exc))
        return EXIT_FAILURE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
