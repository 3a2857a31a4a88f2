"""Exception types shared across the package."""


class BccurveError(Exception):
    """Base class for all package errors."""


class CoincidentCircles(BccurveError):
    """Two circles agree in center and radius within tolerance."""


class OverlapDegenerate(BccurveError):
    """An arc lies on the query circle over a positive-length subarc.

    Carries the parameter interval of the overlap on the queried piece.
    """

    def __init__(self, t0: float, t1: float):
        super().__init__(f"arc overlaps circle on parameter interval [{t0}, {t1}]")
        self.t0 = t0
        self.t1 = t1


class PointOnCurve(BccurveError):
    """Query point lies on the curve within tolerance."""


class NumericalInconsistency(BccurveError):
    """A computation produced a result outside its certified tolerance."""


class DegenerateCurve(BccurveError):
    """No interior probe could be classified for this curve."""


class InvalidCurve(BccurveError):
    """Piece chain fails the closed/simple curve requirements."""

    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class IdenticalEndpoints(BccurveError):
    """Interval endpoints coincide."""


class EndpointMismatch(BccurveError):
    """Cap endpoints do not meet the interval endpoints."""


class SelfIntersection(BccurveError):
    """A constructed chain is not simple."""


class CurveInsideDisk(BccurveError):
    """The whole curve lies inside the query disk."""


class TangentialCrossing(BccurveError):
    """The curve meets the disk boundary non-transversally."""


class LocalViolation(BccurveError):
    """The curvature bound fails at the queried boundary point."""


class PreconditionFailed(BccurveError):
    """An operation precondition does not hold; message names the clause."""


class CoverageInfeasible(BccurveError):
    """No covering unit disk exists on the search line (inconsistent input)."""


class BadTangentData(BccurveError):
    """Tangency anchor point or disk is inconsistent with the region."""


class CurvatureViolationDetected(BccurveError):
    """The unit-disk search uncovered a curvature violation; carries a witness."""

    def __init__(self, witness, message="curvature violation detected"):
        super().__init__(message)
        self.witness = witness


class IterationBudgetExceeded(BccurveError):
    """Disk chain did not terminate within the area-derived budget."""


class FeatureTooNarrow(BccurveError):
    """Offset distance exceeds the local feature clearance."""

    def __init__(self, message, pieces=()):
        super().__init__(message)
        self.pieces = tuple(pieces)


class CornerTooTight(BccurveError):
    """The rounding arc does not fit on the pieces adjacent to a corner."""


class TangentialOverlap(BccurveError):
    """Input curves share a positive-length boundary portion."""


class GridTooLarge(BccurveError):
    """Requested raster exceeds the cell budget."""


class EmptyInterior(BccurveError):
    """Raster mask contains no interior cells."""
