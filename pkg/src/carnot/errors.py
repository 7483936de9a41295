"""Exception types. All derive from GeometryError (a ValueError)."""


class GeometryError(ValueError):
    pass


class IdenticalPoints(GeometryError):
    pass


class IdenticalLines(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class PointAtInfinity(GeometryError):
    pass


class RatioUndefined(GeometryError):
    pass


class PointNotOnSide(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class UnderDetermined(GeometryError):
    pass


class DuplicatePoints(GeometryError):
    pass


class DuplicateLines(GeometryError):
    pass


class PointNotOnConic(GeometryError):
    pass


class LineNotThroughPoint(GeometryError):
    pass


class DegenerateConic(GeometryError):
    pass


class CarnotRelationViolated(GeometryError):
    pass


class GeneralPosition(GeometryError):
    """A construction step degenerated (coincident points, tangent cevian, ...)."""


class NotAxiallyPerspective(GeometryError):
    pass


class DegenerateQuadrilateral(GeometryError):
    pass


class ExhaustedRetries(RuntimeError):
    pass


class NothingVisible(GeometryError):
    pass
