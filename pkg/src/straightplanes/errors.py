"""Exception hierarchy shared by all kernels."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


# -- incidence / projective kernel -----------------------------------------

class CoincidentPoints(GeometryError):
    pass


class CoincidentLines(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class UndefinedCrossRatio(GeometryError):
    pass


class DegenerateInput(GeometryError):
    pass


class DegenerateAuxiliary(GeometryError):
    pass


# -- line systems -----------------------------------------------------------

class OutsideCarrier(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class SearchExhausted(GeometryError):
    pass


# -- metric planes ----------------------------------------------------------

class PointsOutsideDomain(OutsideCarrier):
    pass


class UnboundedChord(GeometryError):
    pass


# -- synthetic constructions -------------------------------------------------

class DegenerateQuadrilateral(GeometryError):
    pass


class MissingIdealIntersection(GeometryError):
    pass


class IntersectionOutsideCarrier(GeometryError):
    pass


class NoFiniteConjugate(GeometryError):
    pass


class OutsideHull(GeometryError):
    pass


class ResolutionUnreachable(GeometryError):
    pass


class NoAdmissibleSecants(GeometryError):
    pass


class IllConditionedIntersection(GeometryError):
    pass


class ModelDegenerate(GeometryError):
    pass


class SignAmbiguous(GeometryError):
    pass


# -- CLI / suite runner -------------------------------------------------------

class SpecInvalid(GeometryError):
    pass


class NothingToRender(GeometryError):
    pass
