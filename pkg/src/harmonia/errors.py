"""Exception taxonomy shared by every module in the package.

Each geometric precondition failure gets its own class so callers (and the
verification suites) can assert on the exact failure mode instead of parsing
messages.
"""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


# -- scalar field errors ----------------------------------------------------

class FieldMismatch(GeometryError):
    """Operands belong to different scalar fields."""


class DivisionByZero(GeometryError, ZeroDivisionError):
    """Division by, or inversion of, the zero scalar."""


class NotPrime(GeometryError):
    """A prime-field modulus that is not a prime number."""


class CharacteristicTwoError(GeometryError):
    """Harmonic constructions are undefined over fields of characteristic 2."""


class ZeroVector(GeometryError):
    """A homogeneous coordinate vector with all entries zero."""


# -- incidence / join-meet errors -------------------------------------------

class CoincidentArguments(GeometryError):
    """Join or meet of two projectively equal elements."""


class DegenerateSpan(GeometryError):
    """Coincident points cannot span a line."""


class LineInPlane(GeometryError):
    """The line lies inside the plane, so their meet is not a point."""


class PointOnLine(GeometryError):
    """The point lies on the line, so their join is not a plane."""


class CoincidentLines(GeometryError):
    """Two coincident lines have no unique common point."""


class DimensionMismatch(GeometryError):
    """Mixed 2D/3D arguments, or a matrix of the wrong size."""


# -- harmonicity errors ------------------------------------------------------

class NotCollinear(GeometryError):
    """Points expected to share a line do not."""


class NotConcurrent(GeometryError):
    """Lines expected to share a point do not."""


class CoincidentBase(GeometryError):
    """The two base points of a harmonic construction coincide."""


class DegenerateAuxiliaries(GeometryError):
    """Auxiliary points violate the harmonic-fourth preconditions."""


class ArgumentOffLine(GeometryError):
    """The argument does not lie on the required line."""


class IncidentCenterMirror(GeometryError):
    """The center of a harmonic reflection lies on its mirror."""


class NotATriangle(GeometryError):
    """Vertex/side data does not describe a nondegenerate triangle."""


class InfiniteCrossRatio(GeometryError):
    """The cross-ratio denominator vanishes."""


# -- curve errors -------------------------------------------------------------

class NotOnCurve(GeometryError):
    """The point does not belong to the curve."""


class PoleOnCurve(GeometryError):
    """The pole lies on the curve, so its polar passes through it."""


class CoincidentPoints(GeometryError):
    """Two distinct curve points were required."""


class DegeneratePointSet(GeometryError):
    """The point set does not determine a unique curve/surface."""


class DegenerateTangentData(GeometryError):
    """Tangent-line data is inconsistent with the base points."""


class UnsupportedField(GeometryError):
    """The operation is only defined over an ordered field."""


# -- ruled surface errors -----------------------------------------------------

class PointOnGenerator(GeometryError):
    """The point lies on one of the generator lines."""


class CoplanarGenerators(GeometryError):
    """Generator lines must be pairwise skew."""


class PlaneNotThroughGenerator(GeometryError):
    """The plane does not contain any generator of the ruling."""


class PointNotOnGenerator(GeometryError):
    """The point lies on no generator of the ruling."""


class NotRulesOfR(GeometryError):
    """The given lines are not pairwise-skew rules of the ruling."""


class PointOnSurface(GeometryError):
    """The point lies on the surface where the construction degenerates."""


class PointNotOnSurface(GeometryError):
    """The point does not lie on the surface."""


class TangentPlane(GeometryError):
    """The plane is tangent to the surface."""


class DegenerateConfiguration(GeometryError):
    """A six-line configuration violates its meet/skew pattern."""


class ConfigurationDegenerate(DegenerateConfiguration):
    """Alias used by the eight-line Pappus witness checks."""


class DegenerateLiftChoice(GeometryError):
    """No valid auxiliary choice was found when lifting a curve to 3-space."""


class DegenerateHexagon(GeometryError):
    """Hexagon vertices violate the Pappus/Pascal preconditions."""


# -- finite model / configuration errors --------------------------------------

class BudgetExceeded(GeometryError):
    """An exhaustive check larger than the configured budget was requested."""


class ConfigInvalid(GeometryError):
    """Invalid run configuration."""
