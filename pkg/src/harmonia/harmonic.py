"""Quadrangles, harmonic conjugates, and harmonic reflections in the plane.

The central construction takes three collinear points A, C, B plus two
auxiliary points collinear with C and off the support line, builds the
quadrangle they determine, and returns the fourth harmonic point D.  The
cross-ratio routine is the independent analytic oracle used to verify it:
a quadruple is harmonic exactly when its cross-ratio is -1.

All constructions here require odd (or zero) characteristic; over GF(2)
the harmonic conjugate of three distinct points collapses onto one of
them, and the reflection matrices collapse to the identity.
"""

from __future__ import annotations

from typing import Optional, Sequence

from . import linalg
from .errors import (
    ArgumentOffLine,
    CoincidentArguments,
    CoincidentBase,
    DegenerateAuxiliaries,
    GeometryError,
    IncidentCenterMirror,
    NotATriangle,
    NotCollinear,
    NotConcurrent,
)
from .fields import Field, Scalar
from .projective import (
    Collineation,
    HLine2,
    HPoint2,
    ProjectiveElement,
    collinear,
    concurrent,
    general_position,
    join2,
    meet2,
)


def _as_dual_point(line: HLine2) -> HPoint2:
    return HPoint2(line.coords, field=line.field)


def _as_line(point: HPoint2) -> HLine2:
    return HLine2(point.coords, field=point.field)


def _point_sum(p: ProjectiveElement, q: ProjectiveElement, s: int = 1):
    coords = tuple(a + s * b for a, b in zip(p.coords, q.coords))
    return type(p)(coords, field=p.field)


def harmonic_fourth(a: HPoint2, c: HPoint2, b: HPoint2,
                    aux1: HPoint2, aux2: HPoint2) -> HPoint2:
    """Fourth harmonic point of C with respect to A and B, via a quadrangle.

    The two auxiliary points must be collinear with C and off the line AB;
    they become one pair of opposite vertices of the quadrangle whose other
    diagonal cuts AB in the harmonic conjugate D.  In the singular cases
    C = A and C = B the quadrangle collapses but the output stays well
    defined (D = A, respectively D = B).
    """
    a.field.require_odd_characteristic()
    if a == b:
        raise CoincidentBase("the base points A and B coincide")
    support = join2(a, b)
    if not support.contains(c):
        raise NotCollinear("C is not on the line AB")
    if aux1 == aux2:
        raise DegenerateAuxiliaries("auxiliary points coincide")
    if support.contains(aux1) or support.contains(aux2):
        raise DegenerateAuxiliaries("auxiliary points must avoid the support line")
    if c != aux1 and c != aux2 and not join2(aux1, aux2).contains(c):
        raise DegenerateAuxiliaries("auxiliary points must be collinear with C")

    g = meet2(join2(a, aux1), join2(b, aux2))
    h = meet2(join2(a, aux2), join2(b, aux1))
    return meet2(join2(g, h), support)


_REFERENCE_POINTS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _canonical_auxiliaries(c: HPoint2, support: HLine2) -> tuple[HPoint2, HPoint2]:
    field = c.field
    for raw in _REFERENCE_POINTS:
        e = HPoint2(raw, field=field)
        if not support.contains(e):
            # Second auxiliary on the join of C and E: a coordinate sum is
            # never projectively equal to either summand.
            return e, _point_sum(c, e)
    raise GeometryError("unreachable: a line cannot contain all reference points")


def harmonic_fourth_canonical(a: HPoint2, c: HPoint2, b: HPoint2) -> HPoint2:
    """Harmonic fourth with a deterministic choice of auxiliary points.

    By the independence of the construction from that choice, this agrees
    with ``harmonic_fourth`` for every valid auxiliary pair.
    """
    a.field.require_odd_characteristic()
    if a == b:
        raise CoincidentBase("the base points A and B coincide")
    support = join2(a, b)
    if not support.contains(c):
        raise NotCollinear("C is not on the line AB")
    aux1, aux2 = _canonical_auxiliaries(c, support)
    return harmonic_fourth(a, c, b, aux1, aux2)


def dual_harmonic_fourth(a: HLine2, c: HLine2, b: HLine2) -> HLine2:
    """Fourth harmonic line of c with respect to concurrent lines a and b."""
    return _as_line(harmonic_fourth_canonical(
        _as_dual_point(a), _as_dual_point(c), _as_dual_point(b)))


def cross_ratio(a: ProjectiveElement, b: ProjectiveElement,
                c: ProjectiveElement, d: ProjectiveElement) -> Optional[Scalar]:
    """Cross-ratio (a, b; c, d) of four collinear points (or concurrent lines).

    Works on homogeneous elements of any one kind and length: the four
    arguments must lie in a common rank-2 span.  Returns None when the
    denominator vanishes (the infinite cross-ratio), and raises
    CoincidentArguments for the undefined 0/0 cases.
    """
    elements = (a, b, c, d)
    field = a.field
    basis = [a.coords]
    for e in elements[1:]:
        if linalg.rank(basis + [e.coords]) > len(basis):
            basis.append(e.coords)
        if len(basis) == 2:
            break
    if len(basis) < 2:
        raise CoincidentArguments("all four elements coincide")
    params = []
    for e in elements:
        coeff = linalg.express_in_span(e.coords, basis, field)
        if coeff is None:
            raise NotCollinear("the four elements do not share a line/pencil")
        params.append(coeff)

    def det2(u, v) -> Scalar:
        return u[0] * v[1] - u[1] * v[0]

    pa, pb, pc, pd = params
    num = det2(pa, pc) * det2(pb, pd)
    den = det2(pa, pd) * det2(pb, pc)
    if den.is_zero:
        if num.is_zero:
            raise CoincidentArguments("cross-ratio is undefined (0/0)")
        return None
    return num / den


def is_harmonic_set(a: HPoint2, c: HPoint2, b: HPoint2, d: HPoint2) -> bool:
    """True when (A, C, B, D) in dihedral order form a harmonic set.

    The pairs are (A, B) and (C, D); analytically the condition is
    cross_ratio(A, B; C, D) = -1.
    """
    if not collinear([a, c, b, d]):
        raise NotCollinear("a harmonic set must be collinear")
    a.field.require_odd_characteristic()
    minus_one = -a.field.one
    try:
        return cross_ratio(a, b, c, d) == minus_one
    except CoincidentArguments:
        return False


def is_harmonic_pencil(a: HLine2, c: HLine2, b: HLine2, d: HLine2) -> bool:
    """Dual predicate: four concurrent lines whose section is a harmonic set."""
    if not concurrent([a, c, b, d]):
        raise NotConcurrent("a harmonic pencil must be concurrent")
    a.field.require_odd_characteristic()
    minus_one = -a.field.one
    try:
        return cross_ratio(_as_dual_point(a), _as_dual_point(b),
                           _as_dual_point(c), _as_dual_point(d)) == minus_one
    except CoincidentArguments:
        return False


class LineInvolution:
    """The harmonic reflection of the line AB fixing A and B.

    Every other point maps to its harmonic conjugate with respect to the
    pair; in the parameters of the (A, B) basis the map is simply
    (s : t) -> (s : -t), which makes it an exact involution over any field
    of odd characteristic.  Works for points of the plane and of 3-space.
    """

    __slots__ = ("a", "b", "field")

    def __init__(self, a: ProjectiveElement, b: ProjectiveElement):
        if a == b:
            raise CoincidentBase("an involution needs two distinct fixed points")
        a.field.require_odd_characteristic()
        self.a = a
        self.b = b
        self.field = a.field

    def apply(self, x: ProjectiveElement) -> ProjectiveElement:
        coeff = linalg.express_in_span(x.coords, [self.a.coords, self.b.coords], self.field)
        if coeff is None:
            raise ArgumentOffLine("the point is not on the line of the involution")
        alpha, beta = coeff
        coords = tuple(alpha * u - beta * v for u, v in zip(self.a.coords, self.b.coords))
        return type(x)(coords, field=self.field)

    __call__ = apply


def harmonic_reflection_on_line(a: ProjectiveElement, b: ProjectiveElement) -> LineInvolution:
    return LineInvolution(a, b)


def harmonic_reflection(center: ProjectiveElement, mirror: ProjectiveElement) -> Collineation:
    """The involutive collineation fixing the mirror pointwise and the center.

    On each line through the center it acts as the harmonic conjugation
    with respect to the center and the line's meet with the mirror.  Valid
    in the plane (point + line) and in 3-space (point + plane).
    """
    field = center.field
    field.require_odd_characteristic()
    n = len(center.coords)
    if len(mirror.coords) != n or isinstance(mirror, type(center)):
        raise GeometryError("expected a point plus a hyperplane of the same dimension")
    s = center.dot(mirror)
    if s.is_zero:
        raise IncidentCenterMirror("the center lies on the mirror")
    two = field.scalar(2)
    rows = [
        [
            (s if i == j else field.zero) - two * mirror.coords[i] * center.coords[j]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return Collineation(rows, field=field)


def klein_triangle(a: HPoint2, la: HLine2, b: HPoint2, lb: HLine2,
                   c: HPoint2, lc: HLine2) -> list[Collineation]:
    """The four collineations attached to a triangle with opposite sides.

    Returns [identity, r_A, r_B, r_C] where r_V is the harmonic reflection
    with center V and the opposite side as mirror.  These form the Klein
    four-group: each non-identity element is an involution and the product
    of any two of them equals the third up to scale.
    """
    if la.contains(a) or lb.contains(b) or lc.contains(c):
        raise NotATriangle("a vertex lies on its opposite side")
    if meet2(lb, lc) != a or meet2(la, lc) != b or meet2(la, lb) != c:
        raise NotATriangle("vertices are not the pairwise meets of the sides")
    return [
        Collineation.identity(2, a.field),
        harmonic_reflection(a, la),
        harmonic_reflection(b, lb),
        harmonic_reflection(c, lc),
    ]


class Quadrangle:
    """Four points in general position with a dihedral order (A, C, B, D).

    The order yields the four sides AC, CB, BD, DA; the opposite-vertex
    pairs are (A, B) and (C, D).  Derived data: diagonal lines joining
    opposite vertices, their meet (the center), the two diagonal points
    where opposite sides meet, and their join (the horizon).
    """

    __slots__ = ("vertices", "field", "sides", "diagonals", "center",
                 "diagonal_points", "horizon")

    def __init__(self, vertices: Sequence[HPoint2]):
        vertices = tuple(vertices)
        if len(vertices) != 4:
            raise GeometryError("a quadrangle has exactly four vertices")
        field = vertices[0].field
        field.require_odd_characteristic()
        if not general_position(vertices, "no3collinear"):
            raise GeometryError("quadrangle vertices must be in general position")
        a, c, b, d = vertices
        sides = (join2(a, c), join2(c, b), join2(b, d), join2(d, a))
        diagonals = (join2(a, b), join2(c, d))
        center = meet2(*diagonals)
        diagonal_points = (meet2(sides[0], sides[2]), meet2(sides[1], sides[3]))
        horizon = join2(*diagonal_points)
        if horizon.contains(center):
            raise GeometryError("degenerate diagonal triangle")  # unreachable in odd char
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "sides", sides)
        object.__setattr__(self, "diagonals", diagonals)
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "diagonal_points", diagonal_points)
        object.__setattr__(self, "horizon", horizon)

    def __setattr__(self, name, value):
        raise AttributeError("Quadrangle is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quadrangle):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"Quadrangle{self.vertices!r}"

    def opposite_pairs(self) -> tuple[tuple[HPoint2, HPoint2], tuple[HPoint2, HPoint2]]:
        a, c, b, d = self.vertices
        return (a, b), (c, d)

    def apply(self, t: Collineation) -> "Quadrangle":
        return Quadrangle([t.apply(v) for v in self.vertices])
