"""Harmonic curves: conics presented by a quadrangle and its vertex tangents.

A harmonic curve is the locus of points that see the four vertices of a
quadrangle as a harmonic pencil (in the dihedral order of the vertices).
The point construction walks a parameter X along the base line joining
one opposite vertex pair; an exactly fitted symmetric matrix serves as
the independent analytic oracle for membership, polarity and tangency.
"""

from __future__ import annotations

from typing import Optional, Sequence

from . import linalg
from .errors import (
    ArgumentOffLine,
    CoincidentPoints,
    DegeneratePointSet,
    DegenerateTangentData,
    NotOnCurve,
    PoleOnCurve,
    UnsupportedField,
)
from .fields import Field, PrimeField, Scalar
from .harmonic import (
    LineInvolution,
    Quadrangle,
    dual_harmonic_fourth,
    harmonic_reflection,
    is_harmonic_pencil,
)
from .projective import Collineation, HLine2, HPoint2, join2, meet2


class ConicMatrix:
    """A symmetric 3x3 matrix M; Z is on the conic exactly when Z M Z^T = 0."""

    __slots__ = ("field", "rows", "rank")

    def __init__(self, rows: Sequence[Sequence[Scalar]], field: Field):
        rows = tuple(tuple(field.scalar(c) for c in row) for row in rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise DegeneratePointSet("a conic matrix is 3x3")
        for i in range(3):
            for j in range(i + 1, 3):
                if rows[i][j] != rows[j][i]:
                    raise DegeneratePointSet("a conic matrix must be symmetric")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "rank", linalg.rank(rows))

    def __setattr__(self, name, value):
        raise AttributeError("ConicMatrix is immutable")

    def evaluate(self, p: HPoint2) -> Scalar:
        mv = linalg.mat_col_mul(self.rows, p.coords)
        return linalg._dot(p.coords, mv)

    def contains(self, p: HPoint2) -> bool:
        return self.evaluate(p).is_zero

    def polar_line(self, p: HPoint2) -> HLine2:
        return HLine2(linalg.mat_col_mul(self.rows, p.coords), field=self.field)

    def pole_point(self, l: HLine2) -> HPoint2:
        return HPoint2(linalg.mat_col_mul(linalg.adjugate(self.rows), l.coords), field=self.field)

    def same_conic(self, other: "ConicMatrix") -> bool:
        a = [c for row in self.rows for c in row]
        b = [c for row in other.rows for c in row]
        k = next(i for i, c in enumerate(a) if not c.is_zero)
        if b[k].is_zero:
            return False
        return all(a[k] * y == b[k] * x for x, y in zip(a, b))

    def transformed(self, t: Collineation) -> "ConicMatrix":
        """The matrix of the image conic under x -> x T (row action)."""
        inv = linalg.adjugate(t.matrix)
        return ConicMatrix(linalg.mat_mul(inv, linalg.mat_mul(self.rows, linalg.transpose(inv))),
                           field=self.field)

    def __repr__(self) -> str:
        return f"ConicMatrix{self.rows!r}"


def conic_fit(points: Sequence[HPoint2]) -> ConicMatrix:
    """The unique conic through five points, solved exactly.

    Raises DegeneratePointSet when the five incidence conditions are rank
    deficient (for instance when four of the points are collinear).
    """
    points = list(points)
    if len(points) != 5:
        raise DegeneratePointSet("a conic fit needs exactly five points")
    field = points[0].field
    two = field.scalar(2)
    rows = []
    for p in points:
        x, y, w = p.coords
        rows.append([x * x, two * x * y, two * x * w, y * y, two * y * w, w * w])
    kernel = linalg.nullspace(rows, field)
    if len(kernel) != 1:
        raise DegeneratePointSet("the five points do not determine a unique conic")
    c00, c01, c02, c11, c12, c22 = kernel[0]
    return ConicMatrix(((c00, c01, c02), (c01, c11, c12), (c02, c12, c22)), field)


def vertex_tangent(quad: Quadrangle, index: int) -> HLine2:
    """Tangent to the quadrangle's harmonic curve at the given vertex.

    It is the harmonic conjugate of the diagonal through the vertex with
    respect to the two sides there, completing a harmonic pencil.
    """
    v = quad.vertices[index]
    prev_v = quad.vertices[(index - 1) % 4]
    next_v = quad.vertices[(index + 1) % 4]
    opp_v = quad.vertices[(index + 2) % 4]
    return dual_harmonic_fourth(join2(v, prev_v), join2(v, opp_v), join2(v, next_v))


class HarmonicCurve:
    """The harmonic curve of a quadrangle, with tangents and an exact oracle.

    Vertices are (A, C, B, D) in dihedral order; the parametrizing line is
    q = A v B and the meet of the tangents at A and B is the point Q, which
    is the pole of q.  The conic matrix is fitted once, eagerly, from the
    four vertices plus one constructed point, and is used for polarity;
    the synthetic constructions remain available and are cross-checked by
    the test suites.
    """

    __slots__ = ("quadrangle", "tangents", "base_line", "tangent_meet", "conic")

    def __init__(self, quadrangle: Quadrangle):
        tangents = tuple(vertex_tangent(quadrangle, i) for i in range(4))
        a_v, c_v, b_v, d_v = quadrangle.vertices
        base_line = join2(a_v, b_v)
        tangent_meet = meet2(tangents[0], tangents[2])
        object.__setattr__(self, "quadrangle", quadrangle)
        object.__setattr__(self, "tangents", tangents)
        object.__setattr__(self, "base_line", base_line)
        object.__setattr__(self, "tangent_meet", tangent_meet)
        object.__setattr__(self, "conic", self._fit_conic())

    def __setattr__(self, name, value):
        raise AttributeError("HarmonicCurve is immutable")

    @classmethod
    def from_quadrangle_points(cls, a, c, b, d) -> "HarmonicCurve":
        return cls(Quadrangle((a, c, b, d)))

    @classmethod
    def from_pointpair_tangents(cls, a_v: HPoint2, a_t: HLine2,
                                b_v: HPoint2, b_t: HLine2, c_v: HPoint2) -> "HarmonicCurve":
        """Generator through A, B, C given the tangents at A and B.

        The fourth vertex is the image of C under the harmonic reflection
        whose center is the meet of the tangents and whose mirror is AB.
        """
        if not a_t.contains(a_v) or not b_t.contains(b_v):
            raise DegenerateTangentData("each base point must lie on its tangent")
        if a_t == b_t:
            raise DegenerateTangentData("tangent lines coincide")
        base = join2(a_v, b_v)
        if a_t == base or b_t == base:
            raise DegenerateTangentData("a tangent coincides with the base line")
        if base.contains(c_v) or a_t.contains(c_v) or b_t.contains(c_v):
            raise DegenerateTangentData("C must avoid the base line and both tangents")
        pole = meet2(a_t, b_t)
        d_v = harmonic_reflection(pole, base).apply(c_v)
        return cls(Quadrangle((a_v, c_v, b_v, d_v)))

    # -- construction ------------------------------------------------------

    @property
    def vertices(self) -> tuple[HPoint2, HPoint2, HPoint2, HPoint2]:
        return self.quadrangle.vertices

    @property
    def field(self) -> Field:
        return self.quadrangle.field

    def point_at(self, x: HPoint2) -> HPoint2:
        """The curve point attached to the parameter X on the base line.

        Given Y, the harmonic conjugate of X with respect to (A, B), the
        curve point is the meet of C v X and D v Y; the ends X = A and
        X = B return A and B themselves.
        """
        a_v, c_v, b_v, d_v = self.vertices
        if not self.base_line.contains(x):
            raise ArgumentOffLine("the parameter must lie on the base line")
        if x == a_v:
            return a_v
        if x == b_v:
            return b_v
        y = LineInvolution(a_v, b_v).apply(x)
        return meet2(join2(c_v, x), join2(d_v, y))

    def parameter_of(self, z: HPoint2) -> HPoint2:
        """The base-line parameter mapping to the given curve point."""
        a_v, c_v, b_v, d_v = self.vertices
        if z == a_v or z == b_v:
            return z
        if z == c_v:
            center = self.quadrangle.center
            return LineInvolution(a_v, b_v).apply(center)
        return meet2(self.base_line, join2(c_v, z))

    def sample_parameters(self, n: int) -> list[HPoint2]:
        """A deterministic ladder of n distinct points on the base line."""
        a_v, _, b_v, _ = self.vertices
        field = self.field
        params = [a_v, b_v]
        if isinstance(field, PrimeField):
            ts: Sequence[int] = range(1, field.p)
        else:
            ts = [t for k in range(1, n + 2) for t in (k, -k)]
        for t in ts:
            if len(params) >= n:
                break
            st = field.scalar(t)
            candidate = HPoint2(
                tuple(u + st * v for u, v in zip(a_v.coords, b_v.coords)), field=field)
            if candidate not in params:
                params.append(candidate)
        return params[:n]

    def sample_points(self, n: int) -> list[HPoint2]:
        """n distinct curve points: the vertices plus constructed samples."""
        points = list(self.vertices)
        if isinstance(self.field, PrimeField):
            n = min(n, self.field.p + 1)
        for x in self.sample_parameters(2 * n + 8):
            if len(points) >= n:
                break
            z = self.point_at(x)
            if z not in points:
                points.append(z)
        return points[:n]

    # -- membership and tangency --------------------------------------------

    def contains(self, z: HPoint2) -> bool:
        """Synthetic membership: the pencil from Z to the vertices is harmonic."""
        a_v, c_v, b_v, d_v = self.vertices
        if z in self.vertices:
            return True
        pencil = (join2(z, a_v), join2(z, c_v), join2(z, b_v), join2(z, d_v))
        if len(set(pencil)) < 4:
            return False
        return is_harmonic_pencil(*pencil)

    def tangent_at(self, z: HPoint2) -> HLine2:
        """Tangent line at a curve point, by the dual of the point construction."""
        a_v, c_v, b_v, d_v = self.vertices
        for i, v in enumerate(self.vertices):
            if z == v:
                return self.tangents[i]
        if not self.contains(z):
            raise NotOnCurve("tangent requested at a point off the curve")
        x = meet2(self.base_line, join2(c_v, z))
        y = LineInvolution(a_v, b_v).apply(x)
        x_line = join2(self.tangent_meet, y)
        y_line = join2(self.tangent_meet, x)
        c_t, d_t = self.tangents[1], self.tangents[3]
        return join2(meet2(c_t, x_line), meet2(d_t, y_line))

    def _fit_conic(self) -> ConicMatrix:
        points = list(self.vertices)
        for x in self.sample_parameters(12):
            z = self.point_at(x)
            if z not in points:
                points.append(z)
                break
        conic = conic_fit(points[:5])
        if conic.rank != 3:
            raise DegeneratePointSet("harmonic curve produced a degenerate conic")
        return conic

    def __repr__(self) -> str:
        return f"HarmonicCurve({self.quadrangle!r})"


def hc_point(curve: HarmonicCurve, x: HPoint2) -> HPoint2:
    return curve.point_at(x)


def curve_membership(curve: HarmonicCurve, z: HPoint2) -> bool:
    return curve.contains(z)


def tangent_at(curve: HarmonicCurve, z: HPoint2) -> HLine2:
    return curve.tangent_at(z)


def a_construction_point(a_v: HPoint2, a_t: HLine2, b_v: HPoint2, b_t: HLine2,
                         c_v: HPoint2, x: HPoint2) -> HPoint2:
    """Curve point from three points and two tangents, by one reflection.

    The mirror is the join of X's harmonic conjugate (with respect to A, B)
    with the meet of the two tangents; the curve point is the image of C
    under the harmonic reflection with center X and that mirror.
    """
    if not a_t.contains(a_v) or not b_t.contains(b_v):
        raise DegenerateTangentData("each base point must lie on its tangent")
    if a_t == b_t:
        raise DegenerateTangentData("tangent lines coincide")
    base = join2(a_v, b_v)
    if a_t == base or b_t == base:
        raise DegenerateTangentData("a tangent coincides with the base line")
    if base.contains(c_v) or a_t.contains(c_v) or b_t.contains(c_v):
        raise DegenerateTangentData("C must avoid the base line and both tangents")
    if not base.contains(x):
        raise ArgumentOffLine("X must lie on the base line")
    if x == a_v or x == b_v:
        raise ArgumentOffLine("X must differ from the base points")
    y = LineInvolution(a_v, b_v).apply(x)
    mirror = join2(y, meet2(a_t, b_t))
    return harmonic_reflection(x, mirror).apply(c_v)


def polar_of_point(curve: HarmonicCurve, p: HPoint2) -> HLine2:
    return curve.conic.polar_line(p)


def pole_of_line(curve: HarmonicCurve, l: HLine2) -> HPoint2:
    return curve.conic.pole_point(l)


def polar_reflection_invariance(curve: HarmonicCurve, p: HPoint2,
                                samples: int = 20) -> bool:
    """Whether the reflection in (P, polar of P) maps curve samples onto the curve."""
    if curve.conic.contains(p):
        raise PoleOnCurve("the pole lies on the curve")
    reflection = harmonic_reflection(p, polar_of_point(curve, p))
    for z in curve.sample_points(samples):
        image = reflection.apply(z)
        if not curve.conic.contains(image) or not curve.contains(image):
            return False
    return True


def tangential_map(curve: HarmonicCurve, t_point: HPoint2, x_point: HPoint2) -> HPoint2:
    """Bijection from the curve onto the tangent line at T.

    X maps to the meet of that tangent with the tangent at X; T itself is
    fixed.
    """
    if not curve.contains(t_point):
        raise NotOnCurve("T must be on the curve")
    if not curve.contains(x_point):
        raise NotOnCurve("X must be on the curve")
    if x_point == t_point:
        return t_point
    return meet2(curve.tangent_at(t_point), curve.tangent_at(x_point))


def hyperbolic_reflection(curve: HarmonicCurve, a_pt: HPoint2, b_pt: HPoint2) -> Collineation:
    """Reflection of the plane fixing the chord AB and its pole.

    The returned collineation is an involution that leaves the curve
    invariant and fixes the two chord ends.
    """
    if a_pt == b_pt:
        raise CoincidentPoints("a chord needs two distinct curve points")
    if not curve.contains(a_pt) or not curve.contains(b_pt):
        raise NotOnCurve("chord ends must lie on the curve")
    chord = join2(a_pt, b_pt)
    return harmonic_reflection(pole_of_line(curve, chord), chord)


def is_interior(curve: HarmonicCurve, p: HPoint2) -> bool:
    """Whether P lies inside the curve (its polar misses the curve).

    Decided exactly over the rationals by the sign of the discriminant of
    the conic restricted to the polar line; prime fields are unordered, so
    there the notion is undefined.
    """
    if isinstance(p.field, PrimeField):
        raise UnsupportedField("interior tests need an ordered field")
    if curve.conic.contains(p):
        return False
    polar = polar_of_point(curve, p)
    kernel = linalg.nullspace([polar.coords], p.field)
    l0, l1 = (HPoint2(v, field=p.field) for v in kernel[:2])
    m = curve.conic
    q00 = m.evaluate(l0)
    q11 = m.evaluate(l1)
    q01 = linalg._dot(l0.coords, linalg.mat_col_mul(m.rows, l1.coords))
    disc = q01 * q01 - q00 * q11
    return disc.sign() < 0
