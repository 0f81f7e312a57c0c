"""Homogeneous-coordinate models of the projective plane and 3-space.

Points, lines and planes are stored in a canonical form (integer-cleared
with gcd 1 and positive leading coordinate over the rationals, leading
coordinate 1 over GF(p)), so projective equality is structural equality
and every element is hashable.  Lines in 3-space are kept in Plücker
coordinates, which turns incidence and skewness into exact polynomial
tests.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import linalg
from .errors import (
    CoincidentArguments,
    CoincidentLines,
    DegenerateSpan,
    DimensionMismatch,
    GeometryError,
    LineInPlane,
    PointOnLine,
    ZeroVector,
)
from .fields import QQ, Field, PrimeField, Scalar

CoordLike = Union[Scalar, int, Fraction, str]


def _canonicalize(coords: tuple[Scalar, ...], field: Field) -> tuple[Scalar, ...]:
    if all(c.is_zero for c in coords):
        raise ZeroVector("homogeneous coordinates cannot all be zero")
    if isinstance(field, PrimeField):
        lead = next(c for c in coords if not c.is_zero)
        inv = lead.inverse()
        return tuple(c * inv for c in coords)
    # Rationals: clear denominators, divide by the gcd, fix the leading sign.
    values = [c.value for c in coords]
    lcm = 1
    for v in values:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in values]
    g = 0
    for n in ints:
        g = math.gcd(g, n)
    ints = [n // g for n in ints]
    lead = next(n for n in ints if n != 0)
    if lead < 0:
        ints = [-n for n in ints]
    return tuple(field.scalar(n) for n in ints)


class ProjectiveElement:
    """Shared behaviour of all homogeneous-coordinate elements."""

    LENGTH: int = 0
    KIND: str = ""

    __slots__ = ("field", "coords")

    def __init__(self, *coords, field: Field | None = None):
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        if len(coords) != self.LENGTH:
            raise DimensionMismatch(
                f"{type(self).__name__} needs {self.LENGTH} coordinates, got {len(coords)}"
            )
        if field is None:
            field = next((c.field for c in coords if isinstance(c, Scalar)), QQ)
        scalars = tuple(field.scalar(c) for c in coords)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", _canonicalize(scalars, field))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.field, self.coords))

    def __repr__(self) -> str:
        inner = ":".join(str(c) for c in self.coords)
        return f"{type(self).__name__}[{inner}]"

    def dot(self, other: "ProjectiveElement") -> Scalar:
        if len(self.coords) != len(other.coords):
            raise DimensionMismatch("dot product of different lengths")
        return linalg._dot(self.coords, other.coords)

    def scalar_strings(self) -> list[str]:
        return [str(c) for c in self.coords]


class HPoint2(ProjectiveElement):
    """A point of the projective plane, as a homogeneous triple (x : y : w)."""

    LENGTH = 3
    KIND = "point2"

    @classmethod
    def affine(cls, x: CoordLike, y: CoordLike, field: Field = QQ) -> "HPoint2":
        return cls(x, y, 1, field=field)

    def join(self, other: "HPoint2") -> "HLine2":
        return join2(self, other)

    def on(self, line: "HLine2") -> bool:
        return self.dot(line).is_zero


class HLine2(ProjectiveElement):
    """A line of the projective plane; incidence is the vanishing dot product."""

    LENGTH = 3
    KIND = "line2"

    def meet(self, other: "HLine2") -> HPoint2:
        return meet2(self, other)

    def contains(self, point: HPoint2) -> bool:
        return self.dot(point).is_zero


class HPoint3(ProjectiveElement):
    """A point of projective 3-space, as a homogeneous 4-tuple (x : y : z : w)."""

    LENGTH = 4
    KIND = "point3"

    @classmethod
    def affine(cls, x: CoordLike, y: CoordLike, z: CoordLike, field: Field = QQ) -> "HPoint3":
        return cls(x, y, z, 1, field=field)

    def on_plane(self, plane: "HPlane3") -> bool:
        return self.dot(plane).is_zero


class HPlane3(ProjectiveElement):
    """A plane of projective 3-space; incidence is the vanishing dot product."""

    LENGTH = 4
    KIND = "plane3"

    def contains(self, point: HPoint3) -> bool:
        return self.dot(point).is_zero


def _cross(a: Sequence[Scalar], b: Sequence[Scalar]) -> tuple[Scalar, Scalar, Scalar]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def join2(p: HPoint2, q: HPoint2) -> HLine2:
    """The unique line through two distinct points of the plane."""
    if p == q:
        raise CoincidentArguments("join of coincident points")
    return HLine2(_cross(p.coords, q.coords), field=p.field)


def meet2(l: HLine2, m: HLine2) -> HPoint2:
    """The unique common point of two distinct lines of the plane."""
    if l == m:
        raise CoincidentArguments("meet of coincident lines")
    return HPoint2(_cross(l.coords, m.coords), field=l.field)


class PluckerLine(ProjectiveElement):
    """A line of 3-space in Plücker coordinates (p01, p02, p03, p12, p13, p23).

    Construction checks the Grassmann quadratic relation, so every value of
    this type is an actual line.
    """

    LENGTH = 6
    KIND = "line3"

    def __init__(self, *coords, field: Field | None = None):
        super().__init__(*coords, field=field)
        p01, p02, p03, p12, p13, p23 = self.coords
        if not (p01 * p23 - p02 * p13 + p03 * p12).is_zero:
            raise GeometryError("coordinates violate the Grassmann-Plücker relation")

    @classmethod
    def from_points(cls, p: HPoint3, q: HPoint3) -> "PluckerLine":
        return join3_points(p, q)

    # -- incidence machinery ---------------------------------------------

    def _primal_matrix(self):
        z = self.field.zero
        p01, p02, p03, p12, p13, p23 = self.coords
        return (
            (z, p01, p02, p03),
            (-p01, z, p12, p13),
            (-p02, -p12, z, p23),
            (-p03, -p13, -p23, z),
        )

    def _dual_matrix(self):
        z = self.field.zero
        p01, p02, p03, p12, p13, p23 = self.coords
        q01, q02, q03, q12, q13, q23 = p23, -p13, p12, p03, -p02, p01
        return (
            (z, q01, q02, q03),
            (-q01, z, q12, q13),
            (-q02, -q12, z, q23),
            (-q03, -q13, -q23, z),
        )

    def pairing(self, other: "PluckerLine") -> Scalar:
        """The bilinear Plücker pairing; zero exactly when the lines are coplanar."""
        p = self.coords
        q = other.coords
        return (p[0] * q[5] - p[1] * q[4] + p[2] * q[3]
                + p[3] * q[2] - p[4] * q[1] + p[5] * q[0])

    def is_coplanar_with(self, other: "PluckerLine") -> bool:
        return self.pairing(other).is_zero

    def contains_point(self, x: HPoint3) -> bool:
        return all(c.is_zero for c in linalg.mat_col_mul(self._dual_matrix(), x.coords))

    def in_plane(self, plane: HPlane3) -> bool:
        return all(c.is_zero for c in linalg.mat_col_mul(self._primal_matrix(), plane.coords))

    def points(self) -> tuple[HPoint3, HPoint3]:
        """Two distinct points spanning the line (meets with coordinate planes)."""
        cols = []
        primal = self._primal_matrix()
        for j in range(4):
            col = tuple(primal[i][j] for i in range(4))
            if any(not c.is_zero for c in col):
                cols.append(col)
        first = HPoint3(cols[0], field=self.field)
        for col in cols[1:]:
            candidate = HPoint3(col, field=self.field)
            if candidate != first:
                return first, candidate
        raise GeometryError("degenerate Plücker line")  # pragma: no cover

    def planes(self) -> tuple[HPlane3, HPlane3]:
        """Two distinct planes through the line (joins with coordinate points)."""
        cols = []
        dual = self._dual_matrix()
        for j in range(4):
            col = tuple(dual[i][j] for i in range(4))
            if any(not c.is_zero for c in col):
                cols.append(col)
        first = HPlane3(cols[0], field=self.field)
        for col in cols[1:]:
            candidate = HPlane3(col, field=self.field)
            if candidate != first:
                return first, candidate
        raise GeometryError("degenerate Plücker line")  # pragma: no cover


def join3_points(p: HPoint3, q: HPoint3) -> PluckerLine:
    """The line through two distinct points of 3-space."""
    if p == q:
        raise DegenerateSpan("join of coincident points in 3-space")
    a, b = p.coords, q.coords
    return PluckerLine(
        a[0] * b[1] - a[1] * b[0],
        a[0] * b[2] - a[2] * b[0],
        a[0] * b[3] - a[3] * b[0],
        a[1] * b[2] - a[2] * b[1],
        a[1] * b[3] - a[3] * b[1],
        a[2] * b[3] - a[3] * b[2],
        field=p.field,
    )


def meet_line_plane(line: PluckerLine, plane: HPlane3) -> HPoint3:
    """The point where a line not contained in a plane pierces it."""
    coords = linalg.mat_col_mul(line._primal_matrix(), plane.coords)
    if all(c.is_zero for c in coords):
        raise LineInPlane("the line lies in the plane")
    return HPoint3(coords, field=line.field)


def join_line_point(line: PluckerLine, point: HPoint3) -> HPlane3:
    """The plane spanned by a line and a point off it."""
    coords = linalg.mat_col_mul(line._dual_matrix(), point.coords)
    if all(c.is_zero for c in coords):
        raise PointOnLine("the point lies on the line")
    return HPlane3(coords, field=line.field)


def meet_planes(a: HPlane3, b: HPlane3) -> PluckerLine:
    """The line where two distinct planes of 3-space intersect."""
    if a == b:
        raise CoincidentArguments("meet of coincident planes")
    u, v = a.coords, b.coords
    # Join of the two planes as dual points, dualized back to primal coordinates.
    d = (
        u[0] * v[1] - u[1] * v[0],
        u[0] * v[2] - u[2] * v[0],
        u[0] * v[3] - u[3] * v[0],
        u[1] * v[2] - u[2] * v[1],
        u[1] * v[3] - u[3] * v[1],
        u[2] * v[3] - u[3] * v[2],
    )
    return PluckerLine(d[5], -d[4], d[3], d[2], -d[1], d[0], field=a.field)


def lines_coplanar(a: PluckerLine, b: PluckerLine) -> bool:
    """True exactly when the lines have a common point (or coincide)."""
    return a.pairing(b).is_zero


def meet_lines3(a: PluckerLine, b: PluckerLine) -> HPoint3:
    """The common point of two distinct coplanar lines of 3-space."""
    if a == b:
        raise CoincidentLines("meet of coincident lines")
    if not lines_coplanar(a, b):
        raise GeometryError("skew lines have no common point")
    for plane in b.planes():
        if not a.in_plane(plane):
            return meet_line_plane(a, plane)
    raise GeometryError("unreachable: coplanar distinct lines")  # pragma: no cover


def join_lines3(a: PluckerLine, b: PluckerLine) -> HPlane3:
    """The plane spanned by two distinct coplanar lines of 3-space."""
    if a == b:
        raise CoincidentLines("join of coincident lines")
    if not lines_coplanar(a, b):
        raise GeometryError("skew lines span no plane")
    for point in b.points():
        if not a.contains_point(point):
            return join_line_point(a, point)
    raise GeometryError("unreachable: coplanar distinct lines")  # pragma: no cover


class Collineation:
    """An invertible homogeneous matrix acting on points on the right.

    Points transform as row vectors (``x' = x M``), hyperplanes by the
    adjugate on the left, and 3-space lines by mapping two spanning points.
    Equality is matrix equality up to a nonzero scalar.
    """

    __slots__ = ("field", "matrix", "_det")

    def __init__(self, matrix: Sequence[Sequence[CoordLike]], field: Field | None = None):
        rows = [list(row) for row in matrix]
        n = len(rows)
        if n not in (3, 4) or any(len(r) != n for r in rows):
            raise DimensionMismatch("collineation matrices are 3x3 or 4x4")
        if field is None:
            field = next(
                (c.field for row in rows for c in row if isinstance(c, Scalar)), QQ
            )
        m = tuple(tuple(field.scalar(c) for c in row) for row in rows)
        det = linalg.determinant(m)
        if det.is_zero:
            raise GeometryError("collineation matrix is singular")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "_det", det)

    def __setattr__(self, name, value):
        raise AttributeError("Collineation is immutable")

    @classmethod
    def identity(cls, dim: int, field: Field = QQ) -> "Collineation":
        return cls(linalg.identity(dim + 1, field), field=field)

    @property
    def dim(self) -> int:
        return len(self.matrix) - 1

    def determinant(self) -> Scalar:
        return self._det

    def compose(self, other: "Collineation") -> "Collineation":
        """The map 'self then other' under right action."""
        if self.dim != other.dim:
            raise DimensionMismatch("composing collineations of different dimensions")
        return Collineation(linalg.mat_mul(self.matrix, other.matrix), field=self.field)

    __mul__ = compose

    def inverse(self) -> "Collineation":
        return Collineation(linalg.adjugate(self.matrix), field=self.field)

    def apply(self, x):
        """Transform a point, hyperplane, or Plücker line of matching dimension."""
        if isinstance(x, HPoint2):
            self._need_dim(2)
            return HPoint2(linalg.row_vec_mul(x.coords, self.matrix), field=self.field)
        if isinstance(x, HPoint3):
            self._need_dim(3)
            return HPoint3(linalg.row_vec_mul(x.coords, self.matrix), field=self.field)
        if isinstance(x, HLine2):
            self._need_dim(2)
            return HLine2(linalg.mat_col_mul(linalg.adjugate(self.matrix), x.coords), field=self.field)
        if isinstance(x, HPlane3):
            self._need_dim(3)
            return HPlane3(linalg.mat_col_mul(linalg.adjugate(self.matrix), x.coords), field=self.field)
        if isinstance(x, PluckerLine):
            self._need_dim(3)
            p, q = x.points()
            return join3_points(self.apply(p), self.apply(q))
        raise DimensionMismatch(f"cannot apply a collineation to {type(x).__name__}")

    def _need_dim(self, dim: int) -> None:
        if self.dim != dim:
            raise DimensionMismatch(f"a {self.dim}D collineation cannot act on a {dim}D element")

    def same_map(self, other: "Collineation") -> bool:
        """Equality of collineations up to a nonzero scalar factor."""
        if self.dim != other.dim or self.field != other.field:
            return False
        a = [c for row in self.matrix for c in row]
        b = [c for row in other.matrix for c in row]
        k = next(i for i, c in enumerate(a) if not c.is_zero)
        if b[k].is_zero:
            return False
        return all(a[k] * y == b[k] * x for x, y in zip(a, b))

    def is_involution(self) -> bool:
        square = linalg.mat_mul(self.matrix, self.matrix)
        n = len(square)
        lead = next(square[i][i] for i in range(n) if not square[i][i].is_zero)
        for i in range(n):
            for j in range(n):
                expected = lead if i == j else self.field.zero
                if square[i][j] != expected:
                    return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, Collineation):
            return NotImplemented
        return self.same_map(other)

    def __repr__(self) -> str:
        rows = "; ".join(",".join(str(c) for c in row) for row in self.matrix)
        return f"Collineation[{rows}]"


def apply_collineation(t: Collineation, x):
    return t.apply(x)


def collinear(points: Iterable[HPoint2]) -> bool:
    pts = list(points)
    if len(pts) < 3:
        return True
    return linalg.rank([p.coords for p in pts]) <= 2


def concurrent(lines: Iterable[HLine2]) -> bool:
    return collinear([HPoint2(l.coords, field=l.field) for l in lines])


def collinear3(points: Iterable[HPoint3]) -> bool:
    pts = list(points)
    if len(pts) < 3:
        return True
    return linalg.rank([p.coords for p in pts]) <= 2


def coplanar_points3(points: Iterable[HPoint3]) -> bool:
    pts = list(points)
    if len(pts) < 4:
        return True
    return linalg.rank([p.coords for p in pts]) <= 3


def plane_through(a: HPoint3, b: HPoint3, c: HPoint3) -> HPlane3:
    """The plane spanned by three non-collinear points."""
    return join_line_point(join3_points(a, b), c)


def general_position(elements: Sequence[ProjectiveElement], mode: str) -> bool:
    """Exact general-position predicates.

    mode "no3collinear": no three of the given plane points are collinear
    (the quadrangle precondition).  mode "pairwise-skew": no two of the
    given 3-space lines are coplanar (the ruling precondition).
    """
    if mode == "no3collinear":
        pts = list(elements)
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if pts[i] == pts[j]:
                    return False
                for k in range(j + 1, len(pts)):
                    if collinear([pts[i], pts[j], pts[k]]):
                        return False
        return True
    if mode == "pairwise-skew":
        lines = list(elements)
        for i in range(len(lines)):
            for j in range(i + 1, len(lines)):
                if lines[i].is_coplanar_with(lines[j]):
                    return False
        return True
    raise ValueError(f"unknown general-position mode {mode!r}")
