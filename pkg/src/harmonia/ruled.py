"""Transversal rulings, doubly ruled surfaces, and their polarity.

A ruling is presented by three pairwise-skew generator lines; its rules
are the lines meeting all three.  Surfaces carry a cached symmetric 4x4
matrix fitted exactly through nine generator points, which acts as the
independent analytic oracle for membership, tangency and polarity while
the synthetic constructions (Dandelin configurations, contact pencils,
plane sections) do the geometric work.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import linalg
from .errors import (
    ConfigurationDegenerate,
    CoplanarGenerators,
    DegenerateConfiguration,
    DegenerateHexagon,
    DegenerateLiftChoice,
    DegeneratePointSet,
    GeometryError,
    NotOnCurve,
    NotRulesOfR,
    PlaneNotThroughGenerator,
    PointNotOnGenerator,
    PointNotOnSurface,
    PointOnGenerator,
    PointOnSurface,
    TangentPlane,
)
from .fields import Field, PrimeField, Scalar
from .curves import HarmonicCurve
from .harmonic import LineInvolution, cross_ratio
from .projective import (
    Collineation,
    HLine2,
    HPlane3,
    HPoint2,
    HPoint3,
    PluckerLine,
    collinear,
    join2,
    join3_points,
    join_line_point,
    join_lines3,
    lines_coplanar,
    meet2,
    meet_line_plane,
    meet_lines3,
    meet_planes,
    plane_through,
)


def _element_sum(p, q, t: Scalar):
    coords = tuple(a + t * b for a, b in zip(p.coords, q.coords))
    return type(p)(coords, field=p.field)


def points_on_line3(line: PluckerLine, n: int) -> list[HPoint3]:
    """n distinct points on a 3-space line, from a deterministic ladder."""
    p, q = line.points()
    field = line.field
    out = [p, q]
    t = 1
    while len(out) < n:
        candidate = _element_sum(p, q, field.scalar(t))
        if candidate not in out:
            out.append(candidate)
        t += 1
        if isinstance(field, PrimeField) and t > field.p:
            break
    return out[:n]


def transversal_through_point(x: HPoint3, a: PluckerLine, b: PluckerLine) -> PluckerLine:
    """The unique line through X meeting both of two skew lines."""
    if lines_coplanar(a, b):
        raise CoplanarGenerators("the two lines must be skew")
    if a.contains_point(x) or b.contains_point(x):
        raise PointOnGenerator("X must avoid both lines")
    return meet_planes(join_line_point(a, x), join_line_point(b, x))


class Ruling:
    """Three pairwise-skew generator lines; the rules are their transversals."""

    __slots__ = ("lines", "field")

    def __init__(self, lines: Sequence[PluckerLine]):
        lines = tuple(lines)
        if len(lines) != 3:
            raise CoplanarGenerators("a ruling is generated by exactly three lines")
        for i in range(3):
            for j in range(i + 1, 3):
                if lines[i].is_coplanar_with(lines[j]):
                    raise CoplanarGenerators("generator lines must be pairwise skew")
        object.__setattr__(self, "lines", lines)
        object.__setattr__(self, "field", lines[0].field)

    def __setattr__(self, name, value):
        raise AttributeError("Ruling is immutable")

    def rule_from_plane(self, plane: HPlane3) -> PluckerLine:
        """The rule lying in a plane through one of the generators.

        The plane meets the other two generators in one point each; their
        join is the transversal contained in the plane.
        """
        holder = next((g for g in self.lines if g.in_plane(plane)), None)
        if holder is None:
            raise PlaneNotThroughGenerator("the plane contains no generator")
        others = [g for g in self.lines if g is not holder]
        return join3_points(meet_line_plane(others[0], plane),
                            meet_line_plane(others[1], plane))

    def rule_through_point(self, p: HPoint3) -> PluckerLine:
        """The unique rule through a point of one of the generators."""
        holder = next((g for g in self.lines if g.contains_point(p)), None)
        if holder is None:
            raise PointNotOnGenerator("the point lies on no generator")
        others = [g for g in self.lines if g is not holder]
        return transversal_through_point(p, others[0], others[1])

    def planes_through_generator(self, n: int, index: int = 0) -> list[HPlane3]:
        """n distinct planes of the pencil on one generator (deterministic)."""
        p1, p2 = self.lines[index].planes()
        out = [p1, p2]
        t = 1
        while len(out) < n:
            candidate = _element_sum(p1, p2, self.field.scalar(t))
            if candidate not in out:
                out.append(candidate)
            t += 1
            if isinstance(self.field, PrimeField) and t > self.field.p:
                break
        return out[:n]

    def sample_rules(self, n: int) -> list[PluckerLine]:
        """n distinct rules, one per plane of the pencil on the first generator."""
        return [self.rule_from_plane(plane) for plane in self.planes_through_generator(n)]

    def is_rule(self, line: PluckerLine) -> bool:
        return all(lines_coplanar(line, g) for g in self.lines)


def ruling_rule_from_plane(ruling: Ruling, plane: HPlane3) -> PluckerLine:
    return ruling.rule_from_plane(plane)


def ruling_rule_through_point(ruling: Ruling, p: HPoint3) -> PluckerLine:
    return ruling.rule_through_point(p)


def equipal_check(ruling: Ruling, a_rule: PluckerLine, b_rule: PluckerLine,
                  c_rule: PluckerLine, n_samples: int = 0) -> bool:
    """Instance-level uniqueness of the ruling extension.

    Given three pairwise-skew rules of the ruling's transversal family,
    samples further rules of the family they generate and checks that each
    meets every sampled rule of the original family.  With n_samples = 0
    this degenerates to the mutual-transversality check of the six lines.
    """
    chosen = (a_rule, b_rule, c_rule)
    for i in range(3):
        for j in range(i + 1, 3):
            if chosen[i].is_coplanar_with(chosen[j]):
                raise NotRulesOfR("the chosen rules must be pairwise skew")
    for rule in chosen:
        if not ruling.is_rule(rule):
            raise NotRulesOfR("a chosen line misses some generator")
    for g in ruling.lines:
        if not all(lines_coplanar(g, rule) for rule in chosen):
            return False
    if n_samples <= 0:
        return True
    extension = Ruling(chosen)
    new_rules = extension.sample_rules(n_samples)
    old_rules = ruling.sample_rules(n_samples)
    return all(
        lines_coplanar(new, old)
        for new in new_rules
        for old in old_rules
    )


class QuadricMatrix:
    """A symmetric 4x4 matrix M; P is on the quadric exactly when P M P^T = 0."""

    __slots__ = ("field", "rows", "rank")

    def __init__(self, rows: Sequence[Sequence[Scalar]], field: Field):
        rows = tuple(tuple(field.scalar(c) for c in row) for row in rows)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise DegeneratePointSet("a quadric matrix is 4x4")
        for i in range(4):
            for j in range(i + 1, 4):
                if rows[i][j] != rows[j][i]:
                    raise DegeneratePointSet("a quadric matrix must be symmetric")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "rank", linalg.rank(rows))

    def __setattr__(self, name, value):
        raise AttributeError("QuadricMatrix is immutable")

    def evaluate(self, p: HPoint3) -> Scalar:
        return linalg._dot(p.coords, linalg.mat_col_mul(self.rows, p.coords))

    def contains(self, p: HPoint3) -> bool:
        return self.evaluate(p).is_zero

    def polar_plane_of(self, p: HPoint3) -> HPlane3:
        return HPlane3(linalg.mat_col_mul(self.rows, p.coords), field=self.field)

    def pole_of(self, plane: HPlane3) -> HPoint3:
        return HPoint3(linalg.mat_col_mul(linalg.adjugate(self.rows), plane.coords),
                       field=self.field)

    def is_tangent_plane(self, plane: HPlane3) -> bool:
        return self.contains(self.pole_of(plane))

    def same_quadric(self, other: "QuadricMatrix") -> bool:
        a = [c for row in self.rows for c in row]
        b = [c for row in other.rows for c in row]
        k = next(i for i, c in enumerate(a) if not c.is_zero)
        if b[k].is_zero:
            return False
        return all(a[k] * y == b[k] * x for x, y in zip(a, b))

    def transformed(self, t: Collineation) -> "QuadricMatrix":
        inv = linalg.adjugate(t.matrix)
        return QuadricMatrix(
            linalg.mat_mul(inv, linalg.mat_mul(self.rows, linalg.transpose(inv))),
            field=self.field)

    def restrict_to_standard_plane(self):
        """The 3x3 conic matrix cut out on the plane z = 0 (coords x, y, w)."""
        idx = (0, 1, 3)
        from .curves import ConicMatrix
        return ConicMatrix([[self.rows[i][j] for j in idx] for i in idx], self.field)

    def __repr__(self) -> str:
        return f"QuadricMatrix{self.rows!r}"


def quadric_fit(points: Sequence[HPoint3]) -> QuadricMatrix:
    """The quadric through nine points, solved exactly.

    Raises DegeneratePointSet when the incidence system is rank deficient;
    the caller can inspect ``rank`` on the result to detect degenerate
    (for instance plane-pair) quadrics.
    """
    points = list(points)
    if len(points) != 9:
        raise DegeneratePointSet("a quadric fit needs exactly nine points")
    field = points[0].field
    two = field.scalar(2)
    rows = []
    for p in points:
        x, y, z, w = p.coords
        rows.append([
            x * x, two * x * y, two * x * z, two * x * w,
            y * y, two * y * z, two * y * w,
            z * z, two * z * w,
            w * w,
        ])
    kernel = linalg.nullspace(rows, field)
    if len(kernel) != 1:
        raise DegeneratePointSet("the nine points do not determine a unique quadric")
    c = kernel[0]
    return QuadricMatrix((
        (c[0], c[1], c[2], c[3]),
        (c[1], c[4], c[5], c[6]),
        (c[2], c[5], c[7], c[8]),
        (c[3], c[6], c[8], c[9]),
    ), field)


class RuledSurface:
    """A doubly ruled surface given by a ruling plus three opposite rules."""

    __slots__ = ("ruling", "opposite", "quadric")

    def __init__(self, ruling: Ruling, opposite: Optional[Ruling] = None):
        if opposite is None:
            opposite = Ruling(ruling.sample_rules(3))
        for g in ruling.lines:
            for r in opposite.lines:
                if not lines_coplanar(g, r):
                    raise DegenerateConfiguration(
                        "each opposite rule must meet every generator")
        sample = [p for g in ruling.lines for p in points_on_line3(g, 3)]
        quadric = quadric_fit(sample)
        if quadric.rank != 4:
            raise DegeneratePointSet("generators produced a degenerate quadric")
        object.__setattr__(self, "ruling", ruling)
        object.__setattr__(self, "opposite", opposite)
        object.__setattr__(self, "quadric", quadric)

    def __setattr__(self, name, value):
        raise AttributeError("RuledSurface is immutable")

    @classmethod
    def from_generators(cls, a: PluckerLine, b: PluckerLine, c: PluckerLine) -> "RuledSurface":
        return cls(Ruling((a, b, c)))

    @property
    def field(self) -> Field:
        return self.ruling.field

    def contains(self, p: HPoint3) -> bool:
        return self.quadric.contains(p)

    def rule_through(self, z: HPoint3, family: str) -> PluckerLine:
        """The rule through a surface point Z in the requested family.

        family "opposite" gives the transversal to the three generators,
        family "generator" the transversal to the three opposite rules.
        """
        if not self.contains(z):
            raise PointNotOnSurface("the point is not on the surface")
        base = self.ruling.lines if family == "opposite" else self.opposite.lines
        carriers = [g for g in base if not g.contains_point(z)]
        return transversal_through_point(z, carriers[0], carriers[1])

    def sample_points(self, n: int) -> list[HPoint3]:
        """n distinct surface points spread over sampled rules."""
        out: list[HPoint3] = []
        per_rule = max(2, n // 3 + 1)
        for rule in self.ruling.sample_rules(3) + list(self.ruling.lines):
            for p in points_on_line3(rule, per_rule):
                if p not in out:
                    out.append(p)
                if len(out) >= n:
                    return out
        return out


def tangent_plane_at(surface: RuledSurface, z: HPoint3) -> HPlane3:
    """The plane spanned by the two rules through a surface point."""
    rule_a = surface.rule_through(z, "opposite")
    rule_b = surface.rule_through(z, "generator")
    return join_lines3(rule_a, rule_b)


class DandelinConfiguration:
    """Six lines in two colour classes meeting exactly across classes."""

    __slots__ = ("red", "blue")

    def __init__(self, red: Sequence[PluckerLine], blue: Sequence[PluckerLine]):
        red, blue = tuple(red), tuple(blue)
        if len(red) != 3 or len(blue) != 3:
            raise DegenerateConfiguration("a configuration has three lines per colour")
        for family in (red, blue):
            for i in range(3):
                for j in range(i + 1, 3):
                    if lines_coplanar(family[i], family[j]):
                        raise DegenerateConfiguration("same-colour lines must be skew")
        for r in red:
            for b in blue:
                if not lines_coplanar(r, b):
                    raise DegenerateConfiguration("opposite-colour lines must meet")
        object.__setattr__(self, "red", red)
        object.__setattr__(self, "blue", blue)

    def __setattr__(self, name, value):
        raise AttributeError("DandelinConfiguration is immutable")

    def basic_points(self) -> list[list[HPoint3]]:
        return [[meet_lines3(r, b) for b in self.blue] for r in self.red]

    def tangent_planes(self) -> list[list[HPlane3]]:
        return [[join_lines3(r, b) for b in self.blue] for r in self.red]


def dandelin_from_surface(surface: RuledSurface, p: HPoint3) -> DandelinConfiguration:
    """The six-line configuration cut out by an external point.

    For each generator g there is exactly one opposite rule g' with P on
    the plane g v g'; the three generators and these three rules form the
    configuration.
    """
    if surface.contains(p):
        raise PointOnSurface("the point lies on the surface")
    blue = []
    for g in surface.ruling.lines:
        plane = join_line_point(g, p)
        blue.append(surface.ruling.rule_from_plane(plane))
    return DandelinConfiguration(surface.ruling.lines, blue)


def polar_plane(surface: RuledSurface, p: HPoint3) -> HPlane3:
    """Synthetic polar plane of an external point.

    It is the plane through the three contact points where each generator
    meets the opposite rule coplanar with P.
    """
    config = dandelin_from_surface(surface, p)
    contacts = [meet_lines3(r, b) for r, b in zip(config.red, config.blue)]
    return plane_through(*contacts)


def pole_of_plane(surface: RuledSurface, plane: HPlane3) -> HPoint3:
    """Synthetic pole of a non-tangent plane.

    The tangent planes at the three points where the generators pierce
    the plane are concurrent in the pole.
    """
    if surface.quadric.is_tangent_plane(plane):
        raise TangentPlane("the plane is tangent to the surface")
    tangent_planes = []
    for g in surface.ruling.lines:
        if g.in_plane(plane):
            raise TangentPlane("the plane contains a rule")
        contact = meet_line_plane(g, plane)
        opposite_rule = surface.ruling.rule_through_point(contact)
        tangent_planes.append(join_lines3(g, opposite_rule))
    line = meet_planes(tangent_planes[0], tangent_planes[1])
    return meet_line_plane(line, tangent_planes[2])


def harmonic_pencil_at_contact(config: DandelinConfiguration, p: HPoint3,
                               plane: HPlane3, index: Optional[int] = None) -> bool:
    """Harmonicity of the contact pencil(s) of a configuration.

    At the contact point A of a generator g with its partner rule g', the
    four coplanar lines g, A v P, g', and the trace of the polar plane on
    the tangent plane must form a harmonic pencil (in that dihedral
    order).  With index None all three contacts are required.
    """
    indices = range(3) if index is None else [index]
    for i in indices:
        g, g_prime = config.red[i], config.blue[i]
        contact = meet_lines3(g, g_prime)
        alpha = join_lines3(g, g_prime)
        if contact == p:
            raise DegenerateConfiguration("the pole coincides with a contact point")
        lines = [g, join3_points(contact, p), g_prime, meet_planes(alpha, plane)]
        section = join3_points(
            next(q for q in points_on_line3(g, 3) if q != contact),
            next(q for q in points_on_line3(g_prime, 3) if q != contact),
        )
        cuts = []
        for l in lines:
            if not lines_coplanar(l, section):
                return False
            cuts.append(meet_lines3(l, section))
        try:
            ratio = cross_ratio(cuts[0], cuts[2], cuts[1], cuts[3])
        except GeometryError:
            return False
        if ratio != -p.field.one:
            return False
    return True


class PlaneChart:
    """Exact projective coordinates on a plane of 3-space.

    A chart is a basis of three independent points of the plane; mapping
    back and forth is exact linear algebra, and charted figures transform
    by a collineation, so harmonicity is preserved both ways.
    """

    __slots__ = ("plane", "basis", "field")

    def __init__(self, plane: HPlane3, basis: Sequence[HPoint3]):
        basis = tuple(basis)
        if len(basis) != 3 or linalg.rank([b.coords for b in basis]) != 3:
            raise DegenerateConfiguration("a chart needs three independent points")
        if not all(plane.contains(b) for b in basis):
            raise DegenerateConfiguration("chart basis must lie on the plane")
        object.__setattr__(self, "plane", plane)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "field", plane.field)

    def __setattr__(self, name, value):
        raise AttributeError("PlaneChart is immutable")

    @classmethod
    def standard(cls, field: Field) -> "PlaneChart":
        """The plane z = 0 charted so (x : y : w) embeds as (x : y : 0 : w)."""
        return cls(HPlane3(0, 0, 1, 0, field=field), (
            HPoint3(1, 0, 0, 0, field=field),
            HPoint3(0, 1, 0, 0, field=field),
            HPoint3(0, 0, 0, 1, field=field),
        ))

    @classmethod
    def for_plane(cls, plane: HPlane3) -> "PlaneChart":
        basis = [HPoint3(v, field=plane.field)
                 for v in linalg.nullspace([plane.coords], plane.field)]
        return cls(plane, basis)

    def to_space(self, p: HPoint2) -> HPoint3:
        coords = [self.field.zero] * 4
        for coeff, b in zip(p.coords, self.basis):
            coords = [acc + coeff * x for acc, x in zip(coords, b.coords)]
        return HPoint3(coords, field=self.field)

    def to_plane2(self, p: HPoint3) -> HPoint2:
        coeff = linalg.express_in_span(p.coords, [b.coords for b in self.basis], self.field)
        if coeff is None:
            raise GeometryError("the point is not on the chart plane")
        return HPoint2(coeff, field=self.field)

    def line_to_space(self, l: HLine2) -> PluckerLine:
        kernel = linalg.nullspace([l.coords], self.field)
        p1 = self.to_space(HPoint2(kernel[0], field=self.field))
        p2 = self.to_space(HPoint2(kernel[1], field=self.field))
        return join3_points(p1, p2)

    def line_to_plane2(self, line: PluckerLine) -> HLine2:
        p1, p2 = line.points()
        return join2(self.to_plane2(p1), self.to_plane2(p2))


@dataclass(frozen=True)
class LiftResult:
    """A ruled surface through a planar curve, with its polar pole."""

    surface: RuledSurface
    pole: HPoint3
    plane: HPlane3
    chart: PlaneChart


def _off_plane_ladder(plane: HPlane3, field: Field) -> list[HPoint3]:
    candidates = []
    basis = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    raw = list(basis)
    raw += [tuple(a + b for a, b in zip(u, v))
            for i, u in enumerate(basis) for v in basis[i + 1:]]
    raw.append((1, 1, 1, 1))
    raw += [(1, 2, 3, 4), (4, 3, 2, 1), (1, -1, 2, -2), (2, 1, -1, 3)]
    for coords in raw:
        point = HPoint3(coords, field=field)
        if not plane.contains(point) and point not in candidates:
            candidates.append(point)
    return candidates


def lift_curve_to_surface(curve: HarmonicCurve,
                          chart: Optional[PlaneChart] = None) -> LiftResult:
    """A doubly ruled surface cutting the given planar curve on its plane.

    Two points P and S are chosen off the plane on a line through the
    tangent meet Q; reflecting S harmonically across (P, Q) produces the
    crossing pattern of a six-line configuration whose surface meets the
    plane exactly in the curve, with (P, plane) a polar pair.
    """
    if chart is None:
        chart = PlaneChart.standard(curve.field)
    a2, c2, b2, _ = curve.vertices
    a3 = chart.to_space(a2)
    b3 = chart.to_space(b2)
    c3 = chart.to_space(c2)
    q3 = chart.to_space(curve.tangent_meet)

    for pole in _off_plane_ladder(chart.plane, curve.field):
        if pole == q3:
            continue
        s_point = _element_sum(pole, q3, curve.field.one)
        s_mirror = LineInvolution(pole, q3).apply(s_point)
        try:
            red1 = join3_points(s_point, a3)
            red2 = join3_points(s_mirror, b3)
            blue1 = join3_points(s_mirror, a3)
            blue2 = join3_points(s_point, b3)
            red3 = transversal_through_point(c3, blue1, blue2)
            blue3 = transversal_through_point(c3, red1, red2)
            surface = RuledSurface(Ruling((red1, red2, red3)),
                                   Ruling((blue1, blue2, blue3)))
        except GeometryError:
            continue
        if surface.contains(pole):
            continue
        return LiftResult(surface=surface, pole=pole, plane=chart.plane, chart=chart)
    raise DegenerateLiftChoice("no auxiliary choice lifted the curve")


@dataclass(frozen=True)
class SectionResult:
    """A plane section of a ruled surface presented as a harmonic curve."""

    points3: list[HPoint3]
    curve: HarmonicCurve
    chart: PlaneChart
    pole: HPoint3


def section(surface: RuledSurface, plane: HPlane3, n_samples: int = 10,
            chart: Optional[PlaneChart] = None) -> SectionResult:
    """Section of a surface by a non-tangent plane, as a harmonic curve.

    Three section points are taken; the tangent planes there cut the
    section's tangent lines on the plane, and the fourth vertex of the
    generating quadrangle is constructed by the harmonic reflection in
    (tangent meet, base chord).
    """
    pole = surface.quadric.pole_of(plane)
    if surface.quadric.contains(pole):
        raise TangentPlane("the plane is tangent to the surface")
    if chart is None:
        chart = PlaneChart.for_plane(plane)
    rules = surface.ruling.sample_rules(max(n_samples, 3) + 2)
    points3: list[HPoint3] = []
    for rule in rules:
        hit = meet_line_plane(rule, plane)
        if hit not in points3:
            points3.append(hit)
    a3, b3, c3 = points3[:3]
    a_tangent = chart.line_to_plane2(meet_planes(tangent_plane_at(surface, a3), plane))
    b_tangent = chart.line_to_plane2(meet_planes(tangent_plane_at(surface, b3), plane))
    curve = HarmonicCurve.from_pointpair_tangents(
        chart.to_plane2(a3), a_tangent, chart.to_plane2(b3), b_tangent,
        chart.to_plane2(c3))
    return SectionResult(points3=points3[:n_samples], curve=curve, chart=chart, pole=pole)


# -- Pappus, Pascal and the ruling-uniqueness witness -------------------------

def _pappus_points(a_pts: Sequence[HPoint2], b_pts: Sequence[HPoint2]) -> tuple[HPoint2, HPoint2, HPoint2]:
    a1, a2, a3 = a_pts
    b1, b2, b3 = b_pts
    p1 = meet2(join2(a2, b3), join2(a3, b2))
    p2 = meet2(join2(a1, b3), join2(a3, b1))
    p3 = meet2(join2(a1, b2), join2(a2, b1))
    return p1, p2, p3


def _collinear_allowing_coincidence(points: Sequence[HPoint2]) -> bool:
    distinct = []
    for p in points:
        if p not in distinct:
            distinct.append(p)
    return len(distinct) < 3 or collinear(distinct)


def pappus_check(a0: HLine2, b0: HLine2, b_pts: Sequence[HPoint2],
                 a_pts: Sequence[HPoint2]) -> tuple[tuple[HPoint2, HPoint2, HPoint2], bool]:
    """The three cross-join points of a hexagon on two lines, with verdict.

    b_pts live on a0 and a_pts on b0, all distinct and away from the meet
    of the two carrier lines.  Over a commutative field the verdict is
    always True.
    """
    if a0 == b0:
        raise DegenerateHexagon("carrier lines coincide")
    crossing = meet2(a0, b0)
    b_pts, a_pts = tuple(b_pts), tuple(a_pts)
    if len(b_pts) != 3 or len(a_pts) != 3:
        raise DegenerateHexagon("three points per carrier line are required")
    if len(set(b_pts)) != 3 or len(set(a_pts)) != 3:
        raise DegenerateHexagon("hexagon points must be distinct")
    for p in b_pts:
        if not a0.contains(p) or p == crossing:
            raise DegenerateHexagon("points for the first line are invalid")
    for p in a_pts:
        if not b0.contains(p) or p == crossing:
            raise DegenerateHexagon("points for the second line are invalid")
    points = _pappus_points(a_pts, b_pts)
    return points, _collinear_allowing_coincidence(points)


def pascal_check(curve: HarmonicCurve, hexagon: Sequence[HPoint2]
                 ) -> tuple[tuple[HPoint2, HPoint2, HPoint2], bool]:
    """Meets of opposite sides of a hexagon inscribed in a harmonic curve."""
    hexagon = tuple(hexagon)
    if len(hexagon) != 6 or len(set(hexagon)) != 6:
        raise DegenerateHexagon("six distinct vertices are required")
    for z in hexagon:
        if not curve.contains(z):
            raise NotOnCurve("a hexagon vertex is off the curve")
    sides = [join2(hexagon[i], hexagon[(i + 1) % 6]) for i in range(6)]
    points = tuple(meet2(sides[i], sides[i + 3]) for i in range(3))
    return points, _collinear_allowing_coincidence(points)


@dataclass(frozen=True)
class PappusWitness:
    """Eight lines of two colours built over a planar hexagon-on-two-lines."""

    a_lines: tuple[PluckerLine, PluckerLine, PluckerLine, PluckerLine]
    b_lines: tuple[PluckerLine, PluckerLine, PluckerLine, PluckerLine]
    plane: HPlane3
    chart: PlaneChart


def build_pappus_witness(a0: HLine2, b0: HLine2, b_pts: Sequence[HPoint2],
                         a_pts: Sequence[HPoint2],
                         chart: Optional[PlaneChart] = None,
                         displaced_b3: Optional[HPoint2] = None) -> PappusWitness:
    """Lift a hexagon-on-two-lines into the eight-line space configuration.

    Lines a1, a2 are drawn through the first two hexagon points of the
    second carrier toward points off the plane; the b-lines are the
    transversals through the hexagon points of the first carrier; a3 is
    the transversal through the remaining point.  With ``displaced_b3``
    the last b-line is rebuilt through a displaced point, which breaks
    the closing incidence exactly when it breaks planar collinearity.
    """
    field = a0.field
    if chart is None:
        chart = PlaneChart.standard(field)
    pappus_check(a0, b0, b_pts, a_pts)  # validate the planar data
    a3_0 = chart.line_to_space(a0)
    b3_0 = chart.line_to_space(b0)
    a_space = [chart.to_space(p) for p in a_pts]
    b_space = [chart.to_space(p) for p in b_pts]
    if displaced_b3 is not None:
        b_space[2] = chart.to_space(displaced_b3)

    ladder = _off_plane_ladder(chart.plane, field)
    for i, e1 in enumerate(ladder):
        for e2 in ladder[i + 1:]:
            try:
                a1 = join3_points(a_space[0], e1)
                a2 = join3_points(a_space[1], e2)
            except GeometryError:
                continue
            if lines_coplanar(a1, a2) or lines_coplanar(a1, a3_0) or lines_coplanar(a2, a3_0):
                continue
            try:
                b_lines = [transversal_through_point(bp, a1, a2) for bp in b_space]
                a3 = transversal_through_point(a_space[2], b_lines[0], b_lines[1])
            except GeometryError:
                continue
            return PappusWitness(
                a_lines=(a3_0, a1, a2, a3),
                b_lines=(b3_0, b_lines[0], b_lines[1], b_lines[2]),
                plane=chart.plane,
                chart=chart,
            )
    raise DegenerateLiftChoice("no off-plane choice produced a witness configuration")


def equipal_from_pappus_witness(a_lines: Sequence[PluckerLine],
                                b_lines: Sequence[PluckerLine]) -> bool:
    """Whether the closing pair of the eight-line configuration meets.

    The precondition checked strictly is the core pattern: same-colour
    lines pairwise skew and every opposite-colour pair with both indices
    below 3 meeting.  The boundary incidences involving index 3 are part
    of the construction, not of the precondition, so a perturbed last line
    simply yields a False verdict instead of an error.
    """
    a_lines, b_lines = tuple(a_lines), tuple(b_lines)
    if len(a_lines) != 4 or len(b_lines) != 4:
        raise ConfigurationDegenerate("four lines per colour are required")
    for family in (a_lines, b_lines):
        for i in range(4):
            for j in range(i + 1, 4):
                if lines_coplanar(family[i], family[j]):
                    raise ConfigurationDegenerate("same-colour lines must be pairwise skew")
    for i in range(3):
        for j in range(3):
            if not lines_coplanar(a_lines[i], b_lines[j]):
                raise ConfigurationDegenerate(
                    f"lines a{i} and b{j} must meet in this configuration")
    return lines_coplanar(a_lines[3], b_lines[3])
