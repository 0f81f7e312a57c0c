"""Exact dense linear algebra over ``Scalar`` entries.

Matrices are tuples of row tuples.  Sizes here are tiny (at most 10
columns, for quadric fitting), so plain Gaussian elimination over the
exact field is both simple and fast.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import DimensionMismatch
from .fields import Field, Scalar

Matrix = tuple[tuple[Scalar, ...], ...]
Vector = tuple[Scalar, ...]


def mat_from_rows(rows: Sequence[Sequence[Scalar]]) -> Matrix:
    return tuple(tuple(row) for row in rows)


def identity(n: int, field: Field) -> Matrix:
    one, zero = field.one, field.zero
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise DimensionMismatch("matrix product size mismatch")
    bt = transpose(b)
    return tuple(
        tuple(_dot(row, col) for col in bt)
        for row in a
    )


def row_vec_mul(v: Vector, m: Matrix) -> Vector:
    """Row vector times matrix (the action of a collineation on points)."""
    if len(v) != len(m):
        raise DimensionMismatch("vector/matrix size mismatch")
    return tuple(_dot(v, col) for col in transpose(m))


def mat_col_mul(m: Matrix, v: Vector) -> Vector:
    """Matrix times column vector (polars, hyperplane transforms)."""
    if len(v) != len(m[0]):
        raise DimensionMismatch("matrix/vector size mismatch")
    return tuple(_dot(row, v) for row in m)


def _dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    acc = u[0] * v[0]
    for x, y in zip(u[1:], v[1:]):
        acc = acc + x * y
    return acc


def determinant(m: Matrix) -> Scalar:
    """Cofactor expansion; matrices here are at most 4x4."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    acc = None
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1:] for row in m[1:])
        term = m[0][j] * determinant(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def adjugate(m: Matrix) -> Matrix:
    """Transpose of the cofactor matrix; equals det(m) * inverse(m)."""
    n = len(m)
    cof = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = tuple(
                tuple(m[r][c] for c in range(n) if c != j)
                for r in range(n) if r != i
            )
            d = determinant(minor)
            cof[i][j] = -d if (i + j) % 2 else d
    return transpose(mat_from_rows(cof))


def _eliminate(rows: list[list[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """In-place reduced row echelon form; returns (rref rows, pivot columns)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    work = [list(row) for row in rows]
    _, pivots = _eliminate(work)
    return len(pivots)


def nullspace(rows: Sequence[Sequence[Scalar]], field: Field, ncols: Optional[int] = None) -> list[Vector]:
    """Basis of the right kernel of the given row matrix."""
    if ncols is None:
        ncols = len(rows[0])
    work = [list(row) for row in rows]
    work, pivots = _eliminate(work)
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[Vector] = []
    for f in free:
        vec = [field.zero] * ncols
        vec[f] = field.one
        for r, c in enumerate(pivots):
            vec[c] = -work[r][f]
        basis.append(tuple(vec))
    return basis


def express_in_span(x: Sequence[Scalar], basis: Sequence[Sequence[Scalar]], field: Field) -> Optional[Vector]:
    """Coefficients a with sum(a_i * basis_i) = x, or None when x is not in the span."""
    cols = list(basis) + [list(x)]
    rows = [[col[i] for col in cols] for i in range(len(x))]
    kernel = nullspace(rows, field, ncols=len(cols))
    for vec in kernel:
        lam = vec[-1]
        if not lam.is_zero:
            scale = -lam.inverse()
            return tuple(c * scale for c in vec[:-1])
    return None
