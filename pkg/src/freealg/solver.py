"""Matrices of additive mappings and systems of additive equations.

A MapMatrix is a grid of linear maps, all endomorphisms of one algebra,
multiplied by composing entries.  Inversion and solving go through the
flattening to one big rational matrix, which is exact and total; the
quasideterminant recursion is kept as an independent second path that
reports per-entry quasideterminants and cross-validates the flattening.

The complex field gets a closed form: every additive map of C is
z -> a z + b conj(z), composed and inverted directly in (a, b) form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import exact
from .algebras import COMPLEX_TAG, conjugate
from .core import AlgElement, FreeAlgebra, multiply
from .errors import (AlgebraMismatch, MinorSingular, ShapeMismatch, SingularMap,
                     SingularSystem, SubstitutionCheckFailed, UnsupportedAlgebra)
from .linmap import LinearMap, apply, compose


class MapMatrix:
    """A rows x cols grid of linear maps over a single algebra."""

    __slots__ = ("algebra", "rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[LinearMap]]):
        if not entries or not entries[0]:
            raise ShapeMismatch("a matrix of mappings needs at least one entry")
        rows = len(entries)
        cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise ShapeMismatch("rows have differing lengths")
        algebra = entries[0][0].source
        for row in entries:
            for f in row:
                if not f.is_endomorphism() or f.source is not algebra:
                    raise AlgebraMismatch(
                        "all entries must be endomorphisms of one algebra")
        self.algebra = algebra
        self.rows = rows
        self.cols = cols
        self.entries = tuple(tuple(row) for row in entries)

    @classmethod
    def identity(cls, algebra: FreeAlgebra, n: int) -> "MapMatrix":
        delta = LinearMap.identity(algebra)
        zero = LinearMap.zero(algebra)
        return cls([[delta if i == j else zero for j in range(n)] for i in range(n)])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "MapMatrix":
        return MapMatrix([[self.entries[r][c] for r in range(self.rows)]
                          for c in range(self.cols)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, MapMatrix)
                and self.algebra is other.algebra
                and self.entries == other.entries)

    def __repr__(self) -> str:
        return f"MapMatrix({self.rows}x{self.cols} over {self.algebra!r})"


def _sum_maps(maps: list[LinearMap], algebra: FreeAlgebra) -> LinearMap:
    total = LinearMap.zero(algebra)
    for f in maps:
        total = total + f
    return total


def rc_product(b: MapMatrix, c: MapMatrix) -> MapMatrix:
    """Row-by-column product: entry (a, d) = sum_s b[a][s] after c[s][d]."""
    if b.algebra is not c.algebra:
        raise AlgebraMismatch("matrices over different algebras")
    if b.cols != c.rows:
        raise ShapeMismatch(f"cannot multiply {b.rows}x{b.cols} by {c.rows}x{c.cols}")
    return MapMatrix([
        [_sum_maps([compose(b.entries[a][s], c.entries[s][d]) for s in range(b.cols)],
                   b.algebra)
         for d in range(c.cols)]
        for a in range(b.rows)])


def cr_product(b: MapMatrix, c: MapMatrix) -> MapMatrix:
    """Column-by-row product: entry (a, d) = sum_s b[s][d] after c[a][s].

    Equals the transpose of rc_product of the transposes; coincides with
    rc_product on 1x1 and on diagonal matrices.
    """
    if b.algebra is not c.algebra:
        raise AlgebraMismatch("matrices over different algebras")
    if c.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {b.rows}x{b.cols} by {c.rows}x{c.cols}")
    return MapMatrix([
        [_sum_maps([compose(b.entries[s][d], c.entries[a][s]) for s in range(b.rows)],
                   b.algebra)
         for d in range(b.cols)]
        for a in range(c.rows)])


def flatten(m: MapMatrix) -> list[list[Fraction]]:
    """The (rows*n) x (cols*n) block matrix of all entry coordinates.

    rc_product corresponds exactly to block-matrix multiplication of
    flattenings.
    """
    n = m.algebra.dim
    out = exact.zeros(m.rows * n, m.cols * n)
    for r in range(m.rows):
        for c in range(m.cols):
            block = m.entries[r][c].coords
            for i in range(n):
                for j in range(n):
                    out[r * n + i][c * n + j] = block[i][j]
    return out


def unflatten(matrix, algebra: FreeAlgebra, rows: int, cols: int) -> MapMatrix:
    n = algebra.dim
    return MapMatrix([
        [LinearMap(algebra, algebra,
                   [[matrix[r * n + i][c * n + j] for j in range(n)] for i in range(n)])
         for c in range(cols)]
        for r in range(rows)])


def inverse_map_matrix(m: MapMatrix) -> MapMatrix:
    """The two-sided inverse under the row-by-column product.

    Computed by exact inversion of the flattening; SingularSystem when
    that matrix (equivalently the matrix of mappings) is singular.
    """
    if not m.is_square():
        raise ShapeMismatch("only square matrices of mappings have inverses")
    try:
        inv = exact.invert(flatten(m))
    except ValueError as err:
        raise SingularSystem(f"matrix of mappings is singular ({err})") from None
    return unflatten(inv, m.algebra, m.rows, m.cols)


def _delete_row_col(m: MapMatrix, row: int, col: int) -> MapMatrix:
    return MapMatrix([
        [m.entries[r][c] for c in range(m.cols) if c != col]
        for r in range(m.rows) if r != row])


def _invert_linear_map(f: LinearMap) -> LinearMap:
    return LinearMap(f.source, f.target, exact.invert(f.matrix()))


def _recursive_inverse(m: MapMatrix, path: tuple) -> MapMatrix:
    """Inverse via quasideterminants: entry (i, j) is the inverse of the
    (j, i) quasideterminant.  Demands every involved minor invertible."""
    out = []
    for i in range(m.rows):
        row = []
        for j in range(m.cols):
            d = _quasidet(m, j, i, path)
            try:
                row.append(_invert_linear_map(d))
            except ValueError:
                raise MinorSingular(
                    f"quasideterminant at row {j}, col {i} is a singular map"
                    f" (minor path {path})", location=path + ((j, i),)) from None
        out.append(row)
    return MapMatrix(out)


def _quasidet(m: MapMatrix, row: int, col: int, path: tuple) -> LinearMap:
    if m.rows == 1:
        return m.entries[0][0]
    minor = _delete_row_col(m, row, col)
    minor_inv = _recursive_inverse(minor, path + ((row, col),))
    rest_cols = [c for c in range(m.cols) if c != col]
    rest_rows = [r for r in range(m.rows) if r != row]
    correction = LinearMap.zero(m.algebra)
    for s, c in enumerate(rest_cols):
        for t, r in enumerate(rest_rows):
            correction = correction + compose(
                m.entries[row][c],
                compose(minor_inv.entries[s][t], m.entries[r][col]))
    return m.entries[row][col] - correction


def quasideterminant(m: MapMatrix, row: int, col: int) -> LinearMap:
    """The (row, col) quasideterminant by the minor recursion:

        entry(row, col) - row-rest o minor^{-1} o col-rest

    where the minor drops ``row`` and ``col`` and is inverted through
    its own quasideterminants.  MinorSingular (naming the minor) signals
    a singular intermediate; the caller may fall back to
    inverse_map_matrix, whose (col, row) entry inverts to the same map
    whenever both routes exist.
    """
    if not m.is_square():
        raise ShapeMismatch("quasideterminants need a square matrix")
    if not (0 <= row < m.rows and 0 <= col < m.cols):
        raise ShapeMismatch("quasideterminant index out of range")
    return _quasidet(m, row, col, ())


def solve_additive(m: MapMatrix, rhs: Sequence[AlgElement]) -> list[AlgElement]:
    """Solve the system  sum_j m[i][j](x_j) = rhs_i  for x.

    Applies the entries of the inverse matrix of mappings to the right
    side, then verifies the result by substitution before returning.
    """
    if not m.is_square():
        raise ShapeMismatch("system matrix must be square")
    if len(rhs) != m.rows:
        raise ShapeMismatch(f"expected {m.rows} right-hand elements, got {len(rhs)}")
    for x in rhs:
        if x.algebra is not m.algebra:
            raise AlgebraMismatch("right side must live in the system's algebra")
    inverse = inverse_map_matrix(m)
    solution = []
    for i in range(m.rows):
        acc = m.algebra.zero()
        for j in range(m.cols):
            acc = acc + apply(inverse.entries[i][j], rhs[j])
        solution.append(acc)
    for i in range(m.rows):
        acc = m.algebra.zero()
        for j in range(m.cols):
            acc = acc + apply(m.entries[i][j], solution[j])
        if acc != rhs[i]:
            raise SubstitutionCheckFailed(
                f"solution fails substitution in equation {i}")
    return solution


class ComplexAdditiveMap:
    """An additive map of the complex field, z -> a z + b conj(z).

    Round-trips with its 2x2 real coordinate matrix: multiplication by
    a = a0 + a1 i contributes ((a0, -a1), (a1, a0)) and b-conjugation
    contributes ((b0, b1), (b1, -b0)).
    """

    __slots__ = ("a", "b")

    def __init__(self, a: AlgElement, b: AlgElement):
        if a.algebra is not b.algebra:
            raise AlgebraMismatch("a and b must share one complex algebra")
        if a.algebra.tag != COMPLEX_TAG:
            raise UnsupportedAlgebra("defined over the built-in complex algebra")
        self.a = a
        self.b = b

    @property
    def algebra(self) -> FreeAlgebra:
        return self.a.algebra

    @classmethod
    def multiplication(cls, a: AlgElement) -> "ComplexAdditiveMap":
        return cls(a, a.algebra.zero())

    @classmethod
    def conjugation(cls, algebra: FreeAlgebra) -> "ComplexAdditiveMap":
        return cls(algebra.zero(), algebra.unit())

    @classmethod
    def identity(cls, algebra: FreeAlgebra) -> "ComplexAdditiveMap":
        return cls(algebra.unit(), algebra.zero())

    @classmethod
    def from_linear_map(cls, f: LinearMap) -> "ComplexAdditiveMap":
        if f.source.tag != COMPLEX_TAG or not f.is_endomorphism():
            raise UnsupportedAlgebra("expected an endomorphism of the complex algebra")
        m = f.coords
        half = Fraction(1, 2)
        a = f.source.element([(m[0][0] + m[1][1]) * half, (m[1][0] - m[0][1]) * half])
        b = f.source.element([(m[0][0] - m[1][1]) * half, (m[1][0] + m[0][1]) * half])
        return cls(a, b)

    def to_linear_map(self) -> LinearMap:
        a0, a1 = self.a.coords
        b0, b1 = self.b.coords
        return LinearMap(self.algebra, self.algebra,
                         [[a0 + b0, -a1 + b1], [a1 + b1, a0 - b0]])

    def __call__(self, z: AlgElement) -> AlgElement:
        return multiply(self.a, z) + multiply(self.b, conjugate(z))

    def __eq__(self, other) -> bool:
        return (isinstance(other, ComplexAdditiveMap)
                and self.a == other.a and self.b == other.b)

    def __repr__(self) -> str:
        from .core import format_element
        return f"({format_element(self.a)}) + ({format_element(self.b)})*conj"


def cadd_product(f: ComplexAdditiveMap, g: ComplexAdditiveMap) -> ComplexAdditiveMap:
    """Composition f after g in (a, b) form:
    h0 = f0 g0 + f1 conj(g1),  h1 = f0 g1 + f1 conj(g0)."""
    if f.algebra is not g.algebra:
        raise AlgebraMismatch("maps over different complex algebras")
    h0 = multiply(f.a, g.a) + multiply(f.b, conjugate(g.b))
    h1 = multiply(f.a, g.b) + multiply(f.b, conjugate(g.a))
    return ComplexAdditiveMap(h0, h1)


def cadd_inverse(f: ComplexAdditiveMap) -> ComplexAdditiveMap:
    """Two-sided inverse of z -> a z + b conj(z).

    When b != 0 the closed form applies: with the real denominator
    d = b conj(b) - a conj(a),

        g0 = -conj(a) / d,        g1 = b / d.

    (Solving f o g = 1 gives conj(g1) = conj(b)/d, so g1 itself is b/d;
    published statements of this inverse sometimes leave the bar on the
    right side, which only coincides when b is real.)  When b = 0 that
    derivation degenerates and the 2x2 matrix inverse is authoritative.
    Both paths compose to the identity, which is checked before
    returning; SingularMap when the coordinate matrix is singular.
    """
    algebra = f.algebra
    a0, a1 = f.a.coords
    b0, b1 = f.b.coords
    det = (a0 * a0 + a1 * a1) - (b0 * b0 + b1 * b1)
    if det == 0:
        raise SingularMap("additive map has singular coordinate matrix")
    if not f.b.is_zero():
        denominator = (b0 * b0 + b1 * b1) - (a0 * a0 + a1 * a1)
        scale = Fraction(1) / denominator
        g = ComplexAdditiveMap(conjugate(f.a).scaled(-scale),
                               f.b.scaled(scale))
    else:
        g = ComplexAdditiveMap.from_linear_map(
            LinearMap(algebra, algebra, exact.invert(f.to_linear_map().matrix())))
    ident = ComplexAdditiveMap.identity(algebra)
    if cadd_product(f, g) != ident or cadd_product(g, f) != ident:
        raise SubstitutionCheckFailed("computed inverse fails to compose to identity")
    return g
