"""Linear mappings of free algebras as exact coordinate matrices.

A map f is stored as its target.dim x source.dim matrix f[i][j] with
(f x)^i = sum_j f[i][j] x^j.  The module also builds the n^2 x n^2
component matrix that links a map's coordinates to its standard
components f^{ij} in the sandwich expansion

    f(x) = sum_{i,j} f^{ij} (e_i x) e_j        (order="left")
    f(x) = sum_{i,j} f^{ij} e_i (x e_j)        (order="right")

and solves it in both directions.  The two nesting orders coincide in
associative algebras; "left" is the default everywhere.

Vectorization convention: a coordinate matrix is flattened row by row,
row index = target coordinate (outer), column index = source coordinate
(inner).  Component pairs (i, j) are flattened the same way.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Optional

from . import exact
from .core import AlgElement, FreeAlgebra, associator, multiply
from .errors import AlgebraMismatch, NoUnit, NotRepresentable
from .exact import ZERO, frac
from .tensor import Tensor2

_ORDERS = ("left", "right")


def _check_order(order: str) -> str:
    if order not in _ORDERS:
        raise ValueError(f"nesting order must be one of {_ORDERS}, got {order!r}")
    return order


class LinearMap:
    """A linear map between free algebras, as a rational matrix."""

    __slots__ = ("source", "target", "coords")

    def __init__(self, source: FreeAlgebra, target: FreeAlgebra, coords):
        if len(coords) != target.dim or any(len(row) != source.dim for row in coords):
            raise ValueError(
                f"coordinate matrix must be {target.dim}x{source.dim}")
        self.source = source
        self.target = target
        self.coords = tuple(tuple(frac(v) for v in row) for row in coords)

    @classmethod
    def identity(cls, algebra: FreeAlgebra) -> "LinearMap":
        return cls(algebra, algebra, exact.identity(algebra.dim))

    @classmethod
    def zero(cls, source: FreeAlgebra, target: Optional[FreeAlgebra] = None) -> "LinearMap":
        target = target or source
        return cls(source, target, exact.zeros(target.dim, source.dim))

    def is_endomorphism(self) -> bool:
        return self.source is self.target

    def matrix(self) -> list[list[Fraction]]:
        return [list(row) for row in self.coords]

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearMap)
                and self.source is other.source
                and self.target is other.target
                and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.source), id(self.target), self.coords))

    def __add__(self, other: "LinearMap") -> "LinearMap":
        if self.source is not other.source or self.target is not other.target:
            raise AlgebraMismatch("maps act on different algebras")
        return LinearMap(self.source, self.target,
                         exact.mat_add(self.matrix(), other.matrix()))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + (-other)

    def __neg__(self) -> "LinearMap":
        return LinearMap(self.source, self.target,
                         [[-v for v in row] for row in self.coords])

    def scaled(self, scalar) -> "LinearMap":
        s = frac(scalar)
        return LinearMap(self.source, self.target,
                         [[s * v for v in row] for row in self.coords])

    def __repr__(self) -> str:
        return f"LinearMap({self.target.dim}x{self.source.dim})"


def apply(f: LinearMap, x: AlgElement) -> AlgElement:
    """Matrix-vector action of f on x."""
    if x.algebra is not f.source:
        raise AlgebraMismatch("element is not in the map's source algebra")
    return AlgElement(f.target, tuple(
        sum((row[j] * x.coords[j] for j in range(f.source.dim)
             if x.coords[j] != 0), ZERO)
        for row in f.coords))


def compose(g: LinearMap, f: LinearMap) -> LinearMap:
    """g after f; coordinates multiply as matrices."""
    if f.target is not g.source:
        raise AlgebraMismatch("compose needs f.target == g.source")
    return LinearMap(f.source, g.target, exact.mat_mul(g.matrix(), f.matrix()))


def left_shift(a: AlgElement) -> LinearMap:
    """The map x -> a x."""
    algebra = a.algebra
    cols = [multiply(a, algebra.basis_element(j)).coords for j in range(algebra.dim)]
    return LinearMap(algebra, algebra,
                     [[cols[j][k] for j in range(algebra.dim)] for k in range(algebra.dim)])


def right_shift(a: AlgElement) -> LinearMap:
    """The map x -> x a."""
    algebra = a.algebra
    cols = [multiply(algebra.basis_element(i), a).coords for i in range(algebra.dim)]
    return LinearMap(algebra, algebra,
                     [[cols[i][k] for i in range(algebra.dim)] for k in range(algebra.dim)])


def left_associator_map(a: AlgElement, b: AlgElement) -> LinearMap:
    """The map x -> (a, b, x); measures the failure of l(a)l(b) = l(ab)."""
    algebra = a.algebra
    cols = [associator(a, b, algebra.basis_element(j)).coords for j in range(algebra.dim)]
    return LinearMap(algebra, algebra,
                     [[cols[j][k] for j in range(algebra.dim)] for k in range(algebra.dim)])


def right_associator_map(b: AlgElement, a: AlgElement) -> LinearMap:
    """The map x -> (x, b, a); measures the failure of r(a)r(b) = r(ba)."""
    algebra = a.algebra
    cols = [associator(algebra.basis_element(j), b, a).coords for j in range(algebra.dim)]
    return LinearMap(algebra, algebra,
                     [[cols[j][k] for j in range(algebra.dim)] for k in range(algebra.dim)])


def sandwich(a: AlgElement, f: LinearMap, b: AlgElement, order: str = "left") -> LinearMap:
    """The map x -> (a f(x)) b for order="left", x -> a (f(x) b) for "right".

    The two coincide when the target algebra is associative.
    """
    _check_order(order)
    if a.algebra is not f.target or b.algebra is not f.target:
        raise AlgebraMismatch("sandwich factors must live in the map's target algebra")
    if order == "left":
        return compose(right_shift(b), compose(left_shift(a), f))
    return compose(left_shift(a), compose(right_shift(b), f))


class BMatrix:
    """The n^2 x n^2 matrix linking coordinates to standard components.

    Row (k, m) and column (i, j) hold the coefficient of f^{ij} in the
    (k, m) coordinate entry of x -> sum f^{ij} (e_i x) e_j (left order)
    or x -> sum f^{ij} e_i (x e_j) (right order).
    """

    __slots__ = ("algebra", "order", "entries", "_rank")

    def __init__(self, algebra: FreeAlgebra, order: str, entries):
        self.algebra = algebra
        self.order = order
        self.entries = entries
        self._rank: Optional[int] = None

    @property
    def size(self) -> int:
        return self.algebra.dim * self.algebra.dim

    def row_index(self, k: int, m: int) -> int:
        return k * self.algebra.dim + m

    def col_index(self, i: int, j: int) -> int:
        return i * self.algebra.dim + j

    def rank(self) -> int:
        if self._rank is None:
            self._rank = exact.rank(self.entries)
        return self._rank

    def __repr__(self) -> str:
        return f"BMatrix({self.algebra!r}, order={self.order}, size={self.size})"


_b_matrix_cache: dict[tuple[int, str], BMatrix] = {}
_b_matrix_lock = threading.Lock()


def b_matrix(algebra: FreeAlgebra, order: str = "left") -> BMatrix:
    """Build (and cache per algebra) the component matrix."""
    _check_order(order)
    key = (id(algebra), order)
    with _b_matrix_lock:
        cached = _b_matrix_cache.get(key)
    if cached is not None and cached.algebra is algebra:
        return cached

    n = algebra.dim
    entries = exact.zeros(n * n, n * n)
    table = algebra._table
    if order == "left":
        # coefficient of f^{ij} in coordinate (k, m): sum_p B[i][m][p] B[p][j][k]
        for i in range(n):
            for m in range(n):
                for p, v1 in table[i][m]:
                    for j in range(n):
                        for k, v2 in table[p][j]:
                            entries[k * n + m][i * n + j] += v1 * v2
    else:
        # right order: sum_p B[m][j][p] B[i][p][k]
        for m in range(n):
            for j in range(n):
                for p, v1 in table[m][j]:
                    for i in range(n):
                        for k, v2 in table[i][p]:
                            entries[k * n + m][i * n + j] += v1 * v2
    built = BMatrix(algebra, order, entries)
    with _b_matrix_lock:
        _b_matrix_cache[key] = built
    return built


def vec_coords(f: LinearMap) -> list[Fraction]:
    """Row-major flattening of a coordinate matrix."""
    return [v for row in f.coords for v in row]


def unvec(vector, rows: int, cols: int) -> list[list[Fraction]]:
    return [list(vector[r * cols:(r + 1) * cols]) for r in range(rows)]


class StandardSolution:
    """Solution set of the components-from-coordinates system.

    ``particular`` is one tensor of standard components reproducing the
    requested map; ``nullspace`` spans the homogeneous solutions (every
    particular + combination reproduces the same map); ``rank`` is the
    rank of the component matrix.  The solution is unique iff nullspace
    is empty.
    """

    __slots__ = ("particular", "nullspace", "rank")

    def __init__(self, particular: Tensor2, nullspace: list[Tensor2], rank: int):
        self.particular = particular
        self.nullspace = nullspace
        self.rank = rank

    def is_unique(self) -> bool:
        return not self.nullspace

    def __repr__(self) -> str:
        return f"StandardSolution(rank={self.rank}, nullity={len(self.nullspace)})"


def coords_from_standard(t: Tensor2, f: LinearMap, order: str = "left") -> LinearMap:
    """Coordinate matrix of g = t acting on f, g(x) = sum t^{ij} e_i f(x) e_j
    with the chosen nesting.  For f = identity this is the component
    matrix applied to vec(t), reshaped."""
    _check_order(order)
    if t.algebra is not f.target:
        raise AlgebraMismatch("tensor and map must share the target algebra")
    bm = b_matrix(t.algebra, order)
    tvec = [v for row in t.components for v in row]
    gvec = exact.mat_vec(bm.entries, tvec)
    n = t.algebra.dim
    sandwich_coords = unvec(gvec, n, n)
    return LinearMap(f.source, f.target,
                     exact.mat_mul(sandwich_coords, f.matrix()))


def standard_from_coords(g: LinearMap, order: str = "left") -> StandardSolution:
    """Solve for all standard components reproducing the endomorphism g.

    Raises NotRepresentable when g lies outside the image of the
    component matrix (for the complex numbers this rejects conjugation:
    only genuinely complex-linear maps are representable).
    """
    _check_order(order)
    if not g.is_endomorphism():
        raise AlgebraMismatch("standard components are defined for endomorphisms")
    algebra = g.source
    bm = b_matrix(algebra, order)
    try:
        particular, basis = exact.solve(bm.entries, vec_coords(g))
    except ValueError:
        raise NotRepresentable(
            "coordinate matrix is not in the image of the component matrix") from None
    n = algebra.dim
    return StandardSolution(
        Tensor2(algebra, unvec(particular, n, n)),
        [Tensor2(algebra, unvec(v, n, n)) for v in basis],
        bm.rank())


def _orbit_columns(f: LinearMap, order: str) -> list[list[Fraction]]:
    """Columns spanning the orbit of f: vec(t acting on f) over basis tensors."""
    algebra = f.target
    n = algebra.dim
    cols = []
    for i in range(n):
        for j in range(n):
            t = Tensor2.basis_tensor(algebra, i, j)
            cols.append(vec_coords(coords_from_standard(t, f, order)))
    return cols


def orbit_contains(g: LinearMap, f: LinearMap, order: str = "left") -> Optional[Tensor2]:
    """A tensor t with t acting on f equal to g, or None when g is not
    in the orbit of f.  Absence is a valid answer, not an error."""
    _check_order(order)
    if g.source is not f.source or g.target is not f.target:
        raise AlgebraMismatch("maps act on different algebras")
    algebra = f.target
    n = algebra.dim
    cols = _orbit_columns(f, order)
    system = [[cols[c][r] for c in range(n * n)] for r in range(n * n)]
    try:
        particular, _ = exact.solve(system, vec_coords(g))
    except ValueError:
        return None
    return Tensor2(algebra, unvec(particular, n, n))


def representation_basis(algebra: FreeAlgebra, order: str = "left") -> list[LinearMap]:
    """Generators whose orbits span all linear maps of the algebra.

    Starts from the identity map.  While the union of orbit spans is not
    the whole coordinate space, the first standard-basis coordinate
    matrix (row-major) outside the span is located, its component
    orthogonal to the span is taken and scaled to a primitive integer
    vector, and that map is adjoined.  The orthogonalization makes the
    adjoined generator a canonical representative of its own orbit; for
    the complex numbers it yields exactly the conjugation map.
    """
    _check_order(order)
    if algebra.unit_index is None:
        raise NoUnit("generator discovery needs a unital algebra")
    n = algebra.dim
    span = exact.Span(n * n)
    delta = LinearMap.identity(algebra)
    generators = [delta]
    for col in _orbit_columns(delta, order):
        span.add(col)
    while span.rank < n * n:
        pivot = next(idx for idx in range(n * n)
                     if not span.contains([Fraction(r == idx) for r in range(n * n)]))
        e = [Fraction(r == pivot) for r in range(n * n)]
        residual = exact.orthogonal_residual(span.rows, e)
        candidate = exact.primitive(residual)
        g = LinearMap(algebra, algebra, unvec(candidate, n, n))
        generators.append(g)
        for col in _orbit_columns(g, order):
            span.add(col)
    return generators
