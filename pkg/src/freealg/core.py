"""Free finite-dimensional algebras over the rationals.

An algebra is given by its dimension, basis labels, and the sparse
structure constants B[i][j][k] with e_i * e_j = sum_k B[i][j][k] e_k.
Elements are coordinate vectors of Fractions relative to that basis.
All scalars are exact rationals; no operation ever rounds.

Algebra identity is object identity: two separately constructed
algebras never mix, even with equal tables.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import AlgebraMismatch, InvalidAlgebra, NoUnit
from .exact import ZERO, frac


class FreeAlgebra:
    """A free algebra of finite dimension, defined by structure constants.

    ``constants`` is an iterable of (i, j, k, value) quadruples meaning
    that e_k appears in e_i * e_j with the given rational coefficient.
    Duplicate (i, j, k) triples are rejected rather than summed, to
    catch authoring mistakes in definition files.

    ``unit_index`` marks the basis vector acting as two-sided unit; it
    is validated against the stored constants.  ``tag`` and ``params``
    record how a built-in algebra was constructed (see
    :mod:`freealg.algebras`); user-defined algebras leave them None.
    """

    __slots__ = ("dim", "labels", "unit_index", "tag", "params", "_table", "_constants")

    def __init__(self, dim: int, labels: Sequence[str],
                 constants: Iterable[tuple[int, int, int, object]],
                 unit_index: Optional[int] = None,
                 tag: Optional[str] = None,
                 params: Optional[tuple] = None):
        if dim < 1:
            raise InvalidAlgebra(f"dimension must be positive, got {dim}")
        if len(labels) != dim:
            raise InvalidAlgebra(f"expected {dim} labels, got {len(labels)}")
        self.dim = dim
        self.labels = tuple(str(s) for s in labels)
        self.tag = tag
        self.params = params

        seen: set[tuple[int, int, int]] = set()
        cells: dict[tuple[int, int], dict[int, Fraction]] = {}
        for i, j, k, value in constants:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise InvalidAlgebra(f"constant index ({i},{j},{k}) out of range for dim {dim}")
            if (i, j, k) in seen:
                raise InvalidAlgebra(f"duplicate structure constant for ({i},{j},{k})")
            seen.add((i, j, k))
            v = frac(value)
            if v != 0:
                cells.setdefault((i, j), {})[k] = v
        self._table = tuple(
            tuple(tuple(sorted(cells.get((i, j), {}).items())) for j in range(dim))
            for i in range(dim)
        )
        self._constants = tuple(sorted(
            (i, j, k, v)
            for (i, j), cell in cells.items()
            for k, v in cell.items()
        ))

        if unit_index is not None:
            if not 0 <= unit_index < dim:
                raise InvalidAlgebra(f"unit index {unit_index} out of range")
            self._check_unit(unit_index)
        self.unit_index = unit_index

    def _check_unit(self, u: int) -> None:
        for i in range(self.dim):
            expect = ((i, Fraction(1)),)
            if self._table[u][i] != expect or self._table[i][u] != expect:
                raise InvalidAlgebra(
                    f"basis vector {u} is not a two-sided unit: "
                    f"fails on basis vector {i}")

    @property
    def constants(self) -> tuple[tuple[int, int, int, Fraction], ...]:
        """Sorted nonzero structure constants as (i, j, k, value)."""
        return self._constants

    def constant(self, i: int, j: int, k: int) -> Fraction:
        for kk, v in self._table[i][j]:
            if kk == k:
                return v
        return ZERO

    def basis_product(self, i: int, j: int) -> tuple[tuple[int, Fraction], ...]:
        """Nonzero components of e_i * e_j as ((k, value), ...)."""
        return self._table[i][j]

    def zero(self) -> "AlgElement":
        return AlgElement(self, (ZERO,) * self.dim)

    def element(self, coords: Sequence) -> "AlgElement":
        if len(coords) != self.dim:
            raise InvalidAlgebra(f"expected {self.dim} coordinates, got {len(coords)}")
        return AlgElement(self, tuple(frac(c) for c in coords))

    def basis_element(self, i: int) -> "AlgElement":
        if not 0 <= i < self.dim:
            raise InvalidAlgebra(f"basis index {i} out of range")
        return AlgElement(self, tuple(
            Fraction(1) if j == i else ZERO for j in range(self.dim)))

    def unit(self) -> "AlgElement":
        if self.unit_index is None:
            raise NoUnit("algebra has no unit")
        return self.basis_element(self.unit_index)

    def basis(self) -> list["AlgElement"]:
        return [self.basis_element(i) for i in range(self.dim)]

    def __repr__(self) -> str:
        name = self.tag or "algebra"
        return f"FreeAlgebra({name}, dim={self.dim})"


class AlgElement:
    """An element of a FreeAlgebra: an exact coordinate vector.

    Values are immutable; arithmetic returns new elements.  ``*`` is the
    algebra product for two elements and scalar multiplication when one
    side is a rational scalar.
    """

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: FreeAlgebra, coords: tuple[Fraction, ...]):
        self.algebra = algebra
        self.coords = coords

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgElement)
                and self.algebra is other.algebra
                and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __add__(self, other: "AlgElement") -> "AlgElement":
        _same_algebra(self, other)
        return AlgElement(self.algebra,
                          tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        _same_algebra(self, other)
        return AlgElement(self.algebra,
                          tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AlgElement":
        return AlgElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return multiply(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def scaled(self, scalar) -> "AlgElement":
        s = frac(scalar)
        return AlgElement(self.algebra, tuple(s * a for a in self.coords))

    def __repr__(self) -> str:
        return f"<{format_element(self)}>"


def format_element(x: AlgElement) -> str:
    """Human-readable form like '3/5 - 2*i'; '0' for the zero element."""
    parts = []
    for coeff, label in zip(x.coords, x.algebra.labels):
        if coeff == 0:
            continue
        if label in ("1", ""):
            term = str(abs(coeff))
        elif abs(coeff) == 1:
            term = label
        else:
            term = f"{abs(coeff)}*{label}"
        sign = "-" if coeff < 0 else "+"
        parts.append((sign, term))
    if not parts:
        return "0"
    first_sign, first_term = parts[0]
    text = ("-" if first_sign == "-" else "") + first_term
    for sign, term in parts[1:]:
        text += f" {sign} {term}"
    return text


def _same_algebra(*elements: AlgElement) -> FreeAlgebra:
    algebra = elements[0].algebra
    for x in elements[1:]:
        if x.algebra is not algebra:
            raise AlgebraMismatch("operands belong to different algebras")
    return algebra


def multiply(x: AlgElement, y: AlgElement) -> AlgElement:
    """Product of two elements via the structure constants.

    (x y)^k = sum_{i,j} B[i][j][k] x^i y^j; bilinear in both arguments.
    """
    algebra = _same_algebra(x, y)
    out = [ZERO] * algebra.dim
    table = algebra._table
    for i, xi in enumerate(x.coords):
        if xi == 0:
            continue
        row = table[i]
        for j, yj in enumerate(y.coords):
            if yj == 0:
                continue
            c = xi * yj
            for k, v in row[j]:
                out[k] += c * v
    return AlgElement(algebra, tuple(out))


def commutator(x: AlgElement, y: AlgElement) -> AlgElement:
    """[x, y] = xy - yx."""
    return multiply(x, y) - multiply(y, x)


def associator(x: AlgElement, y: AlgElement, z: AlgElement) -> AlgElement:
    """(x, y, z) = (xy)z - x(yz)."""
    return multiply(multiply(x, y), z) - multiply(x, multiply(y, z))


def is_commutative(algebra: FreeAlgebra) -> bool:
    """True iff B[i][j] = B[j][i] for all basis pairs."""
    t = algebra._table
    return all(t[i][j] == t[j][i]
               for i in range(algebra.dim) for j in range(i + 1, algebra.dim))


def is_associative(algebra: FreeAlgebra) -> bool:
    """True iff the two triple contractions of the constants agree,
    i.e. (e_i e_j) e_k = e_i (e_j e_k) for all basis triples."""
    n = algebra.dim
    t = algebra._table
    for i in range(n):
        for j in range(n):
            left_pairs = t[i][j]
            for k in range(n):
                lhs = [ZERO] * n
                for p, v in left_pairs:
                    for q, w in t[p][k]:
                        lhs[q] += v * w
                rhs = [ZERO] * n
                for p, v in t[j][k]:
                    for q, w in t[i][p]:
                        rhs[q] += v * w
                if lhs != rhs:
                    return False
    return True


def in_nucleus(a: AlgElement) -> bool:
    """True iff every associator involving ``a`` vanishes.

    Trilinearity of the associator reduces the quantifier over the whole
    algebra to basis vectors.
    """
    algebra = a.algebra
    basis = algebra.basis()
    for b in basis:
        for c in basis:
            if not associator(a, b, c).is_zero():
                return False
            if not associator(b, a, c).is_zero():
                return False
            if not associator(b, c, a).is_zero():
                return False
    return True


def in_center(a: AlgElement) -> bool:
    """True iff ``a`` is in the nucleus and commutes with every basis vector."""
    if not in_nucleus(a):
        return False
    return all(commutator(a, e).is_zero() for e in a.algebra.basis())


def random_element(algebra: FreeAlgebra, rng, bound: int = 9) -> AlgElement:
    """Element with coordinates p/q, |p| <= bound, 1 <= q <= bound,
    drawn from the given random.Random instance."""
    return algebra.element([
        Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        for _ in range(algebra.dim)])
