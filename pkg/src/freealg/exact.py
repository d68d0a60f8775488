"""Exact linear algebra over the rationals.

Matrices are lists of rows of Fraction.  Nothing in this module ever
rounds; every function either returns exact rationals or raises.
Rank uses Bareiss fraction-free elimination to keep intermediate
entries small; solving and inversion use plain Gauss-Jordan, which is
exact over Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = list[Fraction]
Mat = list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(value) -> Fraction:
    """Coerce ints, strings like '-3/5', and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction, int, or 'p/q' string")
    return Fraction(value)


def zeros(rows: int, cols: int) -> Mat:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Mat:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def copy_matrix(a: Mat) -> Mat:
    return [row[:] for row in a]


def transpose(a: Mat) -> Mat:
    return [list(col) for col in zip(*a)]


def mat_add(a: Mat, b: Mat) -> Mat:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Mat, b: Mat) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Mat, c: Fraction) -> Mat:
    return [[c * x for x in row] for row in a]


def mat_mul(a: Mat, b: Mat) -> Mat:
    rows, inner, cols = len(a), len(b), len(b[0])
    out = zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            aik = ai[k]
            if aik == 0:
                continue
            bk = b[k]
            for j in range(cols):
                if bk[j] != 0:
                    oi[j] += aik * bk[j]
    return out


def mat_vec(a: Mat, v: Vec) -> Vec:
    return [sum((row[j] * v[j] for j in range(len(v)) if v[j] != 0), ZERO) for row in a]


def is_zero_vec(v: Vec) -> bool:
    return all(x == 0 for x in v)


def rank(a: Mat) -> int:
    """Rank by fraction-free (Bareiss) elimination.

    Rows are first scaled to integers; row scaling does not change rank.
    """
    if not a or not a[0]:
        return 0
    m = []
    for row in a:
        scale = 1
        for x in row:
            scale = scale * x.denominator // gcd(scale, x.denominator)
        m.append([int(x * scale) for x in row])
    rows, cols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == rows:
            break
    return r


def rref(a: Mat) -> tuple[Mat, list[int]]:
    """Row-reduced echelon form; returns (reduced matrix, pivot columns)."""
    m = copy_matrix(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def invert(a: Mat) -> Mat:
    """Exact inverse by Gauss-Jordan; raises ValueError naming the first
    pivot column that could not be produced when singular."""
    n = len(a)
    m = [row[:] + ident_row for row, ident_row in zip(a, identity(n))]
    r, pivots = rref(m)
    have = set(pivots)
    missing = next((c for c in range(n) if c not in have), None)
    if missing is not None:
        raise ValueError(f"matrix is singular: no pivot in column {missing}")
    return [row[n:] for row in r]


def solve(a: Mat, b: Vec) -> tuple[Vec, list[Vec]]:
    """General exact solve of a x = b.

    Returns (particular solution with free variables set to 0, nullspace
    basis, one vector per free column).  Raises ValueError when the
    system is inconsistent.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [a[i][:] + [b[i]] for i in range(rows)]
    r, pivots = rref(aug)
    if cols in pivots:
        raise ValueError("inconsistent linear system")
    particular = [ZERO] * cols
    for i, c in enumerate(pivots):
        particular[c] = r[i][cols]
    free = [c for c in range(cols) if c not in set(pivots)]
    basis: list[Vec] = []
    for fc in free:
        v = [ZERO] * cols
        v[fc] = ONE
        for i, c in enumerate(pivots):
            v[c] = -r[i][fc]
        basis.append(v)
    return particular, basis


def nullspace(a: Mat) -> list[Vec]:
    rows = len(a)
    return solve(a, [ZERO] * rows)[1]


class Span:
    """Incrementally built row space of Q^n with exact membership tests."""

    def __init__(self, n: int):
        self.n = n
        self.rows: list[Vec] = []       # reduced, pivot-normalized
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Vec) -> Vec:
        v = v[:]
        for row, p in zip(self.rows, self._pivots):
            if v[p] != 0:
                f = v[p]
                for j in range(self.n):
                    if row[j] != 0:
                        v[j] -= f * row[j]
        return v

    def contains(self, v: Vec) -> bool:
        return is_zero_vec(self.reduce(v))

    def add(self, v: Vec) -> bool:
        """Add v to the span; True when the rank grew."""
        res = self.reduce(v)
        pivot = next((j for j in range(self.n) if res[j] != 0), None)
        if pivot is None:
            return False
        inv = ONE / res[pivot]
        res = [x * inv for x in res]
        for row in self.rows:
            if row[pivot] != 0:
                f = row[pivot]
                for j in range(self.n):
                    row[j] -= f * res[j]
        self.rows.append(res)
        self._pivots.append(pivot)
        return True


def orthogonal_residual(basis: list[Vec], v: Vec) -> Vec:
    """v minus its orthogonal projection onto span(basis), exactly.

    Uses the normal equations with the Gram matrix of the basis; the
    basis rows must be linearly independent.
    """
    if not basis:
        return v[:]
    k = len(basis)
    gram = [[sum(basis[i][t] * basis[j][t] for t in range(len(v))) for j in range(k)]
            for i in range(k)]
    rhs = [sum(basis[i][t] * v[t] for t in range(len(v))) for i in range(k)]
    coeffs, _ = solve(gram, rhs)
    out = v[:]
    for i in range(k):
        if coeffs[i] != 0:
            for t in range(len(v)):
                out[t] -= coeffs[i] * basis[i][t]
    return out


def primitive(v: Vec) -> Vec:
    """Scale a nonzero rational vector to coprime integers with a
    positive leading entry."""
    scale = 1
    for x in v:
        scale = scale * x.denominator // gcd(scale, x.denominator)
    ints = [int(x * scale) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    lead = next(x for x in ints if x != 0)
    sign = -1 if lead < 0 else 1
    return [Fraction(sign * x, g) for x in ints]
