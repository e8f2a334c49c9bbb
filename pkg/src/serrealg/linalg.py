"""Exact linear algebra over the rationals.

Every scalar in the package is a :class:`fractions.Fraction`; matrices are
dense and immutable.  Elimination skips zero entries, which keeps the
(mostly sparse) constraint systems built elsewhere cheap enough.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rational = Fraction
Vector = tuple  # tuple of Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, str or Fraction")
    return Fraction(x)


class Matrix:
    """Dense rows x cols matrix of Fractions.  0 x n and n x 0 are legal."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Optional[Iterable[Iterable]] = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be non-negative")
        self.rows = rows
        self.cols = cols
        if data is None:
            self._data = tuple((ZERO,) * cols for _ in range(rows))
        else:
            d = tuple(tuple(to_rational(x) for x in row) for row in data)
            if len(d) != rows or any(len(r) != cols for r in d):
                raise ValueError(f"entry count does not match shape {rows}x{cols}")
            self._data = d

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        rows = list(rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def _raw(cls, rows: int, cols: int, data: tuple) -> "Matrix":
        m = cls.__new__(cls)
        m.rows, m.cols, m._data = rows, cols, data
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        columns = [tuple(c) for c in columns]
        data = tuple(tuple(to_rational(c[i]) for c in columns) for i in range(rows))
        return cls._raw(rows, len(columns), data)

    # -- access ---------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list:
        return [list(r) for r in self._data]

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return Matrix._raw(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = to_rational(c)
        return Matrix._raw(self.rows, self.cols, tuple(tuple(c * x for x in r) for r in self._data))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.cols
        odata = other._data
        out = []
        for r in self._data:
            acc = [ZERO] * ocols
            for k, a in enumerate(r):
                if a:
                    orow = odata[k]
                    for j in range(ocols):
                        b = orow[j]
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return Matrix._raw(self.rows, ocols, tuple(out))

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), ZERO) for r in self._data)

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.cols, self.rows, tuple(
            tuple(self._data[i][j] for i in range(self.rows)) for j in range(self.cols)))

    T = property(transpose)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Matrix._raw(self.rows, self.cols + other.cols,
                           tuple(a + b for a, b in zip(self._data, other._data)))

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return Matrix._raw(self.rows + other.rows, self.cols, self._data + other._data)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(len(rows), len(cols), tuple(
            tuple(self._data[i][j] for j in cols) for i in rows))

    # -- elimination ------------------------------------------------------------

    def rref(self) -> tuple["Matrix", list]:
        return rref(self)

    def rank(self) -> int:
        return rank(self)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and rank(self) == self.rows

    def det(self) -> Fraction:
        return det(self)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices have inverses")
        n = self.rows
        r, piv = rref(self.hstack(Matrix.identity(n)))
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return r.submatrix(range(n), range(n, 2 * n))


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    data = []
    off = 0
    for b in blocks:
        for r in b._data:
            data.append((ZERO,) * off + r + (ZERO,) * (cols - off - b.cols))
        off += b.cols
    return Matrix._raw(rows, cols, tuple(data))


def _eliminate(rows: list, ncols: int, reduced: bool = True) -> list:
    """In-place Gauss-Jordan on a list of row lists; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] *= inv
        nz = [j for j in range(c, ncols) if prow[j]]
        targets = range(nrows) if reduced else range(r + 1, nrows)
        for i in targets:
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, list]:
    """Reduced row echelon form and the list of pivot columns."""
    rows = [list(r) for r in m._data]
    pivots = _eliminate(rows, m.cols)
    return Matrix._raw(m.rows, m.cols, tuple(tuple(r) for r in rows)), pivots


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    rows = [list(r) for r in m._data]
    return len(_eliminate(rows, m.cols, reduced=False))


def det(m: Matrix) -> Fraction:
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    rows = [list(r) for r in m._data]
    d = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        pv = rows[c][c]
        d *= pv
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f = f / pv
                for j in range(c, n):
                    if rows[c][j]:
                        rows[i][j] -= f * rows[c][j]
    return d


def kernel_basis(m: Matrix) -> list[tuple]:
    """Basis of {v : m v = 0}; one vector per free column."""
    r, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -r[i, free]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b: Sequence) -> Optional[tuple]:
    """Some x with m x = b, or None when the system is inconsistent."""
    if len(b) != m.rows:
        raise ValueError("right-hand side length must equal row count")
    aug = m.hstack(Matrix.from_columns([b], m.rows)) if m.rows else Matrix(0, m.cols + 1)
    r, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = r[i, m.cols]
    return tuple(x)


def column_space_basis(m: Matrix) -> list[tuple]:
    """Independent columns spanning the image (a subset of m's columns)."""
    _, pivots = rref(m)
    return [m.column(j) for j in pivots]


def span_basis(vectors: Sequence[Sequence], dim: int) -> list[tuple]:
    """Echelon basis of the span of ``vectors`` inside Q^dim."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return []
    r, pivots = rref(Matrix(len(vectors), dim, vectors))
    return [r.row(i) for i in range(len(pivots))]


def complement_basis(subspace: Sequence[Sequence], dim: int) -> list[tuple]:
    """Standard basis vectors completing ``subspace`` to all of Q^dim."""
    sub = span_basis(subspace, dim)
    pivots = set()
    for v in sub:
        pivots.add(next(j for j, x in enumerate(v) if x))
    out = []
    for j in range(dim):
        if j not in pivots:
            e = [ZERO] * dim
            e[j] = ONE
            out.append(tuple(e))
    return out


def intersect(a: Sequence[Sequence], b: Sequence[Sequence], dim: int) -> list[tuple]:
    """Basis of span(a) ∩ span(b)."""
    a = span_basis(a, dim)
    b = span_basis(b, dim)
    if not a or not b:
        return []
    # x in span(a) with x = A s = B t
    m = Matrix.from_columns(list(a) + [tuple(-x for x in v) for v in b], dim)
    out = []
    for k in kernel_basis(m):
        s = k[:len(a)]
        out.append(tuple(sum((c * v[i] for c, v in zip(s, a) if c), ZERO) for i in range(dim)))
    return span_basis(out, dim)


def coordinates(basis: Sequence[Sequence], v: Sequence, dim: int) -> Optional[tuple]:
    """Coefficients of v in the (independent) ``basis``, or None if v is outside the span."""
    if not basis:
        return () if all(x == 0 for x in v) else None
    return solve(Matrix.from_columns(basis, dim), v)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


def lincomb(coeffs: Sequence, vectors: Sequence[Sequence], dim: int) -> tuple:
    acc = [ZERO] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    acc[i] += c * x
    return tuple(acc)


def fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
