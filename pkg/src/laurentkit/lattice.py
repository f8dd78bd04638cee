"""Exact integer linear algebra: gcds, Hermite/Smith normal forms, kernels and lattices.

Everything works on Python ints, so there is no overflow.  Matrices are
small immutable row-major objects; lattices are stored by their row-style
Hermite normal form, which makes lattice equality plain ``==``.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import NotUnimodular, RankMismatch

Vector = Tuple[int, ...]


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, m, n)`` with ``a*m + b*n == g == gcd(a, b) >= 0``.

    ``ext_gcd(0, 0) == (0, 0, 0)``.
    """
    a, b = operator.index(a), operator.index(b)
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    if old_r == 0:
        return 0, 0, 0
    return old_r, old_s, old_t


class IntMatrix:
    """Immutable integer matrix, row-major."""

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[Iterable[int]], cols: Optional[int] = None):
        data = tuple(tuple(operator.index(x) for x in row) for row in rows)
        if cols is None:
            if not data:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(data[0])
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged matrix rows")
        self._rows = data
        self._ncols = cols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(((1 if i == j else 0 for j in range(n)) for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(((0,) * cols for _ in range(rows)), cols=cols)

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> Tuple[int, ...]:
        return tuple(x for row in self._rows for x in row)

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._rows)

    def __getitem__(self, index):
        if isinstance(index, tuple):
            i, j = index
            return self._rows[i][j]
        return self._rows[index]

    def __iter__(self):
        return iter(self._rows)

    def tolist(self):
        return [list(row) for row in self._rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self._rows), cols=self.rows) if self.rows else IntMatrix.zeros(self.cols, 0)

    T = property(transpose)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise RankMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.column
        other_cols = [cols(j) for j in range(other.cols)]
        return IntMatrix(
            (sum(a * b for a, b in zip(row, col)) for col in other_cols) for row in self._rows
        ) if self.rows else IntMatrix.zeros(0, other.cols)

    def apply(self, v: Sequence[int]) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise RankMismatch("vector length does not match matrix columns")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self._rows)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._ncols == other._ncols and self._rows == other._rows

    def __hash__(self):
        return hash((self._ncols, self._rows))

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r})" if self.rows else f"IntMatrix([], cols={self.cols})"


MatrixLike = Union[IntMatrix, Sequence[Sequence[int]]]


def as_matrix(m: MatrixLike, cols: Optional[int] = None) -> IntMatrix:
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix(m, cols=cols)


def determinant(m: MatrixLike) -> int:
    """Bareiss fraction-free determinant."""
    m = as_matrix(m)
    if not m.is_square():
        raise RankMismatch("determinant of a non-square matrix")
    n = m.rows
    a = m.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def _row_combine(rows, i, j, q):
    # rows[i] -= q * rows[j]
    rj = rows[j]
    rows[i] = [x - q * y for x, y in zip(rows[i], rj)]


def hermite_normal_form(m: MatrixLike) -> Tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ M == H``.  ``H`` is in
    row echelon form, every pivot is positive, entries above a pivot lie in
    ``[0, pivot)`` and zero rows are at the bottom.
    """
    m = as_matrix(m)
    nrows, ncols = m.shape
    h = m.tolist()
    u = IntMatrix.identity(nrows).tolist()
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        while True:
            nonzero = [i for i in range(r, nrows) if h[i][c] != 0]
            if not nonzero:
                break
            p = min(nonzero, key=lambda i: (abs(h[i][c]), i))
            if p != r:
                h[p], h[r] = h[r], h[p]
                u[p], u[r] = u[r], u[p]
            done = True
            for i in range(r + 1, nrows):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    _row_combine(h, i, r, q)
                    _row_combine(u, i, r, q)
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                _row_combine(h, i, r, q)
                _row_combine(u, i, r, q)
        r += 1
    return IntMatrix(h, cols=ncols), IntMatrix(u, cols=nrows)


def smith_normal_form(m: MatrixLike) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``(S, U, V)`` with ``U @ M @ V == S``.

    ``S`` is diagonal with non-negative entries, each dividing the next.
    Pivots are always taken at the smallest nonzero absolute value, which
    keeps the multipliers deterministic.
    """
    m = as_matrix(m)
    nrows, ncols = m.shape
    s = m.tolist()
    u = IntMatrix.identity(nrows).tolist()
    v = IntMatrix.identity(ncols).tolist()

    def col_combine(mat, i, j, q):
        # column i -= q * column j
        for row in mat:
            row[i] -= q * row[j]

    def swap_cols(mat, i, j):
        for row in mat:
            row[i], row[j] = row[j], row[i]

    for t in range(min(nrows, ncols)):
        while True:
            cands = [(abs(s[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if s[i][j] != 0]
            if not cands:
                break
            _, pi, pj = min(cands)
            if pi != t:
                s[pi], s[t] = s[t], s[pi]
                u[pi], u[t] = u[t], u[pi]
            if pj != t:
                swap_cols(s, pj, t)
                swap_cols(v, pj, t)
            piv = s[t][t]
            clean = True
            for i in range(t + 1, nrows):
                if s[i][t]:
                    q = s[i][t] // piv
                    _row_combine(s, i, t, q)
                    _row_combine(u, i, t, q)
                    clean = clean and s[i][t] == 0
            for j in range(t + 1, ncols):
                if s[t][j]:
                    q = s[t][j] // piv
                    col_combine(s, j, t, q)
                    col_combine(v, j, t, q)
                    clean = clean and s[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, nrows) for j in range(t + 1, ncols) if s[i][j] % piv),
                None,
            )
            if bad is None:
                break
            # pull the offending row up so the next pass lowers the pivot
            _row_combine(s, t, bad, -1)
            _row_combine(u, t, bad, -1)
        if t < nrows and t < ncols and s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return IntMatrix(s, cols=ncols), IntMatrix(u, cols=nrows), IntMatrix(v, cols=ncols)


@dataclass(frozen=True)
class LatticeBasis:
    """A subgroup of Z^n, stored by the nonzero rows of its Hermite normal form."""

    ambient_rank: int
    basis: Tuple[Vector, ...] = ()

    def __post_init__(self):
        for b in self.basis:
            if len(b) != self.ambient_rank:
                raise RankMismatch("basis vector length differs from ambient rank")

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], ambient_rank: int) -> "LatticeBasis":
        vecs = [tuple(operator.index(x) for x in v) for v in vectors]
        if not vecs:
            return cls(ambient_rank, ())
        h, _ = hermite_normal_form(IntMatrix(vecs, cols=ambient_rank))
        return cls(ambient_rank, tuple(row for row in h if any(row)))

    @classmethod
    def full(cls, n: int) -> "LatticeBasis":
        return cls(n, tuple(IntMatrix.identity(n)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def matrix(self) -> IntMatrix:
        return IntMatrix(self.basis, cols=self.ambient_rank)

    def __contains__(self, v) -> bool:
        return lattice_membership(v, self) is not None

    def __iter__(self):
        return iter(self.basis)


def integer_kernel(m: MatrixLike, cols: Optional[int] = None) -> LatticeBasis:
    """Lattice ``{v in Z^cols : M v = 0}``."""
    m = as_matrix(m, cols)
    h, u = hermite_normal_form(m.transpose())
    kernel = [u.row(i) for i in range(h.rows) if not any(h.row(i))]
    return LatticeBasis.span(kernel, m.cols)


def invert_unimodular(e: MatrixLike) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant +1 or -1."""
    e = as_matrix(e)
    if not e.is_square():
        raise NotUnimodular(f"matrix of shape {e.shape} is not square")
    h, u = hermite_normal_form(e)
    if h != IntMatrix.identity(e.rows):
        raise NotUnimodular(f"determinant of {e.tolist()} is {determinant(e)}, not +1 or -1")
    return u


def saturate(lattice: LatticeBasis) -> LatticeBasis:
    """Return ``{v : k v in L for some k >= 1}``, i.e. ``span_Q(L)`` intersected with Z^n."""
    n = lattice.ambient_rank
    orthogonal = integer_kernel(IntMatrix(lattice.basis, cols=n))
    return integer_kernel(IntMatrix(orthogonal.basis, cols=n))


def intersect_with_subspace(lattice: LatticeBasis, subspace: LatticeBasis) -> LatticeBasis:
    """``L`` intersected with ``span_Q(subspace)``."""
    n = lattice.ambient_rank
    if subspace.ambient_rank != n:
        raise RankMismatch("lattices live in different ambient ranks")
    if not lattice.basis:
        return lattice
    constraints = integer_kernel(IntMatrix(subspace.basis, cols=n)).matrix()
    # c . B lies in the subspace iff K (c B)^T = 0, i.e. (K B^T) c^T = 0
    coeffs = integer_kernel(constraints @ lattice.matrix().transpose(), cols=lattice.rank)
    b = lattice.matrix()
    return LatticeBasis.span(((IntMatrix([c]) @ b).row(0) for c in coeffs.basis), n)


def lattice_membership(
    v: Sequence[int], lattice: Union[LatticeBasis, Sequence[Sequence[int]]], ambient_rank: Optional[int] = None
) -> Optional[Vector]:
    """Integer coordinates of ``v`` in the given basis, or ``None`` if ``v`` is not in the lattice.

    ``lattice`` may be a :class:`LatticeBasis` (coordinates refer to its HNF
    rows) or a plain list of generators (coordinates refer to those vectors
    in the given order).
    """
    if isinstance(lattice, LatticeBasis):
        gens = list(lattice.basis)
        n = lattice.ambient_rank
    else:
        gens = [tuple(g) for g in lattice]
        n = ambient_rank if ambient_rank is not None else (len(gens[0]) if gens else len(v))
    v = tuple(operator.index(x) for x in v)
    if len(v) != n:
        raise RankMismatch(f"vector of length {len(v)} tested against lattice in Z^{n}")
    if not gens:
        return () if not any(v) else None
    h, u = hermite_normal_form(IntMatrix(gens, cols=n))
    residual = list(v)
    y = [0] * h.rows
    for i in range(h.rows):
        row = h.row(i)
        pivot = next((j for j, x in enumerate(row) if x), None)
        if pivot is None:
            break
        q, rem = divmod(residual[pivot], row[pivot])
        if rem:
            return None
        y[i] = q
        if q:
            residual = [a - q * b for a, b in zip(residual, row)]
    if any(residual):
        return None
    return tuple(sum(y[i] * u[i, j] for i in range(h.rows)) for j in range(h.rows))
