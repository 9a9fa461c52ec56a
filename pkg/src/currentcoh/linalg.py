"""Exact rational linear algebra: matrices, echelon forms, subspace calculus.

Scalars are plain Python ints and ``fractions.Fraction`` values, mixed freely;
both are exact and interoperate.  Matrices are numpy object arrays.  Every
subspace is kept in a unique canonical form (reduced column echelon, pivots
scaled to 1, ties broken by lowest row index), so two subspaces are equal
exactly when their basis matrices are identical.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

Scalar = int | Fraction


class AmbientMismatch(ValueError):
    """Subspaces of different ambient dimensions were combined."""


class NotASubspace(ValueError):
    """quotient_data was called with sub not contained in total."""


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)


def eye(n: int) -> np.ndarray:
    m = zeros(n, n)
    for i in range(n):
        m[i, i] = 1
    return m


def matrix(rows) -> np.ndarray:
    """Build an object matrix from nested iterables of exact scalars."""
    rows = [list(r) for r in rows]
    if not rows:
        return zeros(0, 0)
    m = zeros(len(rows), len(rows[0]))
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            m[i, j] = x
    return m


def vector(entries) -> np.ndarray:
    v = np.zeros(len(entries), dtype=object)
    for i, x in enumerate(entries):
        v[i] = x
    return v


def mat_eq(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return bool((a == b).all()) if a.size else True


def is_zero(a: np.ndarray) -> bool:
    return not a.size or bool((a == np.zeros(a.shape, dtype=object)).all())


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _int_row(row) -> list[int]:
    """Scale a row of ints/Fractions to coprime integers (exact)."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = _lcm(den, x.denominator)
    if den != 1:
        row = [int(x * den) for x in row]
    else:
        row = [int(x) for x in row]
    g = 0
    for x in row:
        g = math.gcd(g, x)
    if g > 1:
        row = [x // g for x in row]
    return row


def _gcd_reduce(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = math.gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row


def rref(mat) -> tuple[np.ndarray, tuple[int, ...]]:
    """Unique reduced row echelon form with pivots scaled to 1.

    Returns only the nonzero rows plus the pivot columns.  The elimination is
    integer-preserving (rows rescaled to coprime integers, cross-multiplied,
    gcd-reduced) so Fractions appear only in the final per-row normalization.
    """
    mat = np.asarray(mat, dtype=object)
    nrows, ncols = mat.shape
    rows = [_int_row(mat[i]) for i in range(nrows)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(nrows):
            if i != r and rows[i][c]:
                b = rows[i][c]
                rows[i] = _gcd_reduce(
                    [x * p - y * b for x, y in zip(rows[i], rows[r])]
                )
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    out = zeros(r, ncols)
    for k in range(r):
        p = rows[k][pivots[k]]
        for j in range(ncols):
            x = rows[k][j]
            if x:
                out[k, j] = x // p if x % p == 0 else Fraction(x, p)
    return out, tuple(pivots)


def rank(mat) -> int:
    """Exact rank over the rationals."""
    mat = np.asarray(mat, dtype=object)
    if not mat.size:
        return 0
    return len(rref(mat)[1])


class Subspace:
    """A subspace of F^n in canonical echelon form.

    Internally the basis vectors are the rows of an RREF matrix; the public
    ``basis`` has the vectors as columns (reduced column echelon form).  Two
    Subspaces are equal iff their canonical bases are identical.
    """

    __slots__ = ("ambient_dim", "rows", "pivots")

    def __init__(self, ambient_dim: int, rows: np.ndarray, pivots: tuple[int, ...]):
        self.ambient_dim = ambient_dim
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def from_span(cls, vectors, ambient_dim: int) -> "Subspace":
        """Canonical subspace spanned by the given vectors (any order)."""
        vecs = [list(v) for v in vectors]
        if not vecs:
            return cls.zero(ambient_dim)
        for v in vecs:
            if len(v) != ambient_dim:
                raise AmbientMismatch(
                    f"vector of length {len(v)} in ambient dim {ambient_dim}"
                )
        rows, pivots = rref(matrix(vecs))
        return cls(ambient_dim, rows, pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, zeros(0, ambient_dim), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, eye(ambient_dim), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return self.rows.shape[0]

    @property
    def basis(self) -> np.ndarray:
        """ambient_dim x dim matrix whose columns are the canonical basis."""
        return self.rows.T.copy()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and mat_eq(self.rows, other.rows)
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def reduce_mod(self, v: np.ndarray) -> np.ndarray:
        """Eliminate this subspace's pivot coordinates from v (exact)."""
        w = np.array(v, dtype=object)
        for k, c in enumerate(self.pivots):
            if w[c]:
                w = w - w[c] * self.rows[k]
        return w

    def contains(self, v) -> bool:
        return is_zero(self.reduce_mod(np.asarray(v, dtype=object)))

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatch("ambient dimensions differ")
        return all(self.contains(other.rows[k]) for k in range(other.dim))

    def coords(self, v) -> np.ndarray:
        """Coordinates of a member vector in the canonical basis."""
        v = np.asarray(v, dtype=object)
        if not is_zero(self.reduce_mod(v)):
            raise ValueError("vector is not in the subspace")
        c = np.zeros(self.dim, dtype=object)
        for k, p in enumerate(self.pivots):
            c[k] = v[p]
        return c


class Quotient:
    """Quotient data total/sub: canonical coset representatives and reduction.

    ``reduce`` maps any vector of ``total`` to the canonical representative of
    its coset (zero exactly on ``sub``); ``representatives`` is the canonical
    complement of sub inside total, and ``coords`` expresses a coset in it.
    """

    __slots__ = ("sub", "total", "representatives")

    def __init__(self, sub: Subspace, total: Subspace, representatives: Subspace):
        self.sub = sub
        self.total = total
        self.representatives = representatives

    @property
    def dim(self) -> int:
        return self.representatives.dim

    def reduce(self, v) -> np.ndarray:
        return self.sub.reduce_mod(np.asarray(v, dtype=object))

    def coords(self, v) -> np.ndarray:
        return self.representatives.coords(self.reduce(v))


def quotient_data(sub: Subspace, total: Subspace) -> Quotient:
    """Complement of sub inside total plus the canonical coset reduction."""
    if sub.ambient_dim != total.ambient_dim:
        raise AmbientMismatch("ambient dimensions differ")
    if not total.contains_subspace(sub):
        raise NotASubspace("sub is not contained in total")
    reduced = [sub.reduce_mod(total.rows[k]) for k in range(total.dim)]
    reps = Subspace.from_span(
        [r for r in reduced if not is_zero(r)], total.ambient_dim
    )
    assert reps.dim == total.dim - sub.dim
    return Quotient(sub, total, reps)


def sum_and_intersect(a: Subspace, b: Subspace) -> tuple[Subspace, Subspace]:
    """Zassenhaus: canonical sum and intersection of two subspaces."""
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("ambient dimensions differ")
    n = a.ambient_dim
    block = zeros(a.dim + b.dim, 2 * n)
    for k in range(a.dim):
        block[k, :n] = a.rows[k]
        block[k, n:] = a.rows[k]
    for k in range(b.dim):
        block[a.dim + k, :n] = b.rows[k]
    rows, pivots = rref(block)
    sum_rows = []
    inter_rows = []
    for k in range(rows.shape[0]):
        if pivots[k] < n:
            sum_rows.append(rows[k, :n])
        else:
            inter_rows.append(rows[k, n:])
    total = Subspace.from_span(sum_rows, n)
    inter = Subspace.from_span(inter_rows, n)
    assert total.dim + inter.dim == a.dim + b.dim
    return total, inter


def kernel_basis(mat) -> Subspace:
    """Canonical echelon basis of the null space; dim = cols - rank."""
    mat = np.asarray(mat, dtype=object)
    nrows, ncols = mat.shape
    rows, pivots = rref(mat)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    vecs = []
    for f in free:
        v = np.zeros(ncols, dtype=object)
        v[f] = 1
        for k, p in enumerate(pivots):
            v[p] = -rows[k, f]
        vecs.append(v)
    ker = Subspace.from_span(vecs, ncols)
    assert len(pivots) + ker.dim == ncols
    return ker


def image_basis(mat) -> Subspace:
    """Canonical echelon basis of the column span."""
    mat = np.asarray(mat, dtype=object)
    nrows, ncols = mat.shape
    return Subspace.from_span([mat[:, j] for j in range(ncols)], nrows)
