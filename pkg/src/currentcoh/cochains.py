"""Alternating cochain spaces and their differential, as exact matrices.

A degree-p cochain on an n-dimensional Lie algebra with values in a
d-dimensional module is a coefficient vector over the basis of pairs
(increasing p-tuple of algebra indices, module basis vector), ordered
lexicographically in the tuple and then by module index.  Degree 0 is the
module itself.  Alternation is structural: only increasing tuples are stored;
evaluation on arbitrary arguments sorts indices and applies the permutation
parity, with repeated indices giving zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .algebras import LieAlgebra, Representation
from .linalg import is_zero, zeros


class ArityMismatch(ValueError):
    """A cochain was evaluated on the wrong number of arguments."""


class CochainSpace:
    """The space of alternating p-multilinear maps into a module."""

    def __init__(self, algebra: LieAlgebra, module_dim: int, degree: int,
                 rep: Representation | None = None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        if rep is not None and rep.module_dim != module_dim:
            raise ValueError("module dimension disagrees with the representation")
        self.algebra = algebra
        self.module_dim = module_dim
        self.degree = degree
        self.rep = rep
        self.tuples = tuple(combinations(range(algebra.dim), degree))
        self.tuple_rank = {t: i for i, t in enumerate(self.tuples)}
        self.dim = len(self.tuples) * module_dim
        self._differential = None

    @classmethod
    def of(cls, rep: Representation, degree: int) -> "CochainSpace":
        return cls(rep.algebra, rep.module_dim, degree, rep)

    def index(self, tup: tuple[int, ...], b: int) -> int:
        return self.tuple_rank[tup] * self.module_dim + b

    def zero_vector(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=object)

    def basis_cochain(self, tup: tuple[int, ...], b: int) -> "Cochain":
        v = self.zero_vector()
        v[self.index(tup, b)] = 1
        return Cochain(self, v)

    def __repr__(self):
        return (
            f"CochainSpace(p={self.degree}, n={self.algebra.dim}, "
            f"module_dim={self.module_dim}, dim={self.dim})"
        )


@dataclass
class Cochain:
    """A cochain as a coefficient vector over its space's basis."""

    space: CochainSpace
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=object)
        if self.coeffs.shape != (self.space.dim,):
            raise ValueError("coefficient vector has the wrong length")

    def value_at(self, tup: tuple[int, ...]) -> np.ndarray:
        """Module vector on a basis tuple (must be increasing)."""
        dv = self.space.module_dim
        t = self.space.tuple_rank[tup]
        return self.coeffs[t * dv:(t + 1) * dv].copy()

    def is_zero(self) -> bool:
        return is_zero(self.coeffs)


def _det(rows: list[list]) -> object:
    """Exact determinant of a small matrix by Laplace expansion."""
    k = len(rows)
    if k == 0:
        return 1
    if k == 1:
        return rows[0][0]
    if k == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    rest = rows[1:]
    sign = 1
    for j in range(k):
        a = rows[0][j]
        if a:
            minor = [r[:j] + r[j + 1:] for r in rest]
            total += sign * a * _det(minor)
        sign = -sign
    return total


def evaluate(c: Cochain, args) -> np.ndarray:
    """Multilinear alternating evaluation on algebra coordinate vectors."""
    space = c.space
    p = space.degree
    if len(args) != p:
        raise ArityMismatch(f"expected {p} arguments, got {len(args)}")
    if p == 0:
        return c.coeffs.copy()
    args = [np.asarray(a, dtype=object) for a in args]
    dv = space.module_dim
    out = np.zeros(dv, dtype=object)
    for t, tup in enumerate(space.tuples):
        minor = _det([[args[r][i] for i in tup] for r in range(p)])
        if minor:
            out += minor * c.coeffs[t * dv:(t + 1) * dv]
    return out


def differential_matrix(space: CochainSpace) -> np.ndarray:
    """Matrix of the cochain differential from degree p to degree p+1.

    Signs follow the usual convention with 1-based positions: the action term
    carries (-1)^(j-1), the bracket term carries (-1)^(j+k) with the bracket
    inserted as the first argument.
    """
    if space.rep is None:
        raise ValueError("the source space carries no representation")
    if space._differential is not None:
        return space._differential
    rep = space.rep
    g = space.algebra
    dv = space.module_dim
    p = space.degree
    target = CochainSpace(g, dv, p + 1, rep)
    d = zeros(target.dim, space.dim)
    for tj, big in enumerate(target.tuples):
        for a_pos in range(p + 1):
            q = big[a_pos]
            small = big[:a_pos] + big[a_pos + 1:]
            ti = space.tuple_rank[small]
            sign = -1 if a_pos % 2 else 1
            rho = rep.matrices[q]
            for b in range(dv):
                col = ti * dv + b
                for bp in range(dv):
                    if rho[bp, b]:
                        d[tj * dv + bp, col] += sign * rho[bp, b]
        for a_pos in range(p + 1):
            for c_pos in range(a_pos + 1, p + 1):
                pair_sign = -1 if (a_pos + c_pos) % 2 else 1
                rest = tuple(
                    x for r, x in enumerate(big) if r != a_pos and r != c_pos
                )
                rest_set = set(rest)
                for k, ck in g.bracket(big[a_pos], big[c_pos]).items():
                    if not ck or k in rest_set:
                        continue
                    shifts = sum(1 for x in rest if x < k)
                    ins_sign = -1 if shifts % 2 else 1
                    small = tuple(sorted(rest + (k,)))
                    ti = space.tuple_rank[small]
                    val = pair_sign * ins_sign * ck
                    for b in range(dv):
                        d[tj * dv + b, ti * dv + b] += val
    space._differential = d
    return d


@dataclass
class ComplexReport:
    """Per-degree outcome of the d(d(.)) = 0 check."""

    algebra_name: str
    degrees: list[tuple[int, bool]]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.degrees)


def verify_complex(g: LieAlgebra, rep: Representation) -> ComplexReport:
    """Assert that consecutive differentials compose to zero in every degree."""
    degrees = []
    prev = differential_matrix(CochainSpace.of(rep, 0))
    for p in range(g.dim + 1):
        nxt = differential_matrix(CochainSpace.of(rep, p + 1))
        prod = np.dot(nxt, prev)
        degrees.append((p, is_zero(prod)))
        prev = nxt
    return ComplexReport(g.name or "lie algebra", degrees)
