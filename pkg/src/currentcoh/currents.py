"""Tensoring a Lie algebra and its modules with a commutative unital algebra.

The flattened basis of a tensor product puts the Lie/module index first and
the coefficient-algebra index second: v_b (x) s_a sits at position b*m + a.
This keeps the "(x) 1" sub-basis at offset 0 mod m (the unit is normalized to
be the first basis vector) and makes component extraction a stride-m slice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .algebras import CommAssocAlgebra, LieAlgebra, Representation
from .linalg import zeros


class TensorIndex(NamedTuple):
    """Position of v_i (x) s_j in the flattened tensor basis."""

    lie_index: int
    algebra_index: int

    def flat(self, m: int) -> int:
        return self.lie_index * m + self.algebra_index

    @classmethod
    def from_flat(cls, pos: int, m: int) -> "TensorIndex":
        i, j = divmod(pos, m)
        return cls(i, j)


class LengthMismatch(ValueError):
    """A tensor-space vector had the wrong length for the decomposition."""


def current_algebra(g: LieAlgebra, s: CommAssocAlgebra) -> LieAlgebra:
    """The Lie algebra g (x) s with bracket [x(x)a, y(x)b] = [x,y](x)ab."""
    g.validated()
    s.validated()
    if s.unit_index != 0:
        raise ValueError("normalize the unit to the first basis vector first")
    n, m = g.dim, s.dim
    entries = {}
    for i in range(n):
        for j in range(n):
            lie_terms = g.bracket(i, j)
            if not lie_terms:
                continue
            for a in range(m):
                for b in range(m):
                    alg_terms = s.product(a, b)
                    if not alg_terms:
                        continue
                    terms = {}
                    for k, ck in lie_terms.items():
                        for c, ac in alg_terms.items():
                            terms[k * m + c] = ck * ac
                    entries[(i * m + a, j * m + b)] = terms
    names = tuple(
        f"{g.basis_names[i]}(x){s.basis_names[a]}"
        for i in range(n)
        for a in range(m)
    )
    out = LieAlgebra.from_table(
        n * m, entries, basis_names=names,
        name=f"{g.name or 'g'}(x){s.name or 's'}",
    )
    out.current_factors = (g, s)
    return out.validated()


def current_representation(rep: Representation, s: CommAssocAlgebra,
                           algebra: LieAlgebra | None = None) -> Representation:
    """Extend rho to g (x) s acting on V (x) s by (x(x)a)(v(x)b) = rho(x)v (x) ab."""
    rep.validated()
    gs = algebra if algebra is not None else current_algebra(rep.algebra, s)
    n, m, dv = rep.algebra.dim, s.dim, rep.module_dim
    mats = []
    for i in range(n):
        rho = rep.matrices[i]
        for a in range(m):
            mat = zeros(dv * m, dv * m)
            for b in range(dv):
                for bp in range(dv):
                    if not rho[bp, b]:
                        continue
                    for c in range(m):
                        for cp, ac in s.product(a, c).items():
                            mat[bp * m + cp, b * m + c] = rho[bp, b] * ac
            mats.append(mat)
    name = f"{rep.name or 'rep'}(x){s.name or 's'}"
    return Representation(gs, mats, name=name).validated()


def decompose_components(vec, m: int) -> list[np.ndarray]:
    """Split a vector of V (x) S into its m component vectors in V."""
    vec = np.asarray(vec, dtype=object)
    if m < 1 or vec.shape[0] % m:
        raise LengthMismatch(f"length {vec.shape[0]} is not a multiple of {m}")
    return [vec[j::m].copy() for j in range(m)]


def assemble_components(parts) -> np.ndarray:
    """Inverse of decompose_components."""
    parts = [np.asarray(p, dtype=object) for p in parts]
    m = len(parts)
    dv = parts[0].shape[0]
    out = np.zeros(dv * m, dtype=object)
    for j, p in enumerate(parts):
        out[j::m] = p
    return out


@dataclass
class CurrentSetup:
    """One (g, s, rep) triple with its current algebra and representation."""

    g: LieAlgebra
    s: CommAssocAlgebra
    rep: Representation
    current_g: LieAlgebra
    current_rep: Representation

    @classmethod
    def build(cls, g: LieAlgebra, s: CommAssocAlgebra, rep: Representation):
        if rep.algebra is not g and not same_structure(rep.algebra, g):
            raise ValueError("representation must act for the given Lie algebra")
        gs = current_algebra(g, s)
        reps = current_representation(rep, s, algebra=gs)
        return cls(g, s, rep, gs, reps)


def same_structure(a: LieAlgebra, b: LieAlgebra) -> bool:
    """Equal dimension and identical structure constants."""
    return a.dim == b.dim and a.table == b.table
