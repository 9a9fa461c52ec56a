"""Structure-constant algebras: Lie algebras, commutative associative unital
algebras, representations, and the built-in catalog.

Structure constants are stored densely per (i, j) pair with sparse coefficient
dicts.  The convenience constructors take the upper-triangular half and derive
the rest (antisymmetry / commutativity); ``from_table`` keeps arbitrary input
verbatim so the validators can report violations in hand-built tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .linalg import Scalar, mat_eq, zeros


class InvalidStructure(ValueError):
    """Raised when a validated constructor receives inconsistent constants."""

    def __init__(self, report: "ValidationReport"):
        super().__init__(report.summary())
        self.report = report


@dataclass
class ValidationReport:
    """Outcome of an axiom check; empty violations means valid."""

    subject: str
    violations: list[tuple[str, tuple, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, law: str, indices: tuple, detail: str) -> None:
        self.violations.append((law, indices, detail))

    def summary(self) -> str:
        if self.ok:
            return f"{self.subject}: valid"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines += [f"  {law} at {idx}: {d}" for law, idx, d in self.violations]
        return "\n".join(lines)


def _coeff_table(dim: int, entries: dict) -> list[list[dict[int, Scalar]]]:
    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for (i, j), terms in entries.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise IndexError(f"basis index ({i},{j}) out of range for dim {dim}")
        clean = {k: v for k, v in terms.items() if v}
        for k in clean:
            if not 0 <= k < dim:
                raise IndexError(f"target index {k} out of range for dim {dim}")
        table[i][j] = clean
    return table


def _combine(table, u, v) -> np.ndarray:
    """Bilinear extension of a coefficient table to coordinate vectors."""
    dim = len(table)
    out = np.zeros(dim, dtype=object)
    for i in range(dim):
        if not u[i]:
            continue
        for j in range(dim):
            if not v[j]:
                continue
            for k, c in table[i][j].items():
                out[k] += u[i] * v[j] * c
    return out


class LieAlgebra:
    """Finite-dimensional Lie algebra given by rational structure constants."""

    def __init__(self, dim: int, brackets: dict, basis_names=None, name: str = ""):
        """brackets maps (i, j) with i < j to {k: coeff}; the i > j half is
        derived by antisymmetry."""
        for i, j in brackets:
            if i >= j:
                raise ValueError("pass only i < j brackets; use from_table for raw input")
        full = dict(brackets)
        for (i, j), terms in brackets.items():
            full[(j, i)] = {k: -v for k, v in terms.items() if v}
        self.dim = dim
        self.name = name
        self.basis_names = tuple(basis_names) if basis_names else tuple(
            f"x{i+1}" for i in range(dim)
        )
        self.table = _coeff_table(dim, full)
        self.current_factors = None

    @classmethod
    def from_table(cls, dim: int, entries: dict, basis_names=None, name: str = ""):
        """Keep the given (i, j) entries verbatim (missing entries are zero)."""
        g = cls.__new__(cls)
        g.dim = dim
        g.name = name
        g.basis_names = tuple(basis_names) if basis_names else tuple(
            f"x{i+1}" for i in range(dim)
        )
        g.table = _coeff_table(dim, entries)
        g.current_factors = None
        return g

    def bracket(self, i: int, j: int) -> dict[int, Scalar]:
        return self.table[i][j]

    def bracket_vec(self, u, v) -> np.ndarray:
        return _combine(self.table, u, v)

    def structure_constant(self, i: int, j: int, k: int) -> Scalar:
        return self.table[i][j].get(k, 0)

    def validated(self) -> "LieAlgebra":
        report = validate_lie(self)
        if not report.ok:
            raise InvalidStructure(report)
        return self

    def __repr__(self):
        label = self.name or "lie"
        return f"LieAlgebra({label}, dim={self.dim})"


class CommAssocAlgebra:
    """Commutative associative algebra with a distinguished unit basis vector."""

    def __init__(self, dim: int, products: dict, unit_index: int = 0,
                 basis_names=None, name: str = ""):
        """products maps (i, j) with i <= j to {k: coeff}; the rest is derived
        by commutativity."""
        for i, j in products:
            if i > j:
                raise ValueError("pass only i <= j products; use from_table for raw input")
        full = dict(products)
        for (i, j), terms in products.items():
            if i != j:
                full[(j, i)] = dict(terms)
        self.dim = dim
        self.name = name
        self.unit_index = unit_index
        self.basis_names = tuple(basis_names) if basis_names else tuple(
            f"s{i+1}" for i in range(dim)
        )
        self.table = _coeff_table(dim, full)

    @classmethod
    def from_table(cls, dim: int, entries: dict, unit_index: int = 0,
                   basis_names=None, name: str = ""):
        s = cls.__new__(cls)
        s.dim = dim
        s.name = name
        s.unit_index = unit_index
        s.basis_names = tuple(basis_names) if basis_names else tuple(
            f"s{i+1}" for i in range(dim)
        )
        s.table = _coeff_table(dim, entries)
        return s

    def product(self, i: int, j: int) -> dict[int, Scalar]:
        return self.table[i][j]

    def product_vec(self, u, v) -> np.ndarray:
        return _combine(self.table, u, v)

    def multiply_basis_list(self, indices) -> np.ndarray:
        """Product of several basis vectors, as a coordinate vector."""
        out = np.zeros(self.dim, dtype=object)
        out[self.unit_index] = 1
        for a in indices:
            e = np.zeros(self.dim, dtype=object)
            e[a] = 1
            out = self.product_vec(out, e)
        return out

    def validated(self) -> "CommAssocAlgebra":
        report = validate_assoc(self)
        if not report.ok:
            raise InvalidStructure(report)
        return self

    def __repr__(self):
        label = self.name or "assoc"
        return f"CommAssocAlgebra({label}, dim={self.dim})"


class Representation:
    """A Lie algebra acting on a module by one matrix per basis vector."""

    def __init__(self, algebra: LieAlgebra, matrices, name: str = ""):
        self.algebra = algebra
        self.matrices = tuple(np.asarray(m, dtype=object) for m in matrices)
        if len(self.matrices) != algebra.dim:
            raise ValueError("need one matrix per Lie algebra basis vector")
        dims = {m.shape for m in self.matrices}
        if len(dims) > 1 or any(r != c for r, c in dims):
            raise ValueError("representation matrices must be square of equal size")
        self.module_dim = self.matrices[0].shape[0] if self.matrices else 0
        self.name = name

    def matrix(self, i: int) -> np.ndarray:
        return self.matrices[i]

    def act(self, i: int, vec) -> np.ndarray:
        return np.dot(self.matrices[i], np.asarray(vec, dtype=object))

    def validated(self) -> "Representation":
        report = validate_representation(self)
        if not report.ok:
            raise InvalidStructure(report)
        return self

    def __repr__(self):
        label = self.name or "rep"
        return f"Representation({label}, module_dim={self.module_dim})"


class DualBasis:
    """Coordinate functionals of an algebra basis and their module extensions.

    With the flattened basis v_b (x) s_a at position b*m + a, the extension of
    the j-th functional sends a module-valued tensor to its j-th component.
    """

    def __init__(self, algebra: CommAssocAlgebra):
        self.algebra = algebra

    def omega(self, j: int, vec) -> Scalar:
        if not 0 <= j < self.algebra.dim:
            raise IndexError(f"component {j} out of range")
        return vec[j]

    def omega_hat(self, j: int, module_dim: int) -> np.ndarray:
        """Matrix of the induced map (module (x) algebra) -> module."""
        m = self.algebra.dim
        if not 0 <= j < m:
            raise IndexError(f"component {j} out of range")
        out = zeros(module_dim, module_dim * m)
        for b in range(module_dim):
            out[b, b * m + j] = 1
        return out


def validate_lie(g: LieAlgebra) -> ValidationReport:
    """Check antisymmetry and the Jacobi identity; report every violation."""
    report = ValidationReport(subject=g.name or "lie algebra")
    n = g.dim
    for i in range(n):
        for j in range(i, n):
            fwd = g.table[i][j]
            bwd = g.table[j][i]
            for k in sorted(set(fwd) | set(bwd)):
                if fwd.get(k, 0) != -bwd.get(k, 0):
                    report.add(
                        "antisymmetry", (i, j, k),
                        f"c[{i}][{j}][{k}]={fwd.get(k, 0)} but c[{j}][{i}][{k}]={bwd.get(k, 0)}",
                    )
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = np.zeros(n, dtype=object)
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    for l, coeff in g.table[a][b].items():
                        if coeff:
                            for t, d in g.table[l][c].items():
                                total[t] += coeff * d
                for t in range(n):
                    if total[t]:
                        report.add(
                            "jacobi", (i, j, k),
                            f"cyclic sum has coefficient {total[t]} on basis {t}",
                        )
                        break
    return report


def validate_assoc(s: CommAssocAlgebra) -> ValidationReport:
    """Check commutativity, associativity, the unit law, and the unit index."""
    report = ValidationReport(subject=s.name or "assoc algebra")
    n = s.dim
    if not 0 <= s.unit_index < n:
        report.add("unit", (s.unit_index,), "unit index out of range")
        return report
    for i in range(n):
        for j in range(i, n):
            fwd, bwd = s.table[i][j], s.table[j][i]
            for k in sorted(set(fwd) | set(bwd)):
                if fwd.get(k, 0) != bwd.get(k, 0):
                    report.add(
                        "commutativity", (i, j, k),
                        f"a[{i}][{j}][{k}]={fwd.get(k, 0)} but a[{j}][{i}][{k}]={bwd.get(k, 0)}",
                    )
    basis = [np.zeros(n, dtype=object) for _ in range(n)]
    for i in range(n):
        basis[i][i] = 1
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = s.product_vec(s.product_vec(basis[i], basis[j]), basis[k])
                right = s.product_vec(basis[i], s.product_vec(basis[j], basis[k]))
                if not (left == right).all():
                    report.add(
                        "associativity", (i, j, k),
                        f"(s{i}*s{j})*s{k} != s{i}*(s{j}*s{k})",
                    )
    u = s.unit_index
    for i in range(n):
        prod = s.product_vec(basis[u], basis[i])
        if not (prod == basis[i]).all():
            report.add("unit", (u, i), f"unit*s{i} != s{i}")
    return report


def validate_representation(rep: Representation) -> ValidationReport:
    """Check rho([x_i, x_j]) = rho(x_i) rho(x_j) - rho(x_j) rho(x_i)."""
    g = rep.algebra
    report = ValidationReport(subject=rep.name or "representation")
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            comm = np.dot(rep.matrices[i], rep.matrices[j]) - np.dot(
                rep.matrices[j], rep.matrices[i]
            )
            expected = zeros(rep.module_dim, rep.module_dim)
            for k, c in g.bracket(i, j).items():
                expected = expected + c * rep.matrices[k]
            if not mat_eq(comm, expected):
                report.add(
                    "commutator", (i, j),
                    "rho([x_i,x_j]) differs from the matrix commutator",
                )
    return report


def normalize_unit(s: CommAssocAlgebra) -> tuple[CommAssocAlgebra, bool]:
    """Swap the unit to the front of the basis; returns (algebra, changed)."""
    u = s.unit_index
    if u == 0:
        return s, False
    perm = list(range(s.dim))
    perm[0], perm[u] = perm[u], perm[0]
    entries = {}
    for i in range(s.dim):
        for j in range(s.dim):
            # perm is a transposition, so it is its own inverse
            terms = {perm[k]: v for k, v in s.table[perm[i]][perm[j]].items()}
            if terms:
                entries[(i, j)] = terms
    names = tuple(s.basis_names[perm[i]] for i in range(s.dim))
    out = CommAssocAlgebra.from_table(
        s.dim, entries, unit_index=0, basis_names=names, name=s.name
    )
    return out.validated(), True


def _adjoint_matrices(g: LieAlgebra):
    mats = []
    for i in range(g.dim):
        m = zeros(g.dim, g.dim)
        for j in range(g.dim):
            for k, c in g.bracket(i, j).items():
                m[k, j] = c
        mats.append(m)
    return mats


_LIE_BUILDERS = {
    "sl2": lambda: LieAlgebra(
        3,
        {(0, 1): {0: -2}, (0, 2): {1: 1}, (1, 2): {2: -2}},
        basis_names=("e", "h", "f"),
        name="sl2",
    ),
    "solvable2": lambda: LieAlgebra(
        2, {(0, 1): {1: 1}}, basis_names=("x", "y"), name="solvable2"
    ),
    "heisenberg3": lambda: LieAlgebra(
        3, {(0, 1): {2: 1}}, basis_names=("x", "y", "z"), name="heisenberg3"
    ),
}


def _abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, name=f"abelian{n}")


def _truncated_poly(m: int) -> CommAssocAlgebra:
    if m < 1:
        raise ValueError("truncated polynomial algebra needs dimension >= 1")
    products = {
        (i, j): ({i + j: 1} if i + j < m else {})
        for i in range(m)
        for j in range(i, m)
    }
    names = tuple("1" if i == 0 else ("x" if i == 1 else f"x^{i}") for i in range(m))
    return CommAssocAlgebra(m, products, basis_names=names, name=f"truncated_poly{m}")


_ASSOC_BUILDERS = {
    "trivial_field": lambda: CommAssocAlgebra(
        1, {(0, 0): {0: 1}}, basis_names=("1",), name="trivial_field"
    ),
    "dual_numbers": lambda: CommAssocAlgebra(
        2,
        {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 1): {}},
        basis_names=("1", "eps"),
        name="dual_numbers",
    ),
    "split2": lambda: CommAssocAlgebra(
        2,
        {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 1): {1: 1}},
        basis_names=("1", "x"),
        name="split2",
    ),
}


def catalog_rep(name: str, g: LieAlgebra) -> Representation:
    """Built-in representations of a catalog Lie algebra."""
    if name == "trivial":
        return Representation(
            g, [zeros(1, 1) for _ in range(g.dim)], name="trivial"
        ).validated()
    if name == "adjoint":
        return Representation(g, _adjoint_matrices(g), name="adjoint").validated()
    if name == "natural":
        if g.name != "sl2":
            raise KeyError(f"no natural representation for {g.name or 'this algebra'}")
        e = [[0, 1], [0, 0]]
        h = [[1, 0], [0, -1]]
        f = [[0, 0], [1, 0]]
        return Representation(g, [e, h, f], name="natural").validated()
    raise KeyError(f"unknown representation {name!r}")


def catalog(name: str, *params):
    """Validated built-in algebras and representations by name.

    Lie algebras: abelian(n), solvable2, heisenberg3, sl2.
    Associative:  trivial_field, dual_numbers, truncated_poly(m), split2.
    Representations (pass the Lie algebra): trivial, adjoint, natural.
    """
    if name in _LIE_BUILDERS:
        return _LIE_BUILDERS[name]().validated()
    if name == "abelian":
        return _abelian(int(params[0])).validated()
    if name in _ASSOC_BUILDERS:
        return _ASSOC_BUILDERS[name]().validated()
    if name == "truncated_poly":
        return _truncated_poly(int(params[0])).validated()
    if name in ("trivial", "adjoint", "natural"):
        return catalog_rep(name, params[0])
    raise KeyError(f"unknown catalog entry {name!r}")
