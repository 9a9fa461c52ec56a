"""Cohomology of the current complex and its comparison with the base complex.

For one triple (g, s, rep) the engine computes, in every degree: cocycles,
coboundaries, canonical class representatives, the subspace of cochains
vanishing on unit-embedded arguments, the classes such cocycles represent, and
the comparison maps between current and base cohomology.  All maps are
matrices in canonical bases, so the exactness statements (the restriction map
of classes is surjective, its kernel is exactly the vanishing classes, and the
dimensions add up) are verified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebras import CommAssocAlgebra, LieAlgebra, Representation
from .cochains import CochainSpace, differential_matrix
from .currents import CurrentSetup, assemble_components, decompose_components
from .lifts import LiftContext, is_chain_map
from .linalg import (
    Quotient,
    Subspace,
    image_basis,
    is_zero,
    kernel_basis,
    mat_eq,
    quotient_data,
    rank,
    sum_and_intersect,
    zeros,
)
from .reports import VerificationReport


class HypothesisFailed(RuntimeError):
    """The base cohomology does not vanish, so the collapse theorem is
    inapplicable."""


class NotACocycle(ValueError):
    """An operation on cohomology classes received a non-cocycle."""


@dataclass
class CohomologyGroup:
    """Cocycles modulo coboundaries in one degree, with canonical cosets."""

    degree: int
    cocycles: Subspace
    coboundaries: Subspace
    quotient: Quotient

    @property
    def dim(self) -> int:
        return self.cocycles.dim - self.coboundaries.dim

    @property
    def space(self) -> Subspace:
        """Canonical representatives, as a subspace of the cochain space."""
        return self.quotient.representatives

    def reduce(self, v) -> np.ndarray:
        """Canonical representative of the class of a cocycle."""
        return self.quotient.reduce(v)

    def class_coords(self, v) -> np.ndarray:
        return self.quotient.coords(v)


class _Complex:
    """Graded cochain spaces, differentials, and groups for one module."""

    def __init__(self, rep: Representation):
        self.rep = rep
        self._spaces: dict[int, CochainSpace] = {}
        self._groups: dict[int, CohomologyGroup] = {}

    def space(self, p: int) -> CochainSpace:
        if p not in self._spaces:
            self._spaces[p] = CochainSpace.of(self.rep, p)
        return self._spaces[p]

    def d(self, p: int) -> np.ndarray:
        return differential_matrix(self.space(p))

    def group(self, p: int) -> CohomologyGroup:
        if p not in self._groups:
            z = kernel_basis(self.d(p))
            if p > 0:
                b = image_basis(self.d(p - 1))
            else:
                b = Subspace.zero(self.space(p).dim)
            assert z.contains_subspace(b)
            self._groups[p] = CohomologyGroup(p, z, b, quotient_data(b, z))
        return self._groups[p]


def cohomology(rep: Representation, p: int) -> CohomologyGroup:
    """Exact cohomology of the cochain complex of a representation."""
    return _Complex(rep).group(p)


def kron_with_identity(mat: np.ndarray, m: int) -> np.ndarray:
    """The map (x) identity on an m-dimensional coefficient factor."""
    rows, cols = mat.shape
    out = zeros(rows * m, cols * m)
    for r in range(rows):
        for c in range(cols):
            if mat[r, c]:
                for a in range(m):
                    out[r * m + a, c * m + a] = mat[r, c]
    return out


@dataclass
class SESDegree:
    degree: int
    dim_current: int
    dim_vanishing_classes: int
    dim_base: int
    alpha_surjective: bool
    kernel_equals_q: bool
    dims_exact: bool

    @property
    def ok(self) -> bool:
        return self.alpha_surjective and self.kernel_equals_q and self.dims_exact


@dataclass
class SESReport:
    """Per-degree exactness data for the class-restriction sequence."""

    g_name: str
    s_name: str
    rep_name: str
    m: int
    rows: list[SESDegree] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "g": self.g_name,
            "s": self.s_name,
            "rep": self.rep_name,
            "m": self.m,
            "passed": self.ok,
            "degrees": [
                {
                    "p": r.degree,
                    "dim_current_cohomology": r.dim_current,
                    "dim_vanishing_classes": r.dim_vanishing_classes,
                    "dim_base_cohomology": r.dim_base,
                    "alpha_surjective": r.alpha_surjective,
                    "kernel_equals_q": r.kernel_equals_q,
                    "dims_exact": r.dims_exact,
                }
                for r in self.rows
            ],
        }

    def summary(self) -> str:
        head = (
            f"short exact sequence on ({self.g_name}, {self.rep_name}, {self.s_name})"
        )
        lines = [head, "  p  dim H(cur)  dim Q  dim H(base)  surj  ker=Q  dims"]
        for r in self.rows:
            lines.append(
                f"  {r.degree:<2} {r.dim_current:^10} {r.dim_vanishing_classes:^6} "
                f"{r.dim_base:^11} {str(r.alpha_surjective):<5} "
                f"{str(r.kernel_equals_q):<6} {str(r.dims_exact):<5}"
            )
        lines.append("  overall: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines)


class CurrentCohomology:
    """All cohomological data of one (g, s, rep) triple."""

    def __init__(self, g: LieAlgebra, s: CommAssocAlgebra, rep: Representation):
        self.setup = CurrentSetup.build(g, s, rep)
        self.g = g
        self.s = s
        self.rep = rep
        self.m = s.dim
        self.dv = rep.module_dim
        self.ctx = LiftContext(g, s, self.setup.current_g)
        self.base = _Complex(rep)
        self.cur = _Complex(self.setup.current_rep)
        self._vanishing: dict[int, Subspace] = {}
        self._vanishing_classes: dict[int, Subspace] = {}
        self._alpha: dict[int, np.ndarray] = {}
        self._zprime: dict[int, Quotient] = {}
        self._bprime: dict[int, Quotient] = {}

    @property
    def max_degree(self) -> int:
        return self.setup.current_g.dim

    def group(self, p: int) -> CohomologyGroup:
        return self.cur.group(p)

    def base_group(self, p: int) -> CohomologyGroup:
        return self.base.group(p)

    # -- the distinguished subspaces --------------------------------------
    def vanishing_subspace(self, p: int) -> Subspace:
        """Current cochains vanishing on every tuple of unit-embedded
        arguments; zero in degree 0 by definition."""
        if p not in self._vanishing:
            if p == 0:
                self._vanishing[p] = Subspace.zero(self.cur.space(0).dim)
            else:
                restrict = self.ctx.restriction_matrix(p, self.dv * self.m)
                self._vanishing[p] = kernel_basis(restrict)
        return self._vanishing[p]

    def vanishing_classes(self, p: int) -> Subspace:
        """Classes of cocycles that vanish on unit-embedded arguments, as a
        canonical subspace of the class-representative space."""
        if p not in self._vanishing_classes:
            grp = self.group(p)
            _, inter = sum_and_intersect(grp.cocycles, self.vanishing_subspace(p))
            reduced = [grp.reduce(inter.rows[k]) for k in range(inter.dim)]
            self._vanishing_classes[p] = Subspace.from_span(
                reduced, self.cur.space(p).dim
            )
        return self._vanishing_classes[p]

    # -- base quotients ----------------------------------------------------
    def base_mod_coboundaries(self, p: int) -> Quotient:
        if p not in self._zprime:
            full = Subspace.full(self.base.space(p).dim)
            self._zprime[p] = quotient_data(self.base.group(p).coboundaries, full)
        return self._zprime[p]

    def base_mod_cocycles(self, p: int) -> Quotient:
        if p not in self._bprime:
            full = Subspace.full(self.base.space(p).dim)
            self._bprime[p] = quotient_data(self.base.group(p).cocycles, full)
        return self._bprime[p]

    # -- component extraction of a current cochain -------------------------
    def _base_component(self, vec: np.ndarray, p: int, j: int) -> np.ndarray:
        return np.dot(
            self.ctx.restriction_matrix(p, self.dv),
            np.dot(self.ctx.component_matrix(p, self.dv, j), vec),
        )

    # -- comparison matrices ------------------------------------------------
    def restriction_classes_matrix(self, p: int) -> np.ndarray:
        """Current classes -> base classes (x) coefficients, in canonical
        coordinates (base class index major, coefficient index minor)."""
        if p not in self._alpha:
            hcur = self.group(p)
            hg = self.base.group(p)
            out = zeros(hg.dim * self.m, hcur.dim)
            for k in range(hcur.dim):
                z = hcur.space.rows[k]
                for j in range(self.m):
                    u = self._base_component(z, p, j)
                    assert hg.cocycles.contains(u)
                    coords = hg.class_coords(u)
                    for h in range(hg.dim):
                        out[h * self.m + j, k] = coords[h]
            self._alpha[p] = out
        return self._alpha[p]

    def lift_cocycles_matrix(self, p: int) -> np.ndarray:
        """Base cocycles (x) coefficients -> current classes."""
        zg = self.base.group(p).cocycles
        hcur = self.group(p)
        out = zeros(hcur.dim, zg.dim * self.m)
        big_d = self.cur.d(p)
        for i in range(zg.dim):
            for a in range(self.m):
                lam = np.dot(self.ctx.insertion_matrix(p, self.dv, a), zg.rows[i])
                assert is_zero(np.dot(big_d, lam))
                coords = hcur.class_coords(lam)
                for k in range(hcur.dim):
                    out[k, i * self.m + a] = coords[k]
        return out

    def component_classes_matrix(self, p: int) -> np.ndarray:
        """Current classes -> (base cochains mod coboundaries) (x) coefficients."""
        hcur = self.group(p)
        zp = self.base_mod_coboundaries(p)
        out = zeros(zp.dim * self.m, hcur.dim)
        for k in range(hcur.dim):
            z = hcur.space.rows[k]
            for j in range(self.m):
                coords = zp.coords(self._base_component(z, p, j))
                for r in range(zp.dim):
                    out[r * self.m + j, k] = coords[r]
        return out

    def base_projection_matrix(self, p: int) -> np.ndarray:
        """Base cocycles -> base classes."""
        hg = self.base.group(p)
        zg = hg.cocycles
        out = zeros(hg.dim, zg.dim)
        for i in range(zg.dim):
            coords = hg.class_coords(zg.rows[i])
            for h in range(hg.dim):
                out[h, i] = coords[h]
        return out

    def base_inclusion_matrix(self, p: int) -> np.ndarray:
        """Base classes -> base cochains mod coboundaries."""
        hg = self.base.group(p)
        zp = self.base_mod_coboundaries(p)
        out = zeros(zp.dim, hg.dim)
        for h in range(hg.dim):
            coords = zp.coords(hg.space.rows[h])
            for r in range(zp.dim):
                out[r, h] = coords[r]
        return out

    def coboundary_quotient_matrix(self, p: int) -> np.ndarray:
        """Base cochains mod coboundaries -> base cochains mod cocycles."""
        zp = self.base_mod_coboundaries(p)
        bp = self.base_mod_cocycles(p)
        out = zeros(bp.dim, zp.dim)
        for k in range(zp.dim):
            coords = bp.coords(zp.representatives.rows[k])
            for r in range(bp.dim):
                out[r, k] = coords[r]
        return out

    # -- class-level operations ---------------------------------------------
    def lift_cocycles(self, z_tensor, p: int) -> np.ndarray:
        """Canonical current class of a (base cocycle (x) coefficient) tensor."""
        comps = decompose_components(np.asarray(z_tensor, dtype=object), self.m)
        zg = self.base.group(p).cocycles
        for comp in comps:
            if not zg.contains(comp):
                raise NotACocycle("component is not a base cocycle")
        lam = np.zeros(self.cur.space(p).dim, dtype=object)
        for a, comp in enumerate(comps):
            lam = lam + np.dot(self.ctx.insertion_matrix(p, self.dv, a), comp)
        assert is_zero(np.dot(self.cur.d(p), lam))
        return self.group(p).reduce(lam)

    def component_classes(self, vec, p: int) -> np.ndarray:
        """Componentwise coboundary-reduced restriction of a current cocycle;
        independent of the representative."""
        vec = np.asarray(vec, dtype=object)
        if not is_zero(np.dot(self.cur.d(p), vec)):
            raise NotACocycle("input is not a current cocycle")
        bg = self.base.group(p).coboundaries
        parts = [
            bg.reduce_mod(self._base_component(vec, p, j)) for j in range(self.m)
        ]
        return assemble_components(parts)

    def restrict_classes(self, vec, p: int) -> np.ndarray:
        """Base cohomology classes of the components of a current cocycle."""
        vec = np.asarray(vec, dtype=object)
        if not is_zero(np.dot(self.cur.d(p), vec)):
            raise NotACocycle("input is not a current cocycle")
        hg = self.base.group(p)
        parts = []
        for j in range(self.m):
            u = self._base_component(vec, p, j)
            assert hg.cocycles.contains(u)
            parts.append(hg.reduce(u))
        return assemble_components(parts)

    # -- verification suites -------------------------------------------------
    def verify_alpha_diagram(self) -> VerificationReport:
        """The class restriction factors the projection and the inclusion."""
        report = VerificationReport("class restriction diagram")
        for p in range(self.max_degree + 1):
            alpha = self.restriction_classes_matrix(p)
            lift = self.lift_cocycles_matrix(p)
            proj = kron_with_identity(self.base_projection_matrix(p), self.m)
            report.add(f"restrict(lift) = project, p={p}",
                       mat_eq(np.dot(alpha, lift), proj))
            incl = kron_with_identity(self.base_inclusion_matrix(p), self.m)
            report.add(
                f"include(restrict) = components, p={p}",
                mat_eq(np.dot(incl, alpha), self.component_classes_matrix(p)),
            )
        return report

    def verify_zeta_psi(self) -> VerificationReport:
        """Component classes of cocycles die in cochains mod cocycles."""
        report = VerificationReport("components of cocycles are cocycle classes")
        for p in range(self.max_degree + 1):
            zeta = kron_with_identity(self.coboundary_quotient_matrix(p), self.m)
            prod = np.dot(zeta, self.component_classes_matrix(p))
            report.add(f"p={p}", is_zero(prod))
        return report

    def verify_naturality(self, family: dict[int, np.ndarray],
                          other: "CurrentCohomology | None" = None
                          ) -> VerificationReport:
        """Chain maps commute with class restriction (exact square check)."""
        other = other if other is not None else self
        report = VerificationReport("naturality of class restriction")
        if not is_chain_map(self.rep, other.rep, family):
            report.add("hypothesis: family is a chain map", False,
                       "not a chain map; square skipped")
            return report
        report.add("hypothesis: family is a chain map", True)
        dv, dw = self.dv, other.dv

        def base_f(p: int) -> np.ndarray:
            if p in family:
                return np.asarray(family[p], dtype=object)
            return zeros(CochainSpace(self.g, dw, p).dim,
                         CochainSpace(self.g, dv, p).dim)

        for p in range(self.max_degree + 1):
            hv = self.group(p)
            hw = other.group(p)
            lifted_reps = self.ctx.multiply_lift(
                "c", "c", base_f(p), p, dv, dw, right=hv.space.rows.T
            )
            lifted_on_classes = zeros(hw.dim, hv.dim)
            for k in range(hv.dim):
                w = lifted_reps[:, k]
                assert hw.cocycles.contains(w)
                coords = hw.class_coords(w)
                for r in range(hw.dim):
                    lifted_on_classes[r, k] = coords[r]
            hgv = self.base.group(p)
            hgw = other.base.group(p)
            base_on_classes = zeros(hgw.dim, hgv.dim)
            for h in range(hgv.dim):
                u = np.dot(base_f(p), hgv.space.rows[h])
                assert hgw.cocycles.contains(u)
                coords = hgw.class_coords(u)
                for r in range(hgw.dim):
                    base_on_classes[r, h] = coords[r]
            lhs = np.dot(other.restriction_classes_matrix(p), lifted_on_classes)
            rhs = np.dot(kron_with_identity(base_on_classes, self.m),
                         self.restriction_classes_matrix(p))
            report.add(f"p={p}", mat_eq(lhs, rhs))
        return report

    def verify_ses(self) -> SESReport:
        """Exactness of 0 -> Q -> H(current) -> H(base) (x) s -> 0 per degree."""
        report = SESReport(
            g_name=self.g.name or "g",
            s_name=self.s.name or "s",
            rep_name=self.rep.name or "rep",
            m=self.m,
        )
        for p in range(self.max_degree + 1):
            hcur = self.group(p)
            hg = self.base.group(p)
            q = self.vanishing_classes(p)
            alpha = self.restriction_classes_matrix(p)
            surjective = rank(alpha) == hg.dim * self.m
            ker = kernel_basis(alpha)
            ambient_vectors = [
                np.dot(ker.rows[k], hcur.space.rows) for k in range(ker.dim)
            ]
            ker_ambient = Subspace.from_span(
                ambient_vectors, self.cur.space(p).dim
            )
            kernel_equals_q = ker_ambient == q
            dims_exact = hcur.dim == q.dim + self.m * hg.dim
            report.rows.append(
                SESDegree(
                    degree=p,
                    dim_current=hcur.dim,
                    dim_vanishing_classes=q.dim,
                    dim_base=hg.dim,
                    alpha_surjective=surjective,
                    kernel_equals_q=kernel_equals_q,
                    dims_exact=dims_exact,
                )
            )
        return report

    def verify_vanishing_collapse(self) -> VerificationReport:
        """When base cohomology vanishes identically, the current cohomology
        equals the vanishing classes; computed twice, independently."""
        for p in range(self.g.dim + 1):
            d = self.base.group(p).dim
            if d:
                raise HypothesisFailed(
                    f"base cohomology does not vanish: dim H^{p} = {d}"
                )
        report = VerificationReport("collapse onto vanishing classes")
        for p in range(self.max_degree + 1):
            report.add(
                f"p={p}",
                self.vanishing_classes(p) == self.group(p).space,
            )
        return report

    def verify_degree_zero_collapse(self) -> VerificationReport:
        """Degree 0: current invariants equal base invariants (x) coefficients
        and the class restriction is the identity matrix."""
        report = VerificationReport("degree 0 collapse")
        h0 = self.group(0)
        hg0 = self.base.group(0)
        emb = []
        for h in range(hg0.dim):
            row = hg0.space.rows[h]
            for a in range(self.m):
                vec = np.zeros(self.dv * self.m, dtype=object)
                for b in range(self.dv):
                    vec[b * self.m + a] = row[b]
                emb.append(vec)
        tensored = Subspace.from_span(emb, self.dv * self.m)
        report.add("invariants factor", h0.space == tensored)
        alpha0 = self.restriction_classes_matrix(0)
        n = h0.dim
        ident = zeros(n, n)
        for i in range(n):
            ident[i, i] = 1
        report.add("restriction is the identity", mat_eq(alpha0, ident))
        return report


# -- module-level convenience wrappers ---------------------------------------

def base_vanishing_subspace(g: LieAlgebra, s: CommAssocAlgebra,
                            rep: Representation, p: int) -> Subspace:
    return CurrentCohomology(g, s, rep).vanishing_subspace(p)


def vanishing_classes(g: LieAlgebra, s: CommAssocAlgebra,
                      rep: Representation, p: int) -> Subspace:
    return CurrentCohomology(g, s, rep).vanishing_classes(p)


def verify_ses(g: LieAlgebra, s: CommAssocAlgebra,
               rep: Representation) -> SESReport:
    return CurrentCohomology(g, s, rep).verify_ses()
