"""Maps between the base cochain complex and the current cochain complex.

Everything is materialized as a matrix in the canonical cochain bases, so the
structural identities (component extraction commutes with the differentials,
lifting preserves composition, lifts of chain maps are chain maps) become
assertable exact matrix equalities.

Three families of matrices generate all the lifts:

* component extraction  C^p(g(x)s; V(x)s) -> C^p(g(x)s; V), one per basis
  vector of s (the coefficient functionals applied to values);
* unit restriction      C^p(g(x)s; M) -> C^p(g; M), evaluation on arguments
  embedded as x (x) 1;
* insertion             C^p(g; W) -> C^p(g(x)s; W(x)s), one per basis vector
  of s: a base cochain mu goes to the current cochain whose value on
  (x_1 (x) t_1, ..., x_p (x) t_p) is mu(x_1, ..., x_p) (x) s_j t_1...t_p.

Unit restriction composed with insertion is the identity (or zero for
distinct components), which is what makes the lift composition-preserving.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

import numpy as np

from .algebras import CommAssocAlgebra, DualBasis, LieAlgebra, Representation
from .cochains import Cochain, CochainSpace, differential_matrix
from .currents import CurrentSetup
from .linalg import is_zero, mat_eq, zeros
from .reports import VerificationReport


class DegreeMismatch(ValueError):
    """A cochain map between spaces of different degrees."""


class NotACurrentSource(ValueError):
    """The operation needs a current Lie algebra with known factors."""


class IndexOutOfRange(IndexError):
    """A component index outside 0..dim(s)-1."""


@dataclass
class CochainMap:
    """A linear map between cochain spaces, as a matrix in canonical bases."""

    source: CochainSpace
    target: CochainSpace
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=object)
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match "
                f"target dim {self.target.dim} x source dim {self.source.dim}"
            )

    def __call__(self, c: Cochain) -> Cochain:
        return Cochain(self.target, np.dot(self.matrix, c.coeffs))


class LiftContext:
    """Caches the generating matrices for one pair (g, s)."""

    def __init__(self, g: LieAlgebra, s: CommAssocAlgebra,
                 current: LieAlgebra | None = None):
        from .currents import current_algebra

        self.g = g
        self.s = s
        self.current_g = current if current is not None else current_algebra(g, s)
        self.m = s.dim
        self.dual = DualBasis(s)
        self._base_spaces: dict = {}
        self._cur_spaces: dict = {}
        self._component: dict = {}
        self._restriction: dict = {}
        self._insertion: dict = {}
        self._unit_component: dict = {}

    # -- spaces ----------------------------------------------------------
    def base_space(self, p: int, module_dim: int) -> CochainSpace:
        key = (p, module_dim)
        if key not in self._base_spaces:
            self._base_spaces[key] = CochainSpace(self.g, module_dim, p)
        return self._base_spaces[key]

    def current_space(self, p: int, base_module_dim: int) -> CochainSpace:
        """C^p of the current algebra with values in (module (x) s)."""
        key = (p, base_module_dim)
        if key not in self._cur_spaces:
            self._cur_spaces[key] = CochainSpace(
                self.current_g, base_module_dim * self.m, p
            )
        return self._cur_spaces[key]

    # -- generating matrices ----------------------------------------------
    def component_matrix(self, p: int, module_dim: int, j: int) -> np.ndarray:
        """C^p(g(x)s; V(x)s) -> C^p(g(x)s; V): j-th coefficient of the values."""
        if not 0 <= j < self.m:
            raise IndexOutOfRange(f"component {j} out of range 0..{self.m - 1}")
        key = (p, module_dim, j)
        if key not in self._component:
            src = self.current_space(p, module_dim)
            ntup = len(src.tuples)
            out = zeros(ntup * module_dim, src.dim)
            width = module_dim * self.m
            for t in range(ntup):
                for b in range(module_dim):
                    out[t * module_dim + b, t * width + b * self.m + j] = 1
            self._component[key] = out
        return self._component[key]

    def restriction_matrix(self, p: int, module_dim: int) -> np.ndarray:
        """C^p(g(x)s; M) -> C^p(g; M): evaluation on x (x) 1 arguments."""
        key = (p, module_dim)
        if key not in self._restriction:
            m = self.m
            cur = CochainSpace(self.current_g, module_dim, p)
            base = self.base_space(p, module_dim)
            out = zeros(base.dim, cur.dim)
            for ti, tup in enumerate(base.tuples):
                cur_tup = tuple(i * m for i in tup)
                ct = cur.tuple_rank[cur_tup]
                for b in range(module_dim):
                    out[ti * module_dim + b, ct * module_dim + b] = 1
            self._restriction[key] = out
        return self._restriction[key]

    def insertion_matrix(self, p: int, module_dim: int, j: int) -> np.ndarray:
        """C^p(g; W) -> C^p(g(x)s; W(x)s): values land in component s_j times
        the product of the argument coefficients."""
        if not 0 <= j < self.m:
            raise IndexOutOfRange(f"component {j} out of range 0..{self.m - 1}")
        key = (p, module_dim, j)
        if key not in self._insertion:
            m = self.m
            cur = self.current_space(p, module_dim)
            base = self.base_space(p, module_dim)
            out = zeros(cur.dim, base.dim)
            width = module_dim * m
            for ct, cur_tup in enumerate(cur.tuples):
                lie = tuple(pos // m for pos in cur_tup)
                if len(set(lie)) != len(lie):
                    continue
                alg = tuple(pos % m for pos in cur_tup)
                ti = base.tuple_rank[lie]
                tau = self.s.multiply_basis_list((j,) + alg)
                for b in range(module_dim):
                    col = ti * module_dim + b
                    for c in range(m):
                        if tau[c]:
                            out[ct * width + b * m + c, col] = tau[c]
            self._insertion[key] = out
        return self._insertion[key]

    def module_component_matrix(self, module_dim: int, j: int) -> np.ndarray:
        return self.dual.omega_hat(j, module_dim)

    def module_embedding_matrix(self, module_dim: int, j: int) -> np.ndarray:
        """W -> W(x)s, w |-> w (x) s_j."""
        if not 0 <= j < self.m:
            raise IndexOutOfRange(f"component {j} out of range 0..{self.m - 1}")
        out = zeros(module_dim * self.m, module_dim)
        for b in range(module_dim):
            out[b * self.m + j, b] = 1
        return out

    def unit_component_matrix(self, p: int, module_dim: int, j: int) -> np.ndarray:
        """Evaluate on unit-embedded arguments and take the j-th component:
        the left factor of every lift with a cochain-space source."""
        key = (p, module_dim, j)
        if key not in self._unit_component:
            self._unit_component[key] = np.dot(
                self.restriction_matrix(p, module_dim),
                self.component_matrix(p, module_dim, j),
            )
        return self._unit_component[key]

    # -- the four lifts ----------------------------------------------------
    #
    # Every lift factors per coefficient component as
    #     (insert into component j) . f . (extract component j),
    # where the extraction side is unit_component_matrix for cochain-space
    # sources and the coefficient functional for module sources, and the
    # insertion side is insertion_matrix for cochain-space targets and the
    # module embedding for module targets.  ``multiply_lift`` keeps that
    # factorization when composing with other maps: the inner dimension is
    # the small base-space dimension, which matters for large current spaces.

    def _extract_factor(self, kind: str, p: int, d: int, j: int) -> np.ndarray:
        if kind == "c":
            return self.unit_component_matrix(p, d, j)
        return self.module_component_matrix(d, j)

    def _insert_factor(self, kind: str, p: int, d: int, j: int) -> np.ndarray:
        if kind == "c":
            return self.insertion_matrix(p, d, j)
        return self.module_embedding_matrix(d, j)

    def multiply_lift(self, src_kind: str, tgt_kind: str, f: np.ndarray,
                      p: int, dim_src: int, dim_tgt: int,
                      left: np.ndarray | None = None,
                      right: np.ndarray | None = None) -> np.ndarray:
        """left @ lift(f) @ right, associated through the lift's factors."""
        f = np.asarray(f, dtype=object)
        out = None
        for j in range(self.m):
            extract = self._extract_factor(src_kind, p, dim_src, j)
            if right is not None:
                extract = np.dot(extract, right)
            insert = self._insert_factor(tgt_kind, p, dim_tgt, j)
            if left is not None:
                insert = np.dot(left, insert)
            term = np.dot(insert, np.dot(f, extract))
            out = term if out is None else out + term
        return out

    def lift_cochain_map(self, f: np.ndarray, p: int, dim_u: int,
                         dim_w: int) -> np.ndarray:
        """Lift f: C^p(g;U) -> C^p(g;W) to the current cochain spaces."""
        return self.multiply_lift("c", "c", f, p, dim_u, dim_w)

    def lift_module_to_cochain(self, f: np.ndarray, p: int, dim_u: int,
                               dim_w: int) -> np.ndarray:
        """Lift f: U -> C^p(g;W) to a map U(x)s -> current C^p."""
        return self.multiply_lift("m", "c", f, p, dim_u, dim_w)

    def lift_cochain_to_module(self, f: np.ndarray, p: int, dim_u: int,
                               dim_w: int) -> np.ndarray:
        """Lift f: C^p(g;U) -> W to a map current C^p -> W(x)s."""
        return self.multiply_lift("c", "m", f, p, dim_u, dim_w)

    def lift_module_map(self, f: np.ndarray) -> np.ndarray:
        """Lift f: U -> W to f(x)s: U(x)s -> W(x)s."""
        f = np.asarray(f, dtype=object)
        dim_w, dim_u = f.shape
        m = self.m
        out = zeros(dim_w * m, dim_u * m)
        for bp in range(dim_w):
            for b in range(dim_u):
                if f[bp, b]:
                    for c in range(m):
                        out[bp * m + c, b * m + c] = f[bp, b]
        return out

    def identity_lift(self, p: int, module_dim: int) -> np.ndarray:
        """Lift of the identity cochain map: a projection, not the identity."""
        return self.lift_cochain_map(eye_base(self.base_space(p, module_dim).dim),
                                     p, module_dim, module_dim)


def eye_base(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


# -- cochain-level operations ----------------------------------------------

def cochain_component(j: int, lam: Cochain) -> Cochain:
    """Extract the j-th coefficient component of a current cochain's values."""
    algebra = lam.space.algebra
    if algebra.current_factors is None:
        raise NotACurrentSource("the cochain does not live over a current algebra")
    g, s = algebra.current_factors
    m = s.dim
    if not 0 <= j < m:
        raise IndexOutOfRange(f"component {j} out of range 0..{m - 1}")
    if lam.space.module_dim % m:
        raise ValueError("module dimension is not a multiple of dim(s)")
    dv = lam.space.module_dim // m
    ctx = LiftContext(g, s, algebra)
    mat = ctx.component_matrix(lam.space.degree, dv, j)
    return Cochain(CochainSpace(algebra, dv, lam.space.degree),
                   np.dot(mat, lam.coeffs))


def assemble_cochain(components: list[Cochain]) -> Cochain:
    """Inverse of component extraction: sum of component_j (x) s_j."""
    m = len(components)
    space0 = components[0].space
    dv = space0.module_dim
    big = CochainSpace(space0.algebra, dv * m, space0.degree)
    out = np.zeros(big.dim, dtype=object)
    ntup = len(space0.tuples)
    for j, comp in enumerate(components):
        for t in range(ntup):
            for b in range(dv):
                out[t * dv * m + b * m + j] = comp.coeffs[t * dv + b]
    return Cochain(big, out)


def restrict_to_base(lam: Cochain) -> Cochain:
    """Evaluate a current-algebra cochain on arguments embedded as x (x) 1."""
    algebra = lam.space.algebra
    if algebra.current_factors is None:
        raise NotACurrentSource("the cochain does not live over a current algebra")
    g, s = algebra.current_factors
    ctx = LiftContext(g, s, algebra)
    mat = ctx.restriction_matrix(lam.space.degree, lam.space.module_dim)
    return Cochain(CochainSpace(g, lam.space.module_dim, lam.space.degree),
                   np.dot(mat, lam.coeffs))


def homotopy_chain_map(rep: Representation, rng: Random,
                       scalar=0) -> dict[int, np.ndarray]:
    """A chain map family built as scalar*Id + d h + h d for random h.

    h is a random degree -1 family of maps C^p -> C^(p-1); the combination is
    a chain map for any h, which gives a reproducible supply of nontrivial
    chain maps for the verification suites.
    """
    g = rep.algebra
    n = g.dim
    spaces = [CochainSpace.of(rep, p) for p in range(n + 2)]
    diffs = [differential_matrix(spaces[p]) for p in range(n + 2)]
    h = {}
    for p in range(n + 2):
        rows = spaces[p - 1].dim if p >= 1 else 0
        cols = spaces[p].dim
        mat = zeros(rows, cols)
        for i in range(rows):
            for j in range(cols):
                mat[i, j] = rng.randint(-3, 3)
        h[p] = mat
    family = {}
    for p in range(n + 1):
        f = scalar * eye_base(spaces[p].dim)
        if p >= 1:
            f = f + np.dot(diffs[p - 1], h[p])
        f = f + np.dot(h[p + 1], diffs[p])
        family[p] = f
    return family


def is_chain_map(rep_v: Representation, rep_w: Representation,
                 family: dict[int, np.ndarray]) -> bool:
    """Check d f_p = f_(p+1) d for a graded family over the base algebra."""
    n = rep_v.algebra.dim
    for p in range(n + 1):
        dv = differential_matrix(CochainSpace.of(rep_v, p))
        dw = differential_matrix(CochainSpace.of(rep_w, p))
        f_p = family[p]
        f_next = family.get(p + 1)
        if f_next is None:
            f_next = zeros(CochainSpace.of(rep_w, p + 1).dim,
                           CochainSpace.of(rep_v, p + 1).dim)
        if not mat_eq(np.dot(dw, f_p), np.dot(f_next, dv)):
            return False
    return True


# -- verification suites ------------------------------------------------------

COMPOSITION_CASES = ("cc.cc", "mc.cm", "cc.cm", "cm.mm", "mm.mc", "cm.mc")


def _space_dim(ctx: LiftContext, kind: str, p: int, d: int) -> int:
    if kind == "m":
        return d
    return ctx.base_space(p, d).dim


def _random_matrix(rng: Random, rows: int, cols: int) -> np.ndarray:
    out = zeros(rows, cols)
    for i in range(rows):
        for j in range(cols):
            out[i, j] = rng.randint(-3, 3)
    return out


def verify_composition_preservation(
    ctx: LiftContext,
    case: str,
    trials: int,
    seed: int,
    degrees=(1, 2),
    module_dims=(3, 3, 3),
) -> VerificationReport:
    """Exact check that lifting a composite equals composing the lifts.

    ``case`` encodes the signatures of the two maps as "<f>.<g>" where each
    token gives (source kind, target kind), c = cochain space, m = module.
    """
    if case not in COMPOSITION_CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {COMPOSITION_CASES}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    f_sig, g_sig = case.split(".")
    du, dv, dw = module_dims
    report = VerificationReport(f"composition preservation [{case}]")
    rng = Random(seed)
    for p in degrees:
        dim_fs = _space_dim(ctx, f_sig[0], p, du)
        dim_ft = _space_dim(ctx, f_sig[1], p, dv)
        dim_gs = _space_dim(ctx, g_sig[0], p, dv)
        dim_gt = _space_dim(ctx, g_sig[1], p, dw)
        if dim_ft != dim_gs:
            raise DegreeMismatch("f target and g source do not compose")
        for t in range(trials):
            f = _random_matrix(rng, dim_ft, dim_fs)
            g = _random_matrix(rng, dim_gt, dim_gs)
            lift_f = ctx.multiply_lift(f_sig[0], f_sig[1], f, p, du, dv)
            composed_lifts = ctx.multiply_lift(
                g_sig[0], g_sig[1], g, p, dv, dw, right=lift_f
            )
            composite = ctx.multiply_lift(
                f_sig[0], g_sig[1], np.dot(g, f), p, du, dw
            )
            report.add(f"p={p} trial={t}", mat_eq(composed_lifts, composite))
    return report


def verify_component_commutation(setup: CurrentSetup) -> VerificationReport:
    """Exact check that component extraction then unit restriction turns the
    current differential into the base differential, in every degree and for
    every component."""
    ctx = LiftContext(setup.g, setup.s, setup.current_g)
    dv = setup.rep.module_dim
    m = setup.s.dim
    report = VerificationReport("component/differential commutation")
    cur_spaces = {}
    base_spaces = {}
    for p in range(setup.current_g.dim + 1):
        cur_spaces[p] = CochainSpace.of(setup.current_rep, p)
        base_spaces[p] = CochainSpace.of(setup.rep, p)
    for p in range(setup.current_g.dim + 1):
        big_d = differential_matrix(cur_spaces[p])
        base_d = differential_matrix(base_spaces[p])
        for j in range(m):
            lhs = np.dot(
                ctx.restriction_matrix(p + 1, dv),
                np.dot(ctx.component_matrix(p + 1, dv, j), big_d),
            )
            rhs = np.dot(
                base_d,
                np.dot(ctx.restriction_matrix(p, dv),
                       ctx.component_matrix(p, dv, j)),
            )
            report.add(f"p={p} j={j}", mat_eq(lhs, rhs))
    return report


def verify_chain_map_lift(setup: CurrentSetup, family: dict[int, np.ndarray],
                          setup_w: CurrentSetup | None = None) -> VerificationReport:
    """If the family commutes with the base differentials, its lift commutes
    with the current differentials (checked exactly; the hypothesis first)."""
    setup_w = setup_w or setup
    ctx = LiftContext(setup.g, setup.s, setup.current_g)
    dv = setup.rep.module_dim
    dw = setup_w.rep.module_dim
    report = VerificationReport("chain map lifting")
    if not is_chain_map(setup.rep, setup_w.rep, family):
        report.add("hypothesis: family commutes with d", False,
                   "not a chain map; conclusion skipped")
        return report
    report.add("hypothesis: family commutes with d", True)
    big = setup.current_g.dim

    def base_f(p: int) -> np.ndarray:
        if p in family:
            return family[p]
        return zeros(CochainSpace(setup.g, dw, p).dim,
                     CochainSpace(setup.g, dv, p).dim)

    cur_v = {p: CochainSpace.of(setup.current_rep, p) for p in range(big + 2)}
    cur_w = {p: CochainSpace.of(setup_w.current_rep, p) for p in range(big + 2)}
    for p in range(big + 1):
        d_v = differential_matrix(cur_v[p])
        d_w = differential_matrix(cur_w[p])
        lhs = ctx.multiply_lift("c", "c", base_f(p), p, dv, dw, left=d_w)
        rhs = ctx.multiply_lift("c", "c", base_f(p + 1), p + 1, dv, dw, right=d_v)
        report.add(f"p={p}", mat_eq(lhs, rhs))
    return report
