from random import Random

import numpy as np
import pytest

from currentcoh.algebras import catalog, catalog_rep
from currentcoh.cochains import Cochain, CochainSpace, differential_matrix
from currentcoh.currents import CurrentSetup
from currentcoh.lifts import (
    COMPOSITION_CASES,
    CochainMap,
    IndexOutOfRange,
    LiftContext,
    NotACurrentSource,
    assemble_cochain,
    cochain_component,
    eye_base,
    homotopy_chain_map,
    is_chain_map,
    restrict_to_base,
    verify_chain_map_lift,
    verify_component_commutation,
    verify_composition_preservation,
    _random_matrix,
)
from currentcoh.linalg import is_zero, mat_eq, zeros


def _sl2_dual_ctx():
    g = catalog("sl2")
    s = catalog("dual_numbers")
    return g, s, LiftContext(g, s)


def test_component_of_module_tensor():
    # degree 0: the component of v (x) (2 s_1 + 3 s_2)
    g = catalog("abelian", 1)
    s = catalog("dual_numbers")
    setup = CurrentSetup.build(g, s, catalog_rep("trivial", g))
    space = CochainSpace(setup.current_g, 2, 0)
    lam = Cochain(space, np.array([2, 3], dtype=object))
    assert list(cochain_component(0, lam).coeffs) == [2]
    assert list(cochain_component(1, lam).coeffs) == [3]


def test_component_of_constant_valued_cochain():
    g, s, ctx = _sl2_dual_ctx()
    setup = CurrentSetup.build(g, s, catalog_rep("adjoint", g))
    space = CochainSpace(setup.current_g, 6, 1)
    coeffs = np.zeros(space.dim, dtype=object)
    # every value is v (x) (2*1 + 3*eps) with v the first module vector
    for t in range(len(space.tuples)):
        coeffs[t * 6 + 0 * 2 + 0] = 2
        coeffs[t * 6 + 0 * 2 + 1] = 3
    lam = Cochain(space, coeffs)
    one_part = cochain_component(0, lam)
    eps_part = cochain_component(1, lam)
    for t in range(len(space.tuples)):
        assert one_part.coeffs[t * 3] == 2
        assert eps_part.coeffs[t * 3] == 3


def test_component_index_range():
    g, s, _ = _sl2_dual_ctx()
    setup = CurrentSetup.build(g, s, catalog_rep("adjoint", g))
    space = CochainSpace(setup.current_g, 6, 1)
    lam = Cochain(space, np.zeros(space.dim, dtype=object))
    with pytest.raises(IndexOutOfRange):
        cochain_component(2, lam)


def test_component_requires_current_algebra():
    g = catalog("sl2")
    space = CochainSpace(g, 3, 1)
    lam = Cochain(space, np.zeros(space.dim, dtype=object))
    with pytest.raises(NotACurrentSource):
        cochain_component(0, lam)
    with pytest.raises(NotACurrentSource):
        restrict_to_base(lam)


def test_component_reassembly_identity():
    g, s, _ = _sl2_dual_ctx()
    setup = CurrentSetup.build(g, s, catalog_rep("adjoint", g))
    rng = Random(11)
    for p in (0, 1, 2):
        space = CochainSpace(setup.current_g, 6, p)
        for _ in range(50):
            coeffs = np.array(
                [rng.randint(-5, 5) for _ in range(space.dim)], dtype=object
            )
            lam = Cochain(space, coeffs)
            parts = [cochain_component(j, lam) for j in range(2)]
            assert (assemble_cochain(parts).coeffs == coeffs).all()


def test_restriction_with_trivial_field_is_identity():
    g = catalog("sl2")
    ctx = LiftContext(g, catalog("trivial_field"))
    for p in (0, 1, 2):
        r = ctx.restriction_matrix(p, 3)
        assert mat_eq(r, eye_base(CochainSpace(g, 3, p).dim))


def test_restriction_extracts_unit_coordinates():
    # p=1 over abelian1 (x) dual numbers, 1-dim module:
    # lam(x (x) 1) = v, lam(x (x) eps) arbitrary -> restriction gives v
    g = catalog("abelian", 1)
    s = catalog("dual_numbers")
    setup = CurrentSetup.build(g, s, catalog_rep("trivial", g))
    space = CochainSpace(setup.current_g, 2, 1)
    coeffs = np.array([1, 0, 5, -7], dtype=object)
    lam = Cochain(space, coeffs)
    restricted = restrict_to_base(cochain_component(0, lam))
    assert list(restricted.coeffs) == [1]


def test_restriction_kills_vanishing_cochains():
    g, s, ctx = _sl2_dual_ctx()
    # a cochain supported on tuples containing an eps factor restricts to zero
    space = ctx.current_space(1, 3)
    coeffs = np.zeros(space.dim, dtype=object)
    t = space.tuple_rank[(1,)]  # the basis vector e (x) eps
    coeffs[t * 6] = 9
    restriction = ctx.restriction_matrix(1, 6)
    assert not np.dot(restriction, coeffs).any()


def test_lift_of_zero_is_zero():
    g, s, ctx = _sl2_dual_ctx()
    for p in (1, 2):
        dims = (
            ctx.base_space(p, 3).dim,
            ctx.current_space(p, 3).dim,
        )
        assert is_zero(ctx.lift_cochain_map(zeros(dims[0], dims[0]), p, 3, 3))
        assert is_zero(ctx.lift_module_to_cochain(zeros(dims[0], 3), p, 3, 3))
        assert is_zero(ctx.lift_cochain_to_module(zeros(3, dims[0]), p, 3, 3))
    assert is_zero(ctx.lift_module_map(zeros(3, 3)))


def test_trivial_field_collapses_all_lifts_to_f():
    g = catalog("sl2")
    ctx = LiftContext(g, catalog("trivial_field"))
    rng = Random(3)
    p = 2
    dc = ctx.base_space(p, 3).dim
    f_cc = _random_matrix(rng, dc, dc)
    assert mat_eq(ctx.lift_cochain_map(f_cc, p, 3, 3), f_cc)
    f_mc = _random_matrix(rng, dc, 3)
    assert mat_eq(ctx.lift_module_to_cochain(f_mc, p, 3, 3), f_mc)
    f_cm = _random_matrix(rng, 3, dc)
    assert mat_eq(ctx.lift_cochain_to_module(f_cm, p, 3, 3), f_cm)
    f_mm = _random_matrix(rng, 3, 3)
    assert mat_eq(ctx.lift_module_map(f_mm), f_mm)


def test_identity_lift_is_proper_projection():
    g, s, ctx = _sl2_dual_ctx()
    p = 1
    proj = ctx.identity_lift(p, 3)
    n = ctx.current_space(p, 3).dim
    ident = eye_base(n)
    assert not mat_eq(proj, ident)
    assert mat_eq(np.dot(proj, proj), proj)


def test_identity_lift_fixed_points():
    # cochains built from base values in every component are exactly fixed
    g, s, ctx = _sl2_dual_ctx()
    p = 1
    proj = ctx.identity_lift(p, 3)
    rng = Random(21)
    base_dim = ctx.base_space(p, 3).dim
    for _ in range(10):
        lam = np.zeros(ctx.current_space(p, 3).dim, dtype=object)
        for j in range(2):
            mu = np.array([rng.randint(-4, 4) for _ in range(base_dim)], dtype=object)
            lam = lam + np.dot(ctx.insertion_matrix(p, 3, j), mu)
        assert (np.dot(proj, lam) == lam).all()
    # and a generic cochain is moved
    probe = np.zeros(ctx.current_space(p, 3).dim, dtype=object)
    t = ctx.current_space(p, 3).tuple_rank[(1,)]
    probe[t * 6 + 1] = 1
    assert not (np.dot(proj, probe) == probe).all()


def test_module_to_cochain_lift_on_unit_arguments():
    # evaluating the lifted map on all-unit arguments returns f(v) (x) s
    g, s, ctx = _sl2_dual_ctx()
    rng = Random(8)
    p = 1
    base_dim = ctx.base_space(p, 3).dim
    f = _random_matrix(rng, base_dim, 3)
    lifted = ctx.lift_module_to_cochain(f, p, 3, 3)
    for j in range(2):
        lhs = np.dot(
            np.dot(ctx.restriction_matrix(p, 3), ctx.component_matrix(p, 3, j)),
            lifted,
        )
        rhs = np.dot(f, ctx.module_component_matrix(3, j))
        assert mat_eq(lhs, rhs)


def test_module_to_cochain_lift_is_linear_in_f():
    g, s, ctx = _sl2_dual_ctx()
    rng = Random(13)
    p = 2
    base_dim = ctx.base_space(p, 3).dim
    f1 = _random_matrix(rng, base_dim, 3)
    f2 = _random_matrix(rng, base_dim, 3)
    lhs = ctx.lift_module_to_cochain(f1 + 2 * f2, p, 3, 3)
    rhs = ctx.lift_module_to_cochain(f1, p, 3, 3) + 2 * ctx.lift_module_to_cochain(
        f2, p, 3, 3
    )
    assert mat_eq(lhs, rhs)


def test_cochain_to_module_lift_component_concentration():
    g, s, ctx = _sl2_dual_ctx()
    rng = Random(4)
    p = 1
    base_dim = ctx.base_space(p, 3).dim
    f = _random_matrix(rng, 3, base_dim)
    lifted = ctx.lift_cochain_to_module(f, p, 3, 3)
    # input concentrated in the second coefficient component
    mu = np.array([rng.randint(-4, 4) for _ in range(base_dim)], dtype=object)
    lam = np.dot(ctx.insertion_matrix(p, 3, 1), mu)
    out = np.dot(lifted, lam)
    # output lies in W (x) s_2: the s_1 slots vanish
    assert not out[0::2].any()


def test_module_map_lift_is_kronecker_block():
    g, s, ctx = _sl2_dual_ctx()
    rng = Random(31)
    f = _random_matrix(rng, 2, 3)
    lifted = ctx.lift_module_map(f)
    assert lifted.shape == (4, 6)
    for bp in range(2):
        for b in range(3):
            for a in range(2):
                for c in range(2):
                    expected = f[bp, b] if a == c else 0
                    assert lifted[bp * 2 + a, b * 2 + c] == expected
    ident = ctx.lift_module_map(eye_base(3))
    assert mat_eq(ident, eye_base(6))


def test_composition_preservation_zero_and_identity():
    g, s, ctx = _sl2_dual_ctx()
    p = 1
    dc = ctx.base_space(p, 3).dim
    zero = zeros(dc, dc)
    assert is_zero(
        np.dot(ctx.lift_cochain_map(zero, p, 3, 3), ctx.lift_cochain_map(zero, p, 3, 3))
    )
    ident = eye_base(dc)
    lift_id = ctx.lift_cochain_map(ident, p, 3, 3)
    assert mat_eq(np.dot(lift_id, lift_id), ctx.lift_cochain_map(ident, p, 3, 3))


@pytest.mark.parametrize("case", COMPOSITION_CASES)
def test_composition_preservation_random(case):
    g, s, ctx = _sl2_dual_ctx()
    report = verify_composition_preservation(
        ctx, case, trials=5, seed=7, degrees=(1, 2), module_dims=(3, 2, 3)
    )
    assert report.ok


def test_composition_preservation_rejects_unknown_case():
    g, s, ctx = _sl2_dual_ctx()
    with pytest.raises(ValueError):
        verify_composition_preservation(ctx, "xx.yy", 1, 0)


def test_component_commutation_abelian_trivial():
    g = catalog("abelian", 2)
    setup = CurrentSetup.build(g, catalog("dual_numbers"), catalog_rep("trivial", g))
    report = verify_component_commutation(setup)
    assert report.ok
    # both sides are genuinely zero here
    ctx = LiftContext(setup.g, setup.s, setup.current_g)
    d = differential_matrix(CochainSpace.of(setup.current_rep, 1))
    assert is_zero(d)


def test_component_commutation_solvable2():
    g = catalog("solvable2")
    setup = CurrentSetup.build(g, catalog("dual_numbers"), catalog_rep("trivial", g))
    assert verify_component_commutation(setup).ok


def test_component_commutation_degree_zero_formula():
    # both routes send v (x) s_a to (x |-> delta(a, j) rho(x) v)
    g = catalog("sl2")
    s = catalog("dual_numbers")
    ad = catalog_rep("adjoint", g)
    setup = CurrentSetup.build(g, s, ad)
    ctx = LiftContext(g, s, setup.current_g)
    big_d = differential_matrix(CochainSpace.of(setup.current_rep, 0))
    base_d = differential_matrix(CochainSpace.of(ad, 0))
    for j in range(2):
        through = np.dot(
            ctx.restriction_matrix(1, 3),
            np.dot(ctx.component_matrix(1, 3, j), big_d),
        )
        for b in range(3):
            for a in range(2):
                col = through[:, b * 2 + a]
                if a == j:
                    assert (col == base_d[:, b]).all()
                else:
                    assert not col.any()


def test_chain_map_lift_for_scalar_and_homotopy_families():
    g = catalog("sl2")
    ad = catalog_rep("adjoint", g)
    setup = CurrentSetup.build(g, catalog("dual_numbers"), ad)
    scalar_family = {
        p: 3 * eye_base(CochainSpace.of(ad, p).dim) for p in range(4)
    }
    assert verify_chain_map_lift(setup, scalar_family).ok
    rng = Random(6)
    homotopy = homotopy_chain_map(ad, rng, scalar=1)
    assert is_chain_map(ad, ad, homotopy)
    assert verify_chain_map_lift(setup, homotopy).ok
    zero_family = {p: zeros(CochainSpace.of(ad, p).dim, CochainSpace.of(ad, p).dim)
                   for p in range(4)}
    assert verify_chain_map_lift(setup, zero_family).ok


def test_chain_map_lift_reports_failed_hypothesis():
    g = catalog("sl2")
    ad = catalog_rep("adjoint", g)
    setup = CurrentSetup.build(g, catalog("dual_numbers"), ad)
    rng = Random(123)
    family = {
        p: _random_matrix(rng, CochainSpace.of(ad, p).dim, CochainSpace.of(ad, p).dim)
        for p in range(4)
    }
    report = verify_chain_map_lift(setup, family)
    assert not report.ok
    assert any("hypothesis" in c.label for c in report.failures())


def test_cochain_map_shape_validation():
    g = catalog("sl2")
    ad = catalog_rep("adjoint", g)
    src = CochainSpace.of(ad, 1)
    tgt = CochainSpace.of(ad, 1)
    with pytest.raises(ValueError):
        CochainMap(src, tgt, zeros(2, 2))
    cm = CochainMap(src, tgt, eye_base(src.dim))
    out = cm(Cochain(src, np.arange(src.dim).astype(object)))
    assert (out.coeffs == np.arange(src.dim).astype(object)).all()
