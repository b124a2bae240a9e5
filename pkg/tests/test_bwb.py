from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from hkgrass import bundles as bx
from hkgrass.bwb import (SWEEPS, UnsupportedBundle, WeightVector, _omega_twist,
                         bott_resolve, cohomology_of_decomp, cohomology_of_expr,
                         decompose, euler_characteristic, euler_polynomial,
                         griffiths_hodge_F, koszul_euler, koszul_hodge_bound,
                         koszul_resolution, koszul_terms, vanishing_sweep)
from hkgrass.chow import GrassCtx
from hkgrass.symcore import exterior_power_character, schur_weights


def weights(k, n):
    block = lambda m: st.lists(st.integers(-6, 6), min_size=m, max_size=m).map(
        lambda xs: tuple(sorted(xs, reverse=True)))
    return st.builds(WeightVector, block(k), block(n - k))


@st.composite
def any_weight(draw):
    n = draw(st.integers(2, 7))
    k = draw(st.integers(1, n - 1))
    return draw(weights(k, n))


@given(any_weight())
@settings(max_examples=100)
def test_serre_duality(w):
    h, hs = bott_resolve(w), bott_resolve(w.serre())
    dim = w.k * (w.n - w.k)
    assert h.is_zero == hs.is_zero
    if not h.is_zero:
        assert hs.degree == dim - h.degree
        assert hs.dimension == h.dimension


@given(any_weight())
@settings(max_examples=100)
def test_bott_euler_matches_weyl_polynomial(w):
    assert bott_resolve(w).euler == euler_polynomial(w.entries)


def test_weight_vector_validation():
    with pytest.raises(ValueError):
        WeightVector((0, 1), (0,))
    w = WeightVector((2, 0), (1, -1))
    assert w.dual() == WeightVector((0, -2), (1, -1))
    assert w.rank() == 3 * 3


@pytest.mark.parametrize("d", range(-8, 5))
def test_projective_space_line_bundles(d):
    # P^3 = G(1,4): h^0(O(d)) = C(d+3,3), h^3(O(d)) = C(-d-1,3)
    rep = bott_resolve(WeightVector((d,), (0, 0, 0)))
    if d >= 0:
        assert (rep.degree, rep.dimension) == (0, comb(d + 3, 3))
    elif d <= -4:
        assert (rep.degree, rep.dimension) == (3, comb(-d - 1, 3))
    else:
        assert rep.is_zero


def test_sections_of_pluecker_line_bundle():
    rep = bott_resolve(WeightVector((1, 1, 1), (0,) * 7))
    assert (rep.degree, rep.dimension) == (0, 120)


def test_tangent_bundle_sections():
    ctx = GrassCtx(3, 10)
    assert cohomology_of_expr(ctx, bx.tangent()) == [(0, 99)]


def test_cotangent_of_quadric():
    # G(2,4) is a quadric threefold: h^{1,1} = 1
    assert cohomology_of_expr(GrassCtx(2, 4), bx.cotangent()) == [(1, 1)]


def test_decompose_tensor_of_tautological():
    d = decompose(bx.taut_dual() * bx.taut_dual(), 2, 4)
    assert d == {WeightVector((2, 0), (0, 0)): 1, WeightVector((1, 1), (0, 0)): 1}


def test_decompose_rank_is_preserved():
    for b in (bx.taut_dual().wedge(2).sym(2), bx.tangent().wedge(2),
              bx.taut_quot().schur((2, 1)), (bx.taut_sub() + bx.line(1)).wedge(2)):
        d = decompose(b, 3, 6)
        assert sum(m * w.rank() for w, m in d.items()) == b.rank(3, 6)


def test_chi_oracle_for_wedge2_of_wedge3():
    # sum of the Weyl polynomial over all weights of the GL(6) character
    b = bx.taut_dual().wedge(3).wedge(2)
    ours = euler_characteristic(GrassCtx(6, 10), b)
    std = {tuple(int(i == j) for j in range(6)): 1 for i in range(6)}
    char = exterior_power_character(exterior_power_character(std, 3), 2)
    oracle = sum(m * euler_polynomial(w + (0,) * 4) for w, m in char.items())
    assert ours == oracle


def test_chi_oracle_for_schur_functor():
    b = bx.taut_dual().schur((2, 1))
    ours = euler_characteristic(GrassCtx(3, 6), b.twist(-2))
    oracle = sum(m * euler_polynomial(tuple(x - 2 for x in w) + (0,) * 3)
                 for w, m in schur_weights((2, 1), 3).items())
    assert ours == oracle


def test_unsupported_bundle_is_reported():
    big = bx.tangent().wedge(6).sym(3)
    with pytest.raises(UnsupportedBundle):
        decompose(big, 3, 10)


def test_koszul_terms_ranks():
    for i in (0, 1, 2, 19, 20):
        total = sum(m * w.rank() for w, m in koszul_terms(i).items())
        assert total == comb(20, i)


def test_koszul_readings():
    res = koszul_resolution()
    assert (res.dual_sum, res.plain_sum, res.matching) == (3, 607753, "dual")


def test_koszul_euler_symmetry():
    # chi(O_Y(t)) is even in t
    assert koszul_euler(1) == koszul_euler(-1)
    assert koszul_euler(3) == koszul_euler(-3)


def test_hodge_bound_range():
    with pytest.raises(ValueError):
        koszul_hodge_bound(5)


def test_griffiths_count():
    g = griffiths_hodge_F()
    assert (g.h_9_11, g.h_10_10_van, g.sections_o1, g.sections_tangent) == (1, 20, 120, 99)


@pytest.mark.parametrize("k,n", [(1, 5), (4, 5), (1, 4)])
def test_bott_vanishing_holds_on_projective_space(k, n):
    for j in range(k * (n - k) + 1):
        for t in range(1, 5):
            coh = cohomology_of_decomp(_omega_twist(j, t, k, n))
            assert coh.positive_degrees() == [], (j, t)


def test_omega_twist_ranks():
    for j in range(0, 22):
        total = sum(m * w.rank() for w, m in _omega_twist(j, 1).items())
        assert total == comb(21, j)


def test_omega_twist_counterexample_on_grassmannian():
    # H^1(G(3,10), Omega^3(2)) is nonzero: Bott vanishing fails
    coh = cohomology_of_decomp(_omega_twist(3, 2))
    assert coh[1] == 2310


@pytest.mark.parametrize("name", ["F_tensor_wedge", "S6dual_tensor_wedge"])
def test_koszul_sweeps_are_clean(name):
    rep = vanishing_sweep(name)
    assert rep.complete and rep.clean


def test_sweep_budget_and_names():
    rep = vanishing_sweep("omega_twists", 1, 10, budget_seconds=0.0)
    assert not rep.complete and rep.skipped
    with pytest.raises(ValueError):
        vanishing_sweep("nope")
    assert "omega_twists" in SWEEPS
