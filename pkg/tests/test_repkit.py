from __future__ import annotations

import numpy as np
import pytest

from hopfkit import hopfcore as hc
from hopfkit import repkit as rk
from hopfkit.builtins import load_builtin, load_quasitriangular
from hopfkit.exactfield import Scalar
from hopfkit.reports import PreconditionFailed


def _hom_dim(V, W) -> int:
    return len(rk.hom_space(V, W))


# -- representations and constructions ------------------------------------------

def test_representation_rejects_non_homomorphism(sweedler):
    mats = rk.regular(sweedler).mats.copy()
    mats[1] = sweedler.field.eye(4)  # g acting trivially but x still anticommuting
    with pytest.raises(rk.RepresentationError):
        rk.Representation(sweedler, mats)


def test_representation_shape_checked(sweedler):
    with pytest.raises(rk.RepresentationError):
        rk.Representation(sweedler, np.zeros((3, 2, 2), dtype=object))


def test_basic_constructions_are_modules(builtin):
    triv = rk.trivial(builtin)
    reg = rk.regular(builtin)
    assert triv.dim == 1 and reg.dim == builtin.dim
    for V in (rk.right_dual(reg), rk.left_dual(reg), rk.direct_sum(triv, reg)):
        assert V.validate().passed


def test_tensor_is_module_and_unit_is_neutral(taft3):
    reg = rk.regular(taft3)
    T = rk.tensor(rk.trivial(taft3), reg)
    assert T.validate().passed
    assert T.is_isomorphic(reg)


def test_duals_are_mutually_inverse(taft3):
    V = rk.regular(taft3)
    assert rk.left_dual(rk.right_dual(V)).is_isomorphic(V)
    assert rk.right_dual(rk.left_dual(V)).is_isomorphic(V)


def test_double_dual_iso_via_pivot(sweedler):
    # V** is V twisted by S^2, which is inner via g
    V = rk.regular(sweedler)
    Vss = rk.double_dual_right(V)
    g = sweedler.e("g")
    nm = rk.NaturalMap(V, Vss, V.act(g))
    assert nm.intertwines()


def test_evaluation_is_linear(taft3):
    V = rk.regular(taft3)
    F = taft3.field
    Vs = rk.right_dual(V)
    T = rk.tensor(V, Vs)
    coev = rk.coevaluation(V).reshape(-1, 1)
    for i in range(taft3.dim):
        assert F.equal(F.dot(T.mats[i], coev), F.scale(taft3.counit[i], coev))


@pytest.mark.parametrize("address,dims", [("sym3@GF7", [1, 1, 2]), ("dihedral:4@Q", [1, 1, 1, 1, 2]),
                                          ("cyclic:5@GF11", [1] * 5), ("sweedler@Q", [1, 1]),
                                          ("gr_uq_sl2:3:2@GF7", [1, 1, 1])])
def test_simples(address, dims):
    H = load_builtin(address)
    S = rk.simples(H)
    assert sorted(V.dim for V in S) == dims
    assert rk.NaturalMap(S[0], rk.trivial(H), H.field.eye(1)).intertwines()  # trivial module first
    for i, V in enumerate(S):
        for j, W in enumerate(S):
            assert _hom_dim(V, W) == (1 if i == j else 0)


def test_semisimple_split_gives_wedderburn(s3):
    res = rk.split_into_simples(rk.regular(s3))
    assert res.semisimple and res.all_split and not res.composition_factors
    assert sum(d * m for d, m in res.dims()) == s3.dim
    assert all(d == m for d, m in res.dims())


# -- traces, norms, global dimension ---------------------------------------------

def test_trace_of_identity_is_dimension(s3):
    # S^2 = id on a group algebra, so the identity matrix is a morphism V -> V**
    for V in rk.simples(s3):
        t = rk.categorical_trace(V, s3.field.eye(V.dim))
        assert t == Scalar(s3.field, V.dim)


def test_trace_rejects_non_morphism(s3):
    V = next(V for V in rk.simples(s3) if V.dim == 2)
    F = s3.field
    with pytest.raises(rk.IntertwiningFailed):
        rk.categorical_trace(V, F.array([[1, 1], [0, 1]]))


@pytest.mark.parametrize("address,norms,total", [("sym3@GF7", [1, 1, 4], 6), ("cyclic:5@GF11", [1] * 5, 5),
                                                 ("dihedral:4@Q", [1, 1, 1, 1, 4], 8)])
def test_squared_norms_and_global_dimension(address, norms, total):
    H = load_builtin(address)
    F = H.field
    got = sorted(int(F.format(rk.squared_norm(L).value)) for L in rk.simples(H))
    assert got == norms
    assert rk.global_dimension(H) == Scalar(F, total)


def test_squared_norm_independent_of_phi(s3):
    for L in rk.simples(s3):
        assert rk.squared_norm(L) == rk.squared_norm(L, scale=3)


def test_global_dimension_needs_semisimple(sweedler):
    with pytest.raises(PreconditionFailed):
        rk.global_dimension(sweedler)


# -- braiding and the Drinfeld isomorphism ------------------------------------------

def test_trivial_braiding_is_swap(s3):
    V = next(V for V in rk.simples(s3) if V.dim == 2)
    F = s3.field
    sigma = rk.braiding(V, V, hc.trivial_r(s3))
    assert F.equal(F.dot(sigma, sigma), F.eye(4))


def test_braiding_is_h_linear_on_double():
    D, R = load_quasitriangular("double(cyclic:3@GF7)")
    F = D.field
    S = rk.simples(D)
    V, W = S[1], S[-1]
    sigma = rk.braiding(V, W, R)
    VW, WV = rk.tensor(V, W), rk.tensor(W, V)
    for i in range(D.dim):
        assert F.equal(F.dot(sigma, VW.mats[i]), F.dot(WV.mats[i], sigma))


def test_drinfeld_iso_agrees_with_element():
    D, R = load_quasitriangular("double(cyclic:2@Q)")
    for V in rk.simples(D):
        nm = rk.drinfeld_iso(V, R)
        assert nm.intertwines()


def test_delta_braided_on_small_doubles():
    for address in ["double(cyclic:2@Q)", "double(cyclic:3@GF7)"]:
        D, R = load_quasitriangular(address)
        rep = rk.delta_check_braided(D, R)
        assert rep.passed, rep.summary()


def test_delta_braided_cocommutative(s3):
    rep = rk.delta_check_braided(s3, hc.trivial_r(s3))
    assert rep.passed, rep.summary()


def test_delta_braided_requires_unimodular(sweedler):
    with pytest.raises(PreconditionFailed):
        rk.delta_check_braided(sweedler, hc.trivial_r(sweedler))


# -- suites ----------------------------------------------------------------------------

@pytest.mark.parametrize("address", ["sym3@GF7", "cyclic:5@GF11", "dihedral:4@Q"])
def test_trtr_and_vitia(address):
    H = load_builtin(address)
    assert rk.trtr_check(H).passed
    assert rk.vitia_monstr_check(H).passed


def test_delta_semisimple_is_identity_for_groups(s3):
    F = s3.field
    for nm in rk.delta_semisimple(s3):
        assert F.equal(nm.matrix, F.eye(nm.matrix.shape[0]))


def test_trtr_reports_non_semisimple(sweedler):
    assert not rk.trtr_check(sweedler).passed


def test_ler_counterexample():
    H = load_builtin("gr_uq_sl2:3:2@GF7")
    rep = rk.ler_counterexample_check(H)
    assert rep.passed
    d = rep.to_dict()
    assert d["witnesses"]["Tr(K)"] == "2" and d["witnesses"]["Tr(K^-1)"] == "4"


def test_ler_requires_efk_basis(s3):
    with pytest.raises(PreconditionFailed):
        rk.ler_counterexample_check(s3)


@pytest.mark.parametrize("address", ["sym3@GF7", "cyclic:5@GF11"])
def test_spherical(address):
    assert rk.spherical_check(load_builtin(address)).passed


def test_spherical_requires_semisimple(sweedler):
    with pytest.raises(PreconditionFailed):
        rk.spherical_check(sweedler)


@pytest.mark.parametrize("address", ["sweedler@Q", "sym3@GF7"])
def test_comparison_passes(address):
    rep = rk.comparison_check(load_builtin(address))
    assert rep.passed, rep.summary()


@pytest.mark.parametrize("address", ["taft:3:2@GF7", "taft:4:q@GF13"])
def test_comparison_socle_is_alpha_inverse_for_taft(address):
    # the left integral spans a trivial submodule of P(alpha), so soc P(eps) carries alpha^-1;
    # this differs from alpha once alpha has order > 2
    rep = rk.comparison_check(load_builtin(address))
    d = rep.to_dict()
    assert d["witnesses"]["dim_socle"] == 1
    assert d["witnesses"]["socle_equals_alpha_inverse"] is True
    assert not rep.passed
