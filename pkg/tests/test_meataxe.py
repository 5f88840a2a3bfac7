from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopfkit import repkit as rk
from hopfkit.builtins import load_builtin
from hopfkit.exactfield import GF
from hopfkit.exactla import Matrix, inverse
from hopfkit.meataxe import composition_factors, endomorphism_dimension, find_submodule, hom_basis, spin, split_module
from hopfkit.reports import Undecided


def _invariant(F, mats, W) -> bool:
    r = Matrix(F, W).rank()
    return all(Matrix(F, np.concatenate([W, F.dot(W, M.T)])).rank() == r for M in mats)


def _two_dim_s3(F):
    S = rk.simples(load_builtin("sym3@GF7"))
    return next(V for V in S if V.dim == 2)


def test_spin_of_regular_generator_is_everything(s3):
    reg = rk.regular(s3)
    F = s3.field
    W = spin(F, reg.mats, s3.unit.reshape(1, -1))
    assert W.shape[0] == s3.dim


def test_irreducible_module_certified(s3):
    V = _two_dim_s3(s3.field)
    W, cert = find_submodule(s3.field, V.mats, seed=0)
    assert W is None and cert


def test_reducible_module_gives_invariant_subspace(s3):
    F = s3.field
    reg = rk.regular(s3)
    W, _ = find_submodule(F, reg.mats, seed=1)
    assert W is not None and 0 < W.shape[0] < s3.dim
    assert _invariant(F, reg.mats, W)
    sub, quo = split_module(F, reg.mats, W)
    assert sub.shape[1] + quo.shape[1] == s3.dim


@pytest.mark.parametrize("address,expected", [
    ("sym3@GF7", [(1, 1), (1, 1), (2, 2)]),
    ("sym3@GF3", [(1, 3), (1, 3)]),          # modular case: trivial and sign, each three times
    ("sweedler@Q", [(1, 2), (1, 2)]),
    ("taft:3:2@GF7", [(1, 3), (1, 3), (1, 3)]),
])
def test_composition_factors_of_regular(address, expected):
    H = load_builtin(address)
    facs = composition_factors(H.field, rk.regular(H).mats, seed=0)
    got = sorted((f.mats.shape[1], f.multiplicity) for f in facs)
    assert got == sorted(expected)
    assert sum(d * m for d, m in got) == H.dim
    assert all(f.split for f in facs)


@pytest.mark.parametrize("address", ["sym3@GF7", "sweedler@Q", "taft:3:2@GF7", "cyclic:5@GF11"])
def test_end_of_regular_module_has_dim_h(address):
    # End_H(H) is H^op acting by right multiplication
    H = load_builtin(address)
    assert endomorphism_dimension(H.field, rk.regular(H).mats) == H.dim


def test_hom_basis_elements_intertwine(s3):
    F = s3.field
    reg = rk.regular(s3)
    V = _two_dim_s3(F)
    B = hom_basis(F, reg.mats, V.mats)
    assert B.shape[0] == 2  # multiplicity of V in the regular module
    for T in B:
        for i in range(s3.dim):
            assert F.equal(F.dot(T, reg.mats[i]), F.dot(V.mats[i], T))


def test_irrational_split_over_q_is_undecided():
    H = load_builtin("cyclic:3@Q")
    with pytest.raises(Undecided):
        composition_factors(H.field, rk.regular(H).mats, seed=0)


def test_same_seed_same_factors(taft3):
    a = composition_factors(taft3.field, rk.regular(taft3).mats, seed=4)
    b = composition_factors(taft3.field, rk.regular(taft3).mats, seed=4)
    assert len(a) == len(b)
    assert all(taft3.field.equal(x.mats, y.mats) and x.multiplicity == y.multiplicity for x, y in zip(a, b))


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000))
def test_factor_dimensions_are_basis_independent(seed):
    H = load_builtin("sym3@GF7")
    F = H.field
    rng = random.Random(seed)
    V = rk.direct_sum(_two_dim_s3(F), rk.trivial(H))
    while True:
        P = F.array([[F.random(rng) for _ in range(3)] for _ in range(3)])
        if Matrix(F, P).rank() == 3:
            break
    Pi = inverse(Matrix(F, P)).a
    mats = F.array(np.stack([F.dot(Pi, F.dot(M, P)) for M in V.mats]))
    facs = composition_factors(F, mats, seed=seed)
    assert sorted(f.mats.shape[1] for f in facs) == [1, 2]
