from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopfkit import repkit as rk
from hopfkit.builtins import load_builtin
from hopfkit.exactfield import Scalar
from hopfkit.fusionkit import build_canonical_algebra, build_fusion_data, canonical_double_dual_trace
from hopfkit.reports import PreconditionFailed

# character table of S3 on classes (e, transpositions, 3-cycles) with class sizes 1, 3, 2,
# rows ordered trivial, sign, standard
S3_CHARS = [[1, 1, 1], [1, -1, 1], [2, 0, -1]]
S3_CLASS = [1, 3, 2]


def _character_fusion(chars, sizes):
    order = sum(sizes)
    r = len(chars)
    N = np.zeros((r, r, r), dtype=int)
    for i in range(r):
        for j in range(r):
            for m in range(r):
                s = sum(Fraction(sz * chars[i][c] * chars[j][c] * chars[m][c]) for c, sz in enumerate(sizes))
                N[i, j, m] = int(s / order)
    return N


@pytest.fixture(scope="module")
def fd_s3():
    return build_fusion_data(load_builtin("sym3@GF7"), 0)


def test_s3_fusion_matches_character_theory(fd_s3):
    assert fd_s3.dims == [1, 1, 2]
    assert np.array_equal(fd_s3.fusion, _character_fusion(S3_CHARS, S3_CLASS))
    assert fd_s3.duality == [0, 1, 2]
    assert fd_s3.report().passed


def test_cyclic_fusion_is_group_law():
    fd = build_fusion_data(load_builtin("cyclic:3@GF7"), 0)
    N = fd.fusion
    assert fd.rank == 3 and fd.dims == [1, 1, 1]
    assert all(N[i, j].sum() == 1 for i in range(3) for j in range(3))
    assert sorted(fd.duality) == [0, 1, 2] and fd.duality[0] == 0 and fd.duality[1] == 2


def test_dihedral_fusion():
    fd = build_fusion_data(load_builtin("dihedral:4@Q"), 0)
    two = fd.dims.index(2)
    assert fd.dims.count(1) == 4
    assert list(fd.fusion[two, two]) == [1 if d == 1 else 0 for d in fd.dims]
    assert fd.report().passed


def test_squared_norms_and_global_dimension(fd_s3):
    F = fd_s3.field
    assert [s.value for s in fd_s3.squared_norms] == [F(1), F(1), F(4)]
    assert fd_s3.global_dimension == Scalar(F, 6)


def test_non_semisimple_rejected(sweedler):
    with pytest.raises(PreconditionFailed):
        build_fusion_data(sweedler)


@pytest.mark.parametrize("address,carrier", [("cyclic:2@Q", 2), ("sym3@GF7", 6), ("cyclic:3@GF7", 3)])
def test_canonical_algebra_self_tests(address, carrier):
    fd = build_fusion_data(load_builtin(address), 0)
    A = build_canonical_algebra(fd)
    assert A.carrier_dim == carrier
    assert A.report.passed, A.report.summary()


@pytest.mark.parametrize("seed", [1, 2])
def test_canonical_algebra_after_basis_changes(seed):
    fd = build_fusion_data(load_builtin("sym3@GF7"), seed)
    A = build_canonical_algebra(fd)
    assert A.report.passed


@settings(max_examples=15, deadline=None)
@given(st.data())
def test_canonical_algebra_associative_on_random_elements(data):
    fd = build_fusion_data(load_builtin("sym3@GF7"), 0)
    A = build_canonical_algebra(fd)
    F = fd.field
    vec = lambda: F.array(data.draw(st.lists(st.integers(0, 6), min_size=6, max_size=6)))  # noqa: E731
    x, y, z = vec(), vec(), vec()
    assert F.equal(A.multiply(A.multiply(x, y), z), A.multiply(x, A.multiply(y, z)))
    assert F.equal(A.multiply(A.unit_embed, x), x)


def test_unit_component_is_trivial_summand(fd_s3):
    A = build_canonical_algebra(fd_s3)
    assert A.offsets == [0, 1, 2, 6]
    assert A.unit_embed[0] == fd_s3.field.one


@pytest.mark.parametrize("address,expected", [("sym3@GF7", 6), ("cyclic:2@Q", 2), ("cyclic:3@GF7", 3)])
def test_double_dual_trace_equals_global_dimension(address, expected):
    H = load_builtin(address)
    traces = {canonical_double_dual_trace(build_fusion_data(H, s), H) for s in (0, 1, 5)}
    assert traces == {Scalar(H.field, expected)}


def test_double_dual_trace_independent_of_rescaling(fd_s3):
    assert canonical_double_dual_trace(fd_s3, rng_seed=3) == canonical_double_dual_trace(fd_s3, rng_seed=11)


def test_fusion_data_deterministic():
    H = load_builtin("sym3@GF7")
    a, b = build_fusion_data(H, 4), build_fusion_data(H, 4)
    assert a.report().to_json() == b.report().to_json()
    assert all(H.field.equal(x.mats, y.mats) for x, y in zip(a.simples, b.simples))
    assert rk.simples(H)[0].dim == 1
