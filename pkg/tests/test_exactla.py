from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.polys.domains import GF as SGF
from sympy.polys.matrices import DomainMatrix

from hopfkit.exactfield import GF, QQ
from hopfkit.exactla import (
    Matrix,
    NoSolution,
    Polynomial,
    SparseTensor3,
    factor_over_prime_field,
    inverse,
    kernel_basis,
    kron,
    minimal_polynomial,
    rank,
    rational_partial_factor,
    rref,
    solve,
)

small_ints = st.integers(-4, 4)


def _int_matrix(draw_rows, rows, cols):
    return [draw_rows[r * cols:(r + 1) * cols] for r in range(rows)]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 6), st.data())
def test_rank_nullity_and_sympy_rank_over_q(rows, cols, data):
    vals = data.draw(st.lists(small_ints, min_size=rows * cols, max_size=rows * cols))
    M = Matrix(QQ, _int_matrix(vals, rows, cols))
    K = kernel_basis(M)
    assert rank(M) + K.cols == cols
    assert (M @ K).is_zero()
    assert rank(M) == sympy.Matrix(_int_matrix(vals, rows, cols)).rank()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 6), st.data())
def test_rank_over_gf5_matches_sympy(rows, cols, data):
    vals = data.draw(st.lists(st.integers(0, 4), min_size=rows * cols, max_size=rows * cols))
    rows_ = _int_matrix(vals, rows, cols)
    dom = SGF(5)
    oracle = DomainMatrix([[dom(x) for x in r] for r in rows_], (rows, cols), dom).rank()
    assert rank(Matrix(GF(5), rows_)) == oracle


def test_rref_canonical_over_q():
    M = Matrix(QQ, [[2, 4, 6], [1, 3, 5]])
    R, piv = rref(M)
    expect = sympy.Matrix([[2, 4, 6], [1, 3, 5]]).rref()
    assert piv == list(expect[1])
    assert R.tolist() == [[str(x) for x in row] for row in expect[0].tolist()]


def test_inverse_and_solve():
    M = Matrix(QQ, [[2, 1], [5, 3]])
    assert inverse(M) @ M == Matrix.identity(QQ, 2)
    x = solve(M, Matrix(QQ, [[1], [2]]))
    assert M @ x == Matrix(QQ, [[1], [2]])
    with pytest.raises(NoSolution):
        solve(Matrix(QQ, [[1, 1], [1, 1]]), Matrix(QQ, [[1], [2]]))
    with pytest.raises(ZeroDivisionError):
        inverse(Matrix(GF(7), [[1, 2], [2, 4]]))


def test_kron_index_convention():
    A = Matrix(QQ, [[1, 2], [3, 4]])
    B = Matrix(QQ, [[0, 1], [1, 0]])
    K = kron(A, B)
    assert K.tolist() == [[str(x) for x in r] for r in np.kron([[1, 2], [3, 4]], [[0, 1], [1, 0]]).tolist()]


def test_sparse_tensor_round_trip():
    F = GF(7)
    T = F.zeros((3, 3, 3))
    T[0, 1, 2] = 5
    T[2, 2, 0] = 1
    S = SparseTensor3.from_dense(F, T)
    assert len(S) == 2
    assert F.equal(S.to_dense(), T)


@pytest.mark.parametrize("p", [2, 3, 7, 13])
def test_factorization_matches_sympy(p):
    F = GF(p)
    x = sympy.Symbol("x")
    rng = np.random.default_rng(p)
    for _ in range(6):
        coeffs = [int(c) for c in rng.integers(0, p, size=7)] + [1]
        f = Polynomial(F, coeffs)
        ours = sorted((tuple(int(c) for c in g.coeffs), m) for g, m in factor_over_prime_field(f))
        _lc, facs = sympy.factor_list(sum(c * x**k for k, c in enumerate(coeffs)), modulus=p)
        theirs = []
        for g, m in facs:
            cs = [int(c) % p for c in reversed(sympy.Poly(g, x, modulus=p).all_coeffs())]
            inv = pow(cs[-1], -1, p)
            theirs.append((tuple(c * inv % p for c in cs), m))
        assert ours == sorted(theirs)


def test_factorization_over_gf4_recombines():
    F = GF(2, [1, 1, 1])
    t = F.gen()
    f = Polynomial(F, [F.one, F.one, F.one])  # x^2 + x + 1 splits over GF(4)
    facs = factor_over_prime_field(f)
    assert sum(m for _g, m in facs) == 2 and all(g.degree == 1 for g, _m in facs)
    prod = Polynomial(F, [1])
    for g, m in facs:
        for _ in range(m):
            prod = prod * g
    assert prod == f
    assert any(g(t) == F.zero for g, _m in facs)


def test_rational_partial_factor():
    f = Polynomial(QQ, [-2, 1, -2, 1])  # (x - 2)(x^2 + 1)
    found, rest = rational_partial_factor(f)
    assert [(tuple(g.coeffs), m) for g, m in found] == [((-2, 1), 1)]
    assert rest.coeffs == (1, 0, 1)


def test_minimal_polynomial_against_sympy():
    rows = [[2, 1, 0], [0, 2, 0], [0, 0, 3]]
    mp = minimal_polynomial(Matrix(QQ, rows))
    # (x - 2)^2 (x - 3): sympy's charpoly has the same roots and here equals the minimal polynomial
    x = sympy.Symbol("x")
    cp = sympy.Matrix(rows).charpoly(x).all_coeffs()
    assert [Fraction(c) for c in reversed(cp)] == list(mp.coeffs)


def test_xgcd_identity():
    F = GF(11)
    a = Polynomial(F, [1, 2, 3, 1])
    b = Polynomial(F, [5, 0, 1])
    g, s, t = a.xgcd(b)
    assert s * a + t * b == g
