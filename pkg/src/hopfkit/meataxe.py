"""Randomised module splitting (MeatAxe style) over exact fields.

A module is given by the matrices of a spanning set of the acting algebra
(columns are images, vectors are columns).  Over finite fields the minimal
polynomial of a random algebra element is factored completely; over Q only
rational roots are used and a split that needs an irrational eigenvalue is
reported as :class:`~hopfkit.reports.Undecided`.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .exactfield import Field, Rationals
from .exactla import (
    Matrix,
    Polynomial,
    factor_over_prime_field,
    inverse_array,
    minimal_polynomial,
    nullspace_array,
    rational_partial_factor,
    rowspace_array,
    rref_array,
)
from .reports import Undecided

__all__ = [
    "ATTEMPT_BUDGET",
    "spin",
    "find_submodule",
    "split_module",
    "composition_factors",
    "endomorphism_dimension",
    "hom_basis",
    "SplitFactor",
]

ATTEMPT_BUDGET = 50


def spin(F: Field, mats, vectors: np.ndarray) -> np.ndarray:
    """Row basis (rref) of the smallest invariant subspace containing the given rows."""
    W = rowspace_array(F, np.atleast_2d(vectors))
    if W.shape[0] == 0:
        return W
    while True:
        W2 = rowspace_array(F, np.concatenate([W] + [F.dot(W, M.T) for M in mats]))
        if W2.shape[0] == W.shape[0]:
            return W2
        W = W2


def _candidate_factors(F: Field, poly: Polynomial):
    """Irreducible factors usable for splitting, smallest degree first."""
    if isinstance(F, Rationals):
        found, _rest = rational_partial_factor(poly)
        return [(f, m) for f, m in found]
    return sorted(factor_over_prime_field(poly), key=lambda fm: (fm[0].degree, repr(fm[0])))


def _random_element(F: Field, mats: np.ndarray, rng: random.Random) -> np.ndarray:
    coeffs = F.array([F.random(rng) for _ in range(mats.shape[0])])
    return F.tensordot(coeffs, mats, ([0], [0]))


def find_submodule(F: Field, mats: np.ndarray, seed: int = 0, budget: int = ATTEMPT_BUDGET):
    """Return ``(W, None)`` with W a proper invariant subspace (row basis), or
    ``(None, certificate)`` when the module is proved irreducible.

    Raises :class:`Undecided` when the budget is exhausted.
    """
    d = mats.shape[1]
    if d <= 1:
        return None, {"reason": "dimension <= 1"}
    rng = random.Random(seed)
    gens = list(mats)
    gens_t = [M.T for M in mats]
    for attempt in range(budget):
        theta = _random_element(F, mats, rng)
        mp = minimal_polynomial(Matrix.raw(F, theta))
        for f, _mult in _candidate_factors(F, mp):
            N = f.eval_matrix(Matrix.raw(F, theta)).a
            K = nullspace_array(F, N)
            if K.shape[1] == 0:
                continue
            v = K[:, 0]
            W = spin(F, gens, v.reshape(1, -1))
            if W.shape[0] < d:
                return W, None
            Kt = nullspace_array(F, N.T)
            w = Kt[:, 0]
            Wt = spin(F, gens_t, w.reshape(1, -1))
            if Wt.shape[0] < d:
                # annihilator of an invariant subspace of the dual is invariant
                return nullspace_array(F, Wt).T.copy(), None
            if K.shape[1] == f.degree:
                return None, {"attempt": attempt, "factor_degree": f.degree}
    raise Undecided(f"module splitting undecided after {budget} attempts over {F}")


def _basis_completion(F: Field, W: np.ndarray) -> np.ndarray:
    """Columns: rows of W followed by standard vectors completing a basis."""
    d = W.shape[1]
    _, piv = rref_array(F, W)
    extra = [c for c in range(d) if c not in set(piv)]
    cols = [W[i] for i in range(W.shape[0])]
    eye = F.eye(d)
    cols += [eye[c] for c in extra]
    return np.stack(cols, axis=1)


def split_module(F: Field, mats: np.ndarray, W: np.ndarray):
    """Submodule and quotient actions for an invariant subspace W (row basis)."""
    k = W.shape[0]
    P = _basis_completion(F, W)
    Pi = inverse_array(F, P)
    conj = F.tensordot(F.tensordot(Pi, mats, ([1], [1])), P, ([2], [0]))  # (d, n, d)
    conj = conj.transpose(1, 0, 2)
    return np.ascontiguousarray(conj[:, :k, :k]), np.ascontiguousarray(conj[:, k:, k:])


def hom_basis(F: Field, src: np.ndarray, dst: np.ndarray, gens_idx=None) -> np.ndarray:
    """Basis (k, d_dst, d_src) of {T : T src(h) = dst(h) T} over the given generator indices."""
    ds, dt = src.shape[1], dst.shape[1]
    idx = range(src.shape[0]) if gens_idx is None else gens_idx
    It, Is = F.eye(dt), F.eye(ds)
    from .exactla import nullspace_stacked

    def blocks():
        for i in idx:
            yield F.reduce(np.kron(It, src[i].T) - np.kron(dst[i], Is))

    K = nullspace_stacked(F, blocks(), dt * ds)
    return np.ascontiguousarray(K.T).reshape(-1, dt, ds)


def endomorphism_dimension(F: Field, mats: np.ndarray, gens_idx=None) -> int:
    return hom_basis(F, mats, mats, gens_idx).shape[0]


@dataclass
class SplitFactor:
    mats: np.ndarray
    multiplicity: int
    split: bool  # absolutely irreducible (End = k)


def composition_factors(F: Field, mats: np.ndarray, seed: int = 0, gens_idx=None) -> list[SplitFactor]:
    """Composition factors up to isomorphism with multiplicities (deterministic by seed)."""
    stack = [mats]
    simples: list[np.ndarray] = []
    counts: list[int] = []
    step = 0
    while stack:
        M = stack.pop()
        W, _cert = find_submodule(F, M, seed=seed + 7919 * step)
        step += 1
        if W is not None:
            sub, quo = split_module(F, M, W)
            stack.append(quo)
            stack.append(sub)
            continue
        for t, S in enumerate(simples):
            if S.shape[1] == M.shape[1] and hom_basis(F, M, S, gens_idx).shape[0] > 0:
                counts[t] += 1
                break
        else:
            simples.append(M)
            counts.append(1)
    out = []
    for S, c in zip(simples, counts):
        out.append(SplitFactor(S, c, endomorphism_dimension(F, S, gens_idx) == 1))
    out.sort(key=lambda f: (f.mats.shape[1], [F.format(x) for x in f.mats.reshape(-1)]))
    return out
