"""Fusion data of a semisimple Rep(H) and the canonical algebra A = sum L_i (x) *L_i.

An element of L_i (x) *L_i is stored as a d_i x d_i matrix X (v (x) f <-> v f^T),
so the carrier of A is the direct sum of the End(L_i), vectorised row-major and
concatenated in simple order.  The product of X in component i and Y in
component j lands in component m as sum_a f_a (X (x) Y) g^a, where f_a runs over
the chosen basis of Hom(L_i (x) L_j, L_m) and g^a over the dual basis of
Hom(L_m, L_i (x) L_j) with respect to the composition pairing.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .exactfield import Field, Scalar
from .exactla import inverse_array
from .hopfcore import HopfAlgebra, HopfError, is_semisimple
from .meataxe import hom_basis
from .reports import PreconditionFailed, Report
from . import repkit as rk

__all__ = [
    "FusionError",
    "AssociativityFailed",
    "FusionData",
    "CanonicalAlgebra",
    "build_fusion_data",
    "build_canonical_algebra",
    "canonical_double_dual_trace",
]


class FusionError(HopfError):
    pass


class AssociativityFailed(FusionError):
    pass


def _random_invertible(F: Field, d: int, rng: random.Random) -> np.ndarray:
    while True:
        P = F.array([[F.random(rng) for _ in range(d)] for _ in range(d)])
        try:
            inverse_array(F, P)
            return P
        except ZeroDivisionError:
            continue


def _conjugate(V: rk.Representation, P: np.ndarray) -> rk.Representation:
    F = V.field
    Pi = inverse_array(F, P)
    mats = F.tensordot(F.tensordot(Pi, V.mats, ([1], [1])), P, ([2], [0])).transpose(1, 0, 2)
    return rk.Representation.unchecked(V.parent, np.ascontiguousarray(mats), V.name)


def _scalar_of(F: Field, M: np.ndarray) -> object:
    """lambda with M = lambda * I (raises otherwise)."""
    lam = M[0, 0]
    if not F.equal(M, F.scale(lam, F.eye(M.shape[0]))):
        raise FusionError("composition L_m -> L_m is not a scalar (simple not split?)")
    return lam


@dataclass
class FusionData:
    parent: HopfAlgebra
    simples: list
    duality: list[int]
    fusion: np.ndarray  # N[i, j, m]
    hom_bases: dict = field(repr=False)  # (i, j, m) -> (out basis (k, d_m, d_i d_j), dual in basis (k, d_i d_j, d_m))
    pairings: dict = field(repr=False)  # (i, j, m) -> k x k pairing matrix f_a o h_b
    squared_norms: list = field(default_factory=list)
    seed: int = 0

    @property
    def field(self) -> Field:
        return self.parent.field

    @property
    def rank(self) -> int:
        return len(self.simples)

    @property
    def dims(self) -> list[int]:
        return [L.dim for L in self.simples]

    @property
    def global_dimension(self) -> Scalar:
        total = Scalar(self.field, self.field.zero)
        for s in self.squared_norms:
            total = total + s
        return total

    def report(self) -> Report:
        F = self.field
        rep = Report("fusion-data", fmt=F.format)
        rep.witness("simple_dims", self.dims)
        rep.witness("duality", self.duality)
        rep.witness("fusion", self.fusion.tolist())
        rep.witness("squared_norms", [str(s) for s in self.squared_norms])
        rep.witness("global_dimension", str(self.global_dimension))
        N = self.fusion
        r = self.rank
        rep.add("unit row N[0][j][m] = delta", bool(np.array_equal(N[0], np.eye(r, dtype=N.dtype))))
        lhs = np.einsum("ijm,mkl->ijkl", N, N)
        rhs = np.einsum("jkm,iml->ijkl", N, N)
        rep.add("fusion ring associativity", bool(np.array_equal(lhs, rhs)))
        rep.add("duality is an involution", all(self.duality[self.duality[i]] == i for i in range(r)))
        return rep


def build_fusion_data(H: HopfAlgebra, rng_seed: int = 0) -> FusionData:
    """Simples, duality, fusion multiplicities, hom bases and pairings.

    With a nonzero seed, every simple and every hom basis is replaced by a
    seeded random change of basis, so that results computed from different
    seeds exercise different basis choices.
    """
    F = H.field
    if not is_semisimple(H):
        raise PreconditionFailed("fusion data needs a semisimple Hopf algebra")
    simples = list(rk.simples(H, rng_seed))
    rng = random.Random(rng_seed)
    if rng_seed:
        simples = [simples[0]] + [_conjugate(L, _random_invertible(F, L.dim, rng)) for L in simples[1:]]
    for L in simples:
        if rk._hom(L, L).shape[0] != 1:
            raise rk.NotSplitSimple(f"{L.name} is not absolutely simple over {F}")
    gens = rk._gen_indices(H)
    r = len(simples)

    def hom(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return hom_basis(F, a, b, gens)

    duality = []
    for L in simples:
        sL = rk.left_dual(L)
        match = [j for j, M in enumerate(simples) if M.dim == L.dim and hom(sL.mats, M.mats).shape[0] > 0]
        if len(match) != 1:
            raise FusionError("could not match the left dual of a simple")
        duality.append(match[0])

    N = np.zeros((r, r, r), dtype=np.int64)
    hom_bases, pairings = {}, {}
    for i, Li in enumerate(simples):
        for j, Lj in enumerate(simples):
            T = rk.tensor(Li, Lj)
            for m, Lm in enumerate(simples):
                outs = hom(T.mats, Lm.mats)  # (k, d_m, d_i d_j)
                k = outs.shape[0]
                N[i, j, m] = k
                if k == 0:
                    continue
                ins = hom(Lm.mats, T.mats)  # (k', d_i d_j, d_m)
                if ins.shape[0] != k:
                    raise FusionError("Hom(L_i L_j, L_m) and Hom(L_m, L_i L_j) have different dimensions")
                if rng_seed:
                    A = _random_invertible(F, k, rng)
                    outs = F.tensordot(A, outs, ([1], [0]))
                P = F.zeros((k, k))
                for a in range(k):
                    for b in range(k):
                        P[a, b] = _scalar_of(F, F.dot(outs[a], ins[b]))
                try:
                    Pinv = inverse_array(F, P)
                except ZeroDivisionError as exc:
                    raise FusionError(f"degenerate pairing for {(i, j, m)}") from exc
                dual = F.tensordot(Pinv.T, ins, ([1], [0]))  # g^a = sum_b Pinv[b, a] h_b
                hom_bases[(i, j, m)] = (outs, dual)
                pairings[(i, j, m)] = P
    fd = FusionData(H, simples, duality, N, hom_bases, pairings, seed=rng_seed)
    # Frobenius-type symmetry: N[i][j][m] = dim Hom(L_j, *L_i (x) L_m)
    for i, Li in enumerate(simples):
        sLi = rk.left_dual(Li)
        for m, Lm in enumerate(simples):
            T = rk.tensor(sLi, Lm)
            for j, Lj in enumerate(simples):
                if hom(Lj.mats, T.mats).shape[0] != N[i, j, m]:
                    raise FusionError("Frobenius reciprocity check failed")
    fd.squared_norms = [rk.squared_norm(L) for L in simples]
    return fd


@dataclass
class CanonicalAlgebra:
    parent: FusionData
    offsets: list[int]
    mult: np.ndarray  # c x c^2
    unit_embed: np.ndarray  # length c
    report: Report

    @property
    def carrier_dim(self) -> int:
        return self.mult.shape[0]

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        F = self.parent.field
        return F.dot(self.mult, F.reduce(np.kron(x, y)))


def _block_diag(F: Field, blocks: list[np.ndarray]) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = F.zeros((n, n))
    o = 0
    for b in blocks:
        k = b.shape[0]
        out[o:o + k, o:o + k] = b
        o += k
    return out


def build_canonical_algebra(fd: FusionData) -> CanonicalAlgebra:
    """Assemble m : A (x) A -> A and verify unit, associativity and H (x) H-equivariance."""
    F = fd.field
    H = fd.parent
    dims = fd.dims
    offsets = [0]
    for d in dims:
        offsets.append(offsets[-1] + d * d)
    c = offsets[-1]
    mult = F.zeros((c, c * c))
    for (i, j, m), (outs, dual) in fd.hom_bases.items():
        di, dj, dm = dims[i], dims[j], dims[m]
        # T[u, row, col, v] = sum_a f_a[u, row] g^a[col, v]
        T = F.tensordot(outs, dual, ([0], [0]))  # (d_m, di dj, di dj, d_m)
        T = T.reshape(dm, di, dj, di, dj, dm)  # (u, r, s, cc, t, v)
        block = T.transpose(0, 5, 1, 3, 2, 4).reshape(dm * dm, di * di, dj * dj)  # (u v, r cc, s t)
        rows = slice(offsets[m], offsets[m + 1])
        for p in range(di * di):
            col0 = (offsets[i] + p) * c + offsets[j]
            mult[rows, col0:col0 + dj * dj] = F.reduce(mult[rows, col0:col0 + dj * dj] + block[:, p, :])
    unit = F.zeros(c)
    unit[offsets[0]] = F.one
    rep = Report("canonical-algebra", fmt=F.format)
    rep.witness("carrier_dim", c)
    rep.witness("simple_dims", dims)
    eye = F.eye(c)
    left_u = F.dot(mult, F.reduce(np.kron(unit.reshape(-1, 1), eye)))
    right_u = F.dot(mult, F.reduce(np.kron(eye, unit.reshape(-1, 1))))
    rep.add("unit component embeds the unit (left)", F.equal(F.reduce(left_u), eye))
    rep.add("unit component embeds the unit (right)", F.equal(F.reduce(right_u), eye))
    a1 = F.dot(mult, F.reduce(np.kron(mult, eye)))
    a2 = F.dot(mult, F.reduce(np.kron(eye, mult)))
    assoc = F.equal(a1, a2)
    rep.add("associativity m(m x id) = m(id x m)", assoc)

    # H (x) H action: h (x) 1 acts on the L_i factor, 1 (x) h' on the *L_i factor
    simples = fd.simples

    def left_act(h: int) -> np.ndarray:
        return _block_diag(F, [F.reduce(np.kron(L.mats[h], F.eye(L.dim))) for L in simples])

    Sinv = H.S_inv

    def right_act_vec(x: np.ndarray) -> np.ndarray:
        blocks = []
        for L in simples:
            M = L.act(F.dot(Sinv, x))
            blocks.append(F.reduce(np.kron(F.eye(L.dim), M.T)))
        return _block_diag(F, blocks)

    L_all = [left_act(h) for h in range(H.dim)]
    R_all = [right_act_vec(H.basis_vector(h)) for h in range(H.dim)]
    ok = True
    for h in rk._gen_indices(H):
        lhs2 = F.zeros((c * c, c * c))
        rhs2 = F.zeros((c * c, c * c))
        for a, b in np.argwhere(F.nonzero_mask(H.comul[h])):
            coef = H.comul[h, a, b]
            lhs2 = F.reduce(lhs2 + F.scale(coef, np.kron(L_all[a], L_all[b])))
            # second tensor factor order reversed
            rhs2 = F.reduce(rhs2 + F.scale(coef, np.kron(R_all[b], R_all[a])))
        if not F.equal(F.dot(mult, lhs2), F.dot(L_all[h], mult)):
            ok = False
            break
        if not F.equal(F.dot(mult, rhs2), F.dot(R_all[h], mult)):
            ok = False
            break
    rep.add("multiplication is H (x) H-equivariant (boxtimes-twisted)", ok)
    if not assoc:
        raise AssociativityFailed("canonical algebra is not associative")
    return CanonicalAlgebra(fd, offsets, mult, unit, rep)


def canonical_double_dual_trace(fd: FusionData, H: HopfAlgebra | None = None, rng_seed: int | None = None) -> Scalar:
    """Trace of the canonical isomorphism A -> A**, assembled from the components
    psi_i : *L_i -> *****L_i.

    psi_i spans the 1-dimensional Hom(*L_i, *****L_i) and is normalised so that
    Tr(phi^-1) Tr(phi psi^-1) = |L_i|^2 for one iso phi : *L_i -> ***L_i; each
    contribution is then recomputed with an independently rescaled phi'.
    """
    H = H or fd.parent
    F = fd.field
    rng = random.Random(fd.seed if rng_seed is None else rng_seed)
    total = Scalar(F, F.zero)
    for L, norm in zip(fd.simples, fd.squared_norms):
        s1 = rk.left_dual(L)
        s3 = rk.left_dual(rk.left_dual(s1))
        s5 = rk.left_dual(rk.left_dual(s3))
        phi = rk._one_dim_hom(s1, s3, "*L, ***L")
        psi0 = rk._one_dim_hom(s1, s5, "*L, *****L")
        phi_inv = inverse_array(F, phi)
        t_phi_inv = rk.categorical_trace(s3, phi_inv)
        t_raw = rk.categorical_trace(s5, F.dot(phi, inverse_array(F, psi0)))
        # Tr(phi (c psi0)^-1) = Tr(phi psi0^-1) / c
        c = (t_phi_inv * t_raw) / norm
        psi = F.scale(c.value, psi0)
        lam = F.zero
        while F.is_zero(lam):
            lam = F.random(rng)
        phi2 = F.scale(lam, phi)
        contrib = rk.categorical_trace(s3, inverse_array(F, phi2)) * \
            rk.categorical_trace(s5, F.dot(phi2, inverse_array(F, psi)))
        total = total + contrib
    gd = rk.global_dimension(H, fd.seed)
    if total != gd:
        raise FusionError(f"trace of A -> A** is {total}, global dimension is {gd}")
    return total
