"""Finite-dimensional associative algebras and their modules.

Radical, socle, indecomposable projectives, a cover-dimension projectivity test
and the exactness verdict for a bimodule.  Algebras use the same structure
constant convention as :mod:`hopfcore` (``mul[i, j, k]`` is the coefficient of
e_k in e_i e_j); module actions are stacks of matrices acting on columns.
"""
from __future__ import annotations

import random

import numpy as np

from .exactfield import Field, Rationals
from .exactla import (
    Matrix,
    Polynomial,
    factor_over_prime_field,
    minimal_polynomial,
    nullspace_array,
    nullspace_stacked,
    rational_partial_factor,
    rowspace_array,
    solve_array,
)
from .meataxe import ATTEMPT_BUDGET, composition_factors, find_submodule, hom_basis
from .reports import Report, Undecided

__all__ = [
    "AlgebraError",
    "FDAlgebra",
    "ModuleOverAlgebra",
    "opposite",
    "tensor_algebra",
    "truncated_polynomial",
    "load_algebra",
    "regular_module",
    "bimodule_of",
    "module_direct_sum",
    "conjugate_module",
    "radical",
    "radical_powers",
    "socle",
    "top",
    "primitive_idempotents",
    "indecomposable_projectives",
    "is_projective",
    "exactness_verdict",
]


class AlgebraError(ValueError):
    pass


class FDAlgebra:
    """Unital associative algebra given by structure constants."""

    def __init__(self, field: Field, mul, unit, *, basis=None, name: str = "", check: bool = True):
        self.field = field
        self.mul = field.array(mul) if not isinstance(mul, np.ndarray) else mul
        self.unit = field.array(unit) if not isinstance(unit, np.ndarray) else unit
        n = self.mul.shape[0]
        if self.mul.shape != (n, n, n) or self.unit.shape != (n,):
            raise AlgebraError("inconsistent structure constant shapes")
        self.basis = list(basis) if basis is not None else [f"b{i}" for i in range(n)]
        self.name = name
        self._cache: dict = {}
        if check:
            rep = self.validate()
            if not rep.passed:
                raise AlgebraError("invalid algebra: " + ", ".join(f["name"] for f in rep.failures))

    @classmethod
    def from_hopf(cls, H) -> "FDAlgebra":
        return cls(H.field, H.mul, H.unit, basis=H.basis, name=H.name, check=False)

    @property
    def dim(self) -> int:
        return self.mul.shape[0]

    def __repr__(self):
        return f"<FDAlgebra {self.name or ''} dim={self.dim} over {self.field}>"

    @property
    def left_mats(self) -> np.ndarray:
        """left_mats[i][k, j] = mul[i, j, k]."""
        if "left" not in self._cache:
            self._cache["left"] = np.ascontiguousarray(self.mul.transpose(0, 2, 1))
        return self._cache["left"]

    @property
    def right_mats(self) -> np.ndarray:
        """right_mats[j][k, i] = mul[i, j, k]."""
        if "right" not in self._cache:
            self._cache["right"] = np.ascontiguousarray(self.mul.transpose(1, 2, 0))
        return self._cache["right"]

    def mult(self, x, y) -> np.ndarray:
        F = self.field
        return F.tensordot(F.tensordot(x, self.mul, ([0], [0])), y, ([0], [0]))

    def left_matrix(self, x) -> np.ndarray:
        return self.field.tensordot(x, self.left_mats, ([0], [0]))

    def right_matrix(self, x) -> np.ndarray:
        return self.field.tensordot(x, self.right_mats, ([0], [0]))

    def validate(self) -> Report:
        F = self.field
        n = self.dim
        rep = Report("algebra", fmt=F.format)
        # (e_i e_j) e_l vs e_i (e_j e_l)
        lhs = F.tensordot(self.mul, self.mul, ([2], [0]))  # (i, j, l, m)
        rhs = F.tensordot(self.mul, self.mul, ([1], [2])).transpose(0, 2, 3, 1)  # (i, j, l, m)
        rep.add("associativity", F.equal(lhs, rhs))
        eye = F.eye(n)
        rep.add("left unit", F.equal(self.left_matrix(self.unit), eye))
        rep.add("right unit", F.equal(self.right_matrix(self.unit), eye))
        return rep

    def is_commutative(self) -> bool:
        return self.field.equal(self.mul, self.mul.transpose(1, 0, 2))


class ModuleOverAlgebra:
    """Left module: ``mats[i]`` is the action of the basis element e_i.

    ``embedding`` (optional) records the columns of an ambient module spanning
    this one when the module was obtained as a submodule.
    """

    def __init__(self, parent: FDAlgebra, mats, *, check: bool = True, name: str = "", embedding=None):
        self.parent = parent
        self.mats = np.asarray(mats)
        self.name = name
        self.embedding = embedding
        if self.mats.ndim != 3 or self.mats.shape[0] != parent.dim or self.mats.shape[1] != self.mats.shape[2]:
            raise AlgebraError(f"expected ({parent.dim}, d, d) action matrices, got {self.mats.shape}")
        if check:
            rep = self.validate()
            if not rep.passed:
                raise AlgebraError("not a module: " + ", ".join(f["name"] for f in rep.failures))

    @property
    def field(self) -> Field:
        return self.parent.field

    @property
    def dim(self) -> int:
        return self.mats.shape[1]

    def __repr__(self):
        return f"<Module {self.name or ''} dim={self.dim} over {self.parent!r}>"

    def act(self, x) -> np.ndarray:
        return self.field.tensordot(x, self.mats, ([0], [0]))

    def validate(self) -> Report:
        F = self.field
        B = self.parent
        rep = Report("module", fmt=F.format)
        rep.add("unit acts as identity", F.equal(self.act(B.unit), F.eye(self.dim)))
        lhs = F.tensordot(self.mats, self.mats, ([2], [1])).transpose(0, 2, 1, 3)  # (i, j, r, c)
        rhs = F.tensordot(B.mul, self.mats, ([2], [0]))  # (i, j, r, c)
        rep.add("multiplicative", F.equal(lhs, rhs))
        return rep


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def opposite(B: FDAlgebra) -> FDAlgebra:
    names = [f"{b}°" for b in B.basis]
    return FDAlgebra(B.field, np.ascontiguousarray(B.mul.transpose(1, 0, 2)), B.unit.copy(), basis=names,
                     name=f"{B.name}°", check=False)


def tensor_algebra(B: FDAlgebra, C: FDAlgebra) -> FDAlgebra:
    """B (x) C with basis b_i (x) c_k at index i * dim C + k."""
    from .exactfield import FieldMismatch

    if B.field != C.field:
        raise FieldMismatch(f"{B.field} vs {C.field}")
    F = B.field
    n1, n2 = B.dim, C.dim
    mul6 = F.zeros((n1, n2, n1, n2, n1, n2))
    for i, j, m in np.argwhere(F.nonzero_mask(B.mul)):
        mul6[i, :, j, :, m, :] = F.scale(B.mul[i, j, m], C.mul)
    mul = mul6.reshape(n1 * n2, n1 * n2, n1 * n2)
    unit = F.zeros(n1 * n2)
    for i in np.flatnonzero(F.nonzero_mask(B.unit)):
        unit[i * n2:(i + 1) * n2] = F.scale(B.unit[i], C.unit)
    names = [f"{a}⊗{b}" for a in B.basis for b in C.basis]
    return FDAlgebra(F, mul, unit, basis=names, name=f"({B.name}⊗{C.name})", check=False)


def truncated_polynomial(field: Field, n: int = 2) -> FDAlgebra:
    """k[x]/x^n with basis 1, x, ..., x^{n-1}."""
    mul = field.zeros((n, n, n))
    for i in range(n):
        for j in range(n - i):
            mul[i, j, i + j] = field.one
    unit = field.zeros(n)
    unit[0] = field.one
    names = ["1", "x"] + [f"x^{k}" for k in range(2, n)]
    return FDAlgebra(field, mul, unit, basis=names[:n], name=f"k[x]/x^{n}")


def load_algebra(address: str) -> FDAlgebra:
    """``trunc:n@FIELD`` (k[x]/x^n), the alias ``Q[x]/x^2``, or any Hopf builtin address."""
    from .builtins import _split_field, load_builtin
    from .exactfield import QQ, parse_field

    if address.replace(" ", "") in ("Q[x]/x^2", "Q[x]/x²"):
        return truncated_polynomial(QQ, 2)
    body, ftext = _split_field(address.strip())
    if body.startswith("trunc:"):
        return truncated_polynomial(parse_field(ftext or "Q"), int(body.split(":")[1]))
    return FDAlgebra.from_hopf(load_builtin(address))


def regular_module(B: FDAlgebra) -> ModuleOverAlgebra:
    return ModuleOverAlgebra(B, B.left_mats.copy(), check=False, name="regular")


def bimodule_of(B: FDAlgebra) -> tuple[FDAlgebra, ModuleOverAlgebra]:
    """B as a module over B (x) B°: (a (x) b°) h = a h b."""
    F = B.field
    E = tensor_algebra(B, opposite(B))
    n = B.dim
    mats = F.zeros((n * n, n, n))
    for i in range(n):
        for j in range(n):
            mats[i * n + j] = F.dot(B.left_mats[i], B.right_mats[j])
    return E, ModuleOverAlgebra(E, mats, check=False, name="bimodule")


def module_direct_sum(M: ModuleOverAlgebra, N: ModuleOverAlgebra) -> ModuleOverAlgebra:
    if M.parent is not N.parent:
        raise AlgebraError("direct sum of modules over different algebras")
    F = M.field
    d1, d2 = M.dim, N.dim
    mats = F.zeros((M.parent.dim, d1 + d2, d1 + d2))
    mats[:, :d1, :d1] = M.mats
    mats[:, d1:, d1:] = N.mats
    return ModuleOverAlgebra(M.parent, mats, check=False, name=f"({M.name}+{N.name})")


def conjugate_module(M: ModuleOverAlgebra, rng_seed: int = 0) -> ModuleOverAlgebra:
    """The same module in a random basis drawn from the seed."""
    from .exactla import inverse_array

    F = M.field
    rng = random.Random(rng_seed)
    d = M.dim
    while True:
        P = F.array([[F.random(rng) for _ in range(d)] for _ in range(d)])
        if d == 0 or Matrix(F, P).rank() == d:
            break
    Pi = inverse_array(F, P) if d else P
    mats = np.stack([F.dot(Pi, F.dot(A, P)) for A in M.mats]) if d else M.mats.copy()
    return ModuleOverAlgebra(M.parent, F.reduce(mats), check=False, name=M.name)


def _submodule(M: ModuleOverAlgebra, cols: np.ndarray, name: str = "") -> ModuleOverAlgebra:
    """Restriction of M to the invariant subspace spanned by the columns."""
    F = M.field
    k = cols.shape[1]
    if k == 0:
        return ModuleOverAlgebra(M.parent, F.zeros((M.parent.dim, 0, 0)), check=False, name=name, embedding=cols)
    imgs = F.tensordot(M.mats, cols, ([2], [0]))  # (i, d, k)
    stacked = np.concatenate(list(imgs), axis=1)
    coords = solve_array(F, cols, stacked)  # (k, n * k)
    mats = np.ascontiguousarray(coords.reshape(k, M.parent.dim, k).transpose(1, 0, 2))
    return ModuleOverAlgebra(M.parent, mats, check=False, name=name, embedding=cols)


def _quotient(M: ModuleOverAlgebra, cols: np.ndarray, name: str = "") -> ModuleOverAlgebra:
    """M / span(cols) for an invariant subspace."""
    F = M.field
    d = M.dim
    W = rowspace_array(F, cols.T) if cols.shape[1] else F.zeros((0, d))
    from .meataxe import split_module

    if W.shape[0] == 0:
        return ModuleOverAlgebra(M.parent, M.mats.copy(), check=False, name=name)
    _sub, quo = split_module(F, M.mats, W)
    return ModuleOverAlgebra(M.parent, quo, check=False, name=name)


# ---------------------------------------------------------------------------
# radical
# ---------------------------------------------------------------------------


def _span_products(B: FDAlgebra, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Column basis of span{x y : x in cols(X), y in cols(Y)}."""
    F = B.field
    if X.shape[1] == 0 or Y.shape[1] == 0:
        return F.zeros((B.dim, 0))
    prods = F.tensordot(F.tensordot(X, B.mul, ([0], [0])), Y, ([1], [0]))  # (a, k, b)
    vecs = prods.transpose(0, 2, 1).reshape(-1, B.dim)
    return rowspace_array(F, vecs).T.copy()


def _is_subspace(F: Field, X: np.ndarray, Y: np.ndarray) -> bool:
    """cols(X) within cols(Y)."""
    if X.shape[1] == 0:
        return True
    base = rowspace_array(F, Y.T).shape[0] if Y.shape[1] else 0
    return rowspace_array(F, np.concatenate([Y, X], axis=1).T).shape[0] == base


def radical_powers(B: FDAlgebra, J: np.ndarray) -> list[np.ndarray]:
    """[J, J^2, ...] down to the first zero power (inclusive)."""
    F = B.field
    out = [J]
    cur = J
    for _ in range(B.dim + 1):
        if cur.shape[1] == 0:
            return out
        cur = _span_products(B, cur, J)
        out.append(cur)
    raise AlgebraError("radical candidate is not nilpotent")


def radical(B: FDAlgebra, rng_seed: int = 0) -> np.ndarray:
    """Column basis of the Jacobson radical.

    Characteristic 0: kernel of the trace form tr(L_x L_y).  Characteristic p:
    common annihilator of the composition factors of the regular module.  In
    both cases the result is checked to be a nilpotent two-sided ideal whose
    quotient has the Wedderburn dimension of a semisimple algebra.
    """
    key = ("radical", rng_seed)
    if key in B._cache:
        return B._cache[key]
    F = B.field
    n = B.dim
    if F.characteristic == 0:
        tr = F.reduce(np.trace(B.left_mats, axis1=1, axis2=2)) if F.dtype is not object else \
            F.reduce(np.array([sum(B.left_mats[i][k, k] for k in range(n)) for i in range(n)], dtype=object))
        T = F.tensordot(B.mul, tr, ([2], [0]))  # T[i, j] = tr(L_{e_i e_j})
        J = nullspace_array(F, T)
        quotient_ok = True
        facs = None
    else:
        facs = composition_factors(F, B.left_mats, seed=rng_seed)

        def blocks():
            for f in facs:
                S = f.mats
                yield S.reshape(n, -1).T  # rows: entries of rho_S, columns: basis of B

        J = nullspace_stacked(F, blocks(), n)
        # Wedderburn count: B/J = prod M_{d/e}(E) has dimension sum d^2 / e
        wd = 0
        for f in facs:
            e = hom_basis(F, f.mats, f.mats).shape[0]
            wd += f.mats.shape[1] ** 2 // e
        quotient_ok = wd == n - J.shape[1]
    # two-sided ideal
    left = _span_products(B, F.eye(n), J)
    right = _span_products(B, J, F.eye(n))
    if not (_is_subspace(F, left, J) and _is_subspace(F, right, J)):
        raise AlgebraError("radical candidate is not an ideal")
    radical_powers(B, J)  # raises if not nilpotent
    if not quotient_ok:
        raise AlgebraError("quotient by the radical candidate is not semisimple")
    B._cache[key] = J
    return J


# ---------------------------------------------------------------------------
# socle, top
# ---------------------------------------------------------------------------


def _rad_times(M: ModuleOverAlgebra, J: np.ndarray) -> np.ndarray:
    F = M.field
    if J.shape[1] == 0 or M.dim == 0:
        return F.zeros((M.dim, 0))
    acts = F.tensordot(J, M.mats, ([0], [0]))  # (k, d, d)
    cols = np.concatenate(list(acts), axis=1)
    return rowspace_array(F, cols.T).T.copy()


def socle(M: ModuleOverAlgebra, rng_seed: int = 0) -> ModuleOverAlgebra:
    """Annihilator of rad(B) in M, as a submodule (``embedding`` holds its basis)."""
    F = M.field
    J = radical(M.parent, rng_seed)
    d = M.dim
    if J.shape[1] == 0:
        return _submodule(M, F.eye(d), name="socle")
    acts = F.tensordot(J, M.mats, ([0], [0]))
    K = nullspace_stacked(F, iter(list(acts)), d)
    soc = _submodule(M, K, name="socle")
    # annihilated by rad, hence a module over the semisimple quotient
    if soc.dim and not F.equal(F.tensordot(J, soc.mats, ([0], [0])), F.zeros((J.shape[1], soc.dim, soc.dim))):
        raise AlgebraError("socle is not annihilated by the radical")
    return soc


def top(M: ModuleOverAlgebra, rng_seed: int = 0) -> ModuleOverAlgebra:
    """M / rad(B) M."""
    J = radical(M.parent, rng_seed)
    return _quotient(M, _rad_times(M, J), name="top")


# ---------------------------------------------------------------------------
# idempotents and projectives
# ---------------------------------------------------------------------------


def _coprime_parts(F: Field, mp: Polynomial) -> list[Polynomial]:
    if isinstance(F, Rationals):
        found, rest = rational_partial_factor(mp)
        parts = [_ppow(f, m) for f, m in found]
        if rest.degree >= 1:
            parts.append(rest)
        return parts
    return [_ppow(f, m) for f, m in factor_over_prime_field(mp)]


def _ppow(f: Polynomial, m: int) -> Polynomial:
    out = Polynomial(f.field, [1])
    for _ in range(m):
        out = out * f
    return out


def _eval_in_corner(B: FDAlgebra, poly: Polynomial, theta: np.ndarray, e: np.ndarray) -> np.ndarray:
    F = B.field
    acc = F.zeros(B.dim)
    for c in reversed(poly.coeffs):
        acc = F.reduce(B.mult(acc, theta) + F.scale(c, e))
    return acc


def lift_idempotent(B: FDAlgebra, e: np.ndarray, max_steps: int | None = None) -> np.ndarray:
    """Iterate e -> 3e^2 - 2e^3 until e is idempotent (e^2 - e must be nilpotent)."""
    F = B.field
    steps = max_steps if max_steps is not None else B.dim.bit_length() + 2
    for _ in range(steps + 1):
        e2 = B.mult(e, e)
        if F.equal(e2, e):
            return e
        e3 = B.mult(e2, e)
        e = F.reduce(F.scale(F(3), e2) - F.scale(F(2), e3))
    raise AlgebraError("idempotent lifting did not converge")


def _left_ideal(B: FDAlgebra, e: np.ndarray) -> np.ndarray:
    """Column basis of B e."""
    F = B.field
    return rowspace_array(F, B.right_matrix(e).T).T.copy()


def _is_primitive(B: FDAlgebra, e: np.ndarray, rng_seed: int) -> bool:
    M = _submodule(regular_module(B), _left_ideal(B, e))
    T = top(M, rng_seed)
    if T.dim <= 1:
        return True
    W, _cert = find_submodule(B.field, T.mats, seed=rng_seed)
    return W is None


def primitive_idempotents(B: FDAlgebra, rng_seed: int = 0, budget: int = ATTEMPT_BUDGET) -> list[np.ndarray]:
    """Complete set of orthogonal primitive idempotents summing to 1.

    Each non-primitive idempotent e is split along the coprime factorisation of
    the minimal polynomial of a random element of the corner algebra eBe.
    """
    F = B.field
    rng = random.Random(rng_seed)
    done: list[np.ndarray] = []
    todo = [B.unit.copy()]
    while todo:
        e = todo.pop()
        if _is_primitive(B, e, rng_seed):
            done.append(e)
            continue
        Le, Re = B.left_matrix(e), B.right_matrix(e)
        corner = F.dot(Le, Re)  # x -> e x e
        eB = rowspace_array(F, Le.T).T.copy()
        for _attempt in range(budget):
            x = F.array([F.random(rng) for _ in range(B.dim)])
            theta = F.dot(corner, x)
            act = solve_array(F, eB, F.dot(B.left_matrix(theta), eB))
            parts = _coprime_parts(F, minimal_polynomial(Matrix.raw(F, act)))
            if len(parts) >= 2:
                break
        else:
            raise Undecided(f"could not split an idempotent after {budget} attempts over {F}")
        # CRT: p_i = 1 mod parts[i], 0 mod the others
        total = _ppow(parts[0], 0)
        for p in parts:
            total = total * p
        for p in parts:
            cof = total // p
            _g, s, _t = cof.xgcd(p)
            ei = _eval_in_corner(B, (s * cof) % total, theta, e)
            todo.append(lift_idempotent(B, ei))
    # canonical order
    done.sort(key=lambda v: [F.format(c) for c in v])
    s = F.zeros(B.dim)
    for e in done:
        s = F.reduce(s + e)
    if not F.equal(s, B.unit):
        raise AlgebraError("primitive idempotents do not sum to 1")
    return done


def indecomposable_projectives(B: FDAlgebra, rng_seed: int = 0):
    """One (P, top P) per isomorphism class of indecomposable projectives."""
    key = ("projectives", rng_seed)
    if key in B._cache:
        return B._cache[key]
    F = B.field
    reg = regular_module(B)
    out: list[tuple[ModuleOverAlgebra, ModuleOverAlgebra]] = []
    counts: list[int] = []
    for e in primitive_idempotents(B, rng_seed):
        P = _submodule(reg, _left_ideal(B, e), name="P")
        T = top(P, rng_seed)
        for k, (_P2, T2) in enumerate(out):
            if T2.dim == T.dim and hom_basis(F, T.mats, T2.mats).shape[0] > 0:
                counts[k] += 1
                break
        else:
            out.append((P, T))
            counts.append(1)
    total = sum(c * P.dim for c, (P, _T) in zip(counts, out))
    if total != B.dim:
        raise AlgebraError("projective decomposition does not exhaust the regular module")
    for c, (P, T) in zip(counts, out):
        e = hom_basis(F, T.mats, T.mats).shape[0]
        if c != T.dim // e:
            raise AlgebraError("multiplicity of a projective differs from dim(top)/dim(End(top))")
    for k, (P, T) in enumerate(out):
        P.name, T.name = f"P{k}", f"S{k}"
    B._cache[key] = out
    return out


def is_projective(M: ModuleOverAlgebra, B: FDAlgebra | None = None, rng_seed: int = 0) -> bool:
    """M is projective iff the projective cover of its top has dimension dim M."""
    B = B or M.parent
    F = B.field
    T = top(M, rng_seed)
    if T.dim == 0:
        return M.dim == 0
    projs = indecomposable_projectives(B, rng_seed)
    cover = 0
    for f in composition_factors(F, T.mats, seed=rng_seed):
        for P, S in projs:
            if S.dim == f.mats.shape[1] and hom_basis(F, f.mats, S.mats).shape[0] > 0:
                cover += f.multiplicity * P.dim
                break
        else:
            raise AlgebraError("top of M has a simple factor without a projective cover")
    return cover == M.dim


def exactness_verdict(H_bimod: ModuleOverAlgebra, rng_seed: int = 0) -> Report:
    """'exact' iff the given module over B (x) B° is projective."""
    F = H_bimod.field
    rep = Report("exactness", fmt=F.format)
    rep.witness("module_dim", H_bimod.dim)
    rep.witness("algebra_dim", H_bimod.parent.dim)
    try:
        proj = is_projective(H_bimod, rng_seed=rng_seed)
    except Undecided as exc:
        rep.undecided = True
        rep.witness("verdict", "undecided")
        rep.note(str(exc))
        return rep
    T = top(H_bimod, rng_seed)
    rep.witness("top_dim", T.dim)
    rep.witness("verdict", "exact" if proj else "not exact")
    rep.add("module is projective over B (x) B°", proj)
    return rep
