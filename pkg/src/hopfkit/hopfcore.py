"""Finite-dimensional Hopf algebras given by structure constants.

Conventions (fixed for the whole package):

* ``mul[i, j, k]`` is the coefficient of ``e_k`` in ``e_i e_j``;
* ``comul[i, j, k]`` is the coefficient of ``e_j (x) e_k`` in ``Delta(e_i)``;
* the antipode matrix has ``S(e_j) = sum_i S[i, j] e_i`` (columns are images);
* an element of ``H (x) H`` is an ``n x n`` array ``X`` meaning
  ``sum X[a, b] e_a (x) e_b``, which matches the global Kronecker index ``a*n + b``.
* convolution actions: ``beta -> h = sum h1 beta(h2)`` and
  ``h <- beta = sum beta(h1) h2``.

Structure constants are stored densely (numpy arrays) for speed and exported
as :class:`~hopfkit.exactla.SparseTensor3` for interchange.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exactfield import Field, FieldMismatch, Scalar
from .exactla import (
    Matrix,
    NoSolution,
    SparseTensor3,
    inverse_array,
    nullspace_array,
    nullspace_stacked,
    rowspace_array,
    rref_array,
    solve_array,
)
from .reports import Report, ValidationReport

__all__ = [
    "HopfError",
    "InvalidHopf",
    "NoAntipode",
    "IntegralSpaceNotOneDimensional",
    "ConventionSelfTestFailed",
    "DrinfeldElementNotInvertible",
    "NoInvertibleSolutionFound",
    "ExtensionInconsistent",
    "HopfAlgebra",
    "Element",
    "Functional",
    "RMatrix",
    "validate_hopf",
    "compute_antipode",
    "dual_hopf",
    "left_integrals",
    "right_integrals",
    "distinguished_functional",
    "distinguished_element",
    "radford_check",
    "is_unimodular",
    "dual_unimodular",
    "is_semisimple",
    "antipode_order",
    "drinfeld_double",
    "r_matrix_check",
    "drinfeld_map",
    "is_factorizable",
    "factorizable_implies_unimodular_check",
    "drinfeld_element",
    "pivot_candidates",
    "pivotal_extension",
    "change_basis",
    "hh_mul",
    "generating_set",
]

# above this dimension, multiplicativity-type checks run on a generating set
FULL_PAIR_LIMIT = 32


class HopfError(Exception):
    pass


class InvalidHopf(HopfError):
    def __init__(self, report: ValidationReport):
        super().__init__("Hopf axioms fail: " + ", ".join(f["name"] for f in report.failures))
        self.report = report


class NoAntipode(HopfError):
    pass


class IntegralSpaceNotOneDimensional(HopfError):
    pass


class ConventionSelfTestFailed(HopfError):
    pass


class DrinfeldElementNotInvertible(HopfError):
    pass


class NoInvertibleSolutionFound(HopfError):
    def __init__(self, msg, space=None):
        super().__init__(msg)
        self.space = space


class ExtensionInconsistent(HopfError):
    pass


# ---------------------------------------------------------------------------
# the algebra object
# ---------------------------------------------------------------------------


class HopfAlgebra:
    """A Hopf algebra (H, m, 1, Delta, eps, S) over an exact field.

    ``HopfAlgebra(...)`` validates all axioms and raises :class:`InvalidHopf`;
    :meth:`unchecked` builds the object without validation.
    """

    def __init__(self, field: Field, basis, mul, unit, comul, counit, antipode=None, *, name: str = ""):
        self._init(field, basis, mul, unit, comul, counit, antipode, name)
        report = validate_hopf(self)
        if not report.passed:
            raise InvalidHopf(report)

    @classmethod
    def unchecked(cls, field: Field, basis, mul, unit, comul, counit, antipode=None, *, name: str = "") -> "HopfAlgebra":
        obj = cls.__new__(cls)
        obj._init(field, basis, mul, unit, comul, counit, antipode, name)
        return obj

    def _init(self, field, basis, mul, unit, comul, counit, antipode, name):
        self.field = field
        self.name = name
        if isinstance(mul, SparseTensor3):
            mul = mul.to_dense()
        if isinstance(comul, SparseTensor3):
            comul = comul.to_dense()
        self.mul = field.reduce(np.asarray(mul)) if np.asarray(mul).dtype != object else np.asarray(mul)
        n = self.mul.shape[0]
        if self.mul.shape != (n, n, n):
            raise ValueError(f"mul must be n x n x n, got {self.mul.shape}")
        self.comul = np.asarray(comul)
        if self.comul.shape != (n, n, n):
            raise ValueError(f"comul must be n x n x n, got {self.comul.shape}")
        self.unit = np.asarray(unit)
        self.counit = np.asarray(counit)
        if self.unit.shape != (n,) or self.counit.shape != (n,):
            raise ValueError("unit and counit must be length-n vectors")
        self.basis = list(basis) if basis is not None else [f"e{i}" for i in range(n)]
        if len(self.basis) != n:
            raise ValueError("basis names must have length n")
        if antipode is None:
            self.S = compute_antipode(self)
        else:
            self.S = antipode.a if isinstance(antipode, Matrix) else np.asarray(antipode)
            if self.S.shape != (n, n):
                raise ValueError("antipode must be n x n")

    # -- basic data ----------------------------------------------------
    @property
    def dim(self) -> int:
        return self.mul.shape[0]

    @property
    def basis_names(self) -> list[str]:
        return self.basis

    def __repr__(self):
        label = self.name or "HopfAlgebra"
        return f"<{label} dim={self.dim} over {self.field}>"

    @cached_property
    def mul_tensor(self) -> SparseTensor3:
        return SparseTensor3.from_dense(self.field, self.mul)

    @cached_property
    def comul_tensor(self) -> SparseTensor3:
        return SparseTensor3.from_dense(self.field, self.comul)

    @property
    def antipode(self) -> Matrix:
        return Matrix.raw(self.field, self.S)

    @cached_property
    def left_mats(self) -> np.ndarray:
        """``left_mats[i]`` is the matrix of x -> e_i x (so [k, j] = mul[i, j, k])."""
        return np.ascontiguousarray(self.mul.transpose(0, 2, 1))

    @cached_property
    def right_mats(self) -> np.ndarray:
        """``right_mats[j]`` is the matrix of x -> x e_j (so [k, i] = mul[i, j, k])."""
        return np.ascontiguousarray(self.mul.transpose(1, 2, 0))

    @cached_property
    def S_inv(self) -> np.ndarray:
        return inverse_array(self.field, self.S)

    def S_power(self, k: int) -> np.ndarray:
        F = self.field
        base = self.S if k >= 0 else self.S_inv
        out = F.eye(self.dim)
        for _ in range(abs(k)):
            out = F.dot(base, out)
        return out

    # -- vector-level helpers -----------------------------------------
    def vec(self, x) -> np.ndarray:
        if isinstance(x, (Element, Functional)):
            return x.coeffs
        return self.field.array(x)

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = self.field.one
        return v

    def mult(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        F = self.field
        return F.dot(y, F.tensordot(x, self.mul, ([0], [0])))

    def left_matrix(self, x: np.ndarray) -> np.ndarray:
        F = self.field
        return F.tensordot(x, self.left_mats, ([0], [0]))

    def right_matrix(self, y: np.ndarray) -> np.ndarray:
        F = self.field
        return F.tensordot(y, self.right_mats, ([0], [0]))

    def coproduct(self, x: np.ndarray) -> np.ndarray:
        """Delta(x) as an n x n array."""
        return self.field.tensordot(x, self.comul, ([0], [0]))

    def inverse_of(self, x: np.ndarray) -> np.ndarray | None:
        """Two-sided inverse of ``x`` or ``None``."""
        F = self.field
        try:
            y = solve_array(F, self.left_matrix(x), self.unit)
        except NoSolution:
            return None
        if not F.equal(self.mult(y, x), self.unit):
            return None
        return y

    def element(self, x) -> "Element":
        return Element(self, self.vec(x))

    def one(self) -> "Element":
        return Element(self, self.unit.copy())

    def e(self, i) -> "Element":
        if isinstance(i, str):
            i = self.basis.index(i)
        return Element(self, self.basis_vector(i))

    def counit_functional(self) -> "Functional":
        return Functional(self, self.counit.copy())

    def structure_equal(self, other: "HopfAlgebra") -> bool:
        F = self.field
        return (
            other.field == F
            and other.dim == self.dim
            and F.equal(self.mul, other.mul)
            and F.equal(self.comul, other.comul)
            and F.equal(self.unit, other.unit)
            and F.equal(self.counit, other.counit)
            and F.equal(self.S, other.S)
        )

    def _memo(self, key, fn):
        cache = self.__dict__.setdefault("_memo_cache", {})
        if key not in cache:
            cache[key] = fn()
        return cache[key]


def _scalar(F: Field, v) -> Scalar:
    return Scalar(F, v)


@dataclass(eq=False)
class Element:
    parent: HopfAlgebra
    coeffs: np.ndarray

    @property
    def field(self):
        return self.parent.field

    def _other(self, other):
        if isinstance(other, Element):
            if other.parent is not self.parent and other.parent.dim != self.parent.dim:
                raise FieldMismatch("elements of different algebras")
            return other.coeffs
        raise TypeError(f"cannot combine Element with {type(other).__name__}")

    def __mul__(self, other):
        if isinstance(other, Element):
            return Element(self.parent, self.parent.mult(self.coeffs, self._other(other)))
        return Element(self.parent, self.field.scale(self.field(other), self.coeffs))

    def __rmul__(self, c):
        return Element(self.parent, self.field.scale(self.field(c), self.coeffs))

    def __add__(self, other):
        return Element(self.parent, self.field.reduce(self.coeffs + self._other(other)))

    def __sub__(self, other):
        return Element(self.parent, self.field.reduce(self.coeffs - self._other(other)))

    def __neg__(self):
        return Element(self.parent, self.field.reduce(-self.coeffs))

    def __eq__(self, other):
        return isinstance(other, Element) and self.field.equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(tuple(self.field.format(x) for x in self.coeffs))

    def antipode(self, power: int = 1) -> "Element":
        return Element(self.parent, self.field.dot(self.parent.S_power(power), self.coeffs))

    def counit(self) -> Scalar:
        F = self.field
        return _scalar(F, F.dot(self.parent.counit, self.coeffs))

    def inverse(self) -> "Element":
        y = self.parent.inverse_of(self.coeffs)
        if y is None:
            raise ZeroDivisionError("element is not invertible")
        return Element(self.parent, y)

    def is_invertible(self) -> bool:
        return self.parent.inverse_of(self.coeffs) is not None

    def is_grouplike(self) -> bool:
        F = self.field
        d = self.parent.coproduct(self.coeffs)
        eps = F.dot(self.parent.counit, self.coeffs)
        return F.equal(d, F.reduce(np.multiply.outer(self.coeffs, self.coeffs))) and F.is_zero(F.sub(eps, F.one))

    def coproduct(self) -> np.ndarray:
        return self.parent.coproduct(self.coeffs)

    def __repr__(self):
        return format_vector(self.parent, self.coeffs)


@dataclass(eq=False)
class Functional:
    """An element of H*, stored by its values on the basis of H."""

    parent: HopfAlgebra
    coeffs: np.ndarray

    @property
    def field(self):
        return self.parent.field

    def __call__(self, x) -> Scalar:
        v = x.coeffs if isinstance(x, Element) else self.parent.vec(x)
        return _scalar(self.field, self.field.dot(self.coeffs, v))

    def __eq__(self, other):
        return isinstance(other, Functional) and self.field.equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(tuple(self.field.format(x) for x in self.coeffs))

    def compose_antipode(self, power: int = 1) -> "Functional":
        """The functional h -> f(S^power h)."""
        return Functional(self.parent, self.field.dot(self.coeffs, self.parent.S_power(power)))

    def values(self) -> dict[str, str]:
        return {name: self.field.format(v) for name, v in zip(self.parent.basis, self.coeffs)}

    def __repr__(self):
        return "Functional(" + ", ".join(f"{k}:{v}" for k, v in self.values().items()) + ")"


@dataclass(eq=False)
class RMatrix:
    """R = sum tensor[i, j] e_i (x) e_j in H (x) H."""

    parent: HopfAlgebra
    tensor: np.ndarray

    @property
    def matrix(self) -> Matrix:
        return Matrix.raw(self.parent.field, self.tensor)


def format_vector(H: HopfAlgebra, v: np.ndarray) -> str:
    F = H.field
    terms = []
    for name, c in zip(H.basis, v):
        if F.is_zero(c):
            continue
        s = F.format(c)
        terms.append(name if s == "1" else f"{s}*{name}")
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# H (x) H arithmetic and generating sets
# ---------------------------------------------------------------------------


def hh_mul(H: HopfAlgebra, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Product in the algebra H (x) H of two n x n coefficient arrays."""
    F = H.field
    n = H.dim
    nx = np.argwhere(F.nonzero_mask(X))
    ny = np.argwhere(F.nonzero_mask(Y))
    if len(nx) == 0 or len(ny) == 0:
        return F.zeros((n, n))
    if len(nx) * len(ny) <= 4 * n * n:
        # sum over simple-tensor pairs: X[a,b] Y[c,d] (e_a e_c) (x) (e_b e_d)
        A = H.mul[nx[:, 0][:, None], ny[:, 0][None, :]]  # (p, q, n)
        B = H.mul[nx[:, 1][:, None], ny[:, 1][None, :]]
        w = F.reduce(np.multiply.outer(X[nx[:, 0], nx[:, 1]], Y[ny[:, 0], ny[:, 1]]))
        A = F.reduce(A * w[:, :, None])
        return F.tensordot(A, B, ([0, 1], [0, 1]))
    L = H.left_mats
    if len(nx) <= n:
        out = F.zeros((n, n))
        for a, b in nx:
            term = F.dot(F.dot(L[a], Y), L[b].T)
            out = F.reduce(out + F.scale(X[a, b], term))
        return out
    P = F.tensordot(X, H.mul, ([0], [0]))  # (b, c, e)
    Q = F.tensordot(P, Y, ([1], [0]))  # (b, e, d)
    return F.tensordot(Q, H.mul, ([0, 2], [0, 1]))  # (e, f)


def _closure(H: HopfAlgebra, gens: list[np.ndarray]) -> np.ndarray:
    """Row basis of the subalgebra generated by ``gens``."""
    F = H.field
    W = rowspace_array(F, H.unit.reshape(1, -1))
    mats = [H.left_matrix(g) for g in gens]
    while True:
        blocks = [W] + [F.dot(W, M.T) for M in mats]
        W2 = rowspace_array(F, np.concatenate(blocks))
        if W2.shape[0] == W.shape[0]:
            return W2
        W = W2


def generating_set(H: HopfAlgebra, seed: int = 0) -> list[np.ndarray]:
    """A small set of basis vectors generating H as an algebra.

    Candidates are scanned greedily, sparsest coproduct first, so the resulting
    generators keep H (x) H products cheap.  Deterministic; ``seed`` is kept for
    API symmetry with the randomized routines.
    """

    def build():
        F = H.field
        n = H.dim
        weight = [int(F.nonzero_mask(H.comul[i]).sum()) for i in range(n)]
        order = sorted(range(n), key=lambda i: (weight[i], i))
        gens: list[np.ndarray] = []
        W = _closure(H, gens)
        for i in order:
            if W.shape[0] == n:
                break
            v = H.basis_vector(i)
            if rowspace_array(F, np.concatenate([W, v.reshape(1, -1)])).shape[0] == W.shape[0]:
                continue
            gens.append(v)
            W = _closure(H, gens)
        return gens

    return H._memo(("gens", seed), build)


def _probe_elements(H: HopfAlgebra) -> list[tuple[str, np.ndarray]]:
    """Elements on which multiplicativity-type identities are tested."""
    if H.dim <= FULL_PAIR_LIMIT:
        return [(f"e{i}", H.basis_vector(i)) for i in range(H.dim)]
    return [(f"gen{k}", g) for k, g in enumerate(generating_set(H))]


# ---------------------------------------------------------------------------
# validation and antipode
# ---------------------------------------------------------------------------


def _blocks(n: int, budget: int = 4_000_000):
    step = max(1, budget // max(1, n**3))
    for lo in range(0, n, step):
        yield lo, min(n, lo + step)


def _first_diff(F: Field, a: np.ndarray, b: np.ndarray):
    mask = F.nonzero_mask(F.reduce(a - b))
    idx = np.argwhere(mask)
    return tuple(int(x) for x in idx[0]) if len(idx) else None


def validate_hopf(H: HopfAlgebra) -> ValidationReport:
    """Check every Hopf-algebra axiom as an exact identity; witnesses are basis indices."""
    F = H.field
    n = H.dim
    rep = ValidationReport("validate_hopf", fmt=F.format)
    mul, comul, unit, counit, S = H.mul, H.comul, H.unit, H.counit, H.S
    flat_mul = mul.reshape(n * n, n)

    # associativity: (e_i e_j) e_k = e_i (e_j e_k), in blocks of i
    bad = None
    for lo, hi in _blocks(n):
        left = F.tensordot(mul[lo:hi], mul, ([2], [0]))  # (i, j, k, t)
        right = F.tensordot(flat_mul, mul[lo:hi], ([1], [1]))  # (jk, i, t)
        right = right.reshape(n, n, hi - lo, n).transpose(2, 0, 1, 3)
        d = _first_diff(F, left, right)
        if d is not None:
            bad = (lo + d[0], d[1], d[2])
            break
    rep.add("associativity", bad is None, None if bad is None else {"i": bad[0], "j": bad[1], "k": bad[2]})

    ident = F.eye(n)
    lu = F.tensordot(unit, mul, ([0], [0]))  # [j, k] = (1 e_j)_k
    ru = F.tensordot(unit, mul, ([0], [1]))
    d1, d2 = _first_diff(F, lu, ident), _first_diff(F, ru, ident)
    rep.add("left unit", d1 is None, None if d1 is None else {"j": d1[0]})
    rep.add("right unit", d2 is None, None if d2 is None else {"j": d2[0]})

    bad = None
    for lo, hi in _blocks(n):
        # (Delta x id)Delta: sum_s comul[i, s, c] comul[s, a, b] -> (i, c, a, b)
        left = F.tensordot(comul[lo:hi], comul, ([1], [0])).transpose(0, 2, 3, 1)
        # (id x Delta)Delta: sum_s comul[i, a, s] comul[s, b, c] -> (i, a, b, c)
        right = F.tensordot(comul[lo:hi], comul, ([2], [0]))
        d = _first_diff(F, left, right)
        if d is not None:
            bad = (lo + d[0],) + d[1:]
            break
    rep.add("coassociativity", bad is None, None if bad is None else {"i": bad[0], "component": list(bad[1:])})

    lc = F.tensordot(counit, comul, ([0], [1]))  # [i, k] = sum_j eps_j comul[i, j, k]
    rc = F.tensordot(counit, comul, ([0], [2]))
    d1, d2 = _first_diff(F, lc, ident), _first_diff(F, rc, ident)
    rep.add("left counit", d1 is None, None if d1 is None else {"i": d1[0]})
    rep.add("right counit", d2 is None, None if d2 is None else {"i": d2[0]})

    # counit is an algebra map
    eps_prod = F.tensordot(mul, counit, ([2], [0]))
    d = _first_diff(F, eps_prod, F.reduce(np.multiply.outer(counit, counit)))
    ok_eps = d is None and F.is_zero(F.sub(F.dot(counit, unit), F.one))
    rep.add("counit multiplicative", ok_eps, None if d is None else {"i": d[0], "j": d[1]})

    # comultiplication is an algebra map
    one_one = F.reduce(np.multiply.outer(unit, unit))
    d = _first_diff(F, H.coproduct(unit), one_one)
    rep.add("comultiplication unital", d is None, None if d is None else {"component": list(d)})
    bad = None
    if d is None and rep.items[0]["passed"]:
        for label, x in _probe_elements(H):
            dx = H.coproduct(x)
            lhs_all = F.tensordot(H.left_matrix(x), comul, ([0], [0]))  # Delta(x e_j), (j, a, b)
            for j in range(n):
                lhs = lhs_all[j]
                rhs = hh_mul(H, dx, comul[j])
                dd = _first_diff(F, lhs, rhs)
                if dd is not None:
                    bad = {"x": label, "j": j, "component": list(dd)}
                    break
            if bad:
                break
        if n > FULL_PAIR_LIMIT and bad is None:
            rep.note("comultiplicativity checked on a generating set times the basis")
    else:
        bad = {"skipped": "requires associativity and Delta(1) = 1 (x) 1"}
    rep.add("comultiplication multiplicative", bad is None, bad)

    # antipode: m(S (x) id)Delta = eta eps = m(id (x) S)Delta
    target = F.reduce(np.multiply.outer(counit, unit))
    m1 = F.tensordot(S, mul, ([0], [0]))  # [a, b, k] = S(e_a) e_b
    left = F.tensordot(comul, m1, ([1, 2], [0, 1]))
    m2 = F.tensordot(mul, S, ([1], [0])).transpose(0, 2, 1)  # [a, b, k] = e_a S(e_b)
    right = F.tensordot(comul, m2, ([1, 2], [0, 1]))
    d1, d2 = _first_diff(F, left, target), _first_diff(F, right, target)
    rep.add("antipode left", d1 is None, None if d1 is None else {"i": d1[0]})
    rep.add("antipode right", d2 is None, None if d2 is None else {"i": d2[0]})
    return rep


def compute_antipode(H: HopfAlgebra) -> np.ndarray:
    """The convolution inverse of the identity, by an exact linear solve.

    Only the left equation ``m(S (x) id)Delta = eta eps`` is imposed (a one-sided
    inverse in a finite-dimensional algebra is two-sided); the right equation is
    then verified.
    """
    F = H.field
    n = H.dim
    # left[i, k] = sum_{r, a} S[r, a] * C[i, a, r, k],  C = sum_b comul[i,a,b] mul[r,b,k]
    C = F.tensordot(H.comul, H.mul, ([2], [1]))  # (i, a, r, k)
    A = C.transpose(0, 3, 2, 1).reshape(n * n, n * n)  # rows (i, k), cols (r, a)
    b = F.reduce(np.multiply.outer(H.counit, H.unit)).reshape(-1)
    try:
        x = solve_array(F, A, b)
    except NoSolution as exc:
        raise NoAntipode("the antipode equations have no solution") from exc
    S = x.reshape(n, n)
    m2 = F.tensordot(H.mul, S, ([1], [0])).transpose(0, 2, 1)
    right = F.tensordot(H.comul, m2, ([1, 2], [0, 1]))
    if not F.equal(right, b.reshape(n, n)):
        raise NoAntipode("left convolution inverse is not a right inverse")
    return S


def antipode_order(H: HopfAlgebra, limit: int = 1000) -> int | None:
    F = H.field
    ident = F.eye(H.dim)
    P = H.S
    for k in range(1, limit + 1):
        if F.equal(P, ident):
            return k
        P = F.dot(H.S, P)
    return None


# ---------------------------------------------------------------------------
# duals, integrals and distinguished grouplikes
# ---------------------------------------------------------------------------


def dual_hopf(H: HopfAlgebra) -> HopfAlgebra:
    """H* in the dual basis: products from Delta, coproducts from m, S* = S^T."""
    names = [nm[:-1] if nm.endswith("*") else nm + "*" for nm in H.basis]
    return HopfAlgebra.unchecked(
        H.field,
        names,
        np.ascontiguousarray(H.comul.transpose(1, 2, 0)),
        H.counit.copy(),
        np.ascontiguousarray(H.mul.transpose(2, 0, 1)),
        H.unit.copy(),
        np.ascontiguousarray(H.S.T),
        name=f"dual({H.name})" if H.name else "",
    )


def _normalize_first(F: Field, v: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(F.nonzero_mask(v))
    return F.scale(F.inv(v[nz[0]]), v)


def _integral_space(H: HopfAlgebra, side: str) -> np.ndarray:
    F = H.field
    n = H.dim

    def blocks():
        for i in range(n):
            # rows k, cols j: coefficient of e_k in e_i e_j (left) or e_j e_i (right)
            M = H.mul[i].T if side == "left" else H.mul[:, i, :].T
            eye = F.scale(H.counit[i], F.eye(n))
            yield F.reduce(M - eye)

    return nullspace_stacked(F, blocks(), n)


def _integral(H: HopfAlgebra, side: str) -> np.ndarray:
    def build():
        K = _integral_space(H, side)
        if K.shape[1] != 1:
            raise IntegralSpaceNotOneDimensional(f"{side} integral space has dimension {K.shape[1]}")
        return _normalize_first(H.field, K[:, 0])

    return H._memo(("integral", side), build)


def left_integrals(H: HopfAlgebra) -> list[Element]:
    """Basis of {L : h L = eps(h) L}, normalised so the first nonzero coordinate is 1."""
    return [Element(H, _integral(H, "left"))]


def right_integrals(H: HopfAlgebra) -> list[Element]:
    """Basis of {L : L h = eps(h) L}, normalised so the first nonzero coordinate is 1."""
    return [Element(H, _integral(H, "right"))]


def distinguished_functional(H: HopfAlgebra) -> Functional:
    """The character alpha with L h = alpha(h) L for the left integral L."""

    def build():
        F = H.field
        lam = _integral(H, "left")
        p = int(np.flatnonzero(F.nonzero_mask(lam))[0])
        prods = F.tensordot(lam, H.mul, ([0], [0]))  # [i, k] = (L e_i)_k
        alpha = prods[:, p].copy()
        if not F.equal(prods, F.reduce(np.multiply.outer(alpha, lam))):
            raise HopfError("left integral is not an eigenvector of right multiplication")
        # alpha must be an algebra map
        if not F.equal(F.tensordot(H.mul, alpha, ([2], [0])), F.reduce(np.multiply.outer(alpha, alpha))):
            raise HopfError("distinguished functional is not multiplicative")
        return alpha

    return Functional(H, H._memo("alpha", build))


def distinguished_element(H: HopfAlgebra) -> Element:
    """The grouplike a in H given by the distinguished functional of H*."""

    def build():
        F = H.field
        a = distinguished_functional(dual_hopf(H)).coeffs
        if not F.equal(H.coproduct(a), F.reduce(np.multiply.outer(a, a))):
            raise HopfError("distinguished element is not grouplike")
        if not F.is_zero(F.sub(F.dot(H.counit, a), F.one)):
            raise HopfError("distinguished element has counit != 1")
        return a

    return Element(H, H._memo("a", build))


def is_unimodular(H: HopfAlgebra) -> bool:
    return H.field.equal(distinguished_functional(H).coeffs, H.counit)


def dual_unimodular(H: HopfAlgebra) -> bool:
    return H.field.equal(distinguished_element(H).coeffs, H.unit)


def is_semisimple(H: HopfAlgebra) -> bool:
    """Maschke criterion: eps(L) != 0 for the left integral L."""
    F = H.field
    return not F.is_zero(F.dot(H.counit, _integral(H, "left")))


def _bimodule_twist(H: HopfAlgebra, alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    """Matrix of h -> sum beta(h1) h2 alpha(h3) (columns are images of basis vectors)."""
    F = H.field
    Y = F.tensordot(beta, H.comul, ([0], [1]))  # [s, b] = sum_a beta_a comul[s, a, b]
    Z = F.tensordot(H.comul, alpha, ([2], [0]))  # [i, s] = sum_c comul[i, s, c] alpha_c
    return F.dot(Z, Y).T


def radford_check(H: HopfAlgebra) -> Report:
    """Check S^4(h) = a^{-1} (alpha -> h <- alpha^{-1}) a on every basis element."""
    F = H.field
    rep = Report("radford", fmt=F.format)
    alpha = distinguished_functional(H).coeffs
    a = distinguished_element(H).coeffs
    a_inv = F.dot(H.S, a)
    alpha_inv = F.dot(alpha, H.S)
    rep.witness("alpha", dict(zip(H.basis, (F.format(x) for x in alpha))))
    rep.witness("a", format_vector(H, a))
    rep.witness("antipode_order", antipode_order(H))
    rep.add("a is invertible with inverse S(a)", F.equal(H.mult(a, a_inv), H.unit))
    conv = F.tensordot(F.tensordot(alpha, H.comul, ([0], [1])), alpha_inv, ([1], [0]))
    rep.add("alpha^{-1} = alpha o S is the convolution inverse", F.equal(conv, H.counit))
    twist = _bimodule_twist(H, alpha, alpha_inv)
    conj = F.dot(H.left_matrix(a_inv), H.right_matrix(a))
    rhs = F.dot(conj, twist)
    S4 = H.S_power(4)
    mask = F.nonzero_mask(F.reduce(S4 - rhs))
    bad_cols = [H.basis[j] for j in np.flatnonzero(mask.any(axis=0))]
    support = [H.basis[i] for i in np.flatnonzero(mask.any(axis=1))]
    rep.add("S^4(h) = a^-1 (alpha -> h <- alpha^-1) a", not bad_cols,
            None if not bad_cols else {"failing_basis": bad_cols, "residual_support": support})
    if bad_cols:
        # is the failure only a side swap?
        swapped = F.dot(conj, _bimodule_twist(H, alpha_inv, alpha))
        if F.equal(S4, swapped):
            rep.note("identity holds with alpha and alpha^-1 exchanged (side-convention mismatch)")
    return rep


# ---------------------------------------------------------------------------
# Drinfeld double and R-matrices
# ---------------------------------------------------------------------------


def drinfeld_double(H: HopfAlgebra, *, self_test: bool = True) -> tuple[HopfAlgebra, RMatrix]:
    """D(H) = H*^cop |><| H on the basis e^i (x) e_j (index i*n + j) with canonical R.

    Multiplication: (f # a)(g # b) = sum f (a1 -> g <- S^-1(a3)) # a2 b where
    (x -> g <- y)(h) = g(y h x).  Comultiplication: Delta(f # a) = sum (f2 # a1) (x) (f1 # a2).
    R = sum_i (eps # e_i) (x) (e^i # 1).
    """
    F = H.field
    n = H.dim
    N = n * n
    mul, comul, S, Sinv = H.mul, H.comul, H.S, H.S_inv

    # Delta^2(e_j) = sum D2[j, a, b, c] e_a (x) e_b (x) e_c
    D2 = F.tensordot(comul, comul, ([1], [0])).transpose(0, 2, 3, 1)  # (j, c, a, b) -> (j, a, b, c)
    # Phi[c, m, a, k] = e^k(S^-1(e_c) e_m e_a)
    X = F.tensordot(mul, mul, ([2], [0]))  # (r, m, a, k)
    Phi = F.tensordot(Sinv, X, ([0], [0]))  # (c, m, a, k)
    Psi = F.tensordot(D2, Phi, ([1, 3], [2, 0]))  # (j, b, m, k)
    T = F.tensordot(Psi, comul, ([2], [2]))  # (j, b, k, p, i)
    T = F.tensordot(T, mul, ([1], [0]))  # (j, k, p, i, l, q)
    mulD = np.ascontiguousarray(T.transpose(3, 0, 1, 4, 2, 5)).reshape(N, N, N)

    C = np.multiply.outer(mul.transpose(2, 1, 0), comul)  # (i, y, x, j, a, b)
    comulD = np.ascontiguousarray(F.reduce(C).transpose(0, 3, 1, 4, 2, 5)).reshape(N, N, N)

    unitD = F.reduce(np.multiply.outer(H.counit, H.unit)).reshape(-1)
    counitD = F.reduce(np.multiply.outer(H.unit, H.counit)).reshape(-1)

    eye = F.eye(n)
    A = F.reduce(np.stack([np.kron(H.counit, eye[r]) for r in range(n)]))  # eps # e_r
    B = F.reduce(np.stack([np.kron(eye[m], H.unit) for m in range(n)]))  # e^m # 1
    P = F.tensordot(F.tensordot(A, mulD, ([1], [0])), B, ([1], [1]))  # (r, N, m)
    # S_D(e^i # e_j) = sum_{r, m} S[r, j] Sinv[i, m] (eps # e_r)(e^m # 1)
    SD = F.tensordot(F.tensordot(P, S, ([0], [0])), Sinv, ([1], [1]))  # (N, j, i)
    SD = np.ascontiguousarray(SD.transpose(0, 2, 1)).reshape(N, N)

    names = [f"{H.basis[i]}*#{H.basis[j]}" for i in range(n) for j in range(n)]
    D = HopfAlgebra.unchecked(F, names, mulD, unitD, comulD, counitD, SD,
                              name=f"double({H.name})" if H.name else "double")
    R = RMatrix(D, F.dot(A.T, B))
    if self_test:
        v = validate_hopf(D)
        r = r_matrix_check(D, R)
        if not (v.passed and r.passed):
            raise ConventionSelfTestFailed(
                "Drinfeld double self-test failed: " + ", ".join(f["name"] for f in v.failures + r.failures)
            )
    return D, R


def _as_r(H: HopfAlgebra, R) -> np.ndarray:
    if isinstance(R, RMatrix):
        return R.tensor
    if isinstance(R, Matrix):
        return R.a
    return H.field.array(R)


def trivial_r(H: HopfAlgebra) -> RMatrix:
    return RMatrix(H, H.field.reduce(np.multiply.outer(H.unit, H.unit)))


def r_matrix_check(H: HopfAlgebra, R) -> Report:
    """Quasitriangularity axioms for R as exact identities in H^(x)2 and H^(x)3."""
    F = H.field
    n = H.dim
    R = _as_r(H, R)
    rep = Report("r_matrix", fmt=F.format)

    # (Delta (x) id) R = R13 R23
    lhs = F.tensordot(H.comul, R, ([0], [0]))  # (a, b, c)
    t = F.tensordot(R, H.mul, ([1], [0]))  # [a, w, c] = sum_y R[a, y] mul[y, w, c]
    rhs = F.tensordot(R, t, ([1], [1])).transpose(1, 0, 2)  # [b, a, c] -> [a, b, c]
    d = _first_diff(F, lhs, rhs)
    rep.add("(Delta x id)R = R13 R23", d is None, None if d is None else {"component": list(d)})

    # (id (x) Delta) R = R13 R12
    lhs = F.tensordot(R, H.comul, ([1], [0]))  # (a, b, c)
    t = F.tensordot(R, H.mul, ([0], [0]))  # [c, z, a] = sum_x R[x, c] mul[x, z, a]
    rhs = F.tensordot(t, R, ([1], [0]))  # [c, a, b]
    rhs = rhs.transpose(1, 2, 0)
    d = _first_diff(F, lhs, rhs)
    rep.add("(id x Delta)R = R13 R12", d is None, None if d is None else {"component": list(d)})

    # R Delta(h) = Delta^cop(h) R
    bad = None
    for label, x in _probe_elements(H):
        dx = H.coproduct(x)
        left = hh_mul(H, R, dx)
        right = hh_mul(H, dx.T, R)
        dd = _first_diff(F, left, right)
        if dd is not None:
            bad = {"h": label, "component": list(dd)}
            break
    rep.add("R Delta(h) = Delta^cop(h) R", bad is None, bad)

    # invertibility: (S x id)R is the inverse whenever R is quasitriangular
    one = F.reduce(np.multiply.outer(H.unit, H.unit))
    Rinv = F.dot(H.S, R)
    ok = F.equal(hh_mul(H, R, Rinv), one) and F.equal(hh_mul(H, Rinv, R), one)
    if not ok and n * n <= 256:
        Lr = _hh_left_matrix(H, R)
        ok = len(rref_array(F, Lr)[1]) == n * n
    rep.add("R invertible", ok)
    return rep


def _hh_left_matrix(H: HopfAlgebra, X: np.ndarray) -> np.ndarray:
    F = H.field
    n = H.dim
    L = H.left_mats
    out = F.zeros((n * n, n * n))
    for a, b in np.argwhere(F.nonzero_mask(X)):
        out = F.reduce(out + F.scale(X[a, b], np.kron(L[a], L[b])))
    return out


def drinfeld_map(H: HopfAlgebra, R) -> Matrix:
    """Matrix of H* -> H, f -> (f (x) id)(R21 R), in the dual basis / basis."""
    F = H.field
    R = _as_r(H, R)
    Q = hh_mul(H, np.ascontiguousarray(R.T), R)
    return Matrix.raw(F, np.ascontiguousarray(Q.T))


def is_factorizable(H: HopfAlgebra, R) -> bool:
    return drinfeld_map(H, R).rank() == H.dim


def factorizable_implies_unimodular_check(H: HopfAlgebra) -> Report:
    D, R = drinfeld_double(H)
    F = H.field
    rep = Report("factorizable-unimodular", fmt=F.format)
    M = drinfeld_map(D, R)
    rk = M.rank()
    fact = rk == D.dim
    uni = is_unimodular(D)
    duni = dual_unimodular(D)
    rep.witness("double_dim", D.dim)
    rep.witness("drinfeld_map_rank", rk)
    rep.witness("factorizable", fact)
    rep.witness("unimodular", uni)
    rep.witness("dual_unimodular", duni)
    rep.add("D(H) factorizable", fact)
    rep.add("factorizable implies unimodular", (not fact) or uni)
    lam_l = left_integrals(D)[0].coeffs
    lam_r = right_integrals(D)[0].coeffs
    two_sided = Matrix.raw(F, np.stack([lam_l, lam_r], axis=1)).rank() == 1
    rep.witness("left_integral_is_right_integral", two_sided)
    rep.add("factorizable implies left integrals are right integrals", (not fact) or two_sided)
    if not duni:
        rep.note("dual of D(H) is not unimodular: the distinguished grouplike of D(H) is alpha (x) a, "
                 "which is nontrivial whenever H is not unimodular")
    return rep


def drinfeld_element(H: HopfAlgebra, R) -> Element:
    """u = sum S(R2) R1, with its defining properties verified."""
    F = H.field
    Rt = _as_r(H, R)
    T = F.dot(H.S, Rt.T)  # [r, x] = sum_y S[r, y] R[x, y]
    u = F.tensordot(T, H.mul, ([0, 1], [0, 1]))
    u_inv = H.inverse_of(u)
    if u_inv is None:
        raise DrinfeldElementNotInvertible("Drinfeld element is not invertible")
    conj = F.dot(H.left_matrix(u), H.right_matrix(u_inv))
    if not F.equal(conj, H.S_power(2)):
        raise DrinfeldElementNotInvertible("u h u^-1 != S^2(h)")
    c = H.mult(u, F.dot(H.S, u))
    if not F.equal(H.left_matrix(c), H.right_matrix(c)):
        raise DrinfeldElementNotInvertible("u S(u) is not central")
    if not F.is_zero(F.sub(F.dot(H.counit, u), F.one)):
        raise DrinfeldElementNotInvertible("eps(u) != 1")
    return Element(H, u)


# ---------------------------------------------------------------------------
# pivots and the pivotal extension
# ---------------------------------------------------------------------------


@dataclass
class PivotCandidates:
    space: list[Element]
    invertible: Element | None

    def __iter__(self):
        return iter(self.space)

    def __len__(self):
        return len(self.space)


def pivot_candidates(H: HopfAlgebra, seed: int = 0, attempts: int = 50, *, require: bool = False) -> PivotCandidates:
    """Solutions of a x = S^2(x) a (all basis x) and one invertible representative if found."""
    F = H.field
    n = H.dim
    S2 = H.S_power(2)

    def blocks():
        for x in range(n):
            yield F.reduce(H.right_mats[x] - H.left_matrix(S2[:, x]))

    K = nullspace_stacked(F, blocks(), n)
    space = [Element(H, K[:, c].copy()) for c in range(K.shape[1])]
    inv = None
    for el in space:
        if H.inverse_of(el.coeffs) is not None:
            inv = el
            break
    if inv is None and space:
        rng = random.Random(seed)
        for _ in range(attempts):
            coeffs = [F.random(rng) for _ in space]
            v = F.zeros(n)
            for c, el in zip(coeffs, space):
                v = F.reduce(v + F.scale(c, el.coeffs))
            if H.inverse_of(v) is not None:
                inv = Element(H, v)
                break
    if inv is None and require:
        raise NoInvertibleSolutionFound("no invertible pivot found", space)
    return PivotCandidates(space, inv)


@dataclass
class PivotalExtension:
    """K = H + H t with t x t^-1 = S^2(x), t^2 = g^-1; ``pivot`` = mu a satisfies pivot^2 = g^-1."""

    K: HopfAlgebra
    base: HopfAlgebra
    g: np.ndarray
    pivot: np.ndarray
    mu: object

    @property
    def t_index(self) -> int:
        return self.base.dim


def pivotal_extension(H: HopfAlgebra, a, g=None) -> PivotalExtension:
    """Adjoin a grouplike t with t x t^-1 = S^2(x) and t^2 = g^-1.

    ``g`` defaults to the distinguished element when H is unimodular (then
    g^-1 x g = S^4(x)).  A scalar mu with (mu a)^2 = g^-1 must exist in the base
    field, otherwise :class:`ExtensionInconsistent` is raised.
    """
    F = H.field
    n = H.dim
    a = H.vec(a)
    S2 = H.S_power(2)
    a_inv = H.inverse_of(a)
    if a_inv is None:
        raise ExtensionInconsistent("pivot is not invertible")
    if not F.equal(F.dot(H.left_matrix(a), H.right_matrix(a_inv)), S2):
        raise ExtensionInconsistent("a x a^-1 != S^2(x)")
    if g is None:
        if is_unimodular(H):
            g = distinguished_element(H).coeffs
        else:
            g = H.mult(a_inv, a_inv)
    g = H.vec(g)
    g_inv = H.inverse_of(g)
    if g_inv is None or not F.equal(H.coproduct(g), F.reduce(np.multiply.outer(g, g))):
        raise ExtensionInconsistent("g must be an invertible grouplike")
    if not F.equal(F.dot(H.left_matrix(g_inv), H.right_matrix(g)), H.S_power(4)):
        raise ExtensionInconsistent("g^-1 x g != S^4(x)")
    # (mu a)^2 = g^-1  <=>  a^2 g = mu^-2 * 1
    c_vec = H.mult(H.mult(a, a), g)
    c = F.dot(H.counit, c_vec)
    if F.is_zero(c) or not F.equal(c_vec, F.scale(c, H.unit)):
        raise ExtensionInconsistent("a^2 g is not a scalar")
    mu = F.sqrt(F.inv(c))
    if mu is None:
        raise ExtensionInconsistent("mu^2 = 1/c has no solution in the base field")
    pivot = F.scale(mu, a)

    N = 2 * n
    mulK = F.zeros((N, N, N))
    # (x)(y) = xy ; (x)(y t) = xy t ; (x t)(y) = x S^2(y) t ; (x t)(y t) = x S^2(y) g^-1
    mS2 = F.tensordot(H.mul, S2, ([1], [1])).transpose(0, 2, 1)  # [i, j, k] = (e_i S^2(e_j))_k
    mS2g = F.tensordot(mS2, H.right_matrix(g_inv), ([2], [1]))
    mulK[:n, :n, :n] = H.mul
    mulK[:n, n:, n:] = H.mul
    mulK[n:, :n, n:] = mS2
    mulK[n:, n:, :n] = mS2g
    comulK = F.zeros((N, N, N))
    comulK[:n, :n, :n] = H.comul
    comulK[n:, n:, n:] = H.comul
    unitK = np.concatenate([H.unit, F.zeros(n)])
    counitK = np.concatenate([H.counit, H.counit])
    # S(x t) = t^-1 S(x) = g S^3(x) t
    SK = F.zeros((N, N))
    SK[:n, :n] = H.S
    SK[n:, n:] = F.dot(H.left_matrix(g), H.S_power(3))
    names = list(H.basis) + [f"{b}t" for b in H.basis]
    K = HopfAlgebra.unchecked(F, names, mulK, unitK, comulK, counitK, SK,
                              name=f"pivotal({H.name})" if H.name else "pivotal")
    return PivotalExtension(K, H, g, pivot, mu)


# ---------------------------------------------------------------------------
# base change
# ---------------------------------------------------------------------------


def change_basis(H: HopfAlgebra, P) -> HopfAlgebra:
    """Rewrite H in the basis f_j = sum_i P[i, j] e_i (P invertible)."""
    F = H.field
    P = H.field.array(P) if not isinstance(P, np.ndarray) else P
    Pi = inverse_array(F, P)
    mul = F.tensordot(F.tensordot(F.tensordot(P, H.mul, ([0], [0])), P, ([1], [0])), Pi, ([1], [1]))
    comul = F.tensordot(P, H.comul, ([0], [0]))  # (i, a, b) in old basis
    comul = F.tensordot(F.tensordot(comul, Pi, ([1], [1])), Pi, ([1], [1]))
    unit = F.dot(Pi, H.unit)
    counit = F.dot(H.counit, P)
    S = F.dot(Pi, F.dot(H.S, P))
    return HopfAlgebra.unchecked(F, [f"f{i}" for i in range(H.dim)], mul, unit, comul, counit, S)
