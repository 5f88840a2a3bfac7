"""Dense exact linear algebra, sparse 3-tensors and univariate polynomials.

Tensor index convention (used everywhere): the basis vector e_i (x) f_j of V (x) W
has index ``i * dim(W) + j``, which is exactly what :func:`kron` produces.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd as igcd, isqrt

import numpy as np

from .exactfield import Field, FieldError, FieldMismatch, PrimeField, ExtensionField, Rationals

__all__ = [
    "NoSolution",
    "ShapeMismatch",
    "UnsupportedField",
    "Matrix",
    "SparseTensor3",
    "Polynomial",
    "rref",
    "rank",
    "kernel_basis",
    "solve",
    "kron",
    "inverse",
    "minimal_polynomial",
    "factor_over_prime_field",
    "rational_partial_factor",
    "rref_array",
    "nullspace_array",
    "nullspace_stacked",
    "rowspace_array",
]


class NoSolution(ArithmeticError):
    pass


class ShapeMismatch(ValueError):
    pass


class UnsupportedField(FieldError):
    pass


# ---------------------------------------------------------------------------
# raw ndarray routines
# ---------------------------------------------------------------------------


def rref_array(F: Field, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of a 2-D array. Pivot = first nonzero entry."""
    a = F.reduce(np.array(a, copy=True))
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(F.nonzero_mask(a[r:, c]))
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = F.scale(F.inv(a[r, c]), a[r])
        col_mask = F.nonzero_mask(a[:, c])
        col_mask[r] = False
        others = np.flatnonzero(col_mask)
        if others.size:
            a[others] = F.reduce(a[others] - F.reduce(np.outer(a[others, c], a[r])))
        pivots.append(c)
        r += 1
    return a, pivots


def rowspace_array(F: Field, a: np.ndarray) -> np.ndarray:
    """Nonzero rows of the rref: a canonical basis of the row space."""
    red, piv = rref_array(F, a)
    return red[: len(piv)]


def _nullspace_from_rref(F: Field, red: np.ndarray, pivots: list[int], ncols: int) -> np.ndarray:
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = F.zeros((ncols, len(free)))
    for k, c in enumerate(free):
        basis[c, k] = F.one
        for r, pc in enumerate(pivots):
            basis[pc, k] = F.neg(red[r, c])
    return F.reduce(basis)


def nullspace_array(F: Field, a: np.ndarray) -> np.ndarray:
    """Columns spanning {x : a x = 0}, in the canonical free-variable basis."""
    a = np.asarray(a)
    red, piv = rref_array(F, a)
    return _nullspace_from_rref(F, red, piv, a.shape[1])


def nullspace_stacked(F: Field, blocks, ncols: int) -> np.ndarray:
    """Null space of a tall system given as an iterable of row blocks.

    Only the running row-reduced basis is kept, so the full system never has to
    be materialised.
    """
    basis = F.zeros((0, ncols))
    for block in blocks:
        block = np.asarray(block).reshape(-1, ncols)
        if block.shape[0] == 0:
            continue
        basis = rowspace_array(F, np.concatenate([basis, block]))
        if basis.shape[0] == ncols:
            break
    red, piv = rref_array(F, basis) if basis.shape[0] else (basis, [])
    return _nullspace_from_rref(F, red, piv, ncols)


def solve_array(F: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    b = np.asarray(b)
    vec = b.ndim == 1
    if vec:
        b = b.reshape(-1, 1)
    if a.shape[0] != b.shape[0]:
        raise ShapeMismatch(f"{a.shape} vs {b.shape}")
    n = a.shape[1]
    red, piv = rref_array(F, np.concatenate([a, b], axis=1))
    if any(p >= n for p in piv):
        raise NoSolution("inconsistent linear system")
    x = F.zeros((n, b.shape[1]))
    for r, c in enumerate(piv):
        x[c] = red[r, n:]
    return x[:, 0] if vec else x


def inverse_array(F: Field, a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ShapeMismatch("inverse of a non-square matrix")
    red, piv = rref_array(F, np.concatenate([a, F.eye(n)], axis=1))
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return red[:, n:]


# ---------------------------------------------------------------------------
# Matrix
# ---------------------------------------------------------------------------


class Matrix:
    """Dense exact matrix over a :class:`~hopfkit.exactfield.Field`."""

    __slots__ = ("field", "a")

    def __init__(self, field: Field, data, *, canonical: bool = False):
        self.field = field
        if canonical:
            self.a = data
        else:
            arr = field.array(data)
            if arr.ndim == 1:
                arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
            self.a = arr
        if self.a.ndim != 2:
            raise ShapeMismatch("matrices are 2-dimensional")

    @classmethod
    def raw(cls, field: Field, arr: np.ndarray) -> "Matrix":
        return cls(field, arr, canonical=True)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls.raw(field, field.zeros((rows, cols)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls.raw(field, field.eye(n))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    def _same(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        return Matrix.raw(self.field, self.field.dot(self.a, other.a))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        return Matrix.raw(self.field, self.field.reduce(self.a + other.a))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} - {other.shape}")
        return Matrix.raw(self.field, self.field.reduce(self.a - other.a))

    def __neg__(self) -> "Matrix":
        return Matrix.raw(self.field, self.field.reduce(-self.a))

    def __mul__(self, c) -> "Matrix":
        return Matrix.raw(self.field, self.field.scale(self.field(c), self.a))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix) or other.field != self.field:
            return False
        return self.field.equal(self.a, other.a)

    def __hash__(self):
        return hash((self.field, self.shape, tuple(self.field.format(x) for x in self.a.reshape(-1))))

    def __getitem__(self, idx):
        out = self.a[idx]
        if isinstance(out, np.ndarray) and out.ndim == 2:
            return Matrix.raw(self.field, out)
        return out

    @property
    def T(self) -> "Matrix":
        return Matrix.raw(self.field, np.ascontiguousarray(self.a.T))

    def trace(self):
        F = self.field
        t = F.zero
        for i in range(min(self.shape)):
            t = F.add(t, self.a[i, i])
        return t

    def is_zero(self) -> bool:
        return not self.field.nonzero_mask(self.a).any()

    def inverse(self) -> "Matrix":
        return Matrix.raw(self.field, inverse_array(self.field, self.a))

    def rank(self) -> int:
        return len(rref_array(self.field, self.a)[1])

    def column(self, j: int) -> np.ndarray:
        return self.a[:, j].copy()

    def tolist(self) -> list[list[str]]:
        return [[self.field.format(x) for x in row] for row in self.a]

    def __repr__(self):
        body = "; ".join(" ".join(r) for r in self.tolist())
        return f"Matrix<{self.field}>[{body}]"


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    red, piv = rref_array(M.field, M.a)
    return Matrix.raw(M.field, red), piv


def rank(M: Matrix) -> int:
    return M.rank()


def kernel_basis(M: Matrix) -> Matrix:
    """Columns spanning the null space; ``M @ K == 0`` and ``K.cols == M.cols - rank(M)``."""
    return Matrix.raw(M.field, nullspace_array(M.field, M.a))


def solve(M: Matrix, b: Matrix) -> Matrix:
    """Particular solution of ``M x = b``; raises :class:`NoSolution`."""
    M._same(b)
    if M.rows != b.rows:
        raise ShapeMismatch(f"{M.shape} vs {b.shape}")
    return Matrix.raw(M.field, solve_array(M.field, M.a, b.a))


def inverse(M: Matrix) -> Matrix:
    return M.inverse()


def kron(A: Matrix, B: Matrix) -> Matrix:
    A._same(B)
    F = A.field
    return Matrix.raw(F, F.reduce(np.kron(A.a, B.a)))


# ---------------------------------------------------------------------------
# sparse 3-tensors (structure constants on the wire)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SparseTensor3:
    field: Field
    dims: tuple[int, int, int]
    entries: tuple = dc_field(default=())

    def __post_init__(self):
        seen = {}
        for i, j, k, v in self.entries:
            if not (0 <= i < self.dims[0] and 0 <= j < self.dims[1] and 0 <= k < self.dims[2]):
                raise IndexError(f"index {(i, j, k)} out of range {self.dims}")
            v = self.field(v)
            if (i, j, k) in seen:
                v = self.field.add(seen[(i, j, k)], v)
            seen[(i, j, k)] = v
        clean = tuple(sorted((i, j, k, v) for (i, j, k), v in seen.items() if not self.field.is_zero(v)))
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_dense(cls, field: Field, arr: np.ndarray) -> "SparseTensor3":
        idx = np.argwhere(field.nonzero_mask(arr))
        return cls(field, tuple(arr.shape), tuple((int(i), int(j), int(k), arr[i, j, k]) for i, j, k in idx))

    def to_dense(self) -> np.ndarray:
        out = self.field.zeros(self.dims)
        for i, j, k, v in self.entries:
            out[i, j, k] = v
        return out

    def __len__(self):
        return len(self.entries)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Univariate polynomial with ascending coefficients; no trailing zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        self.field = field
        cs = [field(c) for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    # construction helpers
    @classmethod
    def x(cls, field: Field) -> "Polynomial":
        return cls(field, [0, 1])

    @classmethod
    def constant(cls, field: Field, c) -> "Polynomial":
        return cls(field, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        inv = self.field.inv(self.lead)
        return Polynomial(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        return Polynomial(self.field, [other])

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        return self == self._coerce(other)

    def __hash__(self):
        return hash((self.field, tuple(self.field.format(c) for c in self.coeffs)))

    def __add__(self, other):
        other = self._coerce(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (F.zero,) * (n - len(self.coeffs))
        b = other.coeffs + (F.zero,) * (n - len(other.coeffs))
        return Polynomial(F, [F.add(x, y) for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        F = self.field
        if not self.coeffs or not other.coeffs:
            return Polynomial(F, [])
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if F.is_zero(x):
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Polynomial(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = other.degree
        inv = F.inv(other.lead)
        quot = [F.zero] * max(0, len(rem) - dq)
        for d in range(len(rem) - 1, dq - 1, -1):
            c = rem[d]
            if F.is_zero(c):
                continue
            c = F.mul(c, inv)
            quot[d - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[d - dq + j] = F.sub(rem[d - dq + j], F.mul(c, b))
        return Polynomial(F, quot), Polynomial(F, rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def eval_matrix(self, M: Matrix) -> Matrix:
        """Horner evaluation at a square matrix."""
        F = self.field
        n = M.rows
        acc = F.zeros((n, n))
        eye = F.eye(n)
        for c in reversed(self.coeffs):
            acc = F.reduce(F.dot(acc, M.a) + F.scale(c, eye))
        return Matrix.raw(F, acc)

    def derivative(self) -> "Polynomial":
        F = self.field
        return Polynomial(F, [F.mul(F(i), c) for i, c in enumerate(self.coeffs)][1:])

    def gcd(self, other) -> "Polynomial":
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other):
        """(g, s, t) with s*self + t*other = g monic."""
        F = self.field
        r0, r1 = self, self._coerce(other)
        s0, s1 = Polynomial(F, [1]), Polynomial(F, [])
        t0, t1 = Polynomial(F, []), Polynomial(F, [1])
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        inv = F.inv(r0.lead)
        return r0 * inv, s0 * inv, t0 * inv

    def powmod(self, e: int, modulus: "Polynomial") -> "Polynomial":
        result = Polynomial(self.field, [1]) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def __repr__(self):
        F = self.field
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if F.is_zero(c):
                continue
            s = F.format(c)
            if "," in s:
                s = f"({s})"
            if i == 0:
                terms.append(s)
            else:
                mon = "x" if i == 1 else f"x^{i}"
                terms.append(mon if s == "1" else f"{s}*{mon}")
        return " + ".join(reversed(terms))

    # -- factorisation ---------------------------------------------------
    def factor(self, seed: int = 0) -> list[tuple["Polynomial", int]]:
        """Monic irreducible factors with multiplicities (finite fields only)."""
        return factor_over_prime_field(self, seed=seed)

    def is_irreducible(self) -> bool:
        if self.degree < 1:
            return False
        if isinstance(self.field, Rationals):
            raise UnsupportedField("irreducibility over Q is not decided")
        facs = factor_over_prime_field(self)
        return len(facs) == 1 and facs[0][1] == 1

    def roots(self) -> list:
        if self.degree < 1:
            return []
        if isinstance(self.field, Rationals):
            found, _ = rational_partial_factor(self)
        else:
            found = factor_over_prime_field(self)
        return [self.field.neg(f.coeffs[0]) for f, _ in found if f.degree == 1]


def _sort_key(f: Polynomial):
    return (f.degree, tuple(f.field.format(c) for c in reversed(f.coeffs)))


def _pth_root(f: Polynomial) -> Polynomial:
    F = f.field
    p = F.characteristic
    k = getattr(F, "degree", 1)
    coeffs = []
    for i in range(0, len(f.coeffs), p):
        c = f.coeffs[i]
        coeffs.append(F.pow(c, p ** (k - 1)) if k > 1 else c)
    return Polynomial(F, coeffs)


def _squarefree(f: Polynomial) -> list[tuple[Polynomial, int]]:
    F = f.field
    p = F.characteristic
    one = Polynomial(F, [1])
    out = []
    fp = f.derivative()
    if fp.is_zero():
        return [(g, m * p) for g, m in _squarefree(_pth_root(f))]
    c = f.gcd(fp)
    w = f // c
    i = 1
    while w != one:
        y = w.gcd(c)
        z = w // y
        if z != one:
            out.append((z.monic(), i))
        i += 1
        w, c = y, c // y
    if c != one and c.degree > 0:
        out.extend((g, m * p) for g, m in _squarefree(_pth_root(c.monic())))
    return out


def _distinct_degree(f: Polynomial) -> list[tuple[Polynomial, int]]:
    F = f.field
    q = F.order
    x = Polynomial.x(F)
    out = []
    h = x % f
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(q, f)
        g = (h - x).gcd(f)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f.monic(), f.degree))
    return out


def _equal_degree(f: Polynomial, d: int, rng: random.Random) -> list[Polynomial]:
    if f.degree == d:
        return [f.monic()]
    F = f.field
    q = F.order
    while True:
        a = Polynomial(F, [F.random(rng) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        if q % 2:
            b = a.powmod((q**d - 1) // 2, f) - 1
        else:
            m = (q.bit_length() - 1) * d
            t = a % f
            b = t
            for _ in range(m - 1):
                t = (t * t) % f
                b = b + t
        g = b.gcd(f)
        if 0 < g.degree < f.degree:
            return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def factor_over_prime_field(p: Polynomial, seed: int = 0) -> list[tuple[Polynomial, int]]:
    """Square-free, distinct-degree and Cantor-Zassenhaus factorisation over GF(q)."""
    F = p.field
    if not isinstance(F, (PrimeField, ExtensionField)):
        raise UnsupportedField("factor_over_prime_field needs a finite field; see rational_partial_factor")
    if p.degree < 1:
        return []
    rng = random.Random(seed)
    out: dict[Polynomial, int] = {}
    for g, m in _squarefree(p.monic()):
        for h, d in _distinct_degree(g):
            for irr in _equal_degree(h, d, rng):
                out[irr] = out.get(irr, 0) + m
    return sorted(out.items(), key=lambda fm: _sort_key(fm[0]))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_partial_factor(p: Polynomial) -> tuple[list[tuple[Polynomial, int]], Polynomial]:
    """Split off every rational linear factor; the cofactor is returned monic and unfactored."""
    F = p.field
    if not isinstance(F, Rationals):
        raise UnsupportedField("rational_partial_factor works over Q only")
    found: dict[Polynomial, int] = {}
    rest = p.monic()
    x = Polynomial.x(F)
    while rest.degree >= 1 and F.is_zero(rest.coeffs[0]):
        found[x] = found.get(x, 0) + 1
        rest = rest // x
    while rest.degree >= 1:
        cs = [Fraction(c) for c in rest.coeffs]
        den = 1
        for c in cs:
            den = den * c.denominator // igcd(den, c.denominator)
        ints = [int(c * den) for c in cs]
        root = None
        for num in _divisors(ints[0]):
            for dd in _divisors(ints[-1]):
                for cand in (Fraction(num, dd), Fraction(-num, dd)):
                    if rest(F(cand)) == 0:
                        root = F(cand)
                        break
                if root is not None:
                    break
            if root is not None:
                break
        if root is None:
            break
        lin = Polynomial(F, [F.neg(root), 1])
        while rest.degree >= 1 and rest(root) == 0:
            found[lin] = found.get(lin, 0) + 1
            rest = rest // lin
    return sorted(found.items(), key=lambda fm: _sort_key(fm[0])), rest


def minimal_polynomial(M: Matrix) -> Polynomial:
    """Least-degree monic p with p(M) = 0, from the first dependency among I, M, M^2, ..."""
    F = M.field
    n = M.rows
    if M.rows != M.cols:
        raise ShapeMismatch("minimal polynomial of a non-square matrix")
    powers = [F.eye(n)]
    for k in range(n + 1):
        if k > 0:
            powers.append(F.dot(powers[-1], M.a))
        cols = np.stack([pw.reshape(-1) for pw in powers], axis=1)
        red, piv = rref_array(F, cols)
        if len(piv) < k + 1:
            coeffs = [F.zero] * (k + 1)
            for r, c in enumerate(piv):
                coeffs[c] = F.neg(red[r, k])
            coeffs[k] = F.one
            return Polynomial(F, coeffs)
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover
