"""Exact base fields: the rationals, prime fields GF(p) and small extensions GF(p^k).

Every field object exposes two layers:

* scalar arithmetic on *raw* values (``F.add(a, b)``, ``F.inv(a)``, ...) where a raw
  value is an ``int`` in ``[0, p)`` for GF(p), an ``int`` or ``Fraction`` for Q
  (integral values are kept as ``int``), and a :class:`GFpkElement` for GF(p^k);
* numpy helpers (``F.array``, ``F.dot``, ``F.tensordot``, ``F.reduce``) that keep
  arrays in canonical form. GF(p) arrays are ``int64``; Q and GF(p^k) arrays use
  ``dtype=object``.

:class:`Scalar` wraps a raw value together with its field for the public API.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce as _fold

import numpy as np

__all__ = [
    "FieldError",
    "FieldMismatch",
    "DivisionByZero",
    "Field",
    "Rationals",
    "PrimeField",
    "ExtensionField",
    "GFpkElement",
    "Scalar",
    "QQ",
    "GF",
    "parse_field",
    "is_prime",
    "field_add",
    "field_mul",
    "field_neg",
    "field_inv",
    "sample_scalar",
]

_FLOAT_EXACT = 2**53
_INT64_SAFE = 2**63 - 1


class FieldError(ValueError):
    pass


class FieldMismatch(FieldError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the witness set is exact below 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface; see the module docstring for the raw-value conventions."""

    characteristic: int
    order: int | None
    dtype: object = object

    # -- scalar layer -------------------------------------------------
    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        raise NotImplementedError

    def add(self, a, b):
        return self.normalize(a + b)

    def sub(self, a, b):
        return self.normalize(a - b)

    def mul(self, a, b):
        return self.normalize(a * b)

    def neg(self, a):
        return self.normalize(-a)

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def normalize(self, a):
        return a

    def is_zero(self, a) -> bool:
        return a == 0

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def random(self, rng: random.Random):
        raise NotImplementedError

    def elements(self):
        raise FieldError(f"{self} is infinite")

    def format(self, a) -> str:
        return str(a)

    def parse(self, s: str):
        raise NotImplementedError

    def sqrt(self, a):
        """A square root of ``a`` in this field, or ``None``."""
        raise NotImplementedError

    # -- array layer --------------------------------------------------
    def array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        if arr.ndim == 0:
            return self._finish(np.array(self(arr.item()), dtype=object))
        flat = [self(x) for x in arr.reshape(-1)]
        out = np.empty(len(flat), dtype=object)
        out[:] = flat
        return self._finish(out.reshape(arr.shape))

    def _finish(self, arr: np.ndarray) -> np.ndarray:
        return arr

    def zeros(self, shape) -> np.ndarray:
        return self.array(np.zeros(shape, dtype=np.int64))

    def eye(self, n: int) -> np.ndarray:
        return self.array(np.eye(n, dtype=np.int64))

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr

    def nonzero_mask(self, arr: np.ndarray) -> np.ndarray:
        return np.asarray(arr != 0, dtype=bool)

    def dot(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.reduce(np.dot(a, b)) if a.shape[-1] else self.zeros(a.shape[:-1] + b.shape[1:])

    def tensordot(self, a: np.ndarray, b: np.ndarray, axes) -> np.ndarray:
        """``np.tensordot`` with exact reduction; routed through :meth:`dot`."""
        if isinstance(axes, int):
            axes_a = list(range(a.ndim - axes, a.ndim))
            axes_b = list(range(axes))
        else:
            axes_a, axes_b = (list(x) if not isinstance(x, int) else [x] for x in axes)
        free_a = [i for i in range(a.ndim) if i not in axes_a]
        free_b = [i for i in range(b.ndim) if i not in axes_b]
        k = int(np.prod([a.shape[i] for i in axes_a], dtype=np.int64))
        aa = a.transpose(free_a + axes_a).reshape(-1, k)
        bb = b.transpose(axes_b + free_b).reshape(k, -1)
        out = self.dot(aa, bb)
        return out.reshape([a.shape[i] for i in free_a] + [b.shape[i] for i in free_b])

    def scale(self, c, arr: np.ndarray) -> np.ndarray:
        c = c.value if isinstance(c, Scalar) else c
        return self.reduce(arr * c)

    def inv_array(self, arr: np.ndarray) -> np.ndarray:
        out = np.empty(arr.shape, dtype=object)
        for idx, x in np.ndenumerate(arr):
            out[idx] = self.inv(x)
        return self._finish(out)

    def equal(self, a: np.ndarray, b: np.ndarray) -> bool:
        return a.shape == b.shape and not self.nonzero_mask(self.reduce(a - b)).any()


# ---------------------------------------------------------------------------
# Q
# ---------------------------------------------------------------------------


def _qnorm(x):
    if type(x) is Fraction:
        return x._numerator if x._denominator == 1 else x
    return x


_qnorm_vec = np.frompyfunc(_qnorm, 1, 1)


class Rationals(Field):
    characteristic = 0
    order = None

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __call__(self, x):
        if isinstance(x, Scalar):
            return _unwrap(self, x)
        if isinstance(x, (bool, np.bool_)):
            return int(x)
        if isinstance(x, (int, np.integer)):
            return int(x)
        if isinstance(x, Fraction):
            return _qnorm(x)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise FieldError("floating point values are not exact")
        raise FieldError(f"cannot coerce {x!r} into Q")

    def normalize(self, a):
        return _qnorm(a)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return _qnorm(Fraction(1) / a)

    def random(self, rng):
        return rng.randint(-10, 10)

    def format(self, a) -> str:
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def parse(self, s: str):
        return _qnorm(Fraction(s.strip()))

    def sqrt(self, a):
        from math import isqrt

        a = Fraction(a)
        if a < 0:
            return None
        n, d = isqrt(a.numerator), isqrt(a.denominator)
        if n * n == a.numerator and d * d == a.denominator:
            return _qnorm(Fraction(n, d))
        return None

    def reduce(self, arr):
        if not isinstance(arr, np.ndarray):
            return self(arr) if not isinstance(arr, Fraction) else _qnorm(arr)
        if arr.dtype != object:
            arr = arr.astype(object)
        if arr.size == 0:
            return arr
        return np.asarray(_qnorm_vec(arr), dtype=object).reshape(arr.shape)


# ---------------------------------------------------------------------------
# GF(p)
# ---------------------------------------------------------------------------


class PrimeField(Field):
    def __init__(self, p: int):
        p = int(p)
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p >= 2**31:
            raise FieldError("prime fields are limited to p < 2^31")
        self.p = p
        self.characteristic = p
        self.order = p
        self.dtype = np.int64

    def __repr__(self):
        return f"GF{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __call__(self, x):
        if isinstance(x, Scalar):
            return _unwrap(self, x)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        if isinstance(x, (int, np.integer, bool, np.bool_)):
            return int(x) % self.p
        raise FieldError(f"cannot coerce {x!r} into {self}")

    def normalize(self, a):
        return int(a) % self.p

    def is_zero(self, a) -> bool:
        return int(a) % self.p == 0

    def inv(self, a):
        a = int(a) % self.p
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        return pow(a, -1, self.p)

    def random(self, rng):
        return rng.randrange(self.p)

    def elements(self):
        return list(range(self.p))

    def parse(self, s: str):
        return int(s.strip()) % self.p

    def sqrt(self, a):
        from .exactla import Polynomial

        a = int(a) % self.p
        if a == 0 or self.p == 2:
            return a
        if pow(a, (self.p - 1) // 2, self.p) != 1:
            return None
        roots = Polynomial(self, [self.neg(a), 0, 1]).roots()
        return min(roots)

    # arrays are int64 in [0, p)
    def array(self, data):
        arr = np.array(data, dtype=object)
        flat = [self(x) for x in arr.reshape(-1)]
        return np.array(flat, dtype=np.int64).reshape(arr.shape)

    def zeros(self, shape):
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n):
        return np.eye(n, dtype=np.int64)

    def _finish(self, arr):
        return np.asarray(arr, dtype=np.int64)

    def reduce(self, arr):
        if not isinstance(arr, np.ndarray):
            return int(arr) % self.p
        return np.mod(np.asarray(arr, dtype=np.int64), self.p)

    def scale(self, c, arr):
        c = c.value if isinstance(c, Scalar) else c
        return np.mod(np.asarray(arr, dtype=np.int64) * (c % self.p), self.p)

    def dot(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        k = a.shape[-1]
        if k == 0:
            return np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
        bound = (self.p - 1) ** 2
        if bound * k < _FLOAT_EXACT:
            out = np.dot(a.astype(np.float64), b.astype(np.float64))
            return np.mod(np.rint(out).astype(np.int64), self.p)
        chunk = max(1, _INT64_SAFE // max(bound, 1) - 1)
        out = np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
        for s in range(0, k, chunk):
            part = np.dot(a[..., s : s + chunk], b[s : s + chunk])
            out = np.mod(out + np.mod(part, self.p), self.p)
        return out

    def inv_array(self, arr):
        return np.vectorize(self.inv, otypes=[np.int64])(arr)


# ---------------------------------------------------------------------------
# GF(p^k)
# ---------------------------------------------------------------------------


class GFpkElement:
    """Element of GF(p^k) as a coefficient tuple (c0, ..., c_{k-1}) in the power basis."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "ExtensionField", coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def _lift(self, other):
        if isinstance(other, GFpkElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, np.integer)):
            return self.field(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return GFpkElement(self.field, ((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return GFpkElement(self.field, ((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field._mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * self.field.inv(other)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.field.p, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return self.field.format(self)


class ExtensionField(Field):
    """GF(p^k) = GF(p)[t]/(minpoly); ``minpoly`` is ascending and monic, length k+1."""

    def __init__(self, p: int, minpoly):
        from .exactla import Polynomial

        self.base = PrimeField(p)
        self.p = self.base.p
        minpoly = [int(c) % self.p for c in minpoly]
        self.degree = len(minpoly) - 1
        if self.degree < 2:
            raise FieldError("extension degree must be at least 2")
        if minpoly[-1] != 1:
            raise FieldError("minimal polynomial must be monic")
        self.minpoly = tuple(minpoly)
        self.characteristic = self.p
        self.order = self.p**self.degree
        if not Polynomial(self.base, list(self.minpoly)).is_irreducible():
            raise FieldError(f"{minpoly} is reducible over GF({p})")

    def __repr__(self):
        return f"GF{self.p}^{self.degree}:" + ",".join(map(str, self.minpoly))

    def __eq__(self, other):
        return isinstance(other, ExtensionField) and (other.p, other.minpoly) == (self.p, self.minpoly)

    def __hash__(self):
        return hash(("GFpk", self.p, self.minpoly))

    def __call__(self, x):
        if isinstance(x, Scalar):
            return _unwrap(self, x)
        if isinstance(x, GFpkElement):
            if x.field != self:
                raise FieldMismatch(f"{x.field} vs {self}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (int, np.integer, bool, np.bool_)):
            return GFpkElement(self, (int(x) % self.p,) + (0,) * (self.degree - 1))
        if isinstance(x, (tuple, list)):
            if len(x) != self.degree:
                raise FieldError(f"expected {self.degree} coefficients")
            return GFpkElement(self, (int(c) % self.p for c in x))
        if isinstance(x, Fraction):
            return self(x.numerator) / self(x.denominator)
        raise FieldError(f"cannot coerce {x!r} into {self}")

    def gen(self) -> GFpkElement:
        return self((0, 1) + (0,) * (self.degree - 2))

    def _mul(self, a: GFpkElement, b: GFpkElement) -> GFpkElement:
        p, k = self.p, self.degree
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    prod[i + j] += x * y
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d] % p
            if c:
                for j in range(k):
                    prod[d - k + j] -= c * self.minpoly[j]
            prod[d] = 0
        return GFpkElement(self, (c % p for c in prod[:k]))

    def inv(self, a):
        a = self(a)
        if not a:
            raise DivisionByZero(f"inverse of 0 in {self}")
        return self.pow(a, self.order - 2)

    def pow(self, a, e):
        a = self(a)
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = self.one, a
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def mul(self, a, b):
        return self(a) * self(b)

    def add(self, a, b):
        return self(a) + self(b)

    def sub(self, a, b):
        return self(a) - self(b)

    def neg(self, a):
        return -self(a)

    def is_zero(self, a):
        return not self(a)

    def random(self, rng):
        return self(tuple(rng.randrange(self.p) for _ in range(self.degree)))

    def elements(self):
        out = []
        for n in range(self.order):
            coeffs = []
            for _ in range(self.degree):
                coeffs.append(n % self.p)
                n //= self.p
            out.append(self(tuple(coeffs)))
        return out

    def format(self, a) -> str:
        return ",".join(str(c) for c in self(a).coeffs)

    def parse(self, s: str):
        parts = [c for c in s.split(",") if c.strip()]
        if len(parts) == 1:
            return self(int(parts[0]))
        return self(tuple(int(c) for c in parts))

    def sqrt(self, a):
        from .exactla import Polynomial

        a = self(a)
        if not a:
            return a
        roots = Polynomial(self, [-a, 0, 1]).roots()
        return roots[0] if roots else None

    def reduce(self, arr):
        if not isinstance(arr, np.ndarray):
            return self(arr)
        if arr.dtype != object:
            return self.array(arr)
        return arr

    def nonzero_mask(self, arr):
        return np.array([bool(x) for x in np.asarray(arr, dtype=object).reshape(-1)], dtype=bool).reshape(
            np.shape(arr)
        )

    def dot(self, a, b):
        if a.shape[-1] == 0:
            return self.zeros(a.shape[:-1] + b.shape[1:])
        return np.dot(a, b)


QQ = Rationals()


def GF(p: int, minpoly=None) -> Field:
    """``GF(7)`` or ``GF(2, [1, 1, 1])`` for GF(4) = GF(2)[t]/(t^2+t+1)."""
    if minpoly is None:
        return PrimeField(p)
    return ExtensionField(p, minpoly)


def parse_field(text: str) -> Field:
    """Parse ``Q``, ``GF7`` or ``GF2^2:1,1,1`` (ascending monic minimal polynomial)."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    if not text.startswith("GF"):
        raise FieldError(f"unknown field {text!r}")
    body = text[2:]
    if "^" in body:
        p_part, rest = body.split("^", 1)
        k_part, _, poly = rest.partition(":")
        if not poly:
            raise FieldError("extension fields need an explicit minimal polynomial")
        coeffs = [int(c) for c in poly.split(",")]
        field = ExtensionField(int(p_part), coeffs)
        if field.degree != int(k_part):
            raise FieldError("degree does not match minimal polynomial")
        return field
    return PrimeField(int(body))


# ---------------------------------------------------------------------------
# public scalar API
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Scalar:
    field: Field
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.field(self.value))

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inverse(self):
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field(other)
        except FieldError:
            return False

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self.field!r}, {self})"


def _unwrap(field: Field, s: Scalar):
    if s.field != field:
        raise FieldMismatch(f"{s.field} vs {field}")
    return s.value


def _check(a: Scalar, b: Scalar):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")


def field_add(a: Scalar, b: Scalar) -> Scalar:
    _check(a, b)
    return a + b


def field_mul(a: Scalar, b: Scalar) -> Scalar:
    _check(a, b)
    return a * b


def field_neg(a: Scalar) -> Scalar:
    return -a


def field_inv(a: Scalar) -> Scalar:
    return a.inverse()


def sample_scalar(field: Field, rng_seed: int) -> Scalar:
    """Deterministic pseudo-random element; over Q an integer in [-10, 10]."""
    return Scalar(field, field.random(random.Random(rng_seed)))


def product(field: Field, values):
    return _fold(field.mul, values, field.one)
