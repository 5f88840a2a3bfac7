"""Builtin Hopf algebras and the ``name:params@FIELD`` address grammar.

Addresses (FIELD defaults to Q):

* ``cyclic:n`` (aliases ``Z/n``, ``k[Z/n]``), ``sym3`` (``sym:3``, ``S3``, ``k[S3]``),
  ``dihedral:n``, ``group_algebra:<table>`` with rows separated by ``;``;
* ``sweedler``, ``taft:n:q`` (``q`` may be the literal ``q`` to pick the smallest
  primitive n-th root of unity), ``gr_uq_sl2:p:q``;
* ``double(<address>)``, ``dual(<address>)``.
"""
from __future__ import annotations

import itertools
import re
from functools import lru_cache

import numpy as np

from .exactfield import Field, FieldError, QQ, parse_field
from .hopfcore import HopfAlgebra, InvalidHopf, drinfeld_double, dual_hopf, trivial_r, validate_hopf

__all__ = [
    "BuiltinError",
    "group_algebra",
    "cyclic",
    "dihedral",
    "sym3",
    "sweedler",
    "taft",
    "gr_uq_sl2",
    "primitive_root_of_unity",
    "parse_address",
    "load_builtin",
    "double_of",
    "load_quasitriangular",
]


class BuiltinError(ValueError):
    pass


# ---------------------------------------------------------------------------
# group algebras
# ---------------------------------------------------------------------------


def group_algebra(field: Field, table, names=None, *, name: str = "group") -> HopfAlgebra:
    """k[G] from a multiplication table over element indices; the identity may be any index."""
    table = [list(map(int, row)) for row in table]
    n = len(table)
    if any(len(row) != n for row in table):
        raise BuiltinError("group table must be square")
    ident = [i for i in range(n) if table[i] == list(range(n))]
    if len(ident) != 1 or any(table[j][ident[0]] != j for j in range(n)):
        raise BuiltinError("group table has no two-sided identity")
    e = ident[0]
    for row in table:
        if sorted(row) != list(range(n)):
            raise BuiltinError("group table is not a Latin square")
    inv = [table[i].index(e) for i in range(n)]
    F = field
    mul = F.zeros((n, n, n))
    comul = F.zeros((n, n, n))
    S = F.zeros((n, n))
    for i in range(n):
        for j in range(n):
            mul[i, j, table[i][j]] = F.one
        comul[i, i, i] = F.one
        S[inv[i], i] = F.one
    unit = F.zeros(n)
    unit[e] = F.one
    counit = F.array([1] * n)
    names = names or [f"g{i}" for i in range(n)]
    return _gate(HopfAlgebra.unchecked(F, names, mul, unit, comul, counit, S, name=name))


def cyclic(field: Field, n: int) -> HopfAlgebra:
    if n < 1:
        raise BuiltinError("cyclic order must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return group_algebra(field, table, names, name=f"cyclic:{n}")


def _perm_name(p) -> str:
    seen, cycles = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        c, x = [], s
        while x not in seen:
            seen.add(x)
            c.append(x)
            x = p[x]
        cycles.append("(" + " ".join(map(str, c)) + ")")
    return "".join(cycles) or "()"


def sym3(field: Field) -> HopfAlgebra:
    perms = sorted(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    # (p q)(x) = p(q(x))
    table = [[idx[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
    return group_algebra(field, table, [_perm_name(p) for p in perms], name="sym3")


def dihedral(field: Field, n: int) -> HopfAlgebra:
    """Dihedral group of order 2n; element r^i s^j has index j*n + i."""
    if n < 1:
        raise BuiltinError("dihedral parameter must be positive")

    def mul(a, b):
        (i, j), (k, l) = a, b
        # s r^k = r^-k s
        return ((i + (k if j == 0 else -k)) % n, (j + l) % 2)

    elems = [(i, j) for j in range(2) for i in range(n)]
    idx = {x: t for t, x in enumerate(elems)}
    table = [[idx[mul(a, b)] for b in elems] for a in elems]
    names = []
    for i, j in elems:
        r = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
        s = "s" if j else ""
        names.append((r + s) or "1")
    return group_algebra(field, table, names, name=f"dihedral:{n}")


# ---------------------------------------------------------------------------
# algebras presented by generators
# ---------------------------------------------------------------------------


def _hh(F, left_mats, X, Y):
    n = X.shape[0]
    out = F.zeros((n, n))
    for a, b in np.argwhere(F.nonzero_mask(X)):
        out = F.reduce(out + F.scale(X[a, b], F.dot(F.dot(left_mats[a], Y), left_mats[b].T)))
    return out


def _from_words(F: Field, names, mul, words, gen_index, gen_coprod, gen_counit, gen_antipode, name):
    """Extend Delta, eps multiplicatively and S anti-multiplicatively from generators.

    ``words[b]`` is the list of generator labels whose product is basis element b.
    """
    n = mul.shape[0]
    left_mats = np.ascontiguousarray(mul.transpose(0, 2, 1))
    unit = F.zeros(n)
    unit[0] = F.one

    def prod(x, y):
        return F.dot(y, F.tensordot(x, mul, ([0], [0])))

    comul = F.zeros((n, n, n))
    counit = F.zeros(n)
    S = F.zeros((n, n))
    for b, word in enumerate(words):
        v = unit.copy()
        d = F.reduce(np.multiply.outer(unit, unit))
        eps = F.one
        s = unit.copy()
        for g in word:
            v = prod(v, _basis(F, n, gen_index[g]))
            d = _hh(F, left_mats, d, gen_coprod[g])
            eps = F.mul(eps, gen_counit[g])
            s = prod(gen_antipode[g], s)
        if not F.equal(v, _basis(F, n, b)):
            raise BuiltinError(f"word {word} does not produce basis element {names[b]}")
        comul[b] = d
        counit[b] = eps
        S[:, b] = s
    return HopfAlgebra.unchecked(F, names, mul, unit, comul, counit, S, name=name)


def _basis(F, n, i):
    v = F.zeros(n)
    v[i] = F.one
    return v


def primitive_root_of_unity(field: Field, n: int):
    """The smallest (in canonical order) primitive n-th root of unity, or None."""
    if field.order is None:
        cands = [1, -1] if n <= 2 else []
        for c in cands:
            if _mult_order(field, field(c), n) == n:
                return field(c)
        return None
    for c in field.elements():
        if not field.is_zero(c) and _mult_order(field, c, n) == n:
            return c
    return None


def _mult_order(F, q, bound):
    x = q
    for k in range(1, bound + 1):
        if F.is_zero(F.sub(x, F.one)):
            return k
        x = F.mul(x, q)
    return None


def taft(field: Field, n: int, q=None, *, name: str | None = None) -> HopfAlgebra:
    """Taft algebra T_n: g^n = 1, x^n = 0, g x = q x g, Delta x = x (x) 1 + g (x) x.

    Basis g^i x^j at index j*n + i (so n = 2 gives [1, g, x, gx]).
    """
    F = field
    if n < 2:
        raise BuiltinError("Taft algebras need n >= 2")
    q = primitive_root_of_unity(F, n) if q is None else F(q)
    if q is None or _mult_order(F, q, n) != n:
        raise BuiltinError(f"q must be a primitive {n}-th root of unity in {F}")
    N = n * n
    idx = lambda i, j: j * n + i  # noqa: E731
    mul = F.zeros((N, N, N))
    for (a, b), (c, d) in itertools.product(itertools.product(range(n), repeat=2), repeat=2):
        if b + d < n:
            mul[idx(a, b), idx(c, d), idx((a + c) % n, b + d)] = F.pow(q, -b * c)
    names = []
    for j in range(n):
        for i in range(n):
            gp = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            xp = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            names.append((gp + xp) or "1")
    words = [["g"] * i + ["x"] * j for j in range(n) for i in range(n)]
    g, x = idx(1, 0), idx(0, 1)
    one = idx(0, 0)
    gb, xb, ob = _basis(F, N, g), _basis(F, N, x), _basis(F, N, one)
    g_inv = _basis(F, N, idx(n - 1, 0))
    coprod = {
        "g": F.reduce(np.multiply.outer(gb, gb)),
        "x": F.reduce(np.multiply.outer(xb, ob) + np.multiply.outer(gb, xb)),
    }
    prod = lambda u, v: F.dot(v, F.tensordot(u, mul, ([0], [0])))  # noqa: E731
    antip = {"g": g_inv, "x": F.reduce(-prod(g_inv, xb))}
    counit = {"g": F.one, "x": F.zero}
    label = name or f"taft:{n}:{F.format(q)}"
    H = _from_words(F, names, mul, words, {"g": g, "x": x}, coprod, counit, antip, label)
    return _gate(H)


def sweedler(field: Field = QQ) -> HopfAlgebra:
    return taft(field, 2, -1, name="sweedler")


def gr_uq_sl2(field: Field, p: int, q=None) -> HopfAlgebra:
    """Associated graded of the small quantum group: E F = F E, E^p = F^p = 0, K^p = 1,
    K E = q^2 E K, K F = q^-2 F K, Delta E = E (x) K + 1 (x) E, Delta F = F (x) 1 + K^-1 (x) F.

    Basis E^a F^b K^c at index (a*p + b)*p + c.
    """
    F = field
    q = primitive_root_of_unity(F, p) if q is None else F(q)
    if q is None or _mult_order(F, q, p) != p:
        raise BuiltinError(f"q must be a primitive {p}-th root of unity in {F}")
    if p % 2 == 0:
        raise BuiltinError("p must be odd")
    N = p**3
    idx = lambda a, b, c: (a * p + b) * p + c  # noqa: E731
    mul = F.zeros((N, N, N))
    rng = range(p)
    for a, b, c, d, e, f in itertools.product(rng, repeat=6):
        if a + d < p and b + e < p:
            mul[idx(a, b, c), idx(d, e, f), idx(a + d, b + e, (c + f) % p)] = F.pow(q, 2 * c * d - 2 * c * e)
    names = []
    for a, b, c in itertools.product(rng, repeat=3):
        parts = [(s if k == 1 else f"{s}^{k}") for s, k in (("E", a), ("F", b), ("K", c)) if k]
        names.append("".join(parts) or "1")
    words = [["E"] * a + ["F"] * b + ["K"] * c for a, b, c in itertools.product(rng, repeat=3)]
    gi = {"E": idx(1, 0, 0), "F": idx(0, 1, 0), "K": idx(0, 0, 1)}
    Eb, Fb, Kb = (_basis(F, N, gi[s]) for s in "EFK")
    ob = _basis(F, N, 0)
    Kinv = _basis(F, N, idx(0, 0, p - 1))
    coprod = {
        "E": F.reduce(np.multiply.outer(Eb, Kb) + np.multiply.outer(ob, Eb)),
        "F": F.reduce(np.multiply.outer(Fb, ob) + np.multiply.outer(Kinv, Fb)),
        "K": F.reduce(np.multiply.outer(Kb, Kb)),
    }
    prod = lambda u, v: F.dot(v, F.tensordot(u, mul, ([0], [0])))  # noqa: E731
    antip = {"E": F.reduce(-prod(Eb, Kinv)), "F": F.reduce(-prod(Kb, Fb)), "K": Kinv}
    counit = {"E": F.zero, "F": F.zero, "K": F.one}
    H = _from_words(F, names, mul, words, gi, coprod, counit, antip, f"gr_uq_sl2:{p}:{F.format(q)}")
    return _gate(H)


def _gate(H: HopfAlgebra) -> HopfAlgebra:
    rep = validate_hopf(H)
    if not rep.passed:
        raise InvalidHopf(rep)
    return H


# ---------------------------------------------------------------------------
# addresses
# ---------------------------------------------------------------------------

_ALIASES = {
    "sym3": "sym3",
    "sym:3": "sym3",
    "s3": "sym3",
    "k[s3]": "sym3",
    "k[s₃]": "sym3",
    "sweedler": "sweedler",
}


def double_of(H: HopfAlgebra):
    """(D(H), R), computed once per Hopf algebra object."""
    return H._memo(("drinfeld_double",), lambda: drinfeld_double(H))


def load_quasitriangular(address: str, field: Field | None = None):
    """(H, R) for ``double(...)`` addresses; cocommutative builtins get R = 1 (x) 1."""
    body, F = parse_address(address, field)
    m = re.fullmatch(r"double\((.*)\)", body)
    if m:
        return double_of(load_builtin(m.group(1), F))
    H = _load(body, F)
    if F.equal(H.comul, H.comul.transpose(0, 2, 1)):
        return H, trivial_r(H)
    raise BuiltinError(f"{address!r} carries no R-matrix; use double(...)")


def _split_field(text: str) -> tuple[str, str | None]:
    depth = 0
    for pos in range(len(text) - 1, -1, -1):
        ch = text[pos]
        if ch == ")":
            depth += 1
        elif ch == "(":
            depth -= 1
        elif ch == "@" and depth == 0:
            return text[:pos], text[pos + 1 :]
    return text, None


def parse_address(text: str, field: Field | None = None) -> tuple[str, Field]:
    """Split ``name@FIELD`` and return the canonical name and the field."""
    body, ftext = _split_field(text.strip())
    if ftext is not None:
        field = parse_field(ftext)
    return body.strip(), field if field is not None else QQ


def load_builtin(address: str, field: Field | None = None) -> HopfAlgebra:
    body, F = parse_address(address, field)
    return _load(body, F)


@lru_cache(maxsize=64)
def _load(body: str, F: Field) -> HopfAlgebra:
    low = body.lower()
    m = re.fullmatch(r"(double|dual)\((.*)\)", body)
    if m:
        inner = load_builtin(m.group(2), F)
        if m.group(1) == "double":
            return double_of(inner)[0]
        return _gate(dual_hopf(inner))
    if low in _ALIASES:
        key = _ALIASES[low]
        return sym3(F) if key == "sym3" else sweedler(F)
    m = re.fullmatch(r"(?:k\[)?z/(\d+)\]?", low)
    if m:
        return cyclic(F, int(m.group(1)))
    parts = body.split(":")
    head, args = parts[0].lower(), parts[1:]
    try:
        if head == "cyclic" and len(args) == 1:
            return cyclic(F, int(args[0]))
        if head == "dihedral" and len(args) == 1:
            return dihedral(F, int(args[0]))
        if head == "sym" and args == ["3"]:
            return sym3(F)
        if head in ("group", "group_algebra") and len(args) == 1:
            table = [[int(c) for c in row.split(",")] for row in args[0].split(";")]
            return group_algebra(F, table, name=body)
        if head == "taft" and len(args) in (1, 2):
            q = None if len(args) == 1 or args[1] == "q" else F.parse(args[1])
            return taft(F, int(args[0]), q)
        if head == "gr_uq_sl2" and len(args) in (1, 2):
            q = None if len(args) == 1 or args[1] == "q" else F.parse(args[1])
            return gr_uq_sl2(F, int(args[0]), q)
    except (ValueError, FieldError) as exc:
        if isinstance(exc, (BuiltinError, InvalidHopf)):
            raise
        raise BuiltinError(f"bad parameters in {body!r}: {exc}") from exc
    raise BuiltinError(f"unknown builtin {body!r}")
