"""UTF-8 JSON documents for Hopf algebras, R-matrices, representations and algebras.

Scalars are strings in the field's canonical format; structure tensors are
sparse ``[i, j, k, "scalar"]`` lists with zeros omitted.  A Hopf document
without an ``antipode`` entry gets its antipode computed on load.
"""
from __future__ import annotations

import json
import os
from pathlib import Path

import numpy as np

from .exactfield import Field, parse_field
from .hopfcore import HopfAlgebra, RMatrix

__all__ = [
    "hopf_to_dict",
    "hopf_from_dict",
    "dump_hopf",
    "load_hopf",
    "double_to_dict",
    "load_double",
    "representation_to_dict",
    "representation_from_dict",
    "algebra_to_dict",
    "algebra_from_dict",
    "load_target",
    "dumps",
]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def _sparse3(F: Field, T: np.ndarray) -> list:
    return [[int(i), int(j), int(k), F.format(T[i, j, k])] for i, j, k in np.argwhere(F.nonzero_mask(T))]


def _sparse2(F: Field, T: np.ndarray) -> list:
    return [[int(i), int(j), F.format(T[i, j])] for i, j in np.argwhere(F.nonzero_mask(T))]


def _vec(F: Field, v: np.ndarray) -> list[str]:
    return [F.format(x) for x in v]


def _dense3(F: Field, n: int, triples) -> np.ndarray:
    T = F.zeros((n, n, n))
    for i, j, k, s in triples:
        T[i, j, k] = F.parse(str(s))
    return T


def _parse_vec(F: Field, items) -> np.ndarray:
    return F.array([F.parse(str(s)) for s in items])


def _parse_mat(F: Field, rows) -> np.ndarray:
    return F.array([[F.parse(str(s)) for s in row] for row in rows])


def hopf_to_dict(H: HopfAlgebra, *, antipode: bool = True) -> dict:
    F = H.field
    out = {
        "field": repr(F),
        "dim": H.dim,
        "basis": list(H.basis),
        "mul": _sparse3(F, H.mul),
        "unit": _vec(F, H.unit),
        "comul": _sparse3(F, H.comul),
        "counit": _vec(F, H.counit),
    }
    if H.name:
        out["name"] = H.name
    if antipode:
        out["antipode"] = [[F.format(x) for x in row] for row in H.S]
    return out


def hopf_from_dict(doc: dict, *, check: bool = True) -> HopfAlgebra:
    F = parse_field(str(doc["field"]))
    n = int(doc["dim"])
    mul = _dense3(F, n, doc["mul"])
    comul = _dense3(F, n, doc["comul"])
    unit = _parse_vec(F, doc["unit"])
    counit = _parse_vec(F, doc["counit"])
    S = _parse_mat(F, doc["antipode"]) if doc.get("antipode") is not None else None
    cls_init = HopfAlgebra if check else HopfAlgebra.unchecked
    return cls_init(F, doc.get("basis"), mul, unit, comul, counit, S, name=doc.get("name", ""))


def dump_hopf(H: HopfAlgebra, path) -> None:
    Path(path).write_text(dumps(hopf_to_dict(H)) + "\n", encoding="utf-8")


def double_to_dict(D: HopfAlgebra, R: RMatrix) -> dict:
    return {"hopf": hopf_to_dict(D), "R": _sparse2(D.field, R.tensor)}


def load_double(doc: dict) -> tuple[HopfAlgebra, RMatrix]:
    D = hopf_from_dict(doc["hopf"])
    F = D.field
    T = F.zeros((D.dim, D.dim))
    for i, j, s in doc["R"]:
        T[i, j] = F.parse(str(s))
    return D, RMatrix(D, T)


def _read_json(path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def _is_path(target: str) -> bool:
    return target.endswith(".json") or os.path.exists(target)


def load_hopf(target: str) -> HopfAlgebra:
    """A builtin address or a path to a Hopf (or double) JSON document."""
    from .builtins import load_builtin

    if _is_path(target):
        doc = _read_json(target)
        if "R" in doc and "hopf" in doc:
            return load_double(doc)[0]
        return hopf_from_dict(doc)
    return load_builtin(target)


def load_target(target: str):
    """(H, R or None) from a builtin address or a JSON file."""
    from .builtins import BuiltinError, load_quasitriangular

    if _is_path(target):
        doc = _read_json(target)
        if "R" in doc and "hopf" in doc:
            return load_double(doc)
        return hopf_from_dict(doc), None
    try:
        return load_quasitriangular(target)
    except BuiltinError:
        from .builtins import load_builtin

        return load_builtin(target), None


def representation_to_dict(V, hopf: str) -> dict:
    F = V.field
    return {"hopf": hopf, "dim": V.dim, "matrices": [[[F.format(x) for x in row] for row in M] for M in V.mats]}


def representation_from_dict(doc: dict, H: HopfAlgebra | None = None):
    from .repkit import Representation

    H = H or load_hopf(str(doc["hopf"]))
    F = H.field
    mats = F.array([[[F.parse(str(s)) for s in row] for row in M] for M in doc["matrices"]])
    if mats.shape[1] != int(doc["dim"]):
        raise ValueError("representation dimension does not match its matrices")
    return Representation(H, mats)


def algebra_to_dict(B) -> dict:
    F = B.field
    return {"field": repr(F), "dim": B.dim, "basis": list(B.basis), "mul": _sparse3(F, B.mul), "unit": _vec(F, B.unit)}


def algebra_from_dict(doc: dict):
    from .modalg import FDAlgebra

    F = parse_field(str(doc["field"]))
    n = int(doc["dim"])
    return FDAlgebra(F, _dense3(F, n, doc["mul"]), _parse_vec(F, doc["unit"]), basis=doc.get("basis"),
                     name=doc.get("name", ""))
