from __future__ import annotations

import json

import pytest

from hopfkit import hopfcore as hc
from hopfkit import repkit as rk
from hopfkit.builtins import load_builtin, load_quasitriangular
from hopfkit.modalg import truncated_polynomial
from hopfkit.exactfield import QQ
from hopfkit.serialize import (
    algebra_from_dict,
    algebra_to_dict,
    double_to_dict,
    dump_hopf,
    dumps,
    hopf_from_dict,
    hopf_to_dict,
    load_double,
    load_hopf,
    load_target,
    representation_from_dict,
    representation_to_dict,
)


@pytest.mark.parametrize("address", ["sweedler@Q", "taft:3:2@GF7", "cyclic:3@GF2^2:1,1,1", "sym3@GF7"])
def test_hopf_roundtrip(address):
    H = load_builtin(address)
    doc = json.loads(dumps(hopf_to_dict(H)))
    H2 = hopf_from_dict(doc)
    assert H2.structure_equal(H)
    assert H2.basis == H.basis and H2.name == H.name


def test_scalars_are_canonical_strings():
    doc = hopf_to_dict(load_builtin("sweedler@Q"))
    assert doc["field"] == "Q"
    assert all(isinstance(t[3], str) for t in doc["mul"])
    assert "-1" in {t[3] for t in doc["mul"]}


def test_missing_antipode_is_computed(tmp_path):
    H = load_builtin("taft:3:2@GF7")
    doc = hopf_to_dict(H, antipode=False)
    assert "antipode" not in doc
    path = tmp_path / "taft.json"
    path.write_text(dumps(doc), encoding="utf-8")
    H2 = load_hopf(str(path))
    assert H2.field.equal(H2.S, H.S)


def test_invalid_document_rejected():
    doc = hopf_to_dict(load_builtin("sweedler@Q"))
    doc["counit"] = ["1", "1", "1", "1"]
    with pytest.raises(hc.InvalidHopf):
        hopf_from_dict(doc)
    assert not hc.validate_hopf(hopf_from_dict(doc, check=False)).passed


def test_double_roundtrip(tmp_path):
    D, R = load_quasitriangular("double(cyclic:2@Q)")
    path = tmp_path / "d.json"
    path.write_text(dumps(double_to_dict(D, R)), encoding="utf-8")
    D2, R2 = load_target(str(path))
    assert D2.structure_equal(D)
    assert hc.r_matrix_check(D2, R2).passed
    D3, _ = load_double(json.loads(path.read_text()))
    assert D3.structure_equal(D)


def test_load_target_builtin_forms():
    H, R = load_target("sweedler@Q")
    assert R is None and H.dim == 4
    D, R = load_target("double(sweedler@Q)")
    assert R is not None and D.dim == 16


def test_representation_roundtrip(s3):
    V = rk.simples(s3)[2]
    doc = json.loads(dumps(representation_to_dict(V, "sym3@GF7")))
    W = representation_from_dict(doc)
    assert s3.field.equal(W.mats, V.mats)


def test_algebra_roundtrip():
    B = truncated_polynomial(QQ, 3)
    B2 = algebra_from_dict(json.loads(dumps(algebra_to_dict(B))))
    assert QQ.equal(B2.mul, B.mul) and QQ.equal(B2.unit, B.unit)


def test_dump_is_byte_stable(tmp_path):
    H = load_builtin("taft:4:q@GF13")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    dump_hopf(H, a)
    dump_hopf(load_builtin("taft:4:q@GF13"), b)
    assert a.read_bytes() == b.read_bytes()
