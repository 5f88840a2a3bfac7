"""Projective covers and the exactness verdict for a few algebras."""
from __future__ import annotations

from hopfkit.modalg import bimodule_of, exactness_verdict, indecomposable_projectives, load_algebra, radical

for address in ["Q[x]/x^2", "cyclic:2@GF7", "cyclic:2@GF2", "sweedler@Q"]:
    B = load_algebra(address)
    projs = [(P.dim, T.dim) for P, T in indecomposable_projectives(B)]
    _E, M = bimodule_of(B)
    verdict = exactness_verdict(M).to_dict()["witnesses"]["verdict"]
    print(f"{address:14s} dim={B.dim}  rad={radical(B).shape[1]}  (dim P, dim top)={projs}  -> {verdict}")
