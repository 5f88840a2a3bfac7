"""Integrals, distinguished elements and the S^4 formula on a few small Hopf algebras."""
from __future__ import annotations

from hopfkit import hopfcore as hc
from hopfkit.builtins import load_builtin

for address in ["sweedler@Q", "taft:3:2@GF7", "taft:4:q@GF13", "gr_uq_sl2:3:2@GF7"]:
    H = load_builtin(address)
    rep = hc.radford_check(H)
    print(f"{address:22s} dim={H.dim:3d}  ord(S)={hc.antipode_order(H)}  "
          f"a={hc.format_vector(H, hc.distinguished_element(H).coeffs):8s}  "
          f"unimodular={hc.is_unimodular(H)!s:5s}  S^4 formula: {rep.verdict}")
