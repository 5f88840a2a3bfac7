"""Fusion data of Rep k[S3] over GF(7): fusion rules, squared norms and the canonical algebra."""
from __future__ import annotations

from hopfkit.builtins import load_builtin
from hopfkit.fusionkit import build_canonical_algebra, build_fusion_data, canonical_double_dual_trace

H = load_builtin("sym3@GF7")
fd = build_fusion_data(H, rng_seed=0)
print("simple dimensions:", fd.dims)
for i in range(fd.rank):
    for j in range(fd.rank):
        print(f"  L{i} (x) L{j} = " + " + ".join(f"{n} L{m}" for m, n in enumerate(fd.fusion[i, j]) if n))
print("squared norms:", [str(s) for s in fd.squared_norms], " global dimension:", fd.global_dimension)
A = build_canonical_algebra(fd)
print(A.report.summary())
for seed in (0, 1, 2):
    print(f"trace of A -> A** with seed {seed}:", canonical_double_dual_trace(build_fusion_data(H, seed), H))
