# Any coupling with q not in {0, 1} is a BS or amplifier dressed by squeezers.

import json

import numpy as np

from gaussdeg import (
    Unsupported,
    compute_q,
    decompose,
    generate_coupling,
    thermal,
    verify_decomposition,
)
from gaussdeg.serialize import canonical

env = thermal(0.5)
for regime, k in [("BSq", 0.6), ("AMPq", 3.0), ("NEGq", 2.0)]:
    A = generate_coupling(11, regime, k=k)
    dec = decompose(A)
    rep = verify_decomposition(A, env)
    print(f"{regime}: q={compute_q(A):+.3f} -> {dec.case} k={dec.k:.3f}, residual {rep.max_residual:.1e}")

print(json.dumps(canonical(decompose(generate_coupling(11, "NEGq", k=2.0)).to_dict()), indent=2))

try:
    decompose(np.eye(4))
except Unsupported as exc:
    print("q = 1:", exc)
