# Gaussian states of one mode and their characteristic functions.
#
# A state is three numbers: n (noise photons), m (anomalous moment <Δa Δa>)
# and d = <a>.  The vacuum has chi(mu) = exp(-|mu|^2 / 2).

import numpy as np

from gaussdeg import SqueezeParams, apply_squeeze, char_fn_eval, thermal, vacuum

vac = vacuum()
print("vacuum chi(1)       ", char_fn_eval(vac, 1.0), "expected", np.exp(-0.5))
print("thermal(1) chi(1)   ", char_fn_eval(thermal(1.0), 1.0), "expected", np.exp(-1.5))

# Squeezing S(r; phi) with S a S† = a cosh r + e^{i phi} a† sinh r.
sq = apply_squeeze(vac, SqueezeParams(0.5, 0.0))
print("squeezed vacuum     ", sq)
print("  n + 1/2 =", sq.n + 0.5, " cosh(2r)/2 =", np.cosh(1.0) / 2)
print("  m       =", sq.m, " -sinh(2r)/2 =", -np.sinh(1.0) / 2)
print("  still pure?", sq.is_pure())

# chi is hermitian: chi(-mu) = chi(mu)*
mu = 0.3 - 0.7j
print("hermiticity gap     ", abs(char_fn_eval(sq, -mu) - np.conj(char_fn_eval(sq, mu))))

# squeezing back with -r undoes it
back = apply_squeeze(sq, SqueezeParams(-0.5, 0.0))
print("undo squeeze        ", back)
