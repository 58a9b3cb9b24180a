# Which channels are weakly degradable and which are anti-degradable.

from gaussdeg import (
    amp_coupling,
    bs_coupling,
    classify,
    generate_coupling,
    thermal,
    vacuum,
    verify_anti_degradability,
    verify_weak_degradability,
)

for name, A in [
    ("conjugate amplifier (q=-0.5)", generate_coupling(0, "NEGq", k=1.5)),
    ("BS k=0.25", bs_coupling(0.25)),
    ("BS k=0.5", bs_coupling(0.5)),
    ("BS k=0.75", bs_coupling(0.75)),
    ("amplifier k=2", amp_coupling(2.0)),
]:
    c = classify(A, vacuum())
    print(f"{name:30s} q={c.q:+.3f} weak={c.weakly_degradable!s:5} anti={c.anti_degradable!s:5} {c.notes}")

# Bob degrades E[k] into the environment's output using Ẽ[(2k-1)/k].
env = thermal(1.0)
for k in (0.5, 0.75, 2.0, 5.0):
    r = verify_weak_degradability(k, env)
    print(f"weak, k={k}: k'={r.k_prime:.3f} residual {r.max_residual:.1e}")

# Charlie rebuilds Bob's output from the environment using Ẽ[(1-2k)/(1-k)].
for k in (0.0, 0.25, 0.5):
    r = verify_anti_degradability(k, env)
    print(f"anti, k={k}: k''={r.k_prime:.3f} residual {r.max_residual:.1e}")

# the degrading map only works with the channel's own environment
r = verify_weak_degradability(2.0, env, degrading_env=thermal(2.0))
print("mismatched environment residual", r.max_residual)
