# Beam-splitter and amplifier channels, computed two ways.
#
# apply_k multiplies rescaled characteristic functions; apply_general pushes
# the joint two-mode covariance through the 4x4 coupling and drops a mode.

from gaussdeg import (
    KChannel,
    apply_general,
    apply_general_complementary,
    apply_k,
    apply_k_complementary,
    coherent,
    squeezed_thermal,
    state_distance,
    thermal,
    vacuum,
)

ch = KChannel(0.5, thermal(1.0))
print("BS k=1/2, thermal env, vacuum in ->", apply_k(ch, vacuum()))

amp = KChannel(2.0, vacuum())
print("amplifier k=2, vacuum in        ->", apply_k(amp, vacuum()))

# the environment's view: displacement leaks with a sign flip
rho = coherent(1.0 + 0.5j)
print("BS k=0.3 channel output d       ->", apply_k(KChannel(0.3, vacuum()), rho).d)
print("BS k=0.3 environment output d   ->", apply_k_complementary(KChannel(0.3, vacuum()), rho).d)

# both routes agree
env = squeezed_thermal(0.4, 0.3, 1.0)
rho = squeezed_thermal(1.0, 0.2, 0.5, 0.3 - 0.4j)
for k in (0.2, 0.8, 3.0):
    c = KChannel(k, env)
    gap = max(
        state_distance(apply_k(c, rho), apply_general(c.spec(), rho)),
        state_distance(apply_k_complementary(c, rho), apply_general_complementary(c.spec(), rho)),
    )
    print(f"k={k}: route disagreement {gap:.1e}")
