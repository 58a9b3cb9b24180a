"""Reduction of a generic coupling to squeezers around a BS/amplifier coupling.

For ``q`` not in ``{0, 1}`` any valid coupling factorises as

    U = (g_a ⊗ g_b) U^(k) h_b            (q > 0, k = q)
    U = Ξ (g_a ⊗ g_b) U^(k) h_b          (q < 0, k = 1 - q)

with single-mode unitaries ``g_a, g_b, h_b`` and ``Ξ`` the mode swap. In
Heisenberg matrices ``A = A_h A^(k) (G_a ⊕ G_b)``, so the first row of ``A``
fixes ``G_a`` and ``G_b`` and the remaining factor is ``A_h``.

Every single-mode factor is stored as a rotation followed by a squeeze,
``g = S(r; phi) R(theta)``. The channel then reads

    ρ -> g_a E[k, h_b env h_b†](ρ) g_a†            (not swapped)
    ρ -> g_b Ẽ[k, h_b env h_b†](ρ) g_b†            (swapped)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .channels import (
    ChannelSpec,
    KChannel,
    apply_general,
    apply_k,
    apply_k_complementary,
    k_coupling,
    swap_coupling,
)
from .degradability import random_states
from .exceptions import InvalidCoupling, RegimeError, Unsupported
from .gaussian import (
    COUPLING_TOL,
    GaussianState,
    SqueezeParams,
    apply_squeeze,
    bogoliubov_matrix,
    compute_q,
    require_coupling,
    rotate,
    rotation_matrix,
    state_distance,
)

UNSUPPORTED_TOL = 1e-9
SQUEEZE_TOL = 1e-12

CASES = ("BS", "Amplifier", "ConjugateAmplifier")
REGIMES = ("BSq", "AMPq", "NEGq")


@dataclass(frozen=True)
class Decomposition:
    """Parameters of the factorisation.

    ``sa``/``phase_a`` describe ``g_a``, ``sb``/``global_phase`` describe
    ``g_b`` and ``sb_prime``/``phase_b`` describe the environment pre-squeezer
    ``h_b``. When ``swapped`` the output squeezer is ``g_b``.
    """

    case: str
    k: float
    sa: SqueezeParams
    sb: SqueezeParams
    sb_prime: SqueezeParams
    phase_a: float = 0.0
    phase_b: float = 0.0
    global_phase: float = 0.0
    swapped: bool = False

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"unknown case {self.case!r}")
        if self.case == "BS" and not 0 < self.k < 1:
            raise RegimeError(f"BS case needs k in (0, 1), got {self.k}")
        if self.case != "BS" and not self.k > 1:
            raise RegimeError(f"{self.case} case needs k > 1, got {self.k}")
        if self.swapped != (self.case == "ConjugateAmplifier"):
            raise ValueError("swapped must be set exactly for ConjugateAmplifier")

    def to_dict(self) -> dict:
        def sq(s):
            return {"r": s.r, "phi": s.phi}

        return {
            "case": self.case,
            "k": self.k,
            "swapped": self.swapped,
            "sa": sq(self.sa),
            "sb": sq(self.sb),
            "sb_prime": sq(self.sb_prime),
            "phase_a": self.phase_a,
            "phase_b": self.phase_b,
            "global_phase": self.global_phase,
        }


def _split(G: np.ndarray):
    """``G = S(r; phi) R(theta)`` -> ``(SqueezeParams, theta)``."""
    alpha, beta = G[0, 0], G[0, 1]
    theta = float(np.angle(alpha)) % (2 * np.pi)
    if abs(beta) < SQUEEZE_TOL:
        return SqueezeParams(0.0, 0.0), theta
    r = float(np.arcsinh(abs(beta)))
    return SqueezeParams(r, float(np.angle(beta)) - theta), theta


def _join(s: SqueezeParams, theta: float) -> np.ndarray:
    return rotation_matrix(theta) @ s.matrix()


def _direct_sum(Ga, Gb) -> np.ndarray:
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = Ga
    out[2:, 2:] = Gb
    return out


def decompose(A) -> Decomposition:
    """Extract the squeezers and the equivalent BS/amplifier parameter of ``A``."""
    A = require_coupling(A)
    q = compute_q(A)
    if abs(q) <= UNSUPPORTED_TOL or abs(q - 1) <= UNSUPPORTED_TOL:
        raise Unsupported(
            f"q = {q!r}: channels with q = 0 or q = 1 cannot always be written "
            "as BS/amplifier channels; this construction is deferred in the "
            "literature and not attempted here"
        )
    swapped = q < 0
    B = swap_coupling(A) if swapped else A
    k = compute_q(B)

    Ga = bogoliubov_matrix(B[0, 0], B[0, 1]) / np.sqrt(k)
    if k < 1:
        c = np.sqrt(1 - k)
        Gb = bogoliubov_matrix(-B[0, 2] / c, -B[0, 3] / c)
    else:
        c = np.sqrt(k - 1)
        Gb = bogoliubov_matrix(-np.conj(B[0, 3]) / c, -np.conj(B[0, 2]) / c)

    AH = B @ np.linalg.inv(_direct_sum(Ga, Gb)) @ np.linalg.inv(k_coupling(k))
    off = max(np.max(np.abs(AH[:2, :] - np.eye(4)[:2, :])), np.max(np.abs(AH[2:, :2])))
    if off > 1e-8 * max(1.0, np.max(np.abs(A))) ** 2:
        raise InvalidCoupling(f"residual factor is not local to the environment ({off:.2e})")

    sa, phase_a = _split(Ga)
    sb, phase_g = _split(Gb)
    sbp, phase_b = _split(AH[2:, 2:])
    if swapped:
        case = "ConjugateAmplifier"
    else:
        case = "BS" if k < 1 else "Amplifier"
    return Decomposition(
        case=case,
        k=k,
        sa=sa,
        sb=sb,
        sb_prime=sbp,
        phase_a=phase_a,
        phase_b=phase_b,
        global_phase=phase_g,
        swapped=swapped,
    )


def apply_decomposed(dec: Decomposition, env: GaussianState, rho: GaussianState) -> GaussianState:
    """Run the channel through its factorised form."""
    env_prime = apply_squeeze(rotate(env, dec.phase_b), dec.sb_prime)
    ch = KChannel(dec.k, env_prime)
    if dec.swapped:
        out = apply_k_complementary(ch, rho)
        return apply_squeeze(rotate(out, dec.global_phase), dec.sb)
    out = apply_k(ch, rho)
    return apply_squeeze(rotate(out, dec.phase_a), dec.sa)


def _random_local(rng, r_max: float) -> np.ndarray:
    if r_max == 0:
        return np.eye(2, dtype=complex)
    s = SqueezeParams(rng.uniform(0, r_max), rng.uniform(0, 2 * np.pi))
    return _join(s, rng.uniform(0, 2 * np.pi))


def coupling_factors(
    seed: int, regime: str, k: Optional[float] = None, r_max: float = 0.8
) -> list:
    """Heisenberg factors of a random coupling in ``regime``, leftmost applied last.

    Returns ``[A_h, A^(k), G_a ⊕ G_b]`` and, for ``NEGq``, the mode swap as a
    fourth factor acting on the right. ``r_max = 0`` disables all dressing.
    """
    if regime not in REGIMES:
        raise RegimeError(f"unknown regime {regime!r}, expected one of {REGIMES}")
    rng = np.random.default_rng(seed)
    if k is None:
        k = rng.uniform(0.05, 0.95) if regime == "BSq" else rng.uniform(1.05, 4.0)
    k = float(k)
    if regime == "BSq" and not 0 < k < 1:
        raise RegimeError(f"BSq regime needs k in (0, 1), got {k}")
    if regime in ("AMPq", "NEGq") and not k > 1:
        raise RegimeError(f"{regime} regime needs k > 1, got {k}")
    if r_max < 0:
        raise RegimeError(f"r_max must be non-negative, got {r_max}")

    G = _direct_sum(_random_local(rng, r_max), _random_local(rng, r_max))
    H = _direct_sum(np.eye(2), _random_local(rng, r_max))
    factors = [H, k_coupling(k), G]
    if regime == "NEGq":
        factors.append(swap_coupling(np.eye(4, dtype=complex)))
    return factors


def generate_coupling(
    seed: int, regime: str, k: Optional[float] = None, r_max: float = 0.8
) -> np.ndarray:
    """Random valid coupling with ``q = k`` (``BSq``, ``AMPq``) or ``q = 1 - k`` (``NEGq``)."""
    factors = coupling_factors(seed, regime, k, r_max)
    A = factors[0]
    for f in factors[1:]:
        A = require_coupling(A @ f, COUPLING_TOL)
    return A


@dataclass(frozen=True)
class DecompositionReport:
    case: str
    k: float
    max_residual: float
    samples: int

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "k": self.k,
            "max_residual": self.max_residual,
            "samples": self.samples,
        }


def verify_decomposition(
    A, env: GaussianState, samples: int = 50, seed: int = 42
) -> DecompositionReport:
    """Compare the factorised channel against the two-mode evaluation of ``A``."""
    dec = decompose(A)
    spec = ChannelSpec(A, env)
    worst = 0.0
    for rho in random_states(samples, seed):
        worst = max(
            worst, state_distance(apply_general(spec, rho), apply_decomposed(dec, env, rho))
        )
    return DecompositionReport(dec.case, dec.k, worst, samples)
