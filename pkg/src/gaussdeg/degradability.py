"""Weak-degradability / anti-degradability classification and numerical checks."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .channels import (
    ChannelSpec,
    KChannel,
    apply_general,
    apply_general_complementary,
    apply_k,
    apply_k_complementary,
    k_coupling,
)
from .exceptions import RegimeError
from .gaussian import GaussianState, compute_q, require_coupling, state_distance

BOUNDARY_TOL = 1e-9


@dataclass(frozen=True)
class Classification:
    q: float
    weakly_degradable: bool
    anti_degradable: bool
    equivalent_map: str
    equivalent_k: Optional[float] = None
    degrading_k: Optional[float] = None
    antidegrading_k: Optional[float] = None
    env_pure: Optional[bool] = None
    notes: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


def degrading_k(k: float) -> float:
    """Parameter ``k' = (2k - 1)/k`` of the map that degrades ``E[k, env]``."""
    k = float(k)
    if not k >= 0.5:
        raise RegimeError(f"degrading map requires k >= 1/2, got {k}")
    return (2 * k - 1) / k


def antidegrading_k(k: float) -> float:
    """Transmissivity ``k'' = (1 - 2k)/(1 - k)`` of the anti-degrading map."""
    k = float(k)
    if not 0.0 <= k <= 0.5:
        raise RegimeError(f"anti-degrading map requires 0 <= k <= 1/2, got {k}")
    return (1 - 2 * k) / (1 - k)


def classify(A, env: Optional[GaussianState] = None, tol: float = BOUNDARY_TOL) -> Classification:
    """Place the channel with coupling ``A`` in the q-table.

    ``q = 1/2`` (within ``tol``) is both weakly degradable and anti-degradable.
    ``q = 0`` and ``q = 1`` are flagged anti-degradable and weakly degradable
    respectively, with no equivalent BS/amplifier map attached.
    """
    A = require_coupling(A)
    q = compute_q(A)
    env_pure = None if env is None else env.is_pure()
    half = abs(q - 0.5) <= tol
    weak = q >= 0.5 or half
    anti = q <= 0.5 or half
    deg = anti_deg = eq_k = None
    notes = []

    if abs(q) <= tol:
        eq = "none guaranteed"
        notes.append("q = 0: anti-degradable, BS/amplifier equivalent not always exists")
    elif abs(q - 1) <= tol:
        eq = "none guaranteed"
        notes.append("q = 1: weakly degradable, BS/amplifier equivalent not always exists")
    elif q < 0:
        eq, eq_k = "conjugate amplifier", 1 - q
        notes.append(f"weakly complementary of an amplifier of gain {1 - q!r}")
    elif q < 1:
        eq, eq_k = "BS of transmissivity q", q
    else:
        eq, eq_k = "amplifier of gain q", q

    if eq_k is not None and q > 1:
        deg = degrading_k(q)
    elif eq_k is not None and q > 0:
        kk = 0.5 if half else q
        if weak:
            deg = degrading_k(kk)
        if anti:
            anti_deg = antidegrading_k(kk)

    if weak and env_pure:
        notes.append("degradable (env pure)")
    return Classification(
        q=q,
        weakly_degradable=weak,
        anti_degradable=anti,
        equivalent_map=eq,
        equivalent_k=eq_k,
        degrading_k=deg,
        antidegrading_k=anti_deg,
        env_pure=env_pure,
        notes="; ".join(notes),
    )


def random_states(count: int, seed: int) -> list:
    """Mixed, squeezed and displaced states, reproducible from ``seed``.

    ``n ~ U[0, 3]``, ``|m| ~ U[0, sqrt((n+1/2)^2 - 1/4))``, ``|d| ~ U[0, 2]``,
    phases uniform.
    """
    rng = np.random.default_rng(seed)
    states = []
    for _ in range(count):
        n = rng.uniform(0, 3)
        m_abs = rng.uniform(0, np.sqrt((n + 0.5) ** 2 - 0.25))
        d_abs = rng.uniform(0, 2)
        m = m_abs * np.exp(1j * rng.uniform(0, 2 * np.pi))
        d = d_abs * np.exp(1j * rng.uniform(0, 2 * np.pi))
        states.append(GaussianState(n, m, d))
    return states


@dataclass(frozen=True)
class ResidualReport:
    identity: str
    k: float
    k_prime: float
    max_residual: float
    samples: int

    def to_dict(self) -> dict:
        return asdict(self)


def _maps(route: str):
    if route == "chi":
        return apply_k, apply_k_complementary
    if route == "two_mode":
        return (
            lambda ch, rho: apply_general(ChannelSpec(k_coupling(ch.k), ch.env), rho),
            lambda ch, rho: apply_general_complementary(
                ChannelSpec(k_coupling(ch.k), ch.env), rho
            ),
        )
    raise ValueError(f"unknown route {route!r}")


def verify_weak_degradability(
    k: float,
    env: GaussianState,
    samples: int = 100,
    seed: int = 42,
    *,
    degrading_env: Optional[GaussianState] = None,
    route: str = "chi",
) -> ResidualReport:
    """Max distance between ``Ẽ[k](ρ)`` and ``Ẽ[k'](E[k](ρ))`` over random ``ρ``.

    ``degrading_env`` replaces the environment of the degrading map; it exists
    for negative controls, the identity only holds with the channel's own env.
    """
    kp = degrading_k(k)
    fwd, comp = _maps(route)
    ch = KChannel(k, env)
    deg = KChannel(kp, env if degrading_env is None else degrading_env)
    worst = 0.0
    for rho in random_states(samples, seed):
        lhs = comp(ch, rho)
        rhs = comp(deg, fwd(ch, rho))
        worst = max(worst, state_distance(lhs, rhs))
    return ResidualReport("weak_degradability", float(k), kp, worst, samples)


def verify_anti_degradability(
    k: float,
    env: GaussianState,
    samples: int = 100,
    seed: int = 42,
    *,
    degrading_env: Optional[GaussianState] = None,
    route: str = "chi",
) -> ResidualReport:
    """Max distance between ``E[k](ρ)`` and ``Ẽ[k''](Ẽ[k](ρ))`` over random ``ρ``."""
    kpp = antidegrading_k(k)
    fwd, comp = _maps(route)
    ch = KChannel(k, env)
    deg = KChannel(kpp, env if degrading_env is None else degrading_env)
    worst = 0.0
    for rho in random_states(samples, seed):
        lhs = fwd(ch, rho)
        rhs = comp(deg, comp(ch, rho))
        worst = max(worst, state_distance(lhs, rhs))
    return ResidualReport("anti_degradability", float(k), kpp, worst, samples)
