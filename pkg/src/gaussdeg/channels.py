"""Beam-splitter / amplifier channels and generic single-mode-environment couplings.

Two independent evaluation routes are provided:

* :func:`apply_k` and :func:`apply_k_complementary` multiply rescaled
  characteristic functions of the input and of the environment;
* :func:`apply_general` and :func:`apply_general_complementary` build the
  joint two-mode covariance, propagate it through the coupling and discard
  one mode.

A coupling ``A`` gives ``U v U† = A v`` for ``v = (a, a†, b, b†)``; the map
``ρ -> U ρ U†`` therefore transforms the joint moment vector by ``A^{-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidState, RegimeError
from .gaussian import (
    COUPLING_TOL,
    STATE_TOL,
    GaussianState,
    require_coupling,
)


def bs_coupling(k: float) -> np.ndarray:
    """Beam splitter of transmissivity ``k``: ``a -> sqrt(k) a - sqrt(1-k) b``."""
    k = float(k)
    if not 0.0 <= k <= 1.0:
        raise RegimeError(f"beam-splitter transmissivity must lie in [0, 1], got {k}")
    t, r = np.sqrt(k), np.sqrt(1.0 - k)
    return np.array(
        [
            [t, 0, -r, 0],
            [0, t, 0, -r],
            [r, 0, t, 0],
            [0, r, 0, t],
        ],
        dtype=complex,
    )


def amp_coupling(k: float) -> np.ndarray:
    """Amplifier of gain ``k``: ``a -> sqrt(k) a - sqrt(k-1) b†``."""
    k = float(k)
    if not k >= 1.0:
        raise RegimeError(f"amplifier gain must be >= 1, got {k}")
    g, h = np.sqrt(k), np.sqrt(k - 1.0)
    return np.array(
        [
            [g, 0, 0, -h],
            [0, g, -h, 0],
            [0, -h, g, 0],
            [-h, 0, 0, g],
        ],
        dtype=complex,
    )


def k_coupling(k: float) -> np.ndarray:
    """``A^(k)``: beam splitter for ``k <= 1``, amplifier above."""
    return bs_coupling(k) if k <= 1.0 else amp_coupling(k)


def swap_coupling(A) -> np.ndarray:
    """Coupling of ``Ξ U``: the columns of ``A`` shifted by two."""
    A = np.asarray(A, dtype=complex)
    return A[:, [2, 3, 0, 1]].copy()


def _check_env(env: GaussianState) -> GaussianState:
    if not isinstance(env, GaussianState):
        raise InvalidState(f"environment must be a GaussianState, got {env!r}")
    if abs(env.d) > STATE_TOL:
        raise InvalidState(f"environment must have zero displacement, got d = {env.d}")
    return env


@dataclass(frozen=True)
class KChannel:
    """Beam-splitter (``k <= 1``) or amplifier (``k > 1``) channel ``E[k, env]``."""

    k: float
    env: GaussianState

    def __post_init__(self):
        object.__setattr__(self, "k", float(self.k))
        if not (np.isfinite(self.k) and self.k >= 0.0):
            raise RegimeError(f"k must be a finite non-negative number, got {self.k}")
        _check_env(self.env)

    @property
    def regime(self) -> str:
        return "bs" if self.k <= 1.0 else "amp"

    def spec(self) -> "ChannelSpec":
        return ChannelSpec(k_coupling(self.k), self.env)


@dataclass(frozen=True)
class ChannelSpec:
    """Generic channel ``Tr_b[U (ρ ⊗ env) U†]`` given by its coupling matrix."""

    coupling: np.ndarray
    env: GaussianState

    def __post_init__(self):
        A = require_coupling(self.coupling, COUPLING_TOL)
        A = A.copy()
        A.setflags(write=False)
        object.__setattr__(self, "coupling", A)
        _check_env(self.env)


# --- characteristic-function route -----------------------------------------


def _chi_factor(state: GaussianState, c: float, conj: bool = False):
    """Exponent pieces ``(n + 1/2, m, d)`` of ``χ(c μ)`` or of ``χ(c μ*)``."""
    w = c * c * (state.n + 0.5)
    if conj:
        return w, c * c * state.m.conjugate(), -c * state.d.conjugate()
    return w, c * c * state.m, c * state.d


def _chi_product(*factors) -> GaussianState:
    w = sum(f[0] for f in factors)
    m = sum(f[1] for f in factors)
    d = sum(f[2] for f in factors)
    return GaussianState(w - 0.5, m, d)


def apply_k(ch: KChannel, rho: GaussianState) -> GaussianState:
    """Output of ``E[k, env]``.

    ``χ'(μ) = χ(√k μ) ξ(√(1-k) μ)`` for a beam splitter and
    ``χ'(μ) = χ(√k μ) ξ(-√(k-1) μ*)`` for an amplifier, ``ξ`` being the
    characteristic function of the environment.
    """
    k = ch.k
    if ch.regime == "bs":
        return _chi_product(
            _chi_factor(rho, np.sqrt(k)), _chi_factor(ch.env, np.sqrt(1 - k))
        )
    return _chi_product(
        _chi_factor(rho, np.sqrt(k)), _chi_factor(ch.env, -np.sqrt(k - 1), conj=True)
    )


def apply_k_complementary(ch: KChannel, rho: GaussianState) -> GaussianState:
    """Output of the weakly complementary map ``Ẽ[k, env]`` (final environment state)."""
    k = ch.k
    if ch.regime == "bs":
        return _chi_product(
            _chi_factor(rho, -np.sqrt(1 - k)), _chi_factor(ch.env, np.sqrt(k))
        )
    return _chi_product(
        _chi_factor(rho, -np.sqrt(k - 1), conj=True), _chi_factor(ch.env, np.sqrt(k))
    )


# --- two-mode route ---------------------------------------------------------


def _joint_evolve(spec: ChannelSpec, rho: GaussianState):
    cov = np.zeros((4, 4), dtype=complex)
    cov[:2, :2] = rho.covariance
    cov[2:, 2:] = spec.env.covariance
    mean = np.concatenate([rho.mean, spec.env.mean])
    M = np.linalg.inv(spec.coupling)
    return M @ cov @ M.conj().T, M @ mean


def apply_general(spec: ChannelSpec, rho: GaussianState) -> GaussianState:
    """``Tr_b[U (ρ ⊗ env) U†]``: keep the ``a`` block of the evolved covariance."""
    cov, mean = _joint_evolve(spec, rho)
    return GaussianState.from_moments(cov[:2, :2], mean[:2])


def apply_general_complementary(spec: ChannelSpec, rho: GaussianState) -> GaussianState:
    """``Tr_a[U (ρ ⊗ env) U†]`` relabelled as a state of one mode."""
    cov, mean = _joint_evolve(spec, rho)
    return GaussianState.from_moments(cov[2:, 2:], mean[2:])
