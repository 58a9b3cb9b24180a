"""One-mode Gaussian states, squeezers and coupling-matrix checks.

Conventions
-----------
A state is stored as ``(n, m, d)`` with

* ``d = <a>`` the displacement,
* ``n + 1/2 = <{Δa, Δa†}>/2`` so that the vacuum has ``n = 0`` and a thermal
  state with mean photon number N has ``n = N``,
* ``m = <Δa Δa>`` the anomalous moment.

The covariance matrix over ``(a, a†)`` is the Hermitian matrix

    Γ = [[n + 1/2, m], [m*, n + 1/2]]

and the characteristic function ``χ(μ) = Tr[ρ exp(μ a† - μ* a)]`` reads

    χ(μ) = exp(-ζ Γ ζ† / 2 - ζ0 ζ†),   ζ = (μ*, -μ),   ζ0 = -(d*, d).

A squeezed vacuum ``S(r, 0)|0>`` therefore has ``m = -sinh(2r)/2``.

Unitaries are described by their Heisenberg matrix: a single-mode unitary
``g`` with ``g a g† = α a + β a†`` is the 2x2 matrix ``[[α, β], [β*, α*]]``.
Acting on a state (``ρ -> g ρ g†``) transforms the moment vector by the
inverse of that matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import InvalidCoupling, InvalidState

STATE_TOL = 1e-9
COUPLING_TOL = 1e-10

# (a, a†, b, b†) metric: [v_i, v_j†] = Z_ij
Z4 = np.diag([1.0, -1.0, 1.0, -1.0]).astype(complex)


@dataclass(frozen=True)
class GaussianState:
    """Zero- or finite-mean Gaussian state of one bosonic mode."""

    n: float
    m: complex = 0j
    d: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "n", float(self.n))
        object.__setattr__(self, "m", complex(self.m))
        object.__setattr__(self, "d", complex(self.d))
        vals = (self.n, self.m.real, self.m.imag, self.d.real, self.d.imag)
        if not all(np.isfinite(vals)):
            raise InvalidState(f"non-finite state parameters {vals}")
        w = self.n + 0.5
        if w < 0.5 - STATE_TOL:
            raise InvalidState(f"n = {self.n} < 0")
        slack = self.uncertainty - 0.25
        if slack < -STATE_TOL * max(1.0, w * w):
            raise InvalidState(
                f"uncertainty relation violated: (n+1/2)^2 - |m|^2 = "
                f"{self.uncertainty!r} < 1/4"
            )

    @property
    def uncertainty(self) -> float:
        """Symplectic invariant ``(n + 1/2)^2 - |m|^2`` (1/4 for pure states)."""
        return (self.n + 0.5) ** 2 - abs(self.m) ** 2

    @property
    def covariance(self) -> np.ndarray:
        w = self.n + 0.5
        return np.array([[w, self.m], [self.m.conjugate(), w]], dtype=complex)

    @property
    def mean(self) -> np.ndarray:
        """Mean of ``(a, a†)``."""
        return np.array([self.d, self.d.conjugate()], dtype=complex)

    def is_pure(self, tol: float = STATE_TOL) -> bool:
        return abs(self.uncertainty - 0.25) <= tol * max(1.0, (self.n + 0.5) ** 2)

    def as_vector(self) -> np.ndarray:
        """Real 5-vector ``(n, Re m, Im m, Re d, Im d)`` used for distances."""
        return np.array(
            [self.n, self.m.real, self.m.imag, self.d.real, self.d.imag]
        )

    @classmethod
    def from_moments(cls, cov, mean) -> "GaussianState":
        cov = np.asarray(cov, dtype=complex)
        mean = np.asarray(mean, dtype=complex)
        n = 0.5 * (cov[0, 0].real + cov[1, 1].real) - 0.5
        return cls(n, cov[0, 1], mean[0])


def vacuum() -> GaussianState:
    return GaussianState(0.0)


def thermal(n: float) -> GaussianState:
    return GaussianState(n)


def coherent(alpha: complex) -> GaussianState:
    return GaussianState(0.0, 0j, alpha)


def squeezed_thermal(n: float, r: float, phi: float = 0.0, d: complex = 0j):
    """Thermal state of ``n`` photons squeezed by ``S(r; phi)`` then displaced."""
    st = apply_squeeze(thermal(n), SqueezeParams(r, phi))
    return GaussianState(st.n, st.m, d)


def state_distance(a: GaussianState, b: GaussianState) -> float:
    """Max-norm distance over ``(n, Re m, Im m, Re d, Im d)``."""
    return float(np.max(np.abs(a.as_vector() - b.as_vector())))


@dataclass(frozen=True)
class SqueezeParams:
    """Parameters of ``S(r; phi)`` with ``S a S† = a cosh r + e^{i phi} a† sinh r``."""

    r: float
    phi: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "phi", float(self.phi) % (2 * np.pi))

    def matrix(self) -> np.ndarray:
        return bogoliubov_matrix(
            np.cosh(self.r), np.exp(1j * self.phi) * np.sinh(self.r)
        )


def bogoliubov_matrix(alpha: complex, beta: complex) -> np.ndarray:
    """Heisenberg matrix of ``a -> alpha a + beta a†`` over ``(a, a†)``."""
    alpha, beta = complex(alpha), complex(beta)
    return np.array(
        [[alpha, beta], [beta.conjugate(), alpha.conjugate()]], dtype=complex
    )


def rotation_matrix(theta: float) -> np.ndarray:
    return bogoliubov_matrix(np.exp(1j * theta), 0.0)


def apply_bogoliubov(state: GaussianState, G: np.ndarray) -> GaussianState:
    """Apply the single-mode unitary whose Heisenberg matrix is ``G``."""
    G = np.asarray(G, dtype=complex)
    # inverse of [[α, β], [β*, α*]] with |α|^2 - |β|^2 = 1
    M = np.array([[G[1, 1], -G[0, 1]], [-G[1, 0], G[0, 0]]])
    cov = M @ state.covariance @ M.conj().T
    return GaussianState.from_moments(cov, M @ state.mean)


def apply_squeeze(state: GaussianState, s: SqueezeParams) -> GaussianState:
    """Return ``S ρ S†`` for the squeezer ``S(s.r; s.phi)``."""
    return apply_bogoliubov(state, s.matrix())


def rotate(state: GaussianState, theta: float) -> GaussianState:
    """Return ``R ρ R†`` where ``R a R† = e^{i theta} a``."""
    return apply_bogoliubov(state, rotation_matrix(theta))


def char_fn_eval(state: GaussianState, mu: complex) -> complex:
    """Characteristic function ``Tr[ρ exp(mu a† - mu* a)]``."""
    if not isinstance(state, GaussianState):
        raise InvalidState(f"expected GaussianState, got {type(state).__name__}")
    mu = complex(mu)
    zeta = np.array([mu.conjugate(), -mu])
    zeta0 = -state.mean.conj()
    quad = zeta @ state.covariance @ zeta.conj()
    lin = zeta0 @ zeta.conj()
    return complex(np.exp(-quad / 2 - lin))


@dataclass(frozen=True)
class CouplingReport:
    """Residuals of the commutation constraints of a 4x4 coupling."""

    residuals: dict = field(default_factory=dict)
    tol: float = COUPLING_TOL

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol

    def worst(self) -> str:
        return max(self.residuals, key=self.residuals.get)


def _as_coupling(A) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    if A.shape != (4, 4):
        raise InvalidCoupling(f"coupling must be 4x4, got shape {A.shape}")
    return A


def _partner(row: np.ndarray) -> np.ndarray:
    # conjugate row with entries swapped inside the (a, a†) and (b, b†) pairs
    return row.conj()[[1, 0, 3, 2]]


def validate_coupling(A, tol: float = COUPLING_TOL) -> CouplingReport:
    """Check the bosonic commutation constraints on ``A``.

    Rows 1 and 3 (``a'`` and ``b'``) must satisfy ``[a', a'†] = [b', b'†] = 1``
    and ``[a', b'] = [a', b'†] = 0``; rows 2 and 4 must be the hermitian
    partners of rows 1 and 3.
    """
    A = _as_coupling(A)
    sign = np.array([1, -1, 1, -1])
    a_row, b_row = A[0], A[2]
    res = {
        "norm_a": abs(np.sum(sign * np.abs(a_row) ** 2) - 1),
        "norm_b": abs(np.sum(sign * np.abs(b_row) ** 2) - 1),
        "comm_ab": abs(np.sum(sign * a_row * b_row[[1, 0, 3, 2]])),
        "comm_ab_dag": abs(np.sum(sign * a_row * b_row.conj())),
        "partner_a": float(np.max(np.abs(A[1] - _partner(a_row)))),
        "partner_b": float(np.max(np.abs(A[3] - _partner(b_row)))),
    }
    return CouplingReport({k: float(v) for k, v in res.items()}, tol)


def require_coupling(A, tol: float = COUPLING_TOL) -> np.ndarray:
    """Return ``A`` as an array, raising ``InvalidCoupling`` if it fails validation."""
    A = _as_coupling(A)
    report = validate_coupling(A, tol)
    if not report.passed:
        raise InvalidCoupling(
            f"constraint {report.worst()} violated, residual {report.max_residual:.3e}"
        )
    return A


def compute_q(A) -> float:
    """The representation invariant ``|A11|^2 - |A12|^2``."""
    A = _as_coupling(A)
    return float(abs(A[0, 0]) ** 2 - abs(A[0, 1]) ** 2)
