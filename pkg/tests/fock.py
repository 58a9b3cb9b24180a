"""Truncated Fock-space oracles, independent of the covariance formulas."""

import numpy as np
from scipy.linalg import expm


def annihilation(cutoff):
    return np.diag(np.sqrt(np.arange(1, cutoff)), 1).astype(complex)


def displacement(mu, cutoff):
    a = annihilation(cutoff)
    return expm(mu * a.conj().T - np.conj(mu) * a)


def squeezer(r, phi, cutoff):
    """Fock matrix of the squeezer, built from the quadratic generator."""
    a = annihilation(cutoff)
    xi = r * np.exp(1j * phi)
    return expm(0.5 * (np.conj(xi) * a @ a - xi * a.conj().T @ a.conj().T))


def thermal_dm(n, cutoff):
    j = np.arange(cutoff)
    p = n**j / (n + 1) ** (j + 1) if n > 0 else (j == 0).astype(float)
    return np.diag(p).astype(complex)


def char_fn(rho, mu):
    return np.trace(rho @ displacement(mu, rho.shape[0]))


def fit_gaussian_exponent(rho, radius=0.6, points=12):
    """Least-squares fit of log χ on a ring of μ to ``(n+1/2, m, d)``.

    Model: log χ(μ) = -w|μ|^2 + Re(m μ*^2) + (μ d* - μ* d).
    """
    rows, rhs = [], []
    for rad in (radius / 2, radius):
        for t in np.linspace(0, 2 * np.pi, points, endpoint=False):
            mu = rad * np.exp(1j * t)
            lc = np.log(char_fn(rho, mu))
            # unknowns: w, Re m, Im m, Re d, Im d
            mc2 = np.conj(mu) ** 2
            rows.append([-abs(mu) ** 2, mc2.real, -mc2.imag, 0.0, 0.0])
            rhs.append(lc.real)
            # imaginary part: μ d* - μ* d = 2i Im(μ d*) = 2i (Im μ Re d - Re μ Im d)
            rows.append([0.0, 0.0, 0.0, 2 * mu.imag, -2 * mu.real])
            rhs.append(lc.imag)
    sol, *_ = np.linalg.lstsq(np.array(rows), np.array(rhs), rcond=None)
    w, mr, mi, dr, di = sol
    return w, complex(mr, mi), complex(dr, di)
