"""Momentum-space engine: S(p), its axis-angle form, and closed-form powers.

The one-step operator at momentum p is the unimodular matrix

    S(p) = [[cos(beta) e^{-i p'}, sin(beta) e^{-i p''}],
            [-sin(beta) e^{i p''}, cos(beta) e^{i p'}]],

with p' = p + gamma and p'' = p + delta.  Writing S = exp(i theta c.sigma)
and using cos(n theta) = T_n(cos theta), sin(n theta) = U_{n-1}(cos theta)
sin(theta) collapses S^n to three Chebyshev evaluations, so the state after
n steps costs O(n) scalar work per momentum instead of n matrix products.
The global phase e^{i alpha} per step is kept outside S and multiplied in
only when assembling wave functions, so S^n stays in SU(2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .chebyshev import cheb_pair
from .coin import IDENTITY_2, PAULI_1, PAULI_2, PAULI_3, CoinParameters
from .transform import MomentumGrid, MomentumSamples

__all__ = [
    "ExponentialDecomposition",
    "s_matrix",
    "decompose",
    "exponentiate",
    "pauli_project",
    "s_power_closed",
    "s_power_oracle",
    "phi_closed",
    "momentum_density",
    "sample_closed_form",
]

# Below this value of sin(theta) the rotation axis is numerically undefined
# (S is +/- identity to the same accuracy), so it is fixed by convention.
DEGENERATE_TOL = 1e-9


@dataclass(frozen=True)
class ExponentialDecomposition:
    """Rotation angle and unit axis with S = cos(theta) I + i sin(theta) c.sigma.

    theta lies in [0, pi].  When sin(theta) vanishes the axis is arbitrary;
    it is set to (0, 0, 1) and `degenerate` is flagged.
    """

    theta: float
    c: tuple[float, float, float]
    degenerate: bool = False


def s_matrix(coin: CoinParameters, p: float) -> np.ndarray:
    """One-step momentum operator S(p), excluding the e^{i alpha} phase."""
    pp = p + coin.gamma
    pdd = p + coin.delta
    cos_b = math.cos(coin.beta)
    sin_b = math.sin(coin.beta)
    return np.array(
        [[cos_b * cmath.exp(-1j * pp), sin_b * cmath.exp(-1j * pdd)],
         [-sin_b * cmath.exp(1j * pdd), cos_b * cmath.exp(1j * pp)]])


def decompose(coin: CoinParameters, p: float) -> ExponentialDecomposition:
    """Extract (theta, c) of S(p) = exp(i theta c.sigma).

    cos(theta) = cos(beta) cos(p') and, away from degeneracy,

        c1 = -sin(beta) sin(p'') / sin(theta)
        c2 =  sin(beta) cos(p'') / sin(theta)
        c3 = -cos(beta) sin(p')  / sin(theta).
    """
    pp = p + coin.gamma
    pdd = p + coin.delta
    cos_b = math.cos(coin.beta)
    sin_b = math.sin(coin.beta)
    x = min(1.0, max(-1.0, cos_b * math.cos(pp)))
    theta = math.acos(x)
    sin_t = math.sin(theta)
    if sin_t <= DEGENERATE_TOL:
        return ExponentialDecomposition(theta=theta, c=(0.0, 0.0, 1.0),
                                        degenerate=True)
    c = (-sin_b * math.sin(pdd) / sin_t,
         sin_b * math.cos(pdd) / sin_t,
         -cos_b * math.sin(pp) / sin_t)
    return ExponentialDecomposition(theta=theta, c=c)


def exponentiate(d: ExponentialDecomposition) -> np.ndarray:
    """Evaluate exp(i theta c.sigma) = I cos(theta) + i c.sigma sin(theta)."""
    c1, c2, c3 = d.c
    axis = c1 * PAULI_1 + c2 * PAULI_2 + c3 * PAULI_3
    return math.cos(d.theta) * IDENTITY_2 + 1j * math.sin(d.theta) * axis


def pauli_project(m) -> tuple[complex, complex, complex, complex]:
    """Coefficients of m in the basis (I, sigma_1, sigma_2, sigma_3).

    Uses the half-trace pairing r_i = Tr(sigma_i m) / 2, under which the
    basis is orthonormal; the coefficients reconstruct m exactly.
    """
    m = np.asarray(m, dtype=complex)
    return (complex(0.5 * np.trace(m)),
            complex(0.5 * np.trace(PAULI_1 @ m)),
            complex(0.5 * np.trace(PAULI_2 @ m)),
            complex(0.5 * np.trace(PAULI_3 @ m)))


def s_power_closed(coin: CoinParameters, p: float, n: int) -> np.ndarray:
    """S(p)^n from the Chebyshev pair at x = cos(beta) cos(p').

    S^n = [[T_n - i U_{n-1} cos(beta) sin(p'),  U_{n-1} sin(beta) e^{-i p''}],
           [-U_{n-1} sin(beta) e^{i p''},       T_n + i U_{n-1} cos(beta) sin(p')]]
    """
    if n < 0:
        raise ValueError(f"operator power requires n >= 0, got {n}")
    pp = p + coin.gamma
    pdd = p + coin.delta
    cos_b = math.cos(coin.beta)
    sin_b = math.sin(coin.beta)
    t_n, u_nm1 = cheb_pair(n, cos_b * math.cos(pp))
    diag = 1j * u_nm1 * cos_b * math.sin(pp)
    off = u_nm1 * sin_b
    return np.array(
        [[t_n - diag, off * cmath.exp(-1j * pdd)],
         [-off * cmath.exp(1j * pdd), t_n + diag]])


def s_power_oracle(coin: CoinParameters, p: float, n: int) -> np.ndarray:
    """S(p)^n by repeated matrix multiplication; the brute-force reference."""
    if n < 0:
        raise ValueError(f"operator power requires n >= 0, got {n}")
    s = s_matrix(coin, p)
    out = np.eye(2, dtype=complex)
    for _ in range(n):
        out = out @ s
    return out


def _closed_spinor(coin: CoinParameters, initial: np.ndarray, p, n: int):
    """phi(n, p) for scalar or array p, vectorized over p.

    With U = U_{n-1}(x), U+ = U_n(x), x = cos(beta) cos(p'):

        phi_0 = e^{i n alpha} [ (U+ - U cos(beta) e^{i p'})  psi_0
                                + U sin(beta) e^{-i p''}     psi_1 ]
        phi_1 = e^{i n alpha} [ -U sin(beta) e^{i p''}       psi_0
                                + (U+ - U cos(beta) e^{-i p'}) psi_1 ]
    """
    p = np.asarray(p, dtype=float)
    pp = p + coin.gamma
    pdd = p + coin.delta
    cos_b = math.cos(coin.beta)
    sin_b = math.sin(coin.beta)
    x = cos_b * np.cos(pp)
    t_n, u = cheb_pair(n, x)
    u_next = t_n + x * u  # U_n = T_n + x U_{n-1}
    diag_phase = cos_b * np.exp(1j * pp)
    off = u * sin_b
    phi0 = (u_next - u * diag_phase) * initial[0] + off * np.exp(-1j * pdd) * initial[1]
    phi1 = -off * np.exp(1j * pdd) * initial[0] + (u_next - u * np.conj(diag_phase)) * initial[1]
    phase = cmath.exp(1j * n * coin.alpha)
    return phase * np.stack([phi0, phi1], axis=-1)


def phi_closed(coin: CoinParameters, initial, p: float, n: int) -> np.ndarray:
    """Momentum wave function phi(n, p) = e^{i n alpha} S(p)^n psi(0,0) in closed form.

    Returns the two-component spinor (phi_0, phi_1).  Unitarity of S makes
    |phi_0|^2 + |phi_1|^2 equal the norm of `initial` at every (p, n).
    """
    if n < 0:
        raise ValueError(f"step count must be >= 0, got {n}")
    s = np.asarray(initial, dtype=complex)
    if s.shape != (2,):
        raise ValueError(f"initial spinor must have two components, got shape {s.shape}")
    return _closed_spinor(coin, s, float(p), n)


def momentum_density(phi):
    """Component densities (|phi_0|^2, |phi_1|^2) of a momentum spinor.

    Accepts a single spinor of shape (2,) or a stack of shape (..., 2).
    """
    phi = np.asarray(phi)
    d0 = np.abs(phi[..., 0]) ** 2
    d1 = np.abs(phi[..., 1]) ** 2
    if phi.ndim == 1:
        return float(d0), float(d1)
    return d0, d1


def sample_closed_form(coin: CoinParameters, initial, grid: MomentumGrid,
                       n: int) -> MomentumSamples:
    """Evaluate the closed-form wave function on every node of a grid."""
    if n < 0:
        raise ValueError(f"step count must be >= 0, got {n}")
    s = np.asarray(initial, dtype=complex)
    if s.shape != (2,):
        raise ValueError(f"initial spinor must have two components, got shape {s.shape}")
    values = _closed_spinor(coin, s, grid.nodes, n)
    return MomentumSamples(grid=grid, values=values, time=n, coin=coin,
                           initial=s.copy())
