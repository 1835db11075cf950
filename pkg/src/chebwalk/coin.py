"""The two-level coin and its transfer operators on the z plane.

A coin is the pair of amplitudes (a, b) with |a|^2 + |b|^2 = 1 plus a global
per-step phase alpha.  The amplitudes are parameterized by three angles,

    a = cos(beta) * exp(-i*gamma),
    b = sin(beta) * exp(-i*delta),

which is the form every momentum-space expression in this package is written
in.  2x2 complex matrices are plain numpy arrays throughout.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "IDENTITY_2",
    "PAULI_1",
    "PAULI_2",
    "PAULI_3",
    "CoinParameters",
    "eval_b_of_z",
    "eval_c_of_z",
    "paraconjugate_c",
]

IDENTITY_2 = np.eye(2, dtype=complex)
PAULI_1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

AMPLITUDE_NORM_TOL = 1e-9


def _reduce_angle(x: float) -> float:
    """Map an angle to the principal interval (-pi, pi]."""
    r = math.remainder(x, math.tau)
    if r <= -math.pi:
        r += math.tau
    return r


@dataclass(frozen=True)
class CoinParameters:
    """Coin angles and the amplitudes they induce.

    Immutable; build instances through `from_angles` or `from_amplitudes`
    so that (a, b) and (beta, gamma, delta) stay consistent.
    """

    beta: float
    gamma: float
    delta: float
    alpha: float
    a: complex
    b: complex

    @classmethod
    def from_angles(cls, beta: float, gamma: float = 0.0, delta: float = 0.0,
                    alpha: float = 0.0) -> "CoinParameters":
        """Build a coin from its angles, reduced to (-pi, pi]."""
        angles = (beta, gamma, delta, alpha)
        if not all(math.isfinite(v) for v in angles):
            raise ValueError("coin angles must be finite")
        beta, gamma, delta, alpha = (_reduce_angle(v) for v in angles)
        a = math.cos(beta) * cmath.exp(-1j * gamma)
        b = math.sin(beta) * cmath.exp(-1j * delta)
        return cls(beta, gamma, delta, alpha, a, b)

    @classmethod
    def from_amplitudes(cls, a: complex, b: complex,
                        alpha: float = 0.0) -> "CoinParameters":
        """Recover the angle form from amplitudes with |a|^2 + |b|^2 = 1.

        beta is canonicalized to [0, pi/2]; gamma and delta absorb the
        phases (and default to 0 when the matching amplitude vanishes).

        Raises
        ------
        ValueError
            If the amplitudes miss normalization by more than 1e-9.
        """
        a = complex(a)
        b = complex(b)
        norm = abs(a) ** 2 + abs(b) ** 2
        if abs(norm - 1.0) > AMPLITUDE_NORM_TOL:
            raise ValueError(
                f"coin amplitudes must satisfy |a|^2 + |b|^2 = 1, got {norm!r}")
        beta = math.atan2(abs(b), abs(a))
        gamma = -cmath.phase(a)   # phase(0) == 0, so b == 0 gives delta == 0
        delta = -cmath.phase(b)
        return cls.from_angles(beta, gamma, delta, alpha)


def eval_c_of_z(coin: CoinParameters, z: complex) -> np.ndarray:
    """Evaluate the matrix polynomial C(z) = [[a/z, b/z], [-b* z, a* z]].

    C has a pole at z = 0 and det C(z) = 1 for every other z.
    """
    z = complex(z)
    if z == 0:
        raise ValueError("C(z) has a pole at z = 0")
    zi = 1.0 / z
    return np.array(
        [[coin.a * zi, coin.b * zi],
         [-coin.b.conjugate() * z, coin.a.conjugate() * z]])


def eval_b_of_z(coin: CoinParameters, z1: complex, z2: complex) -> np.ndarray:
    """Evaluate the two-variable transfer matrix B(z1, z2) = e^{i alpha} z1^{-1} C(z2)."""
    z1 = complex(z1)
    if z1 == 0:
        raise ValueError("B(z1, z2) requires z1 != 0")
    return (cmath.exp(1j * coin.alpha) / z1) * eval_c_of_z(coin, z2)


def paraconjugate_c(coin: CoinParameters, z: complex) -> np.ndarray:
    """Paraconjugate of C: conjugate the coefficients, transpose, send z -> 1/z.

    With C(z) = A/z + B z this is A^H z + B^H / z, which inverts C(z) for
    every z != 0 (on the unit circle it reduces to the Hermitian adjoint).
    """
    z = complex(z)
    if z == 0:
        raise ValueError("paraconjugate has a pole at z = 0")
    zi = 1.0 / z
    return np.array(
        [[coin.a.conjugate() * z, -coin.b * zi],
         [coin.b.conjugate() * z, coin.a * zi]])
