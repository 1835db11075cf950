"""Direct iteration of the walk difference equations on the integer line.

One step maps the spinor field psi(t, .) to

    psi_0(t+1, x) = e^{i alpha} [ a psi_0(t, x-1) + b psi_1(t, x-1) ]
    psi_1(t+1, x) = e^{i alpha} [ -b* psi_0(t, x+1) + a* psi_1(t, x+1) ]

so amplitude in component 0 moves right and component 1 moves left.  This
module is the ground truth that the closed-form momentum engine is checked
against.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .coin import CoinParameters

__all__ = [
    "PositionState",
    "initial_state",
    "step",
    "evolve",
    "position_density",
]

SPINOR_NORM_TOL = 1e-12


@dataclass(frozen=True)
class PositionState:
    """Walk amplitudes at a fixed time, stored densely over the reachable sites.

    `amplitudes[i]` is the two-component spinor at lattice site `offset + i`.
    States produced by `step` cover exactly [-t, t]; sites of the wrong
    parity hold exact zeros (they are never written).
    """

    time: int
    offset: int
    amplitudes: np.ndarray  # shape (n_sites, 2), complex

    @property
    def sites(self) -> np.ndarray:
        """Lattice coordinates of the stored amplitudes, ascending."""
        return self.offset + np.arange(self.amplitudes.shape[0])

    def total_probability(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


def initial_state(spinor) -> PositionState:
    """Place a normalized spinor at the origin at time 0.

    Raises
    ------
    ValueError
        If `spinor` is not a two-component vector with unit norm (1e-12).
    """
    s = np.asarray(spinor, dtype=complex)
    if s.shape != (2,):
        raise ValueError(f"initial spinor must have two components, got shape {s.shape}")
    norm = abs(s[0]) ** 2 + abs(s[1]) ** 2
    if abs(norm - 1.0) > SPINOR_NORM_TOL:
        raise ValueError(f"initial spinor must be normalized, got |psi|^2 = {norm!r}")
    return PositionState(time=0, offset=0, amplitudes=s.reshape(1, 2).copy())


def step(state: PositionState, coin: CoinParameters) -> PositionState:
    """Advance the walk by one time step, returning a fresh state.

    Support grows by one site on each side; total probability is preserved
    because the coin is unitary.
    """
    amps = state.amplitudes
    n_sites = amps.shape[0]
    phase = cmath.exp(1j * coin.alpha)
    out = np.zeros((n_sites + 2, 2), dtype=complex)
    # component 0 arrives from x-1, component 1 from x+1
    out[2:, 0] = phase * (coin.a * amps[:, 0] + coin.b * amps[:, 1])
    out[:n_sites, 1] = phase * (-coin.b.conjugate() * amps[:, 0]
                                + coin.a.conjugate() * amps[:, 1])
    return PositionState(time=state.time + 1, offset=state.offset - 1, amplitudes=out)


def evolve(state: PositionState, coin: CoinParameters, n: int) -> PositionState:
    """Apply `step` n times; n = 0 returns the input unchanged."""
    if n < 0:
        raise ValueError(f"step count must be >= 0, got {n}")
    for _ in range(n):
        state = step(state, coin)
    return state


def position_density(state: PositionState) -> list[tuple[int, float]]:
    """Per-site probabilities |psi_0|^2 + |psi_1|^2, ascending in x.

    Only sites of the reachable parity (x - t even) are reported; the
    parity-forced zeros in between are omitted.
    """
    probs = np.sum(np.abs(state.amplitudes) ** 2, axis=1)
    return [(int(x), float(p))
            for x, p in zip(state.sites, probs)
            if (int(x) - state.time) % 2 == 0]
