"""Fourier bridge between the lattice and the momentum circle.

Sign convention: phi(p) = sum_x psi(x) e^{-i p x}.  This is the unique
choice under which one walk step multiplies the sampled wave function by
e^{i alpha} S(p_k) at every node, with S(p) the momentum-space one-step
operator in `chebwalk.momentum`.

Both directions are direct O(grid * support) summations, which match the
defining sums exactly and are plenty at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coin import CoinParameters
from .position import PositionState

__all__ = [
    "MomentumGrid",
    "MomentumSamples",
    "make_grid",
    "default_grid_size",
    "dtft",
    "idft_to_position",
]


@dataclass(frozen=True)
class MomentumGrid:
    """Uniform half-open sampling of [-pi, pi) with M nodes.

    Node k sits at p_k = -pi + 2 pi k / M.  The half-open interval avoids
    sampling the circle point p = +/- pi twice.
    """

    size: int

    @property
    def nodes(self) -> np.ndarray:
        return -np.pi + (2.0 * np.pi / self.size) * np.arange(self.size)


@dataclass(frozen=True)
class MomentumSamples:
    """Spinor wave-function values on a momentum grid at a fixed time.

    `coin` and `initial` record provenance when the samples came from the
    closed-form engine; samples produced by `dtft` leave them as None.
    """

    grid: MomentumGrid
    values: np.ndarray  # shape (size, 2), complex
    time: int
    coin: CoinParameters | None = None
    initial: np.ndarray | None = None


def make_grid(size: int) -> MomentumGrid:
    if size < 1:
        raise ValueError(f"grid size must be >= 1, got {size}")
    return MomentumGrid(size=int(size))


def default_grid_size(steps: int) -> int:
    """Smallest power of two >= 2*steps + 2, alias-free for a steps-step walk."""
    if steps < 0:
        raise ValueError(f"step count must be >= 0, got {steps}")
    return 1 << (2 * steps + 1).bit_length()


def dtft(state: PositionState, grid: MomentumGrid) -> MomentumSamples:
    """Sample phi(p_k) = sum_x psi(x) e^{-i p_k x} on every grid node."""
    xs = state.sites
    phases = np.exp(-1j * np.outer(grid.nodes, xs))
    return MomentumSamples(grid=grid, values=phases @ state.amplitudes,
                           time=state.time)


def idft_to_position(samples: MomentumSamples,
                     support_halfwidth: int) -> PositionState:
    """Invert the transform onto x in [-support_halfwidth, support_halfwidth].

    psi(x) = (1/M) sum_k phi(p_k) e^{i p_k x}.  Exact (to rounding) whenever
    the samples came from a state supported inside the halfwidth and
    M >= 2*support_halfwidth + 1.

    Raises
    ------
    ValueError
        If the grid is too small for the requested support (aliasing).
    """
    if support_halfwidth < 0:
        raise ValueError(f"support halfwidth must be >= 0, got {support_halfwidth}")
    m = samples.grid.size
    if m < 2 * support_halfwidth + 1:
        raise ValueError(
            f"grid of size {m} aliases a support of halfwidth {support_halfwidth}; "
            f"need at least {2 * support_halfwidth + 1} nodes")
    xs = np.arange(-support_halfwidth, support_halfwidth + 1)
    phases = np.exp(1j * np.outer(xs, samples.grid.nodes))
    amps = (phases @ samples.values) / m
    return PositionState(time=samples.time, offset=-support_halfwidth,
                         amplitudes=amps)
