"""Coined quantum walks on the integer line, in position and momentum space.

Two engines compute the same process: `position` iterates the walk
difference equations on the lattice, and `momentum` evaluates the n-step
evolution operator in closed form from a Chebyshev pair.  `transform`
carries states between the representations so each engine can check the
other, and `cli` exposes the whole thing as the `chebwalk` command.
"""

from .chebyshev import ChebPair, cheb_pair, cheb_t, cheb_u
from .coin import (IDENTITY_2, PAULI_1, PAULI_2, PAULI_3, CoinParameters,
                   eval_b_of_z, eval_c_of_z, paraconjugate_c)
from .momentum import (ExponentialDecomposition, decompose, exponentiate,
                       momentum_density, pauli_project, phi_closed, s_matrix,
                       s_power_closed, s_power_oracle, sample_closed_form)
from .position import (PositionState, evolve, initial_state, position_density,
                       step)
from .transform import (MomentumGrid, MomentumSamples, default_grid_size,
                        dtft, idft_to_position, make_grid)

__version__ = "0.1.0"

__all__ = [
    "ChebPair",
    "cheb_pair",
    "cheb_t",
    "cheb_u",
    "IDENTITY_2",
    "PAULI_1",
    "PAULI_2",
    "PAULI_3",
    "CoinParameters",
    "eval_b_of_z",
    "eval_c_of_z",
    "paraconjugate_c",
    "ExponentialDecomposition",
    "decompose",
    "exponentiate",
    "momentum_density",
    "pauli_project",
    "phi_closed",
    "s_matrix",
    "s_power_closed",
    "s_power_oracle",
    "sample_closed_form",
    "PositionState",
    "evolve",
    "initial_state",
    "position_density",
    "step",
    "MomentumGrid",
    "MomentumSamples",
    "default_grid_size",
    "dtft",
    "idft_to_position",
    "make_grid",
]
