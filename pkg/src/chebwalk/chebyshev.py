"""Chebyshev polynomials T_n and U_n via the three-term recurrence.

The forward recurrence is the production path everywhere in this package:
on [-1, 1] its solutions stay on the unit circle, so it is stable for the
step counts used here (n up to 1e4), and it tolerates arguments that land
a rounding error outside the interval.  The trigonometric forms
cos(n*arccos x) and sin(n*arccos x)/sin(arccos x) appear only in tests.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

__all__ = ["ChebPair", "cheb_t", "cheb_u", "cheb_pair"]

# Arguments farther outside [-1, 1] than this are an error, not a rounding
# artifact: the walk only ever produces x = cos(beta) * cos(p').
CLAMP_TOL = 1e-12


class ChebPair(NamedTuple):
    """T_n(x) and U_{n-1}(x) evaluated together, with U_{-1} = 0.

    For |x| <= 1 the pair satisfies the Pell identity
    t_n**2 + (1 - x**2) * u_nm1**2 == 1.
    """

    t_n: float | np.ndarray
    u_nm1: float | np.ndarray


def _checked(x) -> tuple[np.ndarray, bool]:
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("argument must be finite")
    return arr, arr.ndim == 0


def _maybe_scalar(value: np.ndarray, scalar: bool):
    return float(value) if scalar else value


def cheb_t(n: int, x):
    """Evaluate T_n(x): T_0 = 1, T_1 = x, T_k = 2x T_{k-1} - T_{k-2}.

    `x` may be a float or an ndarray; the result matches its shape.
    """
    if n < 0:
        raise ValueError(f"T_n requires n >= 0, got {n}")
    arr, scalar = _checked(x)
    prev = np.ones_like(arr)
    if n == 0:
        return _maybe_scalar(prev, scalar)
    cur = arr.copy()
    for _ in range(n - 1):
        cur, prev = 2.0 * arr * cur - prev, cur
    return _maybe_scalar(cur, scalar)


def cheb_u(n: int, x):
    """Evaluate U_n(x): U_{-1} = 0, U_0 = 1, U_k = 2x U_{k-1} - U_{k-2}."""
    if n < -1:
        raise ValueError(f"U_n requires n >= -1, got {n}")
    arr, scalar = _checked(x)
    prev = np.zeros_like(arr)
    if n == -1:
        return _maybe_scalar(prev, scalar)
    cur = np.ones_like(arr)
    for _ in range(n):
        cur, prev = 2.0 * arr * cur - prev, cur
    return _maybe_scalar(cur, scalar)


def cheb_pair(n: int, x) -> ChebPair:
    """Return (T_n(x), U_{n-1}(x)) from a single recurrence pass.

    Runs the U recurrence once and recovers T_n = U_n - x * U_{n-1}.
    Accepts |x| up to CLAMP_TOL outside [-1, 1] (clamped); beyond that the
    argument cannot come from a walk and a ValueError is raised.
    """
    if n < 0:
        raise ValueError(f"cheb_pair requires n >= 0, got {n}")
    arr, scalar = _checked(x)
    if np.any(np.abs(arr) > 1.0 + CLAMP_TOL):
        raise ValueError("argument outside [-1, 1] beyond rounding tolerance")
    arr = np.clip(arr, -1.0, 1.0)
    u_prev = np.zeros_like(arr)  # U_{-1}
    u_cur = np.ones_like(arr)    # U_0
    for _ in range(n):
        u_cur, u_prev = 2.0 * arr * u_cur - u_prev, u_cur
    # after the loop: u_cur = U_n, u_prev = U_{n-1}
    t_n = u_cur - arr * u_prev
    return ChebPair(_maybe_scalar(t_n, scalar), _maybe_scalar(u_prev, scalar))
