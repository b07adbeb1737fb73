"""Spectral solutions of the Dirichlet wave equation.

A state holds the modal coefficients (c, d) of the initial data
u(0) = sum c_k e_k, u_t(0) = sum d_k e_k.  The solution is
    u(t) = sum [c_k cos(w_k t) + (d_k / w_k) sin(w_k t)] e_k,  w_k = sqrt(g_k),
so evolution, norms, and prolongation are all exact coefficient operations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import target_rectangle
from .spectral import EigenBasis


@dataclass(frozen=True)
class WaveState:
    """Modal initial data for the wave equation on a basis domain."""

    basis: EigenBasis
    c: np.ndarray
    d: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.c, dtype=float).reshape(-1)
        d = np.asarray(self.d, dtype=float).reshape(-1)
        if c.size != self.basis.n_modes or d.size != self.basis.n_modes:
            raise ValueError("coefficient length must equal the mode count")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @property
    def omega(self) -> np.ndarray:
        return np.sqrt(self.basis.eigenvalues())


def evolve_coefficients(state: WaveState, t) -> tuple[np.ndarray, np.ndarray]:
    """Position and velocity coefficients at time t (scalar or array).

    Returns arrays shaped (n_modes,) for scalar t, else (len(t), n_modes).
    """
    t = np.asarray(t, dtype=float)
    w = state.omega
    phase = np.multiply.outer(t, w)
    cos_p, sin_p = np.cos(phase), np.sin(phase)
    pos = state.c * cos_p + (state.d / w) * sin_p
    vel = -state.c * w * sin_p + state.d * cos_p
    return pos, vel


def evaluate_solution(state: WaveState, t: float, points) -> np.ndarray:
    """Pointwise solution values u(t, x) at the given points."""
    pos, _ = evolve_coefficients(state, float(t))
    return state.basis.evaluate(points) @ pos


def l2_norm_sq(state: WaveState) -> float:
    """Squared L^2 norm of the position data (the basis is orthonormal)."""
    return float(state.c @ state.c)


def hminus1_norm_sq(state: WaveState) -> float:
    """Squared H^-1 norm of the velocity data: sum d_k^2 / g_k."""
    return float(np.sum(state.d**2 / state.basis.eigenvalues()))


def prolong_state(state: WaveState, n_tiles: int | None = None) -> WaveState:
    """Prolong a triangle state to the rectangle the triangle tiles.

    The prolonged solution expands over the folded modes read on the
    rectangle with coefficients N * (c, d): each folded mode repeats through
    all N tiles, so the modal frame gains one factor of N per copy and the
    squared norms gain N^2.  Evolution commutes with this scaling because the
    eigenvalues are shared.
    """
    if state.basis.kind != "triangle":
        raise ValueError("only triangle states can be prolonged")
    n = n_tiles if n_tiles is not None else state.basis.tiling.n_tiles
    big = state.basis.with_domain(target_rectangle())
    return WaveState(basis=big, c=n * state.c, d=n * state.d)


def random_state(basis: EigenBasis, seed: int = 0, scale: float = 1.0) -> WaveState:
    """A reproducible random state with standard normal coefficients."""
    rng = np.random.default_rng(seed)
    return WaveState(
        basis=basis,
        c=scale * rng.standard_normal(basis.n_modes),
        d=scale * rng.standard_normal(basis.n_modes),
    )
