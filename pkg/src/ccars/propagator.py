"""Liouville-von Neumann propagation of 2x2 and 4x4 density matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .errors import IntegrationDivergedError, InvalidParameterError
from .hamiltonian import HamiltonianSpec, hamiltonian

__all__ = [
    "TimeGrid",
    "Trajectory",
    "ground_state",
    "density_matrix",
    "default_grid",
    "propagate",
    "final_state",
    "DEFAULT_STEPS",
    "TRACE_TOL",
    "HERMITICITY_TOL",
]

DEFAULT_STEPS = 40_000
TRACE_TOL = 1e-9
HERMITICITY_TOL = 1e-9

_METHODS = {"expm_midpoint": "expm_midpoint", "expm": "expm_midpoint", "rk4": "rk4"}


@dataclass(frozen=True)
class TimeGrid:
    t_start: float
    t_end: float
    n_steps: int

    def __post_init__(self):
        if not self.t_end > self.t_start:
            raise InvalidParameterError("t_end must exceed t_start")
        if int(self.n_steps) != self.n_steps or self.n_steps < 2:
            raise InvalidParameterError("n_steps must be an integer >= 2")

    @property
    def dt(self) -> float:
        return (self.t_end - self.t_start) / self.n_steps

    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, int(self.n_steps) + 1)


def default_grid(spec: HamiltonianSpec, n_steps: int = DEFAULT_STEPS, half_width: float = 5.0) -> TimeGrid:
    """Uniform grid over ``t_c +/- half_width * tau``."""
    tc, tau = spec.t_center, spec.tau
    return TimeGrid(tc - half_width * tau, tc + half_width * tau, n_steps)


def ground_state(dim: int) -> np.ndarray:
    rho = np.zeros((dim, dim), dtype=complex)
    rho[0, 0] = 1.0
    return rho


def density_matrix(entries, tol: float = TRACE_TOL) -> np.ndarray:
    """Validate and return ``entries`` as a complex density matrix."""
    rho = np.array(entries, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1] or rho.shape[0] not in (2, 4):
        raise InvalidParameterError(f"density matrix must be 2x2 or 4x4, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise InvalidParameterError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > tol:
        raise InvalidParameterError("density matrix does not have unit trace")
    if np.linalg.eigvalsh(rho).min() < -tol:
        raise InvalidParameterError("density matrix is not positive semidefinite")
    return rho


@dataclass
class Trajectory:
    """Sampled density matrices ``rho[k]`` at ``times[k]``."""

    times: np.ndarray
    rho: np.ndarray
    dressed: Optional[object] = None

    def __len__(self):
        return len(self.times)

    @property
    def dim(self) -> int:
        return self.rho.shape[-1]

    @property
    def populations(self) -> np.ndarray:
        return np.real(np.diagonal(self.rho, axis1=1, axis2=2))

    @property
    def coherence(self) -> np.ndarray:
        return self.rho[:, 0, 1]

    @property
    def coherence_mag(self) -> np.ndarray:
        return np.abs(self.coherence)

    @property
    def coherence_phase(self) -> np.ndarray:
        return np.angle(self.coherence)

    @property
    def trace_error(self) -> np.ndarray:
        return np.abs(np.trace(self.rho, axis1=1, axis2=2) - 1)

    @property
    def hermiticity_residual(self) -> np.ndarray:
        return np.max(np.abs(self.rho - np.conj(np.swapaxes(self.rho, 1, 2))), axis=(1, 2))

    @property
    def purity(self) -> np.ndarray:
        return np.real(np.einsum("kij,kji->k", self.rho, self.rho))


HamiltonianLike = Union[HamiltonianSpec, Callable[[np.ndarray], np.ndarray]]


def _evaluator(h: HamiltonianLike):
    if isinstance(h, HamiltonianSpec):
        return lambda t: hamiltonian(h, t)
    return lambda t: np.asarray(h(np.asarray(t, dtype=float)), dtype=complex)


def _step_unitaries(hmid: np.ndarray, dt: float) -> np.ndarray:
    w, v = np.linalg.eigh(hmid)
    phase = np.exp(-1j * dt * w)
    return np.einsum("nij,nj,nkj->nik", v, phase, v.conj())


def _commutator(h, rho):
    return -1j * (h @ rho - rho @ h)


def propagate(
    h: HamiltonianLike,
    rho0=None,
    grid: Optional[TimeGrid] = None,
    method: str = "expm_midpoint",
    n_steps: int = DEFAULT_STEPS,
    check: bool = True,
) -> Trajectory:
    """Integrate ``i d(rho)/dt = [H(t), rho]`` on a uniform grid.

    ``h`` is a :class:`HamiltonianSpec` or a vectorized callable mapping an
    array of times to stacked Hermitian matrices. ``rho0`` defaults to the
    ground state and ``grid`` to :func:`default_grid` (spec input only).

    ``expm_midpoint`` applies ``U = exp(-i H(t + dt/2) dt)`` per step, which
    keeps trace and Hermiticity to rounding; ``rk4`` integrates the
    commutator equation with classical Runge-Kutta.
    """
    try:
        method = _METHODS[method]
    except KeyError:
        raise InvalidParameterError(f"unknown method {method!r}") from None
    if grid is None:
        if not isinstance(h, HamiltonianSpec):
            raise InvalidParameterError("a TimeGrid is required for callable Hamiltonians")
        grid = default_grid(h, n_steps)
    evaluate = _evaluator(h)
    times = grid.times()
    dt = grid.dt

    probe = evaluate(times[:1])
    dim = probe.shape[-1]
    rho = ground_state(dim) if rho0 is None else density_matrix(rho0)
    if rho.shape != (dim, dim):
        raise InvalidParameterError(f"rho0 has shape {rho.shape}, Hamiltonian is {dim}x{dim}")

    n = len(times) - 1
    out = np.empty((n + 1, dim, dim), dtype=complex)
    out[0] = rho
    if method == "expm_midpoint":
        us = _step_unitaries(evaluate(times[:-1] + 0.5 * dt), dt)
        for k in range(n):
            u = us[k]
            rho = u @ rho @ u.conj().T
            out[k + 1] = rho
    else:
        half = evaluate(np.linspace(grid.t_start, grid.t_end, 2 * n + 1))
        for k in range(n):
            h0, hm, h1 = half[2 * k], half[2 * k + 1], half[2 * k + 2]
            k1 = _commutator(h0, rho)
            k2 = _commutator(hm, rho + 0.5 * dt * k1)
            k3 = _commutator(hm, rho + 0.5 * dt * k2)
            k4 = _commutator(h1, rho + dt * k3)
            rho = rho + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
            out[k + 1] = rho

    traj = Trajectory(times, out)
    if check:
        _check_invariants(traj)
    return traj


def _check_invariants(traj: Trajectory):
    bad = traj.trace_error > TRACE_TOL
    bad |= traj.hermiticity_residual > HERMITICITY_TOL
    bad |= ~np.isfinite(traj.rho).all(axis=(1, 2))
    if bad.any():
        k = int(np.argmax(bad))
        raise IntegrationDivergedError(
            f"density-matrix invariants violated at step {k} (t={traj.times[k]:.6g}); "
            "try more steps",
            step=k,
            time=float(traj.times[k]),
        )


def final_state(traj: Trajectory):
    """``(populations, |rho_12|)`` of the last sample."""
    if len(traj) == 0:
        raise InvalidParameterError("empty trajectory")
    return traj.populations[-1], float(traj.coherence_mag[-1])
