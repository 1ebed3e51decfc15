"""Dressed-state analysis of the super-effective two-level system.

With the Stark shifts cancelled the two-level Hamiltonian is
``H = 1/2 [[D, 2 W], [2 W, -D]]`` with ``D = delta - alpha_pr (t - t_c)`` and
``W`` the effective coupling. The rotation ``T(theta) = [[c, -s], [s, c]]``
with ``theta = atan2(2 W, -D) / 2`` brings it to ``diag(-S/2, S/2)``,
``S = sqrt(D**2 + 4 W**2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, UndefinedAngleError
from .hamiltonian import (
    TWO_LEVEL,
    HamiltonianSpec,
    effective_rabi_derivatives,
    effective_rabis,
    h_se,
)
from .propagator import Trajectory

__all__ = [
    "DressedSeries",
    "rotation_matrix",
    "mixing_angle",
    "nonadiabatic_param",
    "nonadiabatic_numerator",
    "dressed_energies",
    "bare_energies",
    "landau_zener_ratio",
    "adiabaticity_ratio",
    "analyze",
    "dressed_populations",
]


def _require_cancellation(spec: HamiltonianSpec):
    if not spec.cancellation_active:
        raise InvalidParameterError("dressed-state analysis requires cancelled Stark shifts")


def _detuning_and_coupling(spec: HamiltonianSpec, t, side):
    t = np.asarray(t, dtype=float)
    sched = spec.schedule
    a_pr = sched.probe(t, side)
    x = -spec.system.delta + a_pr * (t - sched.t_center)
    w = np.real(effective_rabis(spec, t).omega3)
    return t, x, w, a_pr


def rotation_matrix(theta):
    """``T(theta)``, stacked over the shape of ``theta``."""
    theta = np.asarray(theta, dtype=float)
    c, s = np.cos(theta), np.sin(theta)
    return np.stack([np.stack([c, -s], -1), np.stack([s, c], -1)], -2)


def mixing_angle(spec: HamiltonianSpec, t, side: str = "left"):
    """Angle of the rotation that diagonalizes the two-level Hamiltonian."""
    _require_cancellation(spec)
    t, x, w, _ = _detuning_and_coupling(spec, t, side)
    if np.any((x == 0) & (w == 0)):
        raise UndefinedAngleError("mixing angle undefined where coupling and detuning both vanish")
    out = 0.5 * np.arctan2(2 * w, x)
    return out[()] if out.ndim == 0 else out


def nonadiabatic_numerator(spec: HamiltonianSpec, t, side: str = "left"):
    """Numerator ``x dW/dt - W dx/dt`` of the non-adiabatic parameter.

    ``x = -delta + alpha_pr (t - t_c)``; bitwise zero wherever both the
    two-photon detuning and the probe chirp vanish.
    """
    _require_cancellation(spec)
    t, x, w, a_pr = _detuning_and_coupling(spec, t, side)
    dw = np.real(effective_rabi_derivatives(spec, t).omega3)
    out = x * dw - w * a_pr
    return out[()] if out.ndim == 0 else out


def nonadiabatic_param(spec: HamiltonianSpec, t, side: str = "left"):
    """Rate of change of the mixing angle, ``d(theta)/dt``.

    ``(x dW/dt - W alpha_pr) / (x**2 + 4 W**2)``. At the chirp switch of
    the ``ccars`` schedule use ``side`` to select the left or right limit.
    """
    t, x, w, _ = _detuning_and_coupling(spec, t, side)
    den = x * x + 4 * w * w
    if np.any(den == 0):
        raise UndefinedAngleError("non-adiabatic parameter undefined at zero splitting")
    out = nonadiabatic_numerator(spec, t, side) / den
    return out[()] if np.ndim(out) == 0 else out


def dressed_energies(spec: HamiltonianSpec, t, side: str = "left"):
    """``(lambda_1, lambda_2) = (-S/2, +S/2)``."""
    _require_cancellation(spec)
    _, x, w, _ = _detuning_and_coupling(spec, t, side)
    half = 0.5 * np.sqrt(x * x + 4 * w * w)
    return -half, half


def bare_energies(spec: HamiltonianSpec, t, side: str = "left"):
    """Diagonal entries of the two-level Hamiltonian."""
    h = h_se(spec, t, side)
    return np.real(h[..., 0, 0]), np.real(h[..., 1, 1])


def landau_zener_ratio(omega3_peak: float, alpha_p_temporal: float) -> float:
    """``omega3_peak**2 / |alpha_p|``; ``math.inf`` flags the unchirped limit."""
    if alpha_p_temporal == 0:
        return math.inf
    return omega3_peak**2 / abs(alpha_p_temporal)


@dataclass
class DressedSeries:
    t: np.ndarray
    theta: np.ndarray
    theta_dot: np.ndarray
    lambda1: np.ndarray
    lambda2: np.ndarray
    e1: np.ndarray
    e2: np.ndarray

    def adiabaticity(self) -> float:
        """``max |theta_dot| / (lambda_2 - lambda_1)`` over the samples."""
        gap = self.lambda2 - self.lambda1
        with np.errstate(divide="ignore", invalid="ignore"):
            r = np.abs(self.theta_dot) / gap
        return float(np.nanmax(np.where(gap > 0, r, np.inf)))


def analyze(spec: HamiltonianSpec, t) -> DressedSeries:
    """Dressed-frame quantities along ``t``, with ``theta`` unwrapped in time."""
    if spec.model != TWO_LEVEL:
        raise InvalidParameterError("dressed-state analysis is defined for the two-level model")
    t = np.atleast_1d(np.asarray(t, dtype=float))
    theta = mixing_angle(spec, t)
    theta = 0.5 * np.unwrap(2 * np.atleast_1d(theta))
    l1, l2 = dressed_energies(spec, t)
    e1, e2 = bare_energies(spec, t)
    return DressedSeries(t, theta, np.atleast_1d(nonadiabatic_param(spec, t)), l1, l2, e1, e2)


def adiabaticity_ratio(spec: HamiltonianSpec, t) -> float:
    return analyze(spec, t).adiabaticity()


def dressed_populations(traj: Trajectory, spec: HamiltonianSpec) -> np.ndarray:
    """Diagonal of ``T rho T^dagger`` for each sample of a two-level trajectory."""
    if traj.dim != 2:
        raise InvalidParameterError("dressed populations need a two-level trajectory")
    tm = rotation_matrix(mixing_angle(spec, traj.times))
    rd = tm @ traj.rho @ np.swapaxes(tm, 1, 2)
    return np.real(np.diagonal(rd, axis1=1, axis2=2))
