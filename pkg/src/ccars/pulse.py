"""Chirped Gaussian pulses, chirp schedules and Wigner-Ville distributions.

Units follow the rest of the package: frequencies in units of the
vibrational transition frequency omega_21, times in 1/omega_21.

The spectral chirp ``alpha'`` (quadratic spectral phase rate) and the
temporal chirp ``alpha`` (instantaneous-frequency slope) of a Gaussian
pulse with transform-limited duration ``tau0`` are linked by

    alpha = alpha' / (tau0**4 + alpha'**2)
    tau   = tau0 * sqrt(1 + alpha'**2 / tau0**4)

so that ``alpha * tau**2 == alpha' / tau0**2``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import InvalidParameterError

__all__ = [
    "Role",
    "ScheduleMode",
    "PulseParams",
    "ChirpSchedule",
    "WignerSample",
    "temporal_chirp",
    "chirped_duration",
    "spectral_from_temporal",
    "envelope_at",
    "envelope_derivative",
    "instantaneous_chirp",
    "wigner_value",
    "wigner_grid",
    "ridge_argmax",
]


class Role(str, enum.Enum):
    PUMP = "pump"
    STOKES = "stokes"
    PROBE = "probe"
    ANTISTOKES = "antistokes"


class ScheduleMode(str, enum.Enum):
    CCARS = "ccars"
    CONSTANT_OPPOSITE = "constant_opposite"
    CONSTANT = "constant"
    CUSTOM = "custom"


def _check_tau0(tau0):
    if not tau0 > 0:
        raise InvalidParameterError(f"tau0 must be positive, got {tau0!r}")


def temporal_chirp(alpha_spectral: float, tau0: float) -> float:
    """Temporal chirp rate for a given spectral chirp and transform-limited duration."""
    _check_tau0(tau0)
    return alpha_spectral / (tau0**4 + alpha_spectral**2)


def chirped_duration(alpha_spectral: float, tau0: float) -> float:
    """Duration of the chirped pulse, ``tau0 * sqrt(1 + alpha'^2/tau0^4)``."""
    _check_tau0(tau0)
    return tau0 * math.sqrt(1.0 + alpha_spectral**2 / tau0**4)


def spectral_from_temporal(alpha: float, tau: float) -> tuple[float, float]:
    """Invert the chirp relations.

    Given the chirped duration ``tau`` and temporal chirp ``alpha`` returns
    ``(alpha_spectral, tau0)``. The inverse is unique because
    ``alpha * tau**2`` equals the dimensionless chirp ``alpha'/tau0**2``.
    """
    if not tau > 0:
        raise InvalidParameterError(f"tau must be positive, got {tau!r}")
    x = alpha * tau**2
    tau0 = tau / math.sqrt(1.0 + x * x)
    return x * tau0**2, tau0


@dataclass(frozen=True)
class PulseParams:
    """One Gaussian pulse.

    ``rabi_peak_tl`` is the transform-limited peak Rabi amplitude; chirping
    stretches the pulse to ``tau`` and lowers the peak so that the pulse
    energy is unchanged.
    """

    role: Role
    omega: float
    rabi_peak_tl: float
    tau0: float
    spectral_chirp: float = 0.0
    t_center: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "role", Role(self.role))
        _check_tau0(self.tau0)
        if self.rabi_peak_tl < 0:
            raise InvalidParameterError("rabi_peak_tl must be non-negative")
        if self.role is Role.ANTISTOKES and self.rabi_peak_tl != 0:
            raise InvalidParameterError(
                "the anti-Stokes field is generated, its initial amplitude must be 0"
            )

    @classmethod
    def from_chirped(cls, role, omega, rabi_peak_tl, tau, alpha, t_center=0.0):
        """Build a pulse from its chirped duration and temporal chirp."""
        alpha_spectral, tau0 = spectral_from_temporal(alpha, tau)
        return cls(role, omega, rabi_peak_tl, tau0, alpha_spectral, t_center)

    @property
    def tau(self) -> float:
        return chirped_duration(self.spectral_chirp, self.tau0)

    @property
    def alpha(self) -> float:
        """Temporal chirp implied by ``spectral_chirp``."""
        return temporal_chirp(self.spectral_chirp, self.tau0)

    @property
    def peak_reduction(self) -> float:
        """Factor ``(1 + alpha'^2/tau0^4)^(-1/4)`` applied to the TL peak."""
        return (1.0 + self.spectral_chirp**2 / self.tau0**4) ** -0.25

    @property
    def rabi_peak(self) -> float:
        return self.rabi_peak_tl * self.peak_reduction


def envelope_at(p: PulseParams, t):
    """Chirp-reduced Rabi envelope of ``p`` at time(s) ``t``."""
    s = np.asarray(t, dtype=float) - p.t_center
    return p.rabi_peak * np.exp(-(s**2) / (2.0 * p.tau**2))


def envelope_derivative(p: PulseParams, t):
    """Time derivative of :func:`envelope_at`."""
    s = np.asarray(t, dtype=float) - p.t_center
    return -s / p.tau**2 * envelope_at(p, t)


@dataclass(frozen=True)
class ChirpSchedule:
    """Piecewise temporal chirps of the pump, Stokes and probe pulses.

    The Stokes chirp ``alpha_s`` follows from ``alpha_s_spectral`` and
    ``tau0``. The probe always obeys ``alpha_pr = alpha_s - alpha_p``.

    ``ccars``
        ``alpha_p = -alpha_s`` for ``t <= t_center`` and ``+alpha_s`` after.
    ``constant_opposite``
        ``alpha_p = -alpha_s`` throughout.
    ``constant``
        ``alpha_p = +alpha_s`` throughout (probe unchirped).
    ``custom``
        ``stokes_fn(t)`` and ``pump_fn(t)`` give the temporal chirps.
    """

    mode: ScheduleMode
    alpha_s_spectral: float
    tau0: float
    t_center: float = 0.0
    stokes_fn: Optional[Callable] = None
    pump_fn: Optional[Callable] = None

    def __post_init__(self):
        object.__setattr__(self, "mode", ScheduleMode(self.mode))
        _check_tau0(self.tau0)
        if self.mode is ScheduleMode.CUSTOM and (self.stokes_fn is None or self.pump_fn is None):
            raise InvalidParameterError("custom schedule needs stokes_fn and pump_fn")

    @classmethod
    def from_temporal(cls, mode, alpha_s, tau, t_center=0.0):
        """Schedule whose Stokes pulse has duration ``tau`` and temporal chirp ``alpha_s``."""
        alpha_spectral, tau0 = spectral_from_temporal(alpha_s, tau)
        return cls(mode, alpha_spectral, tau0, t_center)

    @property
    def alpha_s(self) -> float:
        return temporal_chirp(self.alpha_s_spectral, self.tau0)

    def stokes(self, t, side="left"):
        t = np.asarray(t, dtype=float)
        if self.mode is ScheduleMode.CUSTOM:
            return np.asarray(self.stokes_fn(t), dtype=float) * np.ones_like(t)
        return np.full_like(t, self.alpha_s)

    def pump(self, t, side="left"):
        t = np.asarray(t, dtype=float)
        a = self.alpha_s
        if self.mode is ScheduleMode.CCARS:
            before = t <= self.t_center if side == "left" else t < self.t_center
            return np.where(before, -a, a)
        if self.mode is ScheduleMode.CONSTANT_OPPOSITE:
            return np.full_like(t, -a)
        if self.mode is ScheduleMode.CONSTANT:
            return np.full_like(t, a)
        return np.asarray(self.pump_fn(t), dtype=float) * np.ones_like(t)

    def probe(self, t, side="left"):
        return self.stokes(t, side) - self.pump(t, side)


def instantaneous_chirp(s: ChirpSchedule, role, t, side: str = "left"):
    """Temporal chirp of ``role`` at time(s) ``t`` under schedule ``s``.

    At exactly ``t == s.t_center`` the ``ccars`` switch belongs to the
    "before" branch; pass ``side="right"`` for the right-hand limit.
    """
    role = Role(role)
    if side not in ("left", "right"):
        raise InvalidParameterError(f"side must be 'left' or 'right', got {side!r}")
    if role is Role.PUMP:
        out = s.pump(t, side)
    elif role is Role.STOKES:
        out = s.stokes(t, side)
    elif role is Role.PROBE:
        out = s.probe(t, side)
    else:
        raise InvalidParameterError("no chirp is defined for the generated anti-Stokes field")
    return out[()] if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class WignerSample:
    t: float
    omega: float
    value: float


def wigner_value(p: PulseParams, t, omega, alpha=None):
    """Closed-form Wigner-Ville distribution of a linearly chirped Gaussian.

    ``alpha`` overrides the temporal chirp (scalar or array broadcastable
    against ``t``); by default the pulse's own ``alpha`` is used. The field
    amplitude is identified with ``p.rabi_peak_tl``.
    """
    t = np.asarray(t, dtype=float)
    omega = np.asarray(omega, dtype=float)
    a = p.alpha if alpha is None else np.asarray(alpha, dtype=float)
    tau = p.tau
    s = t - p.t_center
    shift = p.omega + a * s
    ridge = np.exp(-(tau**2) * (omega - shift) ** 2) + np.exp(-(tau**2) * (omega + shift) ** 2)
    out = 0.5 * tau * math.sqrt(math.pi) * p.rabi_peak_tl * np.exp(-(s**2) / tau**2) * ridge
    return out[()] if np.ndim(out) == 0 else out


def wigner_grid(p: PulseParams, times, omegas, schedule: Optional[ChirpSchedule] = None):
    """Evaluate the distribution on a ``len(times) x len(omegas)`` grid.

    With a ``schedule`` the instantaneous chirp of ``p.role`` is used at
    each time, otherwise the pulse's constant chirp.
    """
    times = np.asarray(times, dtype=float)
    omegas = np.asarray(omegas, dtype=float)
    if schedule is None:
        alpha = p.alpha
    else:
        alpha = np.asarray(instantaneous_chirp(schedule, p.role, times))[:, None]
    return wigner_value(p, times[:, None], omegas[None, :], alpha=alpha)


def ridge_argmax(values, omegas):
    """Frequency of the maximum of each row of a Wigner grid."""
    return np.asarray(omegas)[np.argmax(values, axis=1)]
