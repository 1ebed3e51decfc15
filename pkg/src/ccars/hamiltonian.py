"""Time-dependent Hamiltonians of the four-level CARS system (hbar = 1).

Basis ordering is |1> ground, |2> vibrational, |3> upper Stokes-side,
|4> upper anti-Stokes-side. All builders accept scalar or array times and
return matrices with shape ``t.shape + (N, N)``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from .errors import InvalidParameterError, ReductionValidityWarning, SingularReductionError
from .pulse import (
    ChirpSchedule,
    PulseParams,
    Role,
    ScheduleMode,
    chirped_duration,
    envelope_at,
    envelope_derivative,
)

__all__ = [
    "SystemParams",
    "PulseSet",
    "HamiltonianSpec",
    "EffectiveRabi",
    "CanonicalSetup",
    "effective_rabis",
    "effective_rabi_derivatives",
    "omega3_envelope",
    "peak_effective_rabi",
    "pump_amplitude_for",
    "h_se",
    "h_ex",
    "hamiltonian",
]

TWO_LEVEL = "two_level"
FOUR_LEVEL = "four_level"
_MODELS = {TWO_LEVEL: TWO_LEVEL, FOUR_LEVEL: FOUR_LEVEL, 2: TWO_LEVEL, 4: FOUR_LEVEL,
           "2": TWO_LEVEL, "4": FOUR_LEVEL}


def normalize_model(model) -> str:
    try:
        return _MODELS[model]
    except (KeyError, TypeError):
        raise InvalidParameterError(f"unknown model {model!r}") from None


@dataclass(frozen=True)
class SystemParams:
    """One-photon detunings and the two-photon detuning, in omega_21 units."""

    delta_s: float = 1.0
    delta_as: float = 1.0
    delta: float = 0.0


@dataclass(frozen=True)
class PulseSet:
    pump: PulseParams
    stokes: PulseParams
    probe: PulseParams
    antistokes: PulseParams

    def __post_init__(self):
        for name in ("pump", "stokes", "probe", "antistokes"):
            if getattr(self, name).role is not Role(name):
                raise InvalidParameterError(f"pulse in slot {name!r} has role {getattr(self, name).role.value!r}")

    def max_rabi_peak(self) -> float:
        return max(p.rabi_peak for p in (self.pump, self.stokes, self.probe, self.antistokes))


@dataclass(frozen=True)
class HamiltonianSpec:
    model: str
    pulses: PulseSet
    schedule: ChirpSchedule
    system: SystemParams

    def __post_init__(self):
        object.__setattr__(self, "model", normalize_model(self.model))

    @property
    def dim(self) -> int:
        return 2 if self.model == TWO_LEVEL else 4

    @property
    def t_center(self) -> float:
        return self.schedule.t_center

    @property
    def tau(self) -> float:
        """Longest chirped duration among the driving pulses."""
        return max(p.tau for p in (self.pulses.pump, self.pulses.stokes, self.pulses.probe))

    @property
    def cancellation_active(self) -> bool:
        """Whether the AC Stark shifts cancel identically (Omega_1 == Omega_2)."""
        ps, sys_ = self.pulses, self.system
        if sys_.delta_s != sys_.delta_as or ps.antistokes.rabi_peak_tl != 0:
            return False
        if not (ps.pump.tau == ps.stokes.tau == ps.probe.tau):
            return False
        if not (ps.pump.t_center == ps.stokes.t_center == ps.probe.t_center):
            return False
        p2 = ps.pump.rabi_peak**2
        return math.isclose(ps.stokes.rabi_peak**2 + ps.probe.rabi_peak**2, p2,
                            rel_tol=1e-12, abs_tol=1e-300)


class EffectiveRabi(NamedTuple):
    omega1: np.ndarray
    omega2: np.ndarray
    omega3: np.ndarray


def _check_detunings(system: SystemParams):
    if system.delta_s == 0 or system.delta_as == 0:
        raise SingularReductionError("one-photon detunings must be non-zero for the two-level reduction")


def effective_rabis(spec: HamiltonianSpec, t) -> EffectiveRabi:
    """Stark shifts Omega_1, Omega_2 and the effective coupling Omega_3."""
    _check_detunings(spec.system)
    ds, das = spec.system.delta_s, spec.system.delta_as
    ps = spec.pulses
    p, s, pr, a = (envelope_at(x, t) for x in (ps.pump, ps.stokes, ps.probe, ps.antistokes))
    o1 = np.abs(p) ** 2 / (4 * ds) + np.abs(a) ** 2 / (4 * das)
    o2 = np.abs(s) ** 2 / (4 * ds) + np.abs(pr) ** 2 / (4 * das)
    o3 = p * np.conj(s) / (4 * ds) + np.conj(pr) * a / (4 * das)
    return EffectiveRabi(o1, o2, o3)


def effective_rabi_derivatives(spec: HamiltonianSpec, t) -> EffectiveRabi:
    """Analytic time derivatives of :func:`effective_rabis` (real envelopes)."""
    _check_detunings(spec.system)
    ds, das = spec.system.delta_s, spec.system.delta_as
    ps = spec.pulses
    env = [envelope_at(x, t) for x in (ps.pump, ps.stokes, ps.probe, ps.antistokes)]
    der = [envelope_derivative(x, t) for x in (ps.pump, ps.stokes, ps.probe, ps.antistokes)]
    (p, s, pr, a), (dp, dsd, dpr, da) = env, der
    d1 = 2 * p * dp / (4 * ds) + 2 * a * da / (4 * das)
    d2 = 2 * s * dsd / (4 * ds) + 2 * pr * dpr / (4 * das)
    d3 = (dp * s + p * dsd) / (4 * ds) + (dpr * a + pr * da) / (4 * das)
    return EffectiveRabi(d1, d2, d3)


def peak_effective_rabi(omega_p0: float, delta: float) -> float:
    """Transform-limited peak coupling ``Omega_p0**2 / (4 sqrt(2) Delta)``."""
    if delta == 0:
        raise SingularReductionError("one-photon detuning must be non-zero")
    return omega_p0**2 / (4.0 * math.sqrt(2.0) * delta)


def pump_amplitude_for(omega3_target: float, delta: float) -> float:
    """Pump amplitude whose transform-limited peak coupling is ``omega3_target``."""
    if omega3_target < 0:
        raise InvalidParameterError("target peak coupling must be non-negative")
    if not delta > 0:
        raise InvalidParameterError("one-photon detuning must be positive")
    return math.sqrt(4.0 * math.sqrt(2.0) * delta * omega3_target)


def omega3_envelope(spec: HamiltonianSpec, t):
    """Closed form of the chirp-reduced effective coupling.

    ``Omega_3(0) * [(1+a_p'^2/tau0^4)(1+a_s'^2/tau0^4)]^(-1/4) * exp(-(t-t_c)^2/tau^2)``
    with ``Omega_3(0)`` built from transform-limited pump and Stokes
    amplitudes. Assumes pump and Stokes share ``tau0`` and ``t_center``.
    """
    _check_detunings(spec.system)
    p, s = spec.pulses.pump, spec.pulses.stokes
    o30 = p.rabi_peak_tl * s.rabi_peak_tl / (4 * spec.system.delta_s)
    red = ((1 + p.spectral_chirp**2 / p.tau0**4) * (1 + s.spectral_chirp**2 / s.tau0**4)) ** -0.25
    x = np.asarray(t, dtype=float) - p.t_center
    return o30 * red * np.exp(-(x**2) / (p.tau * s.tau))


def _stack(t, dim):
    t = np.asarray(t, dtype=float)
    return t, np.zeros(t.shape + (dim, dim), dtype=complex)


def h_se(spec: HamiltonianSpec, t, side: str = "left"):
    """Super-effective two-level Hamiltonian in the field-interaction frame."""
    t, h = _stack(t, 2)
    o1, o2, o3 = effective_rabis(spec, t)
    sched = spec.schedule
    net = sched.stokes(t, side) - sched.pump(t, side)
    d = spec.system.delta - net * (t - sched.t_center) + o1 - o2
    h[..., 0, 0] = 0.5 * d
    h[..., 1, 1] = -0.5 * d
    h[..., 0, 1] = o3
    h[..., 1, 0] = np.conj(o3)
    return h


def h_ex(spec: HamiltonianSpec, t, side: str = "left"):
    """Four-level field-interaction Hamiltonian with ``alpha_pr = alpha_s - alpha_p``."""
    t, h = _stack(t, 4)
    ps, sysp, sched = spec.pulses, spec.system, spec.schedule
    s = t - sched.t_center
    ap = sched.pump(t, side)
    a_s = sched.stokes(t, side)
    p, st, pr, a = (envelope_at(x, t) for x in (ps.pump, ps.stokes, ps.probe, ps.antistokes))
    h[..., 0, 0] = ap * s
    h[..., 1, 1] = a_s * s - sysp.delta
    h[..., 2, 2] = -sysp.delta_s
    h[..., 3, 3] = ap * s - sysp.delta_as
    for (i, j), env in (((0, 2), p), ((0, 3), a), ((1, 2), st), ((1, 3), pr)):
        h[..., i, j] = 0.5 * env
        h[..., j, i] = 0.5 * np.conj(env)
    return h


def hamiltonian(spec: HamiltonianSpec, t, side: str = "left"):
    """Dispatch to :func:`h_se` or :func:`h_ex` according to ``spec.model``."""
    return h_se(spec, t, side) if spec.model == TWO_LEVEL else h_ex(spec, t, side)


@dataclass(frozen=True)
class CanonicalSetup:
    """Flat parameter record for the canonical C-CARS configuration.

    Amplitudes satisfy the Stark-shift cancellation condition
    (Stokes = probe = pump/sqrt(2), no anti-Stokes seed); the pump amplitude
    is derived from the requested transform-limited peak coupling
    ``omega3_peak``. ``chirp`` is the dimensionless spectral chirp
    ``alpha_s' / tau0**2`` of the Stokes pulse. Pump and probe carry the same
    spectral chirp magnitude so that all envelopes coincide.

    ``window`` is the half-width of the integration window in units of the
    chirped duration; the pulses are centred at ``window * tau``.
    """

    omega3_peak: float = 5.0
    tau0: float = 10.0
    chirp: float = -7.5
    delta: float = 0.0
    delta_s: float = 1.0
    delta_as: float = 1.0
    mode: str = "ccars"
    model: str = TWO_LEVEL
    window: float = 5.0
    omega_p: float = 4.0
    omega_s: float = 3.0
    omega_pr: float = 4.0

    def replace(self, **changes) -> "CanonicalSetup":
        return replace(self, **changes)

    @property
    def alpha_s_spectral(self) -> float:
        return self.chirp * self.tau0**2

    @property
    def tau(self) -> float:
        return chirped_duration(self.alpha_s_spectral, self.tau0)

    @property
    def t_center(self) -> float:
        return self.window * self.tau

    def spec(self, warn: bool = True) -> HamiltonianSpec:
        if self.delta_s == 0:
            raise SingularReductionError("one-photon detuning must be non-zero")
        if self.window <= 0:
            raise InvalidParameterError("window must be positive")
        omega_p0 = pump_amplitude_for(self.omega3_peak, self.delta_s)
        a_sp = self.alpha_s_spectral
        tc = self.t_center
        # only |alpha'| enters the envelopes; the pump sign follows the early ccars branch
        pulses = PulseSet(
            pump=PulseParams(Role.PUMP, self.omega_p, omega_p0, self.tau0, -a_sp, tc),
            stokes=PulseParams(Role.STOKES, self.omega_s, omega_p0 / math.sqrt(2), self.tau0, a_sp, tc),
            probe=PulseParams(Role.PROBE, self.omega_pr, omega_p0 / math.sqrt(2), self.tau0, a_sp, tc),
            antistokes=PulseParams(Role.ANTISTOKES, self.omega_p - self.omega_s + self.omega_pr,
                                   0.0, self.tau0, 0.0, tc),
        )
        spec = HamiltonianSpec(
            model=self.model,
            pulses=pulses,
            schedule=ChirpSchedule(ScheduleMode(self.mode), a_sp, self.tau0, tc),
            system=SystemParams(self.delta_s, self.delta_as, self.delta),
        )
        if warn and spec.model == TWO_LEVEL:
            peak = pulses.max_rabi_peak()
            if peak >= min(abs(self.delta_s), abs(self.delta_as)):
                warnings.warn(
                    f"peak Rabi amplitude {peak:.3g} is not small against the one-photon "
                    f"detuning; the two-level reduction may be inaccurate",
                    ReductionValidityWarning,
                    stacklevel=2,
                )
        return spec
