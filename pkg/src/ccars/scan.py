"""Two-dimensional sweeps of the end-of-pulse vibrational coherence."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from .errors import CCARSError, InvalidParameterError, ScanAbortedError
from .hamiltonian import TWO_LEVEL, CanonicalSetup, normalize_model
from .propagator import DEFAULT_STEPS, final_state, propagate

__all__ = [
    "ScanAxis",
    "ScanResult",
    "point_coherence",
    "scan_rabi_chirp",
    "scan_delta_chirp",
    "resolve_workers",
    "MAX_FAILURE_FRACTION",
]

log = logging.getLogger(__name__)

MAX_FAILURE_FRACTION = 0.01
_AXIS_FIELDS = {"omega3_peak": "omega3_peak", "chirp_dimensionless": "chirp", "delta": "delta"}


@dataclass(frozen=True)
class ScanAxis:
    name: str
    min: float
    max: float
    n: int

    def __post_init__(self):
        if self.name not in _AXIS_FIELDS:
            raise InvalidParameterError(f"unknown scan axis {self.name!r}")
        if self.min > self.max:
            raise InvalidParameterError("axis min must not exceed max")
        if int(self.n) != self.n or self.n < 1:
            raise InvalidParameterError("axis needs n >= 1 points")

    def values(self) -> np.ndarray:
        if self.n == 1:
            return np.array([float(self.min)])
        return np.linspace(self.min, self.max, int(self.n))


@dataclass
class ScanResult:
    """Final ``|rho_12|`` on ``axis1 x axis2``; failed points hold NaN."""

    axis1: ScanAxis
    axis2: ScanAxis
    values: np.ndarray
    model: str
    fixed_params: dict
    errors: list = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not np.isnan(self.values).any()


def point_coherence(setup: CanonicalSetup, method: str = "expm_midpoint",
                    n_steps: int = DEFAULT_STEPS) -> float:
    """Final ``|rho_12|`` of a single ground-state propagation."""
    traj = propagate(setup.spec(warn=False), method=method, n_steps=n_steps)
    return final_state(traj)[1]


def resolve_workers(workers: Optional[int] = None) -> int:
    """Worker count; ``None`` reads ``CCARS_THREADS`` (0 or unset means all CPUs)."""
    if workers is None:
        try:
            workers = int(os.environ.get("CCARS_THREADS", "0") or 0)
        except ValueError:
            raise InvalidParameterError("CCARS_THREADS must be an integer") from None
    if workers < 0:
        raise InvalidParameterError("worker count must be non-negative")
    return workers or (os.cpu_count() or 1)


def _row(args):
    setup, name1, v1, name2, values2, method, n_steps = args
    out, errs = [], []
    for v2 in values2:
        s = setup.replace(**{name1: float(v1), name2: float(v2)})
        try:
            out.append(point_coherence(s, method, n_steps))
        except CCARSError as exc:
            out.append(np.nan)
            errs.append({name1: float(v1), name2: float(v2), "error": str(exc)})
    return out, errs


def _run(base: CanonicalSetup, ax1: ScanAxis, ax2: ScanAxis, method, n_steps, workers) -> ScanResult:
    name1, name2 = _AXIS_FIELDS[ax1.name], _AXIS_FIELDS[ax2.name]
    v1s, v2s = ax1.values(), ax2.values()
    jobs = [(base, name1, v, name2, v2s, method, n_steps) for v in v1s]
    workers = min(resolve_workers(workers), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row, jobs))
    else:
        rows = [_row(j) for j in jobs]
    values = np.array([r[0] for r in rows], dtype=float).reshape(len(v1s), len(v2s))
    errors = [e for r in rows for e in r[1]]
    for e in errors:
        log.warning("scan point failed: %s", e)
    if len(errors) > MAX_FAILURE_FRACTION * values.size:
        raise ScanAbortedError(f"{len(errors)} of {values.size} grid points failed; first: {errors[0]}")
    fixed = asdict(base)
    fixed.update(method=method, n_steps=n_steps)
    return ScanResult(ax1, ax2, values, base.model, fixed, errors)


def scan_rabi_chirp(base: CanonicalSetup, ax_rabi: ScanAxis, ax_chirp: ScanAxis,
                    model=None, method: str = "expm_midpoint", n_steps: int = DEFAULT_STEPS,
                    workers: Optional[int] = None) -> ScanResult:
    """Coherence map over peak coupling and dimensionless spectral chirp.

    For the four-level model the pump amplitude at each point follows from
    the peak-coupling axis with ``delta_s = delta_as``.
    """
    if ax_rabi.name != "omega3_peak" or ax_chirp.name != "chirp_dimensionless":
        raise InvalidParameterError("expected omega3_peak and chirp_dimensionless axes")
    if model is not None:
        base = base.replace(model=normalize_model(model))
    if normalize_model(base.model) != TWO_LEVEL and base.delta_s != base.delta_as:
        raise InvalidParameterError("four-level Rabi/chirp scans need delta_s == delta_as")
    return _run(base, ax_rabi, ax_chirp, method, n_steps, workers)


def scan_delta_chirp(base: CanonicalSetup, ax_delta: ScanAxis, ax_chirp: ScanAxis,
                     method: str = "expm_midpoint", n_steps: int = DEFAULT_STEPS,
                     workers: Optional[int] = None) -> ScanResult:
    """Coherence map over two-photon detuning and dimensionless spectral chirp."""
    if ax_delta.name != "delta" or ax_chirp.name != "chirp_dimensionless":
        raise InvalidParameterError("expected delta and chirp_dimensionless axes")
    return _run(base, ax_delta, ax_chirp, method, n_steps, workers)
