"""Simulation of chirped-pulse control of vibrational coherence in CARS.

Four-level and super-effective two-level density-matrix dynamics under
piecewise-chirped pump, Stokes and probe pulses, dressed-state analysis,
coherence maps over pulse parameters and Wigner-Ville maps of the pulses.
"""

from .dressed import (
    analyze,
    dressed_energies,
    landau_zener_ratio,
    mixing_angle,
    nonadiabatic_param,
    rotation_matrix,
)
from .errors import (
    CCARSError,
    IntegrationDivergedError,
    InvalidParameterError,
    ReductionValidityWarning,
    ScanAbortedError,
    SingularReductionError,
    UndefinedAngleError,
)
from .hamiltonian import (
    CanonicalSetup,
    HamiltonianSpec,
    PulseSet,
    SystemParams,
    effective_rabis,
    h_ex,
    h_se,
    peak_effective_rabi,
    pump_amplitude_for,
)
from .propagator import TimeGrid, Trajectory, default_grid, final_state, propagate
from .pulse import (
    ChirpSchedule,
    PulseParams,
    Role,
    ScheduleMode,
    chirped_duration,
    envelope_at,
    instantaneous_chirp,
    ridge_argmax,
    temporal_chirp,
    wigner_grid,
    wigner_value,
)
from .scan import ScanAxis, ScanResult, scan_delta_chirp, scan_rabi_chirp

__version__ = "0.1.0"
