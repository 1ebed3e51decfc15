"""Exception and warning types raised by the simulator."""


class CCARSError(Exception):
    """Base class for all simulator errors."""


class InvalidParameterError(CCARSError, ValueError):
    """A parameter violates the documented domain of an operation."""


class SingularReductionError(CCARSError, ZeroDivisionError):
    """Adiabatic elimination needs non-zero one-photon detunings."""


class UndefinedAngleError(CCARSError, ArithmeticError):
    """Mixing angle undefined: zero coupling at zero effective detuning."""


class IntegrationDivergedError(CCARSError, RuntimeError):
    """Density-matrix invariants broke during time stepping."""

    def __init__(self, message, step=None, time=None):
        super().__init__(message)
        self.step = step
        self.time = time


class ScanAbortedError(CCARSError, RuntimeError):
    """Too many grid points failed during a parameter sweep."""


class ReductionValidityWarning(UserWarning):
    """One-photon detuning is not large compared to the peak Rabi amplitudes."""
