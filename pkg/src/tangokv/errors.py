"""Exception hierarchy shared by every tangokv module."""


class TangoKVError(Exception):
    """Base class for all errors raised by tangokv."""


class PrecisionExhausted(TangoKVError, ArithmeticError):
    """All stored coefficients of a truncated series are zero."""


class NoConvergence(TangoKVError, ArithmeticError):
    """Newton/Hensel lifting cannot proceed from the given seed."""


class ParamViolation(TangoKVError, ValueError):
    """Family parameters break the family's constraints."""


class SmoothnessFailure(TangoKVError, ValueError):
    """The curve model has a singular point."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class FrobeniusKernel(TangoKVError, ValueError):
    """df vanishes identically: the function is a p-th power."""


class SupportLeak(TangoKVError, RuntimeError):
    """Valuations did not add up to the expected degree; a place was missed."""


class PreconditionViolation(TangoKVError, ValueError):
    pass


class NotTango(PreconditionViolation):
    """A construction needs n(C) > 0."""


class DivisibilityFailure(PreconditionViolation):
    """The base divisor is not divisible by 2 (p >= 3) or 3 (p = 2)."""


class InputNotInScope(TangoKVError, ValueError):
    """The classifier cannot decide ampleness of the input class."""


class NotLogTerminal(TangoKVError, ValueError):
    """A blow-up produced a discrepancy <= -1."""


class UnsupportedConfiguration(TangoKVError, ValueError):
    """Boundary configuration outside the smooth, disjoint case."""
