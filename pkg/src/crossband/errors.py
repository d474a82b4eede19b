"""Exception hierarchy shared by all solver modules."""


class CrossbandError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(CrossbandError, ValueError):
    """Invalid argument values (bounds, degrees, sizes)."""


class DomainError(CrossbandError, ValueError):
    """Input outside the mathematical domain of an operation."""


class AssemblyError(CrossbandError, RuntimeError):
    """Failure while building discrete operators (e.g. non-finite potential)."""


class NumericError(CrossbandError, RuntimeError):
    """Numerical failure in an eigensolver or downstream check."""
