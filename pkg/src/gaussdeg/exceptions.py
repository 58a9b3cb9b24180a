"""Exception hierarchy shared by every module of the package."""


class GaussDegError(Exception):
    """Base class for all package errors."""


class InvalidState(GaussDegError, ValueError):
    """A Gaussian state violates the uncertainty relation or a field domain."""


class InvalidCoupling(GaussDegError, ValueError):
    """A coupling matrix breaks the bosonic commutation constraints."""


class RegimeError(GaussDegError, ValueError):
    """A parameter lies outside the range an operation is defined on."""


class Unsupported(GaussDegError):
    """Couplings with q = 0 or q = 1 admit no guaranteed BS/amplifier form."""


class ParseError(GaussDegError, ValueError):
    """Input JSON is malformed or misses required fields."""
