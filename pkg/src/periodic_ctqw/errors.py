"""Exception hierarchy for the walk library."""


class CtqwError(Exception):
    """Base class for all library errors."""


class DomainError(CtqwError):
    """Argument outside the mathematical domain of a spectral function."""


class RegimeError(CtqwError):
    """Operation requested in a coupling regime where it is undefined."""


class QuadratureError(CtqwError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class EigenError(CtqwError):
    """Eigendecomposition of the truncated Hamiltonian failed."""


class MassError(CtqwError):
    """Distribution carries too little probability mass for the request."""
