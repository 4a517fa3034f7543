"""Exception hierarchy shared by every module."""


class SepticaError(Exception):
    """Base class for all library errors."""


class InvalidPrecisionError(SepticaError, ValueError):
    pass


class DomainError(SepticaError, ValueError):
    pass


class NonFiniteError(SepticaError, ArithmeticError):
    pass


class NonConvergenceError(SepticaError, ArithmeticError):
    pass


class UnknownInvariantError(SepticaError, LookupError):
    pass


class RegistryError(SepticaError, LookupError):
    pass


class UnexpectedDiscriminantError(SepticaError, ArithmeticError):
    pass


class AmbiguousOrientationError(SepticaError, ArithmeticError):
    """Both root orientations match the target within the separation margin.

    Raised when the working precision is too low to decide; retry with more
    digits.
    """

    def __init__(self, message, digits=None):
        super().__init__(message)
        self.digits = digits


class ConstructionError(SepticaError, ArithmeticError):
    """A closed-form expression hit a negative radicand under an even root."""


class CacheParseError(SepticaError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
