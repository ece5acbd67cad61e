"""Domino wave API exceptions."""


class DominoWaveError(Exception):
    """Base class for domino wave errors."""


class InvalidParameterError(DominoWaveError):
    """Exception raised when an input violates an operation's precondition."""


class GeometryError(InvalidParameterError):
    """Exception raised when the chain geometry is degenerate or invalid."""


class EquilibriumError(InvalidParameterError):
    """Exception raised when a rod would start at rest on the unstable equilibrium."""


class RegimeError(InvalidParameterError):
    """Exception raised when an asymptotic formula is used outside its regime."""


class TraceMismatchError(InvalidParameterError):
    """Exception raised when a trace does not belong to the given inputs."""


class NumericalError(DominoWaveError):
    """Exception raised when a numerical method fails to converge."""
