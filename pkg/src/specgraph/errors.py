"""Exception types shared across the package."""


class SpecGraphError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(SpecGraphError, ValueError):
    """Invalid construction parameters (bad family sizes, bad vertex sets, ...)."""


class OrderCapError(ParameterError):
    """A graph exceeds the order cap of an exhaustive operation."""


class Graph6Error(SpecGraphError, ValueError):
    """Malformed graph6 input."""


class SingularMatrixError(SpecGraphError, ArithmeticError):
    """A matrix block that must be invertible is singular."""


class NotGraphPolynomialError(SpecGraphError, ValueError):
    """A polynomial fails the sanity constraints of a graph characteristic polynomial."""
