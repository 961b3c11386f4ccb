"""Exception hierarchy shared by all modules."""


class MinkowskiError(Exception):
    """Base class for errors raised by this package."""


class DomainError(MinkowskiError, ValueError):
    """An argument lies outside the domain of the operation."""


class DegenerateError(DomainError):
    """A basis or matrix has zero determinant."""


class BracketError(MinkowskiError):
    """The root-finding bracket does not enclose a sign change."""


class ConvergenceError(MinkowskiError):
    """An iterative method hit its iteration cap."""


class ShellError(MinkowskiError):
    """A lattice shell does not have the expected six-point structure."""
