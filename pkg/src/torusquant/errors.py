"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class DimensionMismatch(ValueError):
    """Two operands have incompatible shapes."""


class ConvergenceError(RuntimeError):
    """An iterative kernel exhausted its iteration budget."""
