"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the supported numeric domain."""


class NumericalError(ArithmeticError):
    """A computation hit a numerical pathology (degenerate or singular
    data, unreachable tolerance, overflow guard)."""
