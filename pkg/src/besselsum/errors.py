"""Exception types shared across the package."""


class BesselSumError(Exception):
    pass


class DomainError(BesselSumError, ValueError):
    """Argument outside the region where a formula is defined."""


class PoleError(DomainError):
    """Evaluation at a pole (Gamma at a non-positive integer, 2F1 with bad c)."""


class ConvergenceError(BesselSumError, ArithmeticError):
    """A series or quadrature failed to reach its tolerance."""
