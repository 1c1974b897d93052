"""Exception hierarchy shared by every module."""


class AlgebraError(Exception):
    """Base class for all errors raised by staralg."""


class DimensionMismatch(AlgebraError, ValueError):
    pass


class InvalidAlgebra(AlgebraError, ValueError):
    pass


class NoIdentity(AlgebraError):
    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class InvalidSemigroup(AlgebraError, ValueError):
    pass


class NotAGroup(AlgebraError):
    pass


class NotInvertible(AlgebraError):
    pass


class ResidualFailure(AlgebraError):
    """The linear solve succeeded but the two-sided inverse check did not."""


class EigenFailure(AlgebraError):
    pass


class ZeroPolynomial(AlgebraError, ValueError):
    pass


class NotHermitian(AlgebraError, ValueError):
    pass


class Degenerate(AlgebraError, ValueError):
    pass


class NotInvolutive(AlgebraError):
    pass
