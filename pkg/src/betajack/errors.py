"""Exception hierarchy shared by every module of the package."""


class BetaJackError(Exception):
    """Base class for all errors raised by betajack."""


class ComputationError(BetaJackError):
    """An exact computation hit a pole, a guard or an internal inconsistency."""


class DivisionByZero(ComputationError, ZeroDivisionError):
    pass


class ContextMismatch(BetaJackError, TypeError):
    """Scalars from two different parameter contexts were combined."""


class UnboundedAtInfinity(ComputationError):
    def __init__(self, var, excess):
        self.var = var
        self.excess = excess
        super().__init__(f"function grows like {var}^{excess} as {var} -> oo")


class CellOutOfDiagram(BetaJackError, ValueError):
    pass


class SizeMismatch(BetaJackError, ValueError):
    pass


class LengthExceedsN(BetaJackError, ValueError):
    pass


class SingularAlpha(ComputationError):
    pass


class NotEigenvector(ComputationError):
    pass


class ZeroSamplePoint(BetaJackError, ValueError):
    pass


class ZeroDenominatorParam(ComputationError):
    pass


class PoleAtParameters(ComputationError):
    def __init__(self, cell, message=None):
        self.cell = cell
        super().__init__(message or f"denominator factor vanishes at cell {cell}")


class MismatchAt(BetaJackError):
    def __init__(self, r, lhs, rhs):
        self.r, self.lhs, self.rhs = r, lhs, rhs
        super().__init__(f"order {r}: lhs={lhs} rhs={rhs}")


class GuardExceeded(ComputationError):
    pass
