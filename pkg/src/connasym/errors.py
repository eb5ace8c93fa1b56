"""Exception hierarchy shared by every module of the package."""


class ConnasymError(Exception):
    """Base class for all errors raised by connasym."""


class UsageError(ConnasymError, ValueError):
    """Caller supplied incompatible arguments (e.g. mismatched truncation orders)."""


class DomainError(ConnasymError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class ConsistencyError(ConnasymError, ArithmeticError):
    """An internal identity failed; always signals a bug upstream."""


class HypothesisViolation(ConnasymError, ValueError):
    """Input violates a hypothesis of the asymptotic transfer (a zero a_n)."""


class ResourceLimitError(ConnasymError):
    """Requested size exceeds a configured enumeration or table cap."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap
