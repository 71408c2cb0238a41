"""Exception hierarchy for qlp. Library code raises these; only the CLI exits."""

from __future__ import annotations


class QlpError(Exception):
    """Base class for all qlp errors."""


class DimensionMismatchError(QlpError):
    """Raised when matrix shapes disagree with declared factor dimensions."""

    def __init__(self, operation: str, expected: object, actual: object) -> None:
        self.operation = operation
        self.expected = expected
        self.actual = actual
        super().__init__(f"{operation}: expected dimension {expected}, got {actual}")


class ExponentError(QlpError):
    """Raised for a Schatten exponent outside the admissible range."""

    def __init__(self, p: float, reason: str) -> None:
        self.p = p
        self.reason = reason
        super().__init__(f"Invalid exponent p={p}: {reason}")


class NotHermitianError(QlpError):
    def __init__(self, residual: float, tolerance: float) -> None:
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            f"Matrix is not Hermitian: residual {residual:.3e} exceeds {tolerance:.1e}"
        )


class NotPositiveError(QlpError):
    def __init__(self, min_eigenvalue: float, tolerance: float) -> None:
        self.min_eigenvalue = min_eigenvalue
        self.tolerance = tolerance
        super().__init__(
            f"Matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e} "
            f"below -{tolerance:.1e}"
        )


class NotDensityError(QlpError):
    """Raised when a state's trace deviates from one."""

    def __init__(self, trace: float, tolerance: float) -> None:
        self.trace = trace
        self.tolerance = tolerance
        super().__init__(f"State trace {trace!r} deviates from 1 by more than {tolerance:.1e}")


class ChannelError(QlpError):
    """Raised when a map fails a channel requirement (CP, TP, covariance)."""

    def __init__(self, reason: str) -> None:
        self.reason = reason
        super().__init__(reason)


class ParameterError(QlpError):
    """Raised for parameters outside an operation's precondition."""

    def __init__(self, name: str, value: object, reason: str) -> None:
        self.name = name
        self.value = value
        self.reason = reason
        super().__init__(f"Invalid {name}={value!r}: {reason}")


class NonFiniteError(QlpError):
    def __init__(self, operation: str) -> None:
        self.operation = operation
        super().__init__(f"{operation} produced a non-finite value")


class ConfigError(QlpError):
    """Raised when a run configuration violates its invariants."""

    def __init__(self, reason: str) -> None:
        self.reason = reason
        super().__init__(reason)
