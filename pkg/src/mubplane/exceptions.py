"""
mubplane Exceptions
===================
Hierarchical exception classes for every library and CLI error.

Exception Hierarchy:
    MubPlaneError (base)
    ├── DomainError (argument outside the mathematical domain)
    │   └── NotPrimePowerError (construction needs a prime-power order)
    ├── CapacityError (configured size cap exceeded)
    ├── FieldDivisionByZero (inverse of zero in a finite field)
    ├── PreconditionError (structural precondition not met)
    ├── BoundViolation (more than d+1 bases offered as unbiased)
    ├── VerificationFailure (an axiom or unbiasedness check failed)
    └── UsageError (invalid CLI argument combination)

Each class carries the process exit code the CLI uses for it.
"""
from __future__ import annotations


class MubPlaneError(Exception):
    """Base exception for all mubplane errors.

    Enables catch-all handling at the CLI layer.
    """

    exit_code: int = 1


class DomainError(MubPlaneError, ValueError):
    """An argument lies outside the domain of the operation (e.g. d < 2)."""

    exit_code = 2


class NotPrimePowerError(DomainError):
    """The requested order is not a prime power.

    Attributes:
        order: The offending order.
    """

    def __init__(self, order: int) -> None:
        super().__init__(f"{order} is not a prime power")
        self.order = order


class CapacityError(MubPlaneError):
    """A size cap from the configuration would be exceeded.

    Attributes:
        requested: The size that was asked for.
        limit: The configured maximum.
    """

    exit_code = 3

    def __init__(self, message: str, requested: int | None = None, limit: int | None = None) -> None:
        super().__init__(message)
        self.requested = requested
        self.limit = limit


class FieldDivisionByZero(MubPlaneError, ZeroDivisionError):
    """Inverse of the zero element of a finite field."""


class PreconditionError(MubPlaneError):
    """Input does not satisfy a structural precondition."""


class BoundViolation(MubPlaneError):
    """A set of more than d+1 bases was offered as mutually unbiased.

    At most d+1 mutually unbiased bases exist in dimension d, so this
    signals a caller bug rather than a numeric failure.
    """

    def __init__(self, dimension: int, count: int) -> None:
        super().__init__(
            f"{count} bases offered in dimension {dimension}; at most {dimension + 1} can be unbiased"
        )
        self.dimension = dimension
        self.count = count


class VerificationFailure(MubPlaneError):
    """An incidence axiom or an unbiasedness check failed."""


class UsageError(MubPlaneError):
    """Invalid combination of command-line arguments."""

    exit_code = 2
