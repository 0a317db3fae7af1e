class BaseAppException(Exception):
    """Base exception for all application exceptions."""

    status_code = 500
    exit_code = 1


class ParseError(BaseAppException):
    """Raised when a quaternion literal or matrix document is malformed."""

    status_code = 422
    exit_code = 2

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class DimensionMismatch(BaseAppException):
    """Raised when matrix dimensions do not conform."""

    status_code = 422
    exit_code = 2


class ZeroInverse(BaseAppException):
    """Raised when the zero quaternion is inverted."""

    status_code = 422
    exit_code = 2


class PreconditionViolated(BaseAppException):
    """Raised when an operation's stated precondition does not hold."""

    status_code = 422
    exit_code = 2


class Inconsistent(BaseAppException):
    """Raised when BXD + CYE = A has no solution."""

    status_code = 409
    exit_code = 1

    def __init__(self, message: str, failing: str | None = None):
        super().__init__(message)
        self.failing = failing


class InternalInconsistency(BaseAppException):
    """Raised when an exact identity that must hold by construction fails."""

    status_code = 500
    exit_code = 1


class VerificationFailed(BaseAppException):
    """Raised when a computed result does not pass its verification report."""

    status_code = 500
    exit_code = 1
