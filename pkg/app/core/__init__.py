from app.core.exceptions import (
    BaseAppException,
    DimensionMismatch,
    Inconsistent,
    InternalInconsistency,
    ParseError,
    PreconditionViolated,
    VerificationFailed,
    ZeroInverse,
)
from app.core.logging import get_logger, setup_logging
from app.core.settings import settings

__all__ = [
    "settings",
    "setup_logging",
    "get_logger",
    "BaseAppException",
    "DimensionMismatch",
    "Inconsistent",
    "InternalInconsistency",
    "ParseError",
    "PreconditionViolated",
    "VerificationFailed",
    "ZeroInverse",
]
