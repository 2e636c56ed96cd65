from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from .exactmath import Interval


__all__ = (
    "HypConstError",
    "PreconditionError",
    "PrecisionExhausted",
    "Uncertifiable",
    "CertificationFailed",
    "VerificationMismatch",
    "UsageError",
)


class HypConstError(Exception):
    """Base class for every computation error raised by the library."""

    exit_code: int = 2


class PreconditionError(HypConstError, ValueError):
    """Raised when an argument is outside the range an operation accepts."""

    def __init__(self, name: str, value: Any, requirement: str) -> None:
        self.name: str = name
        self.value: Any = value
        self.requirement: str = requirement
        super().__init__(f"{name}={value!s} violates {requirement}")


class PrecisionExhausted(HypConstError):
    """Raised when the configured maximum precision is not enough."""

    def __init__(self, bits: int, what: str = "evaluation") -> None:
        self.bits: int = bits
        self.what: str = what
        super().__init__(f"{what} did not converge within {bits} bits")


class Uncertifiable(HypConstError):
    """Raised when an interval straddles an integer, callers refine and retry."""

    def __init__(self, interval: Interval) -> None:
        self.interval: Interval = interval
        super().__init__(f"cannot certify the integer part of {interval}")


class CertificationFailed(HypConstError):
    """Raised when a certified inequality does not hold."""

    def __init__(self, claim: str, evidence: Any = None) -> None:
        self.claim: str = claim
        self.evidence: Any = evidence
        message = f"could not certify {claim}"
        if evidence is not None:
            message += f" (got {evidence!s})"
        super().__init__(message)


class VerificationMismatch(HypConstError):
    exit_code = 3

    def __init__(self, mismatches: list[Any]) -> None:
        self.mismatches: list[Any] = mismatches
        super().__init__(f"{len(mismatches)} mismatch(es) found")


class UsageError(Exception):
    exit_code: int = 1

    def __init__(self, message: str, usage: str = "") -> None:
        self.usage: str = usage
        super().__init__(message)
