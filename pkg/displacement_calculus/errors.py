"""Exception hierarchy for the displacement calculus package."""

from __future__ import annotations


class DisplacementError(Exception):
    """Base class for every error raised by this package.

    ``reason`` is a short machine-parseable slug printed by the CLI.
    """

    reason = "error"


class DomainError(DisplacementError, ValueError):
    """A value is outside the domain of an operation."""

    reason = "domain"


class ParseError(DomainError):
    """A textual encoding could not be parsed."""

    reason = "parse"


class WouldBeAllIntegers(DomainError):
    """Two integers one apart generate the class mod 1, i.e. all of Z."""

    reason = "all-integers"


class InfiniteGaps(DomainError):
    """Generators share a common factor, so the complement is infinite."""

    reason = "infinite-gaps"


class NotASemigroup(DomainError):
    """A gap set whose complement is not additively closed."""

    reason = "not-a-semigroup"


class ResourceError(DisplacementError):
    """A computation would exceed its configured limit."""

    reason = "resource"


class PreconditionError(DisplacementError):
    """Hypotheses of a construction or replay are not met."""

    reason = "precondition"


class ConstructionBug(DisplacementError):
    """An internally built sequence failed its own verification."""

    reason = "construction-bug"


class ConfigError(DisplacementError):
    """Invalid configuration value."""

    reason = "config"


class CacheIoError(DisplacementError):
    """The difficulty cache could not be read or written."""

    reason = "cache-io"


class VerificationError(DisplacementError):
    """A certificate or chain failed re-verification."""

    reason = "verification"


class NotLinked(VerificationError):
    """Adjacent partitions of a sequence are not linked by the recorded progression."""

    reason = "not-linked"

    def __init__(self, step: int, message: str = ""):
        self.step = step
        super().__init__(message or f"step {step} is not linked")


class WrongWeightJump(VerificationError):
    """A step changes the weight by something other than its recorded k in {1, 2}."""

    reason = "wrong-weight-jump"

    def __init__(self, step: int, message: str = ""):
        self.step = step
        super().__init__(message or f"step {step} has a bad weight jump")


class WrongEndpoint(VerificationError):
    """A sequence does not end at the requested target."""

    reason = "wrong-endpoint"


class CertificateInvalid(VerificationError):
    """A certificate replayed as a chain is not refined."""

    reason = "certificate-invalid"
