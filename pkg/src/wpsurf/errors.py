"""Exception taxonomy shared across the package.

Every error raised by the library derives from :class:`WpsurfError`, so CLI
code can distinguish semantic failures (exit code 1) from usage errors
(exit code 2) without matching on message strings.
"""

from __future__ import annotations


class WpsurfError(Exception):
    """Base class for all library errors."""


class InvalidInput(WpsurfError, ValueError):
    """Input violates a documented precondition."""


class SubstitutionError(InvalidInput):
    """A variable assignment is not weighted-homogeneous of the right degree."""


class UnsupportedConfiguration(WpsurfError):
    """Input is valid but outside the implemented regime (e.g. an endless
    division chain in the cycle decomposition, or a non-isolated ambient
    singular stratum)."""


class NotQuasismooth(WpsurfError):
    """Operation requires a quasi-smooth hypersurface and got a certificate
    of failure instead (carried in ``certificate`` when available)."""

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class NotReducible(WpsurfError):
    """Normal-form pipeline precondition failed (a required coefficient
    vanishes)."""


class RootRequired(WpsurfError):
    """The exact scalar backend was asked for a k-th root (or polynomial
    root) that is not rational.  The offending value is carried along."""

    def __init__(self, message: str, value=None):
        super().__init__(message)
        self.value = value


class CapacityError(WpsurfError):
    """A guarded brute-force search exceeded its configured bound."""
