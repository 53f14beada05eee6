"""Exception hierarchy shared by every module."""

from __future__ import annotations


class P10C7Error(Exception):
    """Base class for all errors raised by the package."""


class InputError(P10C7Error, ValueError):
    """Malformed input: bad vertex ids, self-loops, domain mismatches."""


class ContractViolation(P10C7Error):
    """A documented precondition of an operation was not met."""


class StructuralDiagnostic(P10C7Error):
    """A configuration that cannot occur in a member of the class was found.

    ``kind`` is a short machine-readable tag (``"d2-edge"``, ``"w4-nonempty"``,
    ...) and ``witness`` holds the offending vertices when they are known.
    """

    def __init__(self, kind: str, message: str, witness: tuple = ()) -> None:
        super().__init__(f"[{kind}] {message}")
        self.kind = kind
        self.witness = tuple(witness)


class ExtensionError(P10C7Error):
    """Replaying an extension step produced no legal color."""


class OracleRefusal(P10C7Error):
    """The brute-force oracle was asked to handle a graph above its cap."""


class GenerationFailure(P10C7Error):
    """Rejection sampling ran out of attempts."""
