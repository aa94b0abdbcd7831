"""Exception hierarchy shared by all dihedra modules.

Every domain failure derives from DihedraError and carries a short
machine-readable ``reason`` string next to the human message, so the CLI can
report errors stably.
"""

from __future__ import annotations


class DihedraError(Exception):
    """Base class for domain errors."""

    reason = "error"

    def __init__(self, message: str, *, reason: str | None = None):
        super().__init__(message)
        if reason is not None:
            self.reason = reason


class InvalidArgumentError(DihedraError, ValueError):
    """An argument is outside an operation's domain."""

    reason = "invalid-argument"


class SignatureSyntaxError(InvalidArgumentError):
    """A signature, element or subgroup string failed to parse."""

    reason = "syntax"


class DegenerateSignatureError(DihedraError):
    """Riemann-Hurwitz yields a non-integer or negative genus."""

    reason = "genus.invalid"


class ParityError(DihedraError):
    """Closed multiplicity formulas produced non-integers."""

    reason = "parity"


class NotAnalyticError(DihedraError):
    """A character is not the analytic representation of any action."""

    reason = "not-analytic"


class NotRealizableError(DihedraError):
    """A geometric signature admits no action."""

    reason = "not-realizable"


class UnsupportedScopeError(DihedraError):
    """The request is outside the implemented theory's scope."""

    reason = "unsupported-scope"


class BudgetExceededError(DihedraError):
    """A search exceeded its resource budget."""

    reason = "budget"
