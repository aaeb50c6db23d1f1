"""Exception hierarchy shared by every module."""

from __future__ import annotations


class PclsaError(Exception):
    """Base class for all library errors."""


class NotInvertible(PclsaError, ArithmeticError):
    pass


class NotUnitSeries(PclsaError, ArithmeticError):
    pass


class EmptySupport(PclsaError, ValueError):
    pass


class GuardExceeded(PclsaError, RuntimeError):
    """A resource guard (size, degree, element count) was hit."""


class NotAPeo(PclsaError, ValueError):
    pass


class NonIntegerResult(PclsaError, ArithmeticError):
    """An integrality check failed; only an implementation bug can cause this."""


class NegativeResult(PclsaError, ArithmeticError):
    pass


class InconsistentSeries(PclsaError, ArithmeticError):
    pass


class EngineDisagreement(PclsaError, AssertionError):
    """Two engines that must agree produced different answers."""


class GraphIssue:
    """One violated invariant found while validating a graph description."""

    __slots__ = ("kind", "detail")

    def __init__(self, kind: str, detail: str):
        self.kind = kind
        self.detail = detail

    def __repr__(self) -> str:
        return f"{self.kind}: {self.detail}"


class GraphValidationError(PclsaError, ValueError):
    """Raised by ``validate``; ``issues`` lists every problem, not just the first."""

    def __init__(self, issues: list[GraphIssue]):
        self.issues = list(issues)
        super().__init__("; ".join(map(repr, self.issues)))

    @property
    def kinds(self) -> set[str]:
        return {issue.kind for issue in self.issues}
