"""Exception hierarchy for the evaluation chain.

Every error raised by this package derives from :class:`EvalChainError`,
so front ends (CLI, HTTP service) can catch one type and report the
concrete class name as the error code.
"""

from __future__ import annotations


class EvalChainError(Exception):
    """Base class for all evaluation-chain errors."""


class EmptyPortfolio(EvalChainError):
    """Impact-style indicators are undefined for a unit with no publications."""


class MissingHCA(EvalChainError):
    """The highly-cited-article basis was requested but no HCA count is available."""


class InvalidOrder(EvalChainError):
    """Indicator order outside {0, 1, 2}."""


class UnknownIndicator(EvalChainError):
    """A label that is not one of the eight indicator labels."""

    def __init__(self, label: str):
        super().__init__(f"unknown indicator label: {label!r}")
        self.label = label


class ZeroBaseline(EvalChainError):
    """Percentage advantage is undefined against a zero baseline."""


class UnknownUnit(EvalChainError):
    """A unit name that does not occur in the dataset."""

    def __init__(self, name: str):
        super().__init__(f"unknown unit: {name!r}")
        self.name = name


class DegenerateColumn(EvalChainError):
    """A constant column cannot be standardized."""

    def __init__(self, label: str):
        super().__init__(f"column {label!r} is constant and cannot be standardized")
        self.label = label


class NotConverged(EvalChainError):
    """The eigensolver did not reach its off-diagonal threshold in budget."""


class AmbiguousLoading(EvalChainError):
    """An indicator loads equally on both retained components."""

    def __init__(self, label: str, difference: float):
        super().__init__(
            f"indicator {label!r} loads equally on both components "
            f"(|difference| = {difference:.3g})"
        )
        self.label = label
        self.difference = difference


class MalformedHeader(EvalChainError):
    """The CSV header does not match the documented format."""


class BadNumber(EvalChainError):
    """A cell that should hold a finite number does not."""

    def __init__(self, row: int, column: str, token: str):
        super().__init__(f"row {row}, column {column}: not a finite number: {token!r}")
        self.row = row
        self.column = column
        self.token = token


class DuplicateName(EvalChainError):
    """Two dataset rows share a unit name."""

    def __init__(self, name: str, row: int | None = None):
        where = f" (row {row})" if row is not None else ""
        super().__init__(f"duplicate unit name {name!r}{where}")
        self.name = name
        self.row = row


class InvariantViolation(EvalChainError):
    """A domain invariant does not hold for the given values."""

    def __init__(self, reason: str, row: int | None = None):
        super().__init__(f"row {row}: {reason}" if row is not None else reason)
        self.reason = reason
        self.row = row


class TooFewRows(EvalChainError):
    """At least two units are required."""


class TooFewColumns(EvalChainError):
    """At least two indicator columns are required."""
