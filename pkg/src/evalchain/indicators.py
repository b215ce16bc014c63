"""Core indicator algebra for research-unit evaluation.

A research unit is described by three raw quantities: staff size S
(full-time-equivalent researchers), publication output P, and an outcome
earned by those publications. The outcome is either total citations C or
the number of highly cited articles (HCA); which one is in play is the
*outcome basis* and every derived indicator is defined relative to it.

From the raw quantities the module derives:

* impact       i = outcome / P   (mean outcome per publication)
* second-order outcome  X = i * outcome = i**2 * P = outcome**2 / P
* the three input-normalized productivities  P/S, outcome/S, X/S

Indicators are graded by the power of impact they carry: P is zeroth
order, the outcome itself is first order (outcome = i * P), and X is
second order. Size-dependent indicators (S, P, outcome, X) scale with
the unit; impact and the productivities are size-independent: they are
unchanged when S, P and the outcome are all multiplied by the same
factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    EmptyPortfolio,
    InvalidOrder,
    InvariantViolation,
    MissingHCA,
    UnknownIndicator,
)

INDICATOR_LABELS = ("S", "P", "i", "outcome", "X", "P/S", "outcome/S", "X/S")

_ALIASES = {
    "s": "S",
    "staff": "S",
    "p": "P",
    "output": "P",
    "i": "i",
    "impact": "i",
    "c": "outcome",
    "hca": "outcome",
    "outcome": "outcome",
    "x": "X",
    "x2": "X",
    "p/s": "P/S",
    "c/s": "outcome/S",
    "hca/s": "outcome/S",
    "outcome/s": "outcome/S",
    "x/s": "X/S",
}


class OutcomeBasis(Enum):
    """Which outcome the chain is evaluated on."""

    CITATIONS = "citations"
    HCA = "hca"


def canonical_label(label: str) -> str:
    """Resolve a user-supplied indicator name to its canonical label."""
    try:
        return _ALIASES[label.strip().casefold()]
    except KeyError:
        raise UnknownIndicator(label) from None


def _require_finite(value: float, what: str) -> None:
    if not math.isfinite(value):
        raise InvariantViolation(f"{what} must be finite")


@dataclass(frozen=True)
class InstitutionRecord:
    """Raw description of one research unit.

    ``hca`` is optional; when present it enables the highly-cited-article
    outcome basis for this unit.
    """

    name: str
    fte: float
    pubs: int
    cites: float
    hca: float | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.name, str) or not self.name.strip():
            raise InvariantViolation("name must be a non-empty string")
        _require_finite(self.fte, "S")
        if self.fte <= 0:
            raise InvariantViolation("S must be positive")
        if isinstance(self.pubs, bool) or not isinstance(self.pubs, int):
            raise InvariantViolation("P must be an integer")
        if self.pubs < 1:
            raise InvariantViolation("P must be positive")
        _require_finite(self.cites, "C")
        if self.cites < 0:
            raise InvariantViolation("C must be non-negative")
        if self.hca is not None:
            _require_finite(self.hca, "HCA")
            if not 0 <= self.hca <= self.pubs:
                raise InvariantViolation("HCA must lie between 0 and P")


def outcome_value(record: InstitutionRecord, basis: OutcomeBasis) -> float:
    """The outcome of ``record`` under ``basis``."""
    if basis is OutcomeBasis.CITATIONS:
        return float(record.cites)
    if record.hca is None:
        raise MissingHCA(f"unit {record.name!r} has no highly-cited-article count")
    return float(record.hca)


def impact(pubs: float, outcome: float) -> float:
    """Mean outcome per publication, outcome / P."""
    if pubs <= 0:
        raise EmptyPortfolio("impact is undefined for an empty portfolio")
    if outcome < 0:
        raise InvariantViolation("outcome must be non-negative")
    return outcome / pubs


def exergy(pubs: float, outcome: float) -> float:
    """Second-order outcome X = impact * outcome = outcome**2 / P.

    Weighs each unit of outcome by the impact it was earned at, so X
    rewards concentrated excellence over diluted volume.
    """
    if pubs <= 0:
        raise EmptyPortfolio("second-order outcome is undefined for an empty portfolio")
    if outcome < 0:
        raise InvariantViolation("outcome must be non-negative")
    return outcome * outcome / pubs


def order_indicator(record: InstitutionRecord, basis: OutcomeBasis, order: int) -> float:
    """Size-dependent indicator of the given order: i**order * P.

    Order 0 is publication output, order 1 the outcome itself, order 2
    the second-order outcome X.
    """
    if order == 0:
        return float(record.pubs)
    o = outcome_value(record, basis)
    if order == 1:
        return o
    if order == 2:
        return exergy(record.pubs, o)
    raise InvalidOrder(f"order must be 0, 1 or 2, got {order}")


@dataclass(frozen=True)
class IndicatorVector:
    """All eight indicators of one unit under a fixed outcome basis."""

    fte: float
    pubs: int
    impact: float
    outcome: float
    exergy: float
    output_productivity: float
    outcome_productivity: float
    exergy_productivity: float
    basis: OutcomeBasis

    def value(self, label: str) -> float:
        """Indicator value by (canonical or alias) label."""
        return self.as_mapping()[canonical_label(label)]

    def as_mapping(self) -> dict[str, float]:
        """Label-to-value mapping in canonical label order."""
        return {
            "S": self.fte,
            "P": self.pubs,
            "i": self.impact,
            "outcome": self.outcome,
            "X": self.exergy,
            "P/S": self.output_productivity,
            "outcome/S": self.outcome_productivity,
            "X/S": self.exergy_productivity,
        }


def indicator_vector(record: InstitutionRecord, basis: OutcomeBasis) -> IndicatorVector:
    """Evaluate the full indicator chain for one unit."""
    o = outcome_value(record, basis)
    x = exergy(record.pubs, o)
    return IndicatorVector(
        fte=float(record.fte),
        pubs=record.pubs,
        impact=impact(record.pubs, o),
        outcome=o,
        exergy=x,
        output_productivity=record.pubs / record.fte,
        outcome_productivity=o / record.fte,
        exergy_productivity=x / record.fte,
        basis=basis,
    )
