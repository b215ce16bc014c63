"""Pairwise comparison and ranking of research units.

The central quantity is the percentage advantage of a challenger B over
a baseline A: (B - A) / A * 100. A full comparison report evaluates the
advantage for every indicator in the chain, which makes visible how the
verdict flips between size-dependent and size-independent measures and
between indicator orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZeroBaseline
from .indicators import (
    INDICATOR_LABELS,
    IndicatorVector,
    InstitutionRecord,
    OutcomeBasis,
    canonical_label,
    indicator_vector,
)


def percentage_advantage(baseline: float, challenger: float) -> float:
    """Relative advantage of ``challenger`` over ``baseline`` in percent."""
    if baseline == 0:
        raise ZeroBaseline("percentage advantage is undefined against a zero baseline")
    return (challenger - baseline) / baseline * 100.0


@dataclass(frozen=True)
class ComparisonRow:
    """One indicator compared across the two units.

    ``advantage_pct`` is None when the baseline value is zero.
    """

    indicator: str
    value_a: float
    value_b: float
    advantage_pct: float | None


@dataclass(frozen=True)
class ComparisonReport:
    """Full pairwise comparison of baseline A against challenger B."""

    name_a: str
    name_b: str
    unit_a: IndicatorVector
    unit_b: IndicatorVector
    rows: tuple[ComparisonRow, ...]
    basis: OutcomeBasis


def compare(
    a: InstitutionRecord, b: InstitutionRecord, basis: OutcomeBasis = OutcomeBasis.CITATIONS
) -> ComparisonReport:
    """Compare two units on every indicator under one outcome basis."""
    va = indicator_vector(a, basis)
    vb = indicator_vector(b, basis)
    rows = []
    for label in INDICATOR_LABELS:
        x = float(va.value(label))
        y = float(vb.value(label))
        adv = None if x == 0 else percentage_advantage(x, y)
        rows.append(ComparisonRow(label, x, y, adv))
    return ComparisonReport(a.name, b.name, va, vb, tuple(rows), basis)


def rank(
    records: list[InstitutionRecord],
    basis: OutcomeBasis = OutcomeBasis.CITATIONS,
    key: str = "X",
) -> list[tuple[str, float]]:
    """Rank units by one indicator, descending; ties break on name."""
    label = canonical_label(key)
    pairs = [(r.name, float(indicator_vector(r, basis).value(label))) for r in records]
    pairs.sort(key=lambda nv: (-nv[1], nv[0]))
    return pairs
