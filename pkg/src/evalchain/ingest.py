"""CSV ingest and canonical serialization of unit datasets.

Expected format, one row per research unit:

    name,S,P,C[,HCA]

The header is row 1 and is matched case-insensitively in that exact
column order. S is staff size (positive), P publication count (positive
integer), C total citations (non-negative) and the optional HCA column
the number of highly cited articles (blank allowed, otherwise between 0
and P). Numbers may use scientific notation. Blank lines are skipped.

Errors carry 1-based row numbers counted from the header. The
highly-cited-article basis is only considered available when *every*
row provides an HCA value; a partial column disables it for the whole
dataset so that HCA-based analyses never silently drop units.

Serialization is canonical: LF line endings, a trailing newline, and
floats rendered with ``repr`` so that parse -> serialize -> parse is
the identity.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadNumber,
    DuplicateName,
    InvariantViolation,
    MalformedHeader,
    MissingHCA,
    TooFewRows,
    UnknownUnit,
)
from .indicators import (
    INDICATOR_LABELS,
    InstitutionRecord,
    OutcomeBasis,
    canonical_label,
    indicator_vector,
)
from .pca import DataMatrix

_HEADER = ("name", "s", "p", "c")
_HEADER_HCA = ("name", "s", "p", "c", "hca")


@dataclass(frozen=True)
class Dataset:
    """An ordered collection of unit records plus basis availability."""

    records: tuple[InstitutionRecord, ...]
    has_citations: bool = True
    has_hca: bool = False
    source_label: str = field(default="", compare=False)

    def find(self, name: str) -> InstitutionRecord:
        """Record by exact unit name."""
        for record in self.records:
            if record.name == name:
                return record
        raise UnknownUnit(name)

    def basis_available(self, basis: OutcomeBasis) -> bool:
        return self.has_citations if basis is OutcomeBasis.CITATIONS else self.has_hca

    def require_basis(self, basis: OutcomeBasis) -> None:
        if not self.basis_available(basis):
            raise MissingHCA(
                "the highly-cited-article basis needs an HCA value on every row"
            )


def _parse_number(token: str, row: int, column: str) -> float:
    try:
        value = float(token.strip())
    except ValueError:
        raise BadNumber(row, column, token) from None
    if not math.isfinite(value):
        raise BadNumber(row, column, token)
    return value


def parse_csv(text: str, source_label: str = "") -> Dataset:
    """Parse CSV text into a :class:`Dataset`, validating every row."""
    reader = csv.reader(io.StringIO(text.lstrip("﻿")))
    try:
        header = next(reader)
    except StopIteration:
        raise MalformedHeader("input is empty, expected a name,S,P,C[,HCA] header") from None
    normalized = tuple(cell.strip().casefold() for cell in header)
    if normalized == _HEADER:
        has_hca_column = False
    elif normalized == _HEADER_HCA:
        has_hca_column = True
    else:
        raise MalformedHeader(
            f"expected header name,S,P,C[,HCA], got {','.join(header)!r}"
        )
    width = 5 if has_hca_column else 4

    records: list[InstitutionRecord] = []
    seen: set[str] = set()
    for row_number, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != width:
            raise InvariantViolation(
                f"expected {width} fields, got {len(row)}", row=row_number
            )
        name = row[0]
        fte = _parse_number(row[1], row_number, "S")
        pubs_raw = _parse_number(row[2], row_number, "P")
        cites = _parse_number(row[3], row_number, "C")
        hca: float | None = None
        if has_hca_column and row[4].strip():
            hca = _parse_number(row[4], row_number, "HCA")
        if not pubs_raw.is_integer():
            raise InvariantViolation("P must be an integer", row=row_number)
        if name in seen:
            raise DuplicateName(name, row=row_number)
        seen.add(name)
        try:
            records.append(
                InstitutionRecord(
                    name=name, fte=fte, pubs=int(pubs_raw), cites=cites, hca=hca
                )
            )
        except InvariantViolation as exc:
            raise InvariantViolation(exc.reason, row=row_number) from None

    has_hca = has_hca_column and bool(records) and all(r.hca is not None for r in records)
    return Dataset(
        records=tuple(records),
        has_citations=True,
        has_hca=has_hca,
        source_label=source_label,
    )


def _render_number(value: float) -> str:
    """Shortest decimal string that round-trips to the same float."""
    return repr(float(value))


def serialize_csv(dataset: Dataset) -> str:
    """Canonical CSV text for a dataset (LF endings, repr floats)."""
    include_hca = dataset.has_hca or any(r.hca is not None for r in dataset.records)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["name", "S", "P", "C"] + (["HCA"] if include_hca else []))
    for record in dataset.records:
        row = [record.name, _render_number(record.fte), str(record.pubs), _render_number(record.cites)]
        if include_hca:
            row.append("" if record.hca is None else _render_number(record.hca))
        writer.writerow(row)
    return buffer.getvalue()


def to_data_matrix(
    dataset: Dataset,
    basis: OutcomeBasis = OutcomeBasis.CITATIONS,
    columns: tuple[str, ...] = INDICATOR_LABELS,
) -> DataMatrix:
    """Evaluate the chosen indicators for every unit as a DataMatrix."""
    dataset.require_basis(basis)
    labels = tuple(canonical_label(c) for c in columns)
    if len(dataset.records) < 2:
        raise TooFewRows(f"need at least 2 units, got {len(dataset.records)}")
    rows = [
        [float(indicator_vector(record, basis).value(label)) for label in labels]
        for record in dataset.records
    ]
    names = tuple(record.name for record in dataset.records)
    values = np.array(rows, dtype=float).reshape(len(rows), len(labels))
    return DataMatrix(labels, names, values)
