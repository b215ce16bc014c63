"""Rendering of analysis results as aligned text tables, CSV, JSON and SVG.

All renderers are pure string builders: same input, same bytes. Floats
go through ``repr`` in machine formats (CSV, JSON) so values round-trip,
and through a fixed precision in the human-facing table format.
"""

from __future__ import annotations

import csv
import io
import json
from xml.sax.saxutils import escape

from .compare import ComparisonReport
from .indicators import INDICATOR_LABELS, IndicatorVector, OutcomeBasis
from .pca import PCAResult

COMPONENT1_AXIS_LABEL = "Component 1 (size-dependent quantity)"
COMPONENT2_AXIS_LABEL = "Component 2 (size-independent quality/productivity)"

_NOT_AVAILABLE = "n/a"


def _num(value: float | int | None) -> str:
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def _table(headers: list[str], rows: list[list[str]], notes: list[str] | None = None) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for j, cell in enumerate(row):
            widths[j] = max(widths[j], len(cell))
    lines = [f"# {note}" for note in notes or []]
    for cells in [headers, *rows]:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip())
    return "\n".join(lines)


def _csv_text(rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _json_text(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=False)


def _vector_cell(vector: IndicatorVector, label: str) -> float | int:
    value = vector.value(label)
    return value if isinstance(value, int) else float(value)


def render_indicators(
    units: list[tuple[str, IndicatorVector]], basis: OutcomeBasis, fmt: str = "table"
) -> str:
    """Indicator values of many units, one row per unit."""
    header = ["name", *INDICATOR_LABELS]
    if fmt == "json":
        payload = {
            "basis": basis.value,
            "units": [
                {"name": name, "values": {k: _vector_cell(v, k) for k in INDICATOR_LABELS}}
                for name, v in units
            ],
        }
        return _json_text(payload)
    rows = [
        [name, *[_num(_vector_cell(v, k)) for k in INDICATOR_LABELS]] for name, v in units
    ]
    if fmt == "csv":
        return _csv_text([header, *rows])
    return _table(header, rows, notes=[f"basis: {basis.value}"])


def render_comparison(report: ComparisonReport, fmt: str = "table") -> str:
    """Pairwise comparison with one row per indicator."""
    if fmt == "json":
        payload = {
            "basis": report.basis.value,
            "unit_a": report.name_a,
            "unit_b": report.name_b,
            "rows": [
                {
                    "indicator": r.indicator,
                    "value_a": float(r.value_a),
                    "value_b": float(r.value_b),
                    "advantage_pct": None if r.advantage_pct is None else float(r.advantage_pct),
                }
                for r in report.rows
            ],
        }
        return _json_text(payload)
    if fmt == "csv":
        rows = [["indicator", "value_a", "value_b", "advantage_pct"]]
        for r in report.rows:
            rows.append([r.indicator, _num(r.value_a), _num(r.value_b), _num(r.advantage_pct)])
        return _csv_text(rows)
    rows = [
        [
            r.indicator,
            _num(r.value_a),
            _num(r.value_b),
            _NOT_AVAILABLE if r.advantage_pct is None else _num(r.advantage_pct),
        ]
        for r in report.rows
    ]
    return _table(
        ["indicator", report.name_a, report.name_b, "advantage_pct"],
        rows,
        notes=[
            f"basis: {report.basis.value}",
            f"baseline: {report.name_a}",
            f"challenger: {report.name_b}",
        ],
    )


def render_pca(result: PCAResult, basis: OutcomeBasis, fmt: str = "table") -> str:
    """Eigenvalues, explained variance, loadings and assignment."""
    m = len(result.eigenvalues)
    if fmt == "json":
        payload = {
            "basis": basis.value,
            "columns": list(result.column_labels),
            "retained": result.retained,
            "eigenvalues": [float(x) for x in result.eigenvalues],
            "explained_variance": [float(x) for x in result.explained_variance],
            "loadings": [[float(x) for x in row] for row in result.loadings],
            "assignment": {k: v + 1 for k, v in result.assignment.items()},
        }
        return _json_text(payload)
    if fmt == "csv":
        rows = [["kind", "indicator", "component", "value"]]
        for k in range(m):
            rows.append(["eigenvalue", "", str(k + 1), _num(float(result.eigenvalues[k]))])
            rows.append(
                ["explained_variance", "", str(k + 1), _num(float(result.explained_variance[k]))]
            )
        for j, label in enumerate(result.column_labels):
            for k in range(m):
                rows.append(["loading", label, str(k + 1), _num(float(result.loadings[k, j]))])
        for label, comp in result.assignment.items():
            rows.append(["assignment", label, str(comp + 1), ""])
        return _csv_text(rows)
    spectrum = _table(
        ["component", "eigenvalue", "explained_variance"],
        [
            [str(k + 1), f"{result.eigenvalues[k]:.6f}", f"{result.explained_variance[k]:.6f}"]
            for k in range(m)
        ],
        notes=[
            f"basis: {basis.value}",
            f"columns: {', '.join(result.column_labels)}",
            f"retained: {result.retained}",
        ],
    )
    loading_rows = []
    for j, label in enumerate(result.column_labels):
        cells = [label]
        cells += [f"{result.loadings[k, j]:.6f}" for k in range(m)]
        cells.append(str(result.assignment[label] + 1))
        loading_rows.append(cells)
    loadings = _table(
        ["indicator", *[f"component_{k + 1}" for k in range(m)], "assigned"], loading_rows
    )
    return spectrum + "\n\n" + loadings


def render_map_csv(points: list[tuple[str, float, float]]) -> str:
    """Unit map coordinates as CSV."""
    rows = [["name", "pc1", "pc2"]]
    rows += [[name, _num(x), _num(y)] for name, x, y in points]
    return _csv_text(rows)


def scatter_svg(
    points: list[tuple[str, float, float]],
    x_label: str = COMPONENT1_AXIS_LABEL,
    y_label: str = COMPONENT2_AXIS_LABEL,
    width: int = 800,
    height: int = 600,
) -> str:
    """Standalone SVG scatter plot of labelled points."""
    left, right, top, bottom = 70, 25, 25, 60
    plot_w = width - left - right
    plot_h = height - top - bottom

    xs = [p[1] for p in points]
    ys = [p[2] for p in points]
    x_lo, x_hi = _padded_range(xs)
    y_lo, y_hi = _padded_range(ys)

    def sx(x: float) -> float:
        return left + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y: float) -> float:
        return top + (y_hi - y) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="black"/>',
    ]
    zero_x, zero_y = sx(0.0), sy(0.0)
    if x_lo < 0 < x_hi:
        parts.append(
            f'<line x1="{zero_x:.2f}" y1="{top}" x2="{zero_x:.2f}" y2="{top + plot_h}" '
            f'stroke="#cccccc" stroke-dasharray="4 3"/>'
        )
    if y_lo < 0 < y_hi:
        parts.append(
            f'<line x1="{left}" y1="{zero_y:.2f}" x2="{left + plot_w}" y2="{zero_y:.2f}" '
            f'stroke="#cccccc" stroke-dasharray="4 3"/>'
        )
    for name, x, y in points:
        px, py = sx(x), sy(y)
        parts.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="4" fill="#1f6fb2"/>')
        parts.append(
            f'<text x="{px + 6:.2f}" y="{py + 4:.2f}" font-size="11" '
            f'font-family="sans-serif">{escape(name)}</text>'
        )
    parts.append(
        f'<text x="{left + plot_w / 2:.2f}" y="{height - 18}" font-size="13" '
        f'font-family="sans-serif" text-anchor="middle">{escape(x_label)}</text>'
    )
    parts.append(
        f'<text x="20" y="{top + plot_h / 2:.2f}" font-size="13" font-family="sans-serif" '
        f'text-anchor="middle" transform="rotate(-90 20 {top + plot_h / 2:.2f})">'
        f"{escape(y_label)}</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _padded_range(values: list[float]) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    span = hi - lo
    if span == 0.0:
        span = 1.0
        lo -= 0.5
        hi += 0.5
    pad = 0.05 * span
    return lo - pad, hi + pad
