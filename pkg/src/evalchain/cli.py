"""Command-line front end.

Subcommands: ``indicators``, ``compare``, ``pca`` and ``map``. Data goes
to stdout (or the output file for ``map``), diagnostics to stderr, exit
code 0 on success and 1 on any domain or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .compare import compare
from .errors import EvalChainError
from .indicators import INDICATOR_LABELS, OutcomeBasis, indicator_vector
from .ingest import Dataset, parse_csv, to_data_matrix
from .pca import map_points, run_pca
from .render import (
    render_comparison,
    render_indicators,
    render_map_csv,
    render_pca,
    scatter_svg,
)


def _load_dataset(path: str) -> Dataset:
    return parse_csv(Path(path).read_text(encoding="utf-8"), source_label=path)


def _basis(args: argparse.Namespace) -> OutcomeBasis:
    return OutcomeBasis(args.basis)


def _columns(args: argparse.Namespace) -> tuple[str, ...]:
    return tuple(c for c in (part.strip() for part in args.columns.split(",")) if c)


def _retain(args: argparse.Namespace) -> int | str:
    if args.retain == "kaiser":
        return "kaiser"
    try:
        return int(args.retain)
    except ValueError:
        raise EvalChainError(
            f"--retain must be an integer or 'kaiser', got {args.retain!r}"
        ) from None


def cmd_indicators(args: argparse.Namespace) -> int:
    dataset = _load_dataset(args.dataset)
    basis = _basis(args)
    dataset.require_basis(basis)
    units = [(r.name, indicator_vector(r, basis)) for r in dataset.records]
    print(render_indicators(units, basis, fmt=args.format))
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    dataset = _load_dataset(args.dataset)
    basis = _basis(args)
    dataset.require_basis(basis)
    report = compare(dataset.find(args.unit_a), dataset.find(args.unit_b), basis)
    print(render_comparison(report, fmt=args.format))
    return 0


def cmd_pca(args: argparse.Namespace) -> int:
    dataset = _load_dataset(args.dataset)
    basis = _basis(args)
    matrix = to_data_matrix(dataset, basis, columns=_columns(args))
    result = run_pca(matrix, retain=_retain(args))
    print(render_pca(result, basis, fmt=args.format))
    return 0


def cmd_map(args: argparse.Namespace) -> int:
    dataset = _load_dataset(args.dataset)
    basis = _basis(args)
    matrix = to_data_matrix(dataset, basis, columns=_columns(args))
    result = run_pca(matrix, retain=_retain(args))
    points = map_points(result)
    content = scatter_svg(points) if args.svg else render_map_csv(points) + "\n"
    Path(args.output).write_text(content, encoding="utf-8")
    print(f"wrote {len(points)} units to {args.output}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    basis_parent = argparse.ArgumentParser(add_help=False)
    basis_parent.add_argument(
        "--basis",
        choices=[b.value for b in OutcomeBasis],
        default=OutcomeBasis.CITATIONS.value,
        help="outcome basis the chain is evaluated on",
    )
    format_parent = argparse.ArgumentParser(add_help=False)
    format_parent.add_argument(
        "--format",
        choices=["table", "csv", "json"],
        default="table",
        help="output format",
    )
    pca_parent = argparse.ArgumentParser(add_help=False)
    pca_parent.add_argument(
        "--columns",
        default=",".join(INDICATOR_LABELS),
        help="comma-separated indicator columns",
    )
    pca_parent.add_argument(
        "--retain",
        default="2",
        help="number of components to retain, or 'kaiser'",
    )

    parser = argparse.ArgumentParser(
        prog="evalchain",
        description="Indicator algebra, pairwise comparison and principal "
        "component maps for research-unit datasets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "indicators",
        parents=[basis_parent, format_parent],
        help="evaluate the indicator chain for every unit",
    )
    p.add_argument("dataset", help="CSV file with name,S,P,C[,HCA] rows")
    p.set_defaults(func=cmd_indicators)

    p = sub.add_parser(
        "compare",
        parents=[basis_parent, format_parent],
        help="compare two units on every indicator",
    )
    p.add_argument("dataset")
    p.add_argument("unit_a", help="baseline unit name")
    p.add_argument("unit_b", help="challenger unit name")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser(
        "pca",
        parents=[basis_parent, format_parent, pca_parent],
        help="principal component decomposition of the indicator matrix",
    )
    p.add_argument("dataset")
    p.set_defaults(func=cmd_pca)

    p = sub.add_parser(
        "map",
        parents=[basis_parent, pca_parent],
        help="write a two-component unit map as CSV or SVG",
    )
    p.add_argument("dataset")
    p.add_argument("output", help="output file path")
    p.add_argument("--svg", action="store_true", help="write an SVG scatter plot")
    p.set_defaults(func=cmd_map)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EvalChainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
