"""Correlation-based principal component analysis, from scratch.

The pipeline is deliberately explicit: z-score standardization (sample
standard deviation, ddof=1), the Pearson correlation matrix Z'Z/(n-1),
and a cyclic Jacobi eigendecomposition. No numpy.linalg factorizations
are used, so every numerical step is reproducible from this file alone.

On indicator data the leading component collects the size-dependent
indicators (a general size factor) and the second component the
size-independent quality and productivity measures, which is what makes
the decomposition useful as a two-axis map of a research system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    AmbiguousLoading,
    DegenerateColumn,
    InvariantViolation,
    NotConverged,
    TooFewColumns,
    TooFewRows,
)

# An eigenvalue at or below this is treated as a null component: its
# direction is an arbitrary completion of the basis, so loadings on it
# carry no information about the data.
NULL_EIGENVALUE = 1e-9

_STANDARD_TOL = 1e-8


class IndicatorClass(Enum):
    """Which of the two leading axes an indicator belongs to."""

    QUANTITY = "quantity"
    QUALITY_PRODUCTIVITY = "quality_productivity"


@dataclass(frozen=True, eq=False)
class DataMatrix:
    """A labelled n-by-m matrix of indicator values (rows are units)."""

    column_labels: tuple[str, ...]
    unit_names: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "column_labels", tuple(self.column_labels))
        object.__setattr__(self, "unit_names", tuple(self.unit_names))
        vals = np.array(self.values, dtype=float)
        if vals.ndim != 2:
            raise InvariantViolation("values must be a 2-d array")
        n, m = vals.shape
        if n < 2:
            raise TooFewRows(f"need at least 2 units, got {n}")
        if m < 2:
            raise TooFewColumns(f"need at least 2 columns, got {m}")
        if len(self.unit_names) != n:
            raise InvariantViolation("unit_names length does not match row count")
        if len(self.column_labels) != m:
            raise InvariantViolation("column_labels length does not match column count")
        if len(set(self.column_labels)) != m:
            raise InvariantViolation("column labels must be unique")
        if not np.all(np.isfinite(vals)):
            raise InvariantViolation("matrix entries must be finite")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape


def standardize(matrix: DataMatrix) -> DataMatrix:
    """Center each column and scale it to unit sample variance (ddof=1)."""
    vals = matrix.values
    means = vals.mean(axis=0)
    sds = vals.std(axis=0, ddof=1)
    for label, sd in zip(matrix.column_labels, sds):
        if sd <= 1e-12:
            raise DegenerateColumn(label)
    return DataMatrix(matrix.column_labels, matrix.unit_names, (vals - means) / sds)


def correlation_matrix(standardized: DataMatrix) -> np.ndarray:
    """Pearson correlation matrix Z'Z/(n-1) of a standardized matrix."""
    z = standardized.values
    n = z.shape[0]
    if np.max(np.abs(z.mean(axis=0))) > _STANDARD_TOL:
        raise InvariantViolation("matrix is not centered")
    if np.max(np.abs(z.std(axis=0, ddof=1) - 1.0)) > _STANDARD_TOL:
        raise InvariantViolation("matrix does not have unit column variance")
    r = z.T @ z / (n - 1)
    return (r + r.T) / 2.0


def _off_diagonal_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.sqrt(np.sum(off * off)))


def eigendecompose_symmetric(
    matrix: np.ndarray, *, max_sweeps: int = 100, tol: float = 1e-12
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and eigenvectors of a symmetric matrix by cyclic Jacobi.

    Sweeps the strict upper triangle in row order, annihilating each
    off-diagonal entry with a plane rotation, until the off-diagonal
    Frobenius norm falls to ``tol`` (scaled by the matrix norm). Returns
    eigenvalues in descending order and the matching eigenvectors as
    *rows* of the second array. Each eigenvector is normalized so that
    its largest-magnitude entry is positive (first such entry on ties).
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvariantViolation("matrix must be square")
    if float(np.max(np.abs(a - a.T))) > 1e-10:
        raise InvariantViolation("matrix must be symmetric")
    a = (a + a.T) / 2.0
    m = a.shape[0]
    v = np.eye(m)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))

    for sweep in range(max_sweeps):
        if _off_diagonal_norm(a) <= threshold:
            break
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = a[p, q]
                g = 100.0 * abs(apq)
                # Entries too small to move either diagonal are flushed
                # once the iteration has settled (Rutishauser's rule).
                if sweep >= 4 and abs(a[p, p]) + g == abs(a[p, p]) and abs(
                    a[q, q]
                ) + g == abs(a[q, q]):
                    a[p, q] = a[q, p] = 0.0
                    continue
                if apq == 0.0:
                    continue
                h = a[q, q] - a[p, p]
                if abs(h) + g == abs(h):
                    t = apq / h
                else:
                    theta = 0.5 * h / apq
                    t = 1.0 / (abs(theta) + math.sqrt(1.0 + theta * theta))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                tau = s / (1.0 + c)
                delta = t * apq
                a[p, p] -= delta
                a[q, q] += delta
                a[p, q] = a[q, p] = 0.0
                for j in range(m):
                    if j == p or j == q:
                        continue
                    ajp = a[j, p]
                    ajq = a[j, q]
                    a[j, p] = a[p, j] = ajp - s * (ajq + tau * ajp)
                    a[j, q] = a[q, j] = ajq + s * (ajp - tau * ajq)
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = vp - s * (vq + tau * vp)
                v[:, q] = vq + s * (vp - tau * vq)
    else:
        if _off_diagonal_norm(a) > threshold:
            raise NotConverged(
                f"off-diagonal norm {_off_diagonal_norm(a):.3g} above "
                f"{threshold:.3g} after {max_sweeps} sweeps"
            )

    eigenvalues = np.diag(a).copy()
    order = np.argsort(-eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    vectors = v[:, order].T.copy()
    for k in range(m):
        lead = int(np.argmax(np.abs(vectors[k])))
        if vectors[k, lead] < 0:
            vectors[k] = -vectors[k]
    return eigenvalues, vectors


@dataclass(frozen=True, eq=False)
class PCAResult:
    """Everything the decomposition produced.

    ``loadings[k]`` is the unit-norm loading vector of component k;
    ``scores[:, k]`` the units' coordinates on it. ``assignment`` maps
    each column label to the 0-based retained component it loads
    strongest on.
    """

    column_labels: tuple[str, ...]
    unit_names: tuple[str, ...]
    eigenvalues: np.ndarray
    loadings: np.ndarray
    explained_variance: np.ndarray
    scores: np.ndarray
    retained: int
    assignment: dict[str, int]


def _effective_loadings(eigenvalues: np.ndarray, loadings: np.ndarray, k: int) -> np.ndarray:
    """Absolute loadings of the first k components, nulled where the
    eigenvalue is numerically zero."""
    weights = np.abs(loadings[:k]).copy()
    weights[eigenvalues[:k] <= NULL_EIGENVALUE] = 0.0
    return weights


def _resolve_retained(retain: int | str, eigenvalues: np.ndarray) -> int:
    m = len(eigenvalues)
    if retain == "kaiser":
        return max(1, int(np.sum(eigenvalues > 1.0)))
    if not isinstance(retain, int) or isinstance(retain, bool):
        raise InvariantViolation(f"retain must be an integer or 'kaiser', got {retain!r}")
    if not 1 <= retain <= m:
        raise InvariantViolation(f"retain must lie between 1 and {m}, got {retain}")
    return retain


def run_pca(matrix: DataMatrix, retain: int | str = 2) -> PCAResult:
    """Standardize, correlate, decompose and score in one pass.

    ``retain`` is the number of components used for assignment, or
    "kaiser" to keep every component with eigenvalue above 1.
    """
    z = standardize(matrix)
    r = correlation_matrix(z)
    eigenvalues, loadings = eigendecompose_symmetric(r)
    m = len(eigenvalues)
    kept = _resolve_retained(retain, eigenvalues)
    scores = z.values @ loadings.T
    effective = _effective_loadings(eigenvalues, loadings, kept)
    assignment = {
        label: int(np.argmax(effective[:, j]))
        for j, label in enumerate(matrix.column_labels)
    }
    explained = eigenvalues / m
    for arr in (eigenvalues, loadings, explained, scores):
        arr.flags.writeable = False
    return PCAResult(
        column_labels=matrix.column_labels,
        unit_names=matrix.unit_names,
        eigenvalues=eigenvalues,
        loadings=loadings,
        explained_variance=explained,
        scores=scores,
        retained=kept,
        assignment=assignment,
    )


def classify_indicators(result: PCAResult) -> dict[str, IndicatorClass]:
    """Label every column as quantity (component 1) or quality/productivity
    (component 2) by its stronger absolute loading.

    Raises :class:`AmbiguousLoading` when the two loadings differ by less
    than 1e-6, rather than guessing.
    """
    if len(result.eigenvalues) < 2:
        raise InvariantViolation("classification needs at least two components")
    effective = _effective_loadings(result.eigenvalues, result.loadings, 2)
    classes: dict[str, IndicatorClass] = {}
    for j, label in enumerate(result.column_labels):
        w1, w2 = float(effective[0, j]), float(effective[1, j])
        if abs(w1 - w2) < 1e-6:
            raise AmbiguousLoading(label, abs(w1 - w2))
        classes[label] = (
            IndicatorClass.QUANTITY if w1 >= w2 else IndicatorClass.QUALITY_PRODUCTIVITY
        )
    return classes


def map_points(result: PCAResult) -> list[tuple[str, float, float]]:
    """(name, component-1 score, component-2 score) for every unit."""
    if result.scores.shape[1] < 2:
        raise InvariantViolation("a map needs at least two components")
    return [
        (name, float(result.scores[i, 0]), float(result.scores[i, 1]))
        for i, name in enumerate(result.unit_names)
    ]
