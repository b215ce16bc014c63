"""Independent eigendecomposition oracle for checking the Jacobi solver.

Eigenvalues come from the roots of the characteristic polynomial, whose
coefficients are built with the Faddeev-LeVerrier recurrence; candidate
eigenvectors come from an SVD null-space solve of (A - lambda I). None
of this shares code with the production path, which uses only plane
rotations.

Root finding on the characteristic polynomial loses accuracy near
repeated roots (error grows like eps**(1/multiplicity)), so callers
that compare against this oracle should condition on a minimum
eigenvalue gap.
"""

from __future__ import annotations

import numpy as np


def characteristic_coefficients(a: np.ndarray) -> np.ndarray:
    """Coefficients of det(lambda I - A), highest power first."""
    a = np.asarray(a, dtype=float)
    m = a.shape[0]
    coeffs = np.zeros(m + 1)
    coeffs[0] = 1.0
    mk = np.zeros_like(a)
    for k in range(1, m + 1):
        mk = a @ mk + coeffs[k - 1] * np.eye(m)
        coeffs[k] = -float(np.trace(a @ mk)) / k
    return coeffs


def reference_eigenvalues(a: np.ndarray) -> np.ndarray:
    """Eigenvalues by characteristic-polynomial root finding, descending."""
    a = np.asarray(a, dtype=float)
    scale = float(np.max(np.abs(a)))
    if scale == 0.0:
        return np.zeros(a.shape[0])
    roots = np.roots(characteristic_coefficients(a / scale))
    return np.sort(np.real(roots))[::-1] * scale


def reference_eigenvector(a: np.ndarray, eigenvalue: float) -> np.ndarray:
    """Unit null vector of (A - eigenvalue I) via SVD."""
    a = np.asarray(a, dtype=float)
    m = a.shape[0]
    _, _, vt = np.linalg.svd(a - eigenvalue * np.eye(m))
    return vt[-1]


def min_gap(eigenvalues: np.ndarray) -> float:
    """Smallest spacing between adjacent sorted eigenvalues."""
    s = np.sort(np.asarray(eigenvalues, dtype=float))
    if len(s) < 2:
        return np.inf
    return float(np.min(np.diff(s)))
