"""Perron eigenvector by power iteration, and the two deviation norms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence
from .pcm import DeviationMatrix, PriorityVector, as_matrix


@dataclass(frozen=True)
class PerronResult:
    vector: PriorityVector
    eigenvalue: float
    iterations: int
    residual: float  # max_i |(A v)_i - eigenvalue * v_i| / eigenvalue


def perron_vector(A, tol: float = 1e-13, max_iter: int = 100_000) -> PerronResult:
    """Dominant positive eigenpair of a reciprocal matrix.

    Power iteration from the all-ones vector, renormalized to max entry 1 each
    step. Convergence is scale-free: iteration stops once the max relative
    change of the normalized iterate falls below ``tol`` and the eigenpair
    residual is below ``tol``. Positive matrices always converge; hitting
    ``max_iter`` signals a numeric anomaly.
    """
    m = as_matrix(A).entries
    v = np.ones(m.shape[0])
    residual = np.inf
    for it in range(1, max_iter + 1):
        av = m @ v
        nxt = av / av.max()
        delta = np.abs(nxt / v - 1.0).max()
        v = nxt
        if delta < tol:
            av = m @ v
            lam = float((av / v).mean())
            residual = float(np.abs(av - lam * v).max() / lam)
            if residual <= tol:
                return PerronResult(PriorityVector(v), lam, it, residual)
    raise NoConvergence(max_iter, residual)


def _dev_entries(d) -> np.ndarray:
    return d.entries if isinstance(d, DeviationMatrix) else np.asarray(d, dtype=float)


def norm1(d) -> float:
    """Sum of the absolute values of all entries."""
    return float(np.abs(_dev_entries(d)).sum())


def norm_frobenius(d) -> float:
    """Square root of the sum of squared entries."""
    e = _dev_entries(d)
    return float(np.sqrt((e * e).sum()))
