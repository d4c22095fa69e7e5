"""Geometric means of column subsets and the exhaustive subset sweep.

A subset of the n columns is encoded as an n-bit pattern whose leftmost bit
stands for column 1; the subset's index is the value of that pattern read as a
binary number, so indices run over 1 .. 2^n - 1 and the top index is the
all-columns subset. The geometric mean of the columns in any nonempty subset
is an efficient vector for the matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .efficiency import DEFAULT_EPS, is_efficient
from .errors import DimensionMismatch, DimensionTooLarge, EmptyIndexSet, IndexOutOfRange
from .pcm import PriorityVector, as_matrix

SWEEP_DIMENSION_LIMIT = 20


@dataclass(frozen=True)
class ColumnSubset:
    """Nonempty set of column numbers of an n×n matrix, in binary-index encoding."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 1:
            raise EmptyIndexSet()
        if not 1 <= self.mask <= 2**self.n - 1:
            raise IndexOutOfRange(self.mask, 2**self.n - 1)

    @property
    def index(self) -> int:
        return self.mask

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    @property
    def columns(self) -> tuple:
        """Included column numbers (1-based), ascending."""
        return tuple(k for k in range(1, self.n + 1) if (self.mask >> (self.n - k)) & 1)

    @property
    def bitpattern(self) -> str:
        return format(self.mask, f"0{self.n}b")

    @classmethod
    def from_columns(cls, n: int, columns) -> "ColumnSubset":
        cols = set(int(c) for c in columns)
        if not cols:
            raise EmptyIndexSet()
        mask = 0
        for c in cols:
            if not 1 <= c <= n:
                raise IndexOutOfRange(c, n)
            mask |= 1 << (n - c)
        return cls(n, mask)


def subset_from_index(i: int, n: int) -> ColumnSubset:
    """The i-th subset in increasing order of the binary index, i in 1..2^n - 1."""
    return ColumnSubset(n, int(i))


def index_of(subset: ColumnSubset) -> int:
    return subset.mask


def geometric_mean_columns(A, subset: ColumnSubset) -> PriorityVector:
    """Entrywise geometric mean of the selected columns, computed in log space."""
    m = as_matrix(A)
    if subset.n != m.n:
        raise DimensionMismatch(m.n, subset.n, "subset")
    cols = np.array(subset.columns) - 1
    logw = np.log(m.entries[:, cols]).mean(axis=1)
    return PriorityVector(np.exp(logw))


@lru_cache(maxsize=16)
def _bit_table(n: int) -> np.ndarray:
    """(2^n - 1, n) 0/1 table; row i-1 holds the bit pattern of subset index i."""
    masks = np.arange(1, 2**n, dtype=np.int64)
    bits = ((masks[:, None] >> (n - 1 - np.arange(n))) & 1).astype(float)
    bits.setflags(write=False)
    return bits


def subset_gm_table(A) -> np.ndarray:
    """(2^n - 1, n) array whose row i-1 is the geometric mean of subset index i."""
    m = as_matrix(A)
    if m.n > SWEEP_DIMENSION_LIMIT:
        raise DimensionTooLarge(m.n, SWEEP_DIMENSION_LIMIT)
    bits = _bit_table(m.n)
    logw = (bits @ np.log(m.entries).T) / bits.sum(axis=1)[:, None]
    return np.exp(logw)


def subset_norms(A, chunk: int = 4096):
    """Per-subset deviation norms, vectorized.

    Returns (norm1, norm2) arrays indexed by subset index minus one, where
    norm1 sums |w_i/w_j - a_ij| over all entries and norm2 is the Frobenius
    norm of the same residual matrix.
    """
    m = as_matrix(A)
    a = m.entries
    gm = subset_gm_table(m)
    count = gm.shape[0]
    n1 = np.empty(count)
    n2 = np.empty(count)
    for start in range(0, count, chunk):
        w = gm[start : start + chunk]
        dev = w[:, :, None] / w[:, None, :] - a[None, :, :]
        n1[start : start + chunk] = np.abs(dev).sum(axis=(1, 2))
        n2[start : start + chunk] = np.sqrt((dev * dev).sum(axis=(1, 2)))
    return n1, n2


@dataclass(frozen=True)
class SweepRow:
    index: int
    subset: ColumnSubset
    vector: PriorityVector  # normalized, last entry 1
    norm1: float
    norm2: float


def sweep_all_subsets(A, verify: bool = False, eps: float = DEFAULT_EPS) -> list:
    """One row per subset index in increasing order, with both deviation norms.

    With ``verify`` each subset geometric mean is additionally certified
    efficient; a failure would indicate an internal bug.
    """
    m = as_matrix(A)
    gm = subset_gm_table(m)
    n1, n2 = subset_norms(m)
    rows = []
    for pos in range(gm.shape[0]):
        idx = pos + 1
        vec = PriorityVector(gm[pos] / gm[pos, -1])
        if verify and not is_efficient(m, vec, eps):
            raise AssertionError(f"subset {idx} geometric mean failed the efficiency check")
        rows.append(SweepRow(idx, ColumnSubset(m.n, idx), vec, float(n1[pos]), float(n2[pos])))
    return rows
