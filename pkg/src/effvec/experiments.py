"""Seeded random reciprocal-matrix generators and batch benchmark protocols.

Two generators: independent uniform draws on the upper triangle (reciprocals
below), and the Hadamard quotient B ∘ (B^(-1))^T of a fully random positive
matrix B. Batch runs compare the per-matrix minimum deviation norm over all
column-subset geometric means against the all-columns geometric mean, and
accumulate per-subset normalized scores and win counts. Every matrix gets its
own RNG substream derived from (seed, index), so results are independent of
execution schedule.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .column_means import ColumnSubset, subset_norms
from .efficiency import DEFAULT_EPS, is_efficient
from .errors import BadRange
from .pcm import PCMatrix, _canonicalize, as_matrix, deviation
from .spectral import norm1, norm_frobenius, perron_vector

GENERATORS = ("uniform-upper", "hadamard-quotient")
NORMS = ("norm1", "frobenius")

MIN_NORM_FLOOR = 1e-12  # matrices this close to consistent are excluded from p(i)
TIE_RTOL = 1e-12  # subsets within this relative distance of the minimum all win


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    count: int
    generator: str = "uniform-upper"
    lo: float = 0.0
    hi: float = 100.0
    seed: int = 0
    norms: tuple = NORMS

    def __post_init__(self):
        object.__setattr__(self, "norms", tuple(self.norms))
        if self.n < 2:
            raise BadRange(f"n must be >= 2, got {self.n}")
        if self.count < 1:
            raise BadRange(f"count must be >= 1, got {self.count}")
        if not (0 <= self.lo < self.hi):
            raise BadRange(f"need 0 <= lo < hi, got lo={self.lo}, hi={self.hi}")
        if self.generator not in GENERATORS:
            raise BadRange(f"unknown generator {self.generator!r}; choose from {GENERATORS}")
        for norm in self.norms:
            if norm not in NORMS:
                raise BadRange(f"unknown norm {norm!r}; choose from {NORMS}")


def matrix_rng(seed: int, j: int) -> np.random.Generator:
    """Independent, reproducible substream for matrix index j."""
    return np.random.default_rng(np.random.SeedSequence([int(seed) & (2**63 - 1), int(j)]))


def _draw_open(rng: np.random.Generator, lo: float, hi: float, shape) -> np.ndarray:
    """Uniform draws from the open interval (lo, hi); boundary hits are redrawn."""
    x = np.asarray(rng.uniform(lo, hi, shape), dtype=float)
    while True:
        bad = (x <= lo) | (x >= hi)
        if not bad.any():
            return x
        x[bad] = rng.uniform(lo, hi, int(bad.sum()))


def random_pc_uniform_upper(n: int, lo: float, hi: float, rng: np.random.Generator) -> PCMatrix:
    """Reciprocal matrix with i.i.d. uniform (lo, hi) entries above the diagonal."""
    if not (0 <= lo < hi):
        raise BadRange(f"need 0 <= lo < hi, got lo={lo}, hi={hi}")
    m = np.ones((n, n))
    iu = np.triu_indices(n, 1)
    vals = _draw_open(rng, lo, hi, iu[0].shape[0])
    m[iu] = vals
    m[(iu[1], iu[0])] = 1.0 / vals
    return PCMatrix(m)


def random_pc_hadamard_quotient(n: int, lo: float, hi: float, rng: np.random.Generator) -> PCMatrix:
    """Reciprocal matrix b_ij / b_ji from a fully random positive matrix B."""
    if not (0 <= lo < hi):
        raise BadRange(f"need 0 <= lo < hi, got lo={lo}, hi={hi}")
    b = _draw_open(rng, lo, hi, (n, n))
    return PCMatrix(_canonicalize(b / b.T))


def generate_matrix(config: ExperimentConfig, j: int) -> PCMatrix:
    rng = matrix_rng(config.seed, j)
    if config.generator == "uniform-upper":
        return random_pc_uniform_upper(config.n, config.lo, config.hi, rng)
    return random_pc_hadamard_quotient(config.n, config.lo, config.hi, rng)


def generate_matrices(config: ExperimentConfig) -> list:
    return [generate_matrix(config, j) for j in range(config.count)]


# ---------------------------------------------------------------------------
# Single-matrix summaries.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormComparison:
    min_value: float
    argmin_index: int
    all_columns_value: float


@dataclass(frozen=True)
class CompareRecord:
    j: int
    by_norm: dict  # norm name -> NormComparison


@dataclass(frozen=True)
class NormExtremes:
    min_index: int
    min_bitpattern: str
    min_value: float
    max_index: int
    max_bitpattern: str
    max_value: float
    ratio: float  # max_value / min_value


@dataclass(frozen=True)
class BestWorstSummary:
    n: int
    norm1: NormExtremes
    frobenius: NormExtremes
    all_columns_index: int
    all_columns_norm1: float
    all_columns_norm2: float
    perron_norm1: float
    perron_norm2: float
    perron_eigenvalue: float
    perron_efficient: bool

    def to_dict(self) -> dict:
        def extremes(e: NormExtremes) -> dict:
            return {
                "min": {"index": e.min_index, "bitpattern": e.min_bitpattern, "value": e.min_value},
                "max": {"index": e.max_index, "bitpattern": e.max_bitpattern, "value": e.max_value},
                "ratio": e.ratio,
            }

        return {
            "n": self.n,
            "norm1": extremes(self.norm1),
            "frobenius": extremes(self.frobenius),
            "all_columns": {
                "index": self.all_columns_index,
                "norm1": self.all_columns_norm1,
                "norm2": self.all_columns_norm2,
            },
            "perron": {
                "norm1": self.perron_norm1,
                "norm2": self.perron_norm2,
                "eigenvalue": self.perron_eigenvalue,
                "efficient": self.perron_efficient,
            },
        }


def _extremes(values: np.ndarray, n: int) -> NormExtremes:
    lo = int(values.argmin())  # first occurrence = smallest index on ties
    hi = int(values.argmax())
    return NormExtremes(
        min_index=lo + 1,
        min_bitpattern=ColumnSubset(n, lo + 1).bitpattern,
        min_value=float(values[lo]),
        max_index=hi + 1,
        max_bitpattern=ColumnSubset(n, hi + 1).bitpattern,
        max_value=float(values[hi]),
        ratio=float(values[hi] / values[lo]),
    )


def compare_matrix(A, norms: Sequence[str] = NORMS) -> dict:
    """Per-norm minimum over all subset geometric means vs the all-columns mean."""
    n1, n2 = subset_norms(A)
    out = {}
    if "norm1" in norms:
        out["norm1"] = NormComparison(float(n1.min()), int(n1.argmin()) + 1, float(n1[-1]))
    if "frobenius" in norms:
        out["frobenius"] = NormComparison(float(n2.min()), int(n2.argmin()) + 1, float(n2[-1]))
    return out


def best_worst_summary(A, eps: float = DEFAULT_EPS) -> BestWorstSummary:
    """Best and worst subset geometric means per norm, plus the all-columns and
    Perron rows; the Perron vector's efficiency is recorded, never assumed."""
    a = as_matrix(A)
    n1, n2 = subset_norms(a)
    perron = perron_vector(a)
    dev = deviation(a, perron.vector)
    return BestWorstSummary(
        n=a.n,
        norm1=_extremes(n1, a.n),
        frobenius=_extremes(n2, a.n),
        all_columns_index=2**a.n - 1,
        all_columns_norm1=float(n1[-1]),
        all_columns_norm2=float(n2[-1]),
        perron_norm1=norm1(dev),
        perron_norm2=norm_frobenius(dev),
        perron_eigenvalue=perron.eigenvalue,
        perron_efficient=bool(is_efficient(a, perron.vector, eps)),
    )


# ---------------------------------------------------------------------------
# Batch protocols.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubsetStats:
    """Per-subset aggregate scores over a batch of matrices.

    p[i-1] sums, over included matrices, the Frobenius deviation norm of
    subset i's geometric mean normalized by the per-matrix minimum (each term
    >= 1). n_wins[i-1] counts matrices whose minimum is attained by subset i;
    ties within TIE_RTOL all count. Matrices whose minimum norm is below
    MIN_NORM_FLOOR are excluded from both and reported.
    """

    n: int
    requested: int
    included: int
    excluded: tuple
    p: np.ndarray
    n_wins: np.ndarray


def _map_indexed(worker, count: int, max_workers: int) -> list:
    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(worker, range(count)))
    return [worker(j) for j in range(count)]


def batch_compare(
    config: ExperimentConfig,
    matrices: Iterable[PCMatrix] | None = None,
    max_workers: int = 1,
) -> list:
    """Per-matrix minimum-over-subsets vs all-columns records, in index order."""
    mats = list(matrices) if matrices is not None else None
    count = len(mats) if mats is not None else config.count

    def worker(j: int) -> CompareRecord:
        a = mats[j] if mats is not None else generate_matrix(config, j)
        return CompareRecord(j=j, by_norm=compare_matrix(a, config.norms))

    return _map_indexed(worker, count, max_workers)


def subset_statistics(
    config: ExperimentConfig,
    matrices: Iterable[PCMatrix] | None = None,
    max_workers: int = 1,
) -> SubsetStats:
    """Normalized Frobenius scores p(i) and win counts over a batch of matrices."""
    if "frobenius" not in config.norms:
        raise BadRange("subset statistics require the frobenius norm in config.norms")
    mats = list(matrices) if matrices is not None else None
    count = len(mats) if mats is not None else config.count
    size = 2**config.n - 1

    def worker(j: int):
        a = mats[j] if mats is not None else generate_matrix(config, j)
        _, n2 = subset_norms(a)
        return n2

    results = _map_indexed(worker, count, max_workers)

    p = np.zeros(size)
    n_wins = np.zeros(size, dtype=np.int64)
    excluded = []
    for j, n2 in enumerate(results):  # index order keeps float sums deterministic
        m = n2.min()
        if m < MIN_NORM_FLOOR:
            excluded.append(j)
            continue
        p += n2 / m
        n_wins[n2 <= m * (1.0 + TIE_RTOL)] += 1
    return SubsetStats(
        n=config.n,
        requested=count,
        included=count - len(excluded),
        excluded=tuple(excluded),
        p=p,
        n_wins=n_wins,
    )


# ---------------------------------------------------------------------------
# Figure-ready text outputs (plotting itself is out of scope).
# ---------------------------------------------------------------------------


def per_matrix_csv(records: Sequence[CompareRecord], norms: Sequence[str] = NORMS) -> str:
    cols = ["j"]
    for norm in norms:
        cols += [f"min_{norm}", f"argmin_{norm}", f"allcols_{norm}"]
    lines = ["# per-matrix minimum over subset geometric means vs the all-columns mean"]
    lines.append(",".join(cols))
    for rec in records:
        row = [str(rec.j)]
        for norm in norms:
            cmp = rec.by_norm[norm]
            row += [f"{cmp.min_value:.17g}", str(cmp.argmin_index), f"{cmp.all_columns_value:.17g}"]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def subset_stats_csv(stats: SubsetStats) -> str:
    lines = [
        "# per-subset normalized Frobenius score p and win count over "
        f"{stats.included} matrices ({len(stats.excluded)} excluded as near-consistent)",
        "index,bitpattern,p,n_wins",
    ]
    for i in range(1, 2**stats.n):
        lines.append(
            f"{i},{ColumnSubset(stats.n, i).bitpattern},{stats.p[i - 1]:.17g},{int(stats.n_wins[i - 1])}"
        )
    return "\n".join(lines) + "\n"


def experiment_summary(
    config: ExperimentConfig,
    records: Sequence[CompareRecord],
    stats: SubsetStats | None,
) -> dict:
    full_index = 2**config.n - 1
    summary = {
        "config": {
            "n": config.n,
            "count": config.count,
            "generator": config.generator,
            "lo": config.lo,
            "hi": config.hi,
            "seed": config.seed,
            "norms": list(config.norms),
        },
        "proper_subset_wins": {
            norm: sum(1 for r in records if r.by_norm[norm].argmin_index != full_index)
            for norm in config.norms
        },
        "matrices": len(records),
    }
    if stats is not None:
        summary["subset_stats"] = {
            "included": stats.included,
            "excluded": list(stats.excluded),
            "total_wins": int(stats.n_wins.sum()),
            "p_min_index": int(stats.p.argmin()) + 1,
            "p_max_index": int(stats.p.argmax()) + 1,
        }
    return summary
