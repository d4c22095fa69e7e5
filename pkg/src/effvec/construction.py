"""Inductive construction of efficient vectors.

An efficient vector for a principal submatrix missing one index extends to an
efficient vector for the full matrix exactly when the inserted value lies in a
closed interval determined by one column: x in [min_i w_i/a_{i,pos},
max_i w_i/a_{i,pos}]. Iterating the extension from a 2×2 or 3×3 principal
submatrix seed grows whole families of efficient vectors; the continuum of
admissible values is sampled (endpoints, geometric midpoint, log-uniform
draws) rather than enumerated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .efficiency import DEFAULT_EPS, is_efficient, proportional
from .errors import (
    BadRange,
    BadSeedSize,
    IndexOutOfRange,
    OutOfInterval,
    SeedNotEfficient,
)
from .pcm import PCMatrix, PriorityVector, as_matrix, as_weights, principal_submatrix


@dataclass(frozen=True)
class ExtensionInterval:
    """Closed interval of admissible inserted values; always nonempty."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (0 < self.lo <= self.hi):
            raise BadRange(f"invalid interval [{self.lo}, {self.hi}]")

    def contains(self, x: float, rtol: float = 1e-9) -> bool:
        return self.lo * (1.0 - rtol) <= x <= self.hi * (1.0 + rtol)


@dataclass(frozen=True)
class SamplingStrategy:
    """How to pick representative values from each extension interval."""

    endpoints: bool = True
    midpoint: bool = True
    interior_draws: int = 3

    def sample(self, lo: float, hi: float, rng: np.random.Generator) -> list:
        if hi <= lo * (1.0 + 1e-12):
            return [lo]
        xs = []
        if self.endpoints:
            xs += [lo, hi]
        if self.midpoint:
            xs.append(math.sqrt(lo * hi))
        if self.interior_draws > 0:
            draws = np.exp(rng.uniform(math.log(lo), math.log(hi), self.interior_draws))
            xs += [float(x) for x in draws]
        xs.sort()
        out = [xs[0]]
        for x in xs[1:]:
            if x > out[-1] * (1.0 + 1e-12):
                out.append(x)
        return out


@dataclass(frozen=True)
class FamilyProvenance:
    """How a family was grown: seed, growth order, strategy, and per-member traces.

    Each member trace lists (position, value) pairs in the order the entries
    were fixed, starting with the seed positions; it reconstructs the member
    up to scale.
    """

    seed_indices: tuple
    growth_order: tuple
    strategy: SamplingStrategy
    rng_seed: int
    truncated: bool
    member_traces: tuple = field(default_factory=tuple)


@dataclass(frozen=True, eq=False)
class EfficientFamily:
    matrix: PCMatrix
    members: tuple  # PriorityVector, canonically ordered
    provenance: FamilyProvenance

    def __len__(self) -> int:
        return len(self.members)


def extension_interval(A, w, pos: int, eps: float = DEFAULT_EPS) -> ExtensionInterval:
    """Admissible values for inserting a new entry at 1-based position ``pos``.

    ``w`` must be efficient for the principal submatrix that omits ``pos``
    (checked). The interval is [min, max] of w_i / a_{i,pos} over the kept
    indices, aligned with w.
    """
    m = as_matrix(A)
    if not 1 <= pos <= m.n:
        raise IndexOutOfRange(pos, m.n)
    v = as_weights(w, m.n - 1)
    keep = [k for k in range(1, m.n + 1) if k != pos]
    sub = principal_submatrix(m, keep)
    if not is_efficient(sub, v, eps):
        raise SeedNotEfficient(
            f"vector is not efficient for the submatrix keeping positions {tuple(keep)}"
        )
    col = m.entries[[k - 1 for k in keep], pos - 1]
    ratios = v / col
    return ExtensionInterval(float(ratios.min()), float(ratios.max()))


def extend(A, w, pos: int, x: float, eps: float = DEFAULT_EPS, rtol: float = 1e-9) -> PriorityVector:
    """Insert ``x`` at position ``pos``; requires x inside the extension interval."""
    interval = extension_interval(A, w, pos, eps)
    if not interval.contains(x, rtol):
        raise OutOfInterval(x, interval.lo, interval.hi)
    return PriorityVector(np.insert(as_weights(w), pos - 1, x))


def _corner_form_3x3(b: np.ndarray):
    """Diagonal scaling d mapping a 3×3 reciprocal matrix to corner-perturbed
    all-ones form with corner value t; returns (t, d)."""
    d = np.array([1.0, b[0, 1], b[0, 1] * b[1, 2]])
    t = b[0, 2] / (b[0, 1] * b[1, 2])
    return t, d


def _chain_base_vectors(t: float, grid: int):
    """Grid of efficient vectors for the corner-perturbed all-ones 3×3 matrix.

    For t >= 1 these are [w1, w2, 1] with 1 <= w2 <= w1 <= t (and the mirrored
    chain for t < 1), sampled on a log-spaced grid over the two parameters.
    """
    if abs(t - 1.0) <= 1e-12:
        return [np.ones(3)]
    out = []
    if t > 1.0:
        for w1 in np.geomspace(1.0, t, grid):
            for w2 in np.geomspace(1.0, w1, grid):
                out.append(np.array([w1, w2, 1.0]))
    else:
        for w1 in np.geomspace(t, 1.0, grid):
            for w2 in np.geomspace(w1, 1.0, grid):
                out.append(np.array([w1, w2, 1.0]))
    return out


def _dedup(items: list, tol: float = 1e-9) -> list:
    """Drop projectively equal members, keeping first occurrences.

    Bucketing on a rounded log-space key handles large families; small batches
    get an exact quadratic pass so near-boundary duplicates collapse reliably.
    """
    if len(items) <= 512:
        kept = []
        for w, trace in items:
            if not any(proportional(w, u, tol) for u, _ in kept):
                kept.append((w, trace))
        return kept
    kept = []
    buckets = {}
    for w, trace in items:
        canon = np.log(w / w[-1])
        key = tuple(np.round(canon / 1e-7).astype(np.int64))
        hits = buckets.setdefault(key, [])
        if not any(proportional(w, kept[k][0], tol) for k in hits):
            hits.append(len(kept))
            kept.append((w, trace))
    return kept


def inductive_enumerate(
    A,
    seed,
    strategy: SamplingStrategy | None = None,
    grid: int = 5,
    rng_seed: int = 0,
    max_members: int = 10_000,
    order=None,
    eps: float = DEFAULT_EPS,
) -> EfficientFamily:
    """Grow a family of efficient vectors from a 2- or 3-index principal seed.

    A size-2 seed uses the unique (up to scale) efficient vector of its
    consistent 2×2 submatrix; a size-3 seed draws base vectors from the
    closed-form characterization of its submatrix via a diagonal reduction to
    corner-perturbed all-ones form. Remaining indices are then filled one at a
    time (ascending by default, or per ``order``), sampling each extension
    interval per ``strategy``. Members are deduplicated projectively, capped
    at ``max_members`` (flagged in provenance), verified efficient, and
    returned in canonical lexicographic order of their normalized entries.
    """
    m = as_matrix(A)
    seed_ix = tuple(sorted(set(int(k) for k in seed)))
    for k in seed_ix:
        if not 1 <= k <= m.n:
            raise IndexOutOfRange(k, m.n)
    if len(seed_ix) not in (2, 3):
        raise BadSeedSize(len(seed_ix))
    strategy = strategy or SamplingStrategy()
    rng = np.random.default_rng(rng_seed)

    remaining = [k for k in range(1, m.n + 1) if k not in seed_ix]
    if order is not None:
        order = [int(k) for k in order]
        if sorted(order) != remaining:
            raise BadRange(f"order {order} is not a permutation of the remaining indices")
        remaining = order

    sub = principal_submatrix(m, seed_ix).entries
    if len(seed_ix) == 2:
        base = sub[:, 0]  # column of a consistent 2x2 block
        members = [(base.copy(), [(seed_ix[0], float(base[0])), (seed_ix[1], float(base[1]))])]
    else:
        t, d = _corner_form_3x3(sub)
        members = []
        for chain in _chain_base_vectors(t, grid):
            w = chain / d
            members.append((w, list(zip(seed_ix, (float(x) for x in w)))))
        members = _dedup(members)

    truncated = False
    current = list(seed_ix)
    for q in remaining:
        insert_at = int(np.searchsorted(np.array(current), q))
        col = m.entries[[k - 1 for k in current], q - 1]
        grown = []
        for w, trace in members:
            ratios = w / col
            lo, hi = float(ratios.min()), float(ratios.max())
            for x in strategy.sample(lo, hi, rng):
                grown.append((np.insert(w, insert_at, x), trace + [(q, float(x))]))
                if len(grown) >= max_members:
                    truncated = True
                    break
            if truncated:
                break
        members = _dedup(grown)
        current.insert(insert_at, q)

    for w, _ in members:
        if not is_efficient(m, w, eps):
            raise AssertionError("constructed family member failed the efficiency check")

    members.sort(key=lambda item: tuple(item[0] / item[0][-1]))
    vectors = tuple(PriorityVector(w) for w, _ in members)
    traces = tuple(tuple(trace) for _, trace in members)
    provenance = FamilyProvenance(
        seed_indices=seed_ix,
        growth_order=tuple(remaining),
        strategy=strategy,
        rng_seed=rng_seed,
        truncated=truncated,
        member_traces=traces,
    )
    return EfficientFamily(matrix=m, members=vectors, provenance=provenance)
