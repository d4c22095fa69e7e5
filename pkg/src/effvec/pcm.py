"""Reciprocal pairwise-comparison matrices and priority vectors.

Data model, validation, Hadamard-style algebra (consistent completions,
monomial similarity), construction of special matrices, and CSV/JSON file I/O.

All matrices handled here are *reciprocal*: strictly positive square matrices
with a[j][i] == 1/a[i][j] and unit diagonal. Positions, column numbers and
index sets in the public API are 1-based; underlying numpy arrays are 0-based.
Entries below the diagonal are canonicalized to exact reciprocals of the upper
triangle, so reciprocity holds to machine precision internally.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import (
    BadDimension,
    DimensionMismatch,
    EmptyIndexSet,
    IndexOutOfRange,
    InvalidTransform,
    NonPositiveEntry,
    NonUnitDiagonal,
    NotSquare,
    ParseError,
    ReciprocityViolation,
)

RECIPROCITY_RTOL = 1e-9


def _frozen(a) -> np.ndarray:
    out = np.array(a, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class PCMatrix:
    """Positive reciprocal matrix of pairwise ratio judgements.

    Immutable. Construct from untrusted data with :func:`validate_pc`, which
    checks all invariants and canonicalizes the lower triangle.
    """

    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _frozen(self.entries))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def column(self, j: int) -> np.ndarray:
        """Column j (1-based), as a fresh positive vector."""
        if not 1 <= j <= self.n:
            raise IndexOutOfRange(j, self.n)
        return self.entries[:, j - 1].copy()

    def __repr__(self):
        return f"PCMatrix(n={self.n})"


@dataclass(frozen=True, eq=False)
class PriorityVector:
    """Positive weight vector; meaningful only up to positive scaling."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        if w.ndim != 1:
            raise BadDimension(w.ndim, "weights must be a 1-D vector")
        for i, x in enumerate(w):
            if not (x > 0) or not np.isfinite(x):
                raise NonPositiveEntry(i + 1, None, float(x))
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return self.weights.shape[0]

    def normalized(self) -> "PriorityVector":
        """Canonical display form: scaled so the last entry equals 1."""
        return PriorityVector(self.weights / self.weights[-1])

    def __repr__(self):
        return f"PriorityVector({np.array2string(self.weights, precision=6)})"


@dataclass(frozen=True, eq=False)
class DeviationMatrix:
    """Signed residuals w_i/w_j - a_ij of a consistent completion against A."""

    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _frozen(self.entries))

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True, eq=False)
class MonomialTransform:
    """A positive diagonal scaling followed by a permutation of positions.

    ``permutation[k]`` is the 1-based source position moved to position k+1;
    ``scaling`` is the positive diagonal, applied before permuting. Applied to
    a matrix this is P·D·A·D^(-1)·P^T, applied to a vector it is P·D·w.
    """

    permutation: tuple
    scaling: np.ndarray

    def __post_init__(self):
        perm = tuple(int(p) for p in self.permutation)
        object.__setattr__(self, "permutation", perm)
        s = np.array(self.scaling, dtype=float)
        if s.ndim != 1 or len(perm) != s.shape[0]:
            raise InvalidTransform("permutation and scaling sizes differ")
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise InvalidTransform(f"{perm} is not a permutation of 1..{len(perm)}")
        for i, x in enumerate(s):
            if not (x > 0) or not np.isfinite(x):
                raise NonPositiveEntry(i + 1, None, float(x))
        s.setflags(write=False)
        object.__setattr__(self, "scaling", s)

    @property
    def n(self) -> int:
        return len(self.permutation)

    @classmethod
    def identity(cls, n: int) -> "MonomialTransform":
        return cls(tuple(range(1, n + 1)), np.ones(n))

    def map_position(self, j: int) -> int:
        """New 1-based position of source position j."""
        return self.permutation.index(j) + 1


def as_matrix(a) -> PCMatrix:
    """Coerce to PCMatrix; raw arrays go through full validation."""
    if isinstance(a, PCMatrix):
        return a
    return validate_pc(a)


def as_weights(w, n: int | None = None) -> np.ndarray:
    """Coerce to a validated positive 1-D float array (copy)."""
    if isinstance(w, PriorityVector):
        v = w.weights.copy()
    else:
        v = np.array(w, dtype=float)
        if v.ndim != 1:
            raise BadDimension(v.ndim, "weights must be a 1-D vector")
        for i, x in enumerate(v):
            if not (x > 0) or not np.isfinite(x):
                raise NonPositiveEntry(i + 1, None, float(x))
    if n is not None and v.shape[0] != n:
        raise DimensionMismatch(n, v.shape[0], "vector")
    return v


def _canonicalize(a: np.ndarray) -> np.ndarray:
    """Unit diagonal, lower triangle replaced by exact reciprocals of the upper."""
    b = a.copy()
    n = b.shape[0]
    np.fill_diagonal(b, 1.0)
    iu = np.triu_indices(n, 1)
    b[(iu[1], iu[0])] = 1.0 / b[iu]
    return b


def validate_pc(raw, rtol: float = RECIPROCITY_RTOL) -> PCMatrix:
    """Validate a raw square array as a reciprocal matrix and canonicalize it.

    Checks, in order: squareness, n >= 2, strict positivity, unit diagonal,
    and a_ij * a_ji == 1 within relative tolerance ``rtol``. On success the
    lower triangle is recomputed as the exact reciprocal of the upper part.
    """
    a = np.asarray(raw, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquare(a.shape)
    n = a.shape[0]
    if n < 2:
        raise BadDimension(n, "a pairwise-comparison matrix needs n >= 2")
    for i in range(n):
        for j in range(n):
            x = a[i, j]
            if not (x > 0) or not np.isfinite(x):
                raise NonPositiveEntry(i + 1, j + 1, float(x))
    for i in range(n):
        if abs(a[i, i] - 1.0) > rtol:
            raise NonUnitDiagonal(i + 1, float(a[i, i]))
    for i in range(n):
        for j in range(i + 1, n):
            if abs(a[i, j] * a[j, i] - 1.0) > rtol:
                raise ReciprocityViolation(i + 1, j + 1, float(a[i, j]), float(a[j, i]))
    return PCMatrix(_canonicalize(a))


def consistent_from_vector(w) -> PCMatrix:
    """The consistent matrix W with W_ij = w_i / w_j generated by w."""
    v = as_weights(w)
    if v.shape[0] < 2:
        raise BadDimension(v.shape[0], "need at least 2 weights")
    return PCMatrix(_canonicalize(np.outer(v, 1.0 / v)))


def is_consistent(A, tol: float = 1e-9) -> bool:
    """True iff a_ij * a_jk == a_ik for all triples, within relative ``tol``."""
    m = as_matrix(A).entries
    for j in range(m.shape[0]):
        prod = np.outer(m[:, j], m[j, :])
        if np.any(np.abs(prod - m) > tol * m):
            return False
    return True


def deviation(A, w) -> DeviationMatrix:
    """D(A, w): entry (i,j) is w_i/w_j - a_ij; the diagonal is exactly zero."""
    m = as_matrix(A)
    v = as_weights(w, m.n)
    d = np.outer(v, 1.0 / v) - m.entries
    np.fill_diagonal(d, 0.0)
    return DeviationMatrix(d)


def monomial_similarity(A, t: MonomialTransform) -> PCMatrix:
    """P·D·A·D^(-1)·P^T for the scaling D and permutation P in ``t``."""
    m = as_matrix(A)
    if t.n != m.n:
        raise DimensionMismatch(m.n, t.n, "transform")
    d = t.scaling
    scaled = m.entries * d[:, None] / d[None, :]
    src = np.array(t.permutation) - 1
    return validate_pc(scaled[np.ix_(src, src)])


def transform_vector(w, t: MonomialTransform) -> PriorityVector:
    """P·D·w: scale entrywise by ``t.scaling`` then permute positions."""
    v = as_weights(w, t.n)
    src = np.array(t.permutation) - 1
    return PriorityVector((t.scaling * v)[src])


def z_matrix(n: int, x: float) -> PCMatrix:
    """All-ones n×n reciprocal matrix except entries (1,n) = x and (n,1) = 1/x."""
    if n < 3:
        raise BadDimension(n, "perturbed-corner matrices need n >= 3")
    if not (x > 0) or not np.isfinite(x):
        raise NonPositiveEntry(1, n, float(x))
    m = np.ones((n, n))
    m[0, n - 1] = x
    m[n - 1, 0] = 1.0 / x
    return PCMatrix(m)


def principal_submatrix(A, keep: Iterable[int]) -> PCMatrix:
    """Rows and columns restricted to the 1-based index set ``keep``, order preserved.

    Reciprocity is inherited; a singleton set yields the trivial 1×1 matrix.
    """
    m = as_matrix(A)
    ks = sorted(set(int(k) for k in keep))
    if not ks:
        raise EmptyIndexSet()
    for k in ks:
        if not 1 <= k <= m.n:
            raise IndexOutOfRange(k, m.n)
    idx = [k - 1 for k in ks]
    return PCMatrix(m.entries[np.ix_(idx, idx)])


# ---------------------------------------------------------------------------
# File formats: CSV with optional '#' headers and "p/q" fractions, and JSON.
# ---------------------------------------------------------------------------

SERIALIZE_DIGITS = 17  # round-trip exact for 64-bit floats


def parse_number(token: str) -> float:
    """Parse a decimal or exact "p/q" fraction into a 64-bit float."""
    tok = token.strip()
    try:
        if "/" in tok:
            return float(Fraction(tok))
        return float(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"cannot parse numeric token {tok!r}") from exc


def parse_matrix_csv(text: str) -> PCMatrix:
    """Parse n rows of n comma-separated values; lines starting with '#' are skipped."""
    rows = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append([parse_number(cell) for cell in stripped.split(",")])
    if not rows:
        raise ParseError("no data rows found")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ParseError("rows have unequal lengths")
    return validate_pc(np.array(rows, dtype=float))


def parse_matrix_json(data) -> PCMatrix:
    """Parse {"n": int, "entries": [[...]]}; entries may be numbers or fraction strings."""
    obj = json.loads(data) if isinstance(data, str) else data
    entries = obj["entries"]
    rows = [[parse_number(c) if isinstance(c, str) else float(c) for c in row] for row in entries]
    a = np.array(rows, dtype=float)
    if "n" in obj and int(obj["n"]) != a.shape[0]:
        raise DimensionMismatch(int(obj["n"]), a.shape[0], "entries")
    return validate_pc(a)


def load_matrix(path) -> PCMatrix:
    text = open(path, "r", encoding="utf-8").read()
    if str(path).endswith(".json") or text.lstrip().startswith("{"):
        return parse_matrix_json(text)
    return parse_matrix_csv(text)


def matrix_to_csv(A, digits: int = SERIALIZE_DIGITS) -> str:
    m = as_matrix(A)
    lines = [",".join(f"{x:.{digits}g}" for x in row) for row in m.entries]
    return "\n".join(lines) + "\n"


def matrix_to_json(A) -> str:
    m = as_matrix(A)
    return json.dumps({"n": m.n, "entries": [[float(x) for x in row] for row in m.entries]})


def parse_vector(text: str) -> PriorityVector:
    """Parse comma- or whitespace-separated weights; fractions allowed."""
    cleaned = text.replace(",", " ")
    tokens = [t for t in cleaned.split() if t]
    if not tokens:
        raise EmptyIndexSet()
    return PriorityVector(np.array([parse_number(t) for t in tokens]))


def parse_vector_json(data) -> PriorityVector:
    obj = json.loads(data) if isinstance(data, str) else data
    weights = [parse_number(x) if isinstance(x, str) else float(x) for x in obj["weights"]]
    return PriorityVector(np.array(weights))


def load_vector(path) -> PriorityVector:
    text = open(path, "r", encoding="utf-8").read()
    if str(path).endswith(".json") or text.lstrip().startswith("{"):
        return parse_vector_json(text)
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    return parse_vector(" ".join(lines))


def vector_to_json(w) -> str:
    v = as_weights(w)
    return json.dumps({"weights": [float(x) for x in v]})
