"""Efficiency decisions for priority vectors via dominance-digraph connectivity.

For a reciprocal matrix A and positive vector w, the dominance digraph has an
edge i -> j exactly when w_i/w_j >= a_ij. A vector is efficient (no other
vector approximates A entrywise at least as well and strictly better
somewhere) if and only if this digraph is strongly connected. Strong
connectivity is decided by forward+reverse reachability; an independent
boolean matrix-power oracle is exposed for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadDimension, BadRange, DimensionMismatch
from .pcm import as_matrix, as_weights, deviation

DEFAULT_EPS = 1e-9


@dataclass(frozen=True, eq=False)
class DominanceDigraph:
    """Dense digraph on vertices 1..n; adjacency[i][j] is the edge i+1 -> j+1."""

    adjacency: np.ndarray

    def __post_init__(self):
        adj = np.array(self.adjacency, dtype=bool)
        np.fill_diagonal(adj, False)
        adj.setflags(write=False)
        object.__setattr__(self, "adjacency", adj)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    def edges(self) -> list:
        """Directed edges as 1-based (i, j) pairs, lexicographically ordered."""
        return [(int(i) + 1, int(j) + 1) for i, j in np.argwhere(self.adjacency)]


@dataclass(frozen=True)
class ConnectivityResult:
    strongly_connected: bool
    witness: frozenset | None  # 1-based vertex set with zero outgoing edges

    def __bool__(self) -> bool:
        return self.strongly_connected


@dataclass(frozen=True)
class EfficiencyCertificate:
    """Outcome of an efficiency test; an inefficiency witness is a vertex set
    with no outgoing edges in the dominance digraph (directly checkable)."""

    efficient: bool
    witness: frozenset | None

    def __bool__(self) -> bool:
        return self.efficient


def build_digraph(A, w, eps: float = DEFAULT_EPS) -> DominanceDigraph:
    """Dominance digraph of (A, w): edge i -> j iff w_i/w_j >= a_ij * (1 - eps).

    The relative slack ``eps`` treats near-equality as equality, preserving the
    closed (>=) semantics under floating point; with eps >= 0 at least one of
    i -> j, j -> i is always present.
    """
    m = as_matrix(A)
    v = as_weights(w, m.n)
    if eps < 0:
        raise BadRange(f"eps must be >= 0, got {eps}")
    ratios = np.outer(v, 1.0 / v)
    adj = ratios >= m.entries * (1.0 - eps)
    return DominanceDigraph(adj)


def _reachable(adj: np.ndarray, start: int) -> np.ndarray:
    reached = np.zeros(adj.shape[0], dtype=bool)
    reached[start] = True
    frontier = reached.copy()
    while frontier.any():
        step = adj[frontier].any(axis=0) & ~reached
        reached |= step
        frontier = step
    return reached


def is_strongly_connected(G: DominanceDigraph) -> ConnectivityResult:
    """Forward+reverse reachability from vertex 1.

    When the digraph is not strongly connected the result carries a witness: a
    nonempty proper vertex set with no outgoing edges (the forward-reachable
    set when proper, else the complement of the reverse-reachable set).
    """
    adj = G.adjacency
    fwd = _reachable(adj, 0)
    if not fwd.all():
        return ConnectivityResult(False, frozenset(int(i) + 1 for i in np.flatnonzero(fwd)))
    bwd = _reachable(adj.T, 0)
    if not bwd.all():
        return ConnectivityResult(False, frozenset(int(i) + 1 for i in np.flatnonzero(~bwd)))
    return ConnectivityResult(True, None)


def strongly_connected_matrix_power(G: DominanceDigraph) -> bool:
    """Independent oracle: strongly connected iff (I + L)^(n-1) is positive."""
    n = G.n
    m = G.adjacency.astype(np.int64)
    np.fill_diagonal(m, 1)
    power = np.eye(n, dtype=np.int64)
    for _ in range(n - 1):
        power = (power @ m > 0).astype(np.int64)  # clamp to booleans each step
    return bool(power.all())


def is_efficient(A, w, eps: float = DEFAULT_EPS) -> EfficiencyCertificate:
    """Decide efficiency of w for A by strong connectivity of the dominance digraph."""
    result = is_strongly_connected(build_digraph(A, w, eps))
    return EfficiencyCertificate(result.strongly_connected, result.witness)


def proportional(v, w, tol: float = 1e-9) -> bool:
    """True iff v = c*w for some c > 0, i.e. all ratios v_i/w_i agree within ``tol``."""
    a = as_weights(v)
    b = as_weights(w)
    if a.shape[0] != b.shape[0]:
        raise DimensionMismatch(b.shape[0], a.shape[0], "vector")
    r = a / b
    return bool(r.max() / r.min() - 1.0 <= tol)


def equal_deviation_magnitudes(A, v, w, tol: float = 1e-9) -> bool:
    """True iff |D(A,v)| and |D(A,w)| agree entrywise within relative ``tol``.

    Equivalent to proportionality of v and w; both routes are kept so the
    equivalence can be tested directly.
    """
    dv = np.abs(deviation(A, v).entries)
    dw = np.abs(deviation(A, w).entries)
    scale = np.maximum(np.maximum(np.abs(dv), np.abs(dw)), 1.0)
    return bool(np.all(np.abs(dv - dw) <= tol * scale))


def z_efficient(n: int, x: float, w, rtol: float = 1e-9) -> bool:
    """Closed-form efficiency test for the corner-perturbed all-ones matrix.

    w is efficient for the n×n all-ones matrix with corner entries (1,n) = x,
    (n,1) = 1/x iff w_n <= w_i <= w_1 <= w_n*x for all middle i, or the same
    chain with every inequality reversed. Comparisons use relative ``rtol``.
    """
    if n < 3:
        raise BadDimension(n, "the corner-perturbed characterization needs n >= 3")
    if not (x > 0) or not np.isfinite(x):
        raise BadRange(f"x must be a positive real, got {x}")
    v = as_weights(w, n)
    w1, wn = v[0], v[-1]
    mid = v[1:-1]

    def le(p, q):
        return p <= q * (1.0 + rtol)

    ascending = le(wn, mid.min()) and le(mid.max(), w1) and le(w1, wn * x)
    descending = le(mid.max(), wn) and le(w1, mid.min()) and le(wn * x, w1)
    return bool(ascending or descending)
