"""Brute-force ground truth for maximum-cut claims at desk scale.

Two independent enumerators.  ``brute_force_subsets`` walks raw vertex
subsets of a SimpleGraph and knows nothing about chain structure.
``brute_force_multiplicity`` walks the per-row count vectors of a
ChainForm, which collapses the twin orbits and reaches much larger
expanded graphs.  Both refuse loudly when the state space exceeds the
caller's budget; they never truncate silently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .forms import ChainForm, CutAssignment
from .graphs import SimpleGraph

DEFAULT_SUBSET_LIMIT = 1 << 24
DEFAULT_MULTIPLICITY_LIMIT = 10**7

# Keep vectorized chunks around a few million matrix cells.
_CHUNK_CELLS = 1 << 22


class BudgetExceededError(Exception):
    """The requested enumeration is larger than the allowed budget."""

    def __init__(self, required: int, limit: int):
        super().__init__(f"enumeration needs {required} states, budget is {limit}")
        self.required = required
        self.limit = limit


@dataclass(frozen=True)
class OracleResult:
    """Exact optimum plus the witness that attains it."""

    size: int
    witness: object  # frozenset of vertex ids, or a CutAssignment
    states_examined: int


def brute_force_subsets(g: SimpleGraph, limit: int = DEFAULT_SUBSET_LIMIT) -> OracleResult:
    """Maximum cut of g by enumerating vertex subsets.

    Vertex 0 is pinned outside the cut side, which halves the work; the
    complement of a cut has the same size.  The witness is the set of
    vertices on the S side of one optimal cut.
    """
    n = g.n
    if n <= 1:
        return OracleResult(0, frozenset(), 1)
    states = 1 << (n - 1)
    if states > limit:
        raise BudgetExceededError(states, limit)

    if not g.edges:
        return OracleResult(0, frozenset(), states)
    eu = np.array([u for u, _ in g.edges], dtype=np.int64)
    ev = np.array([v for _, v in g.edges], dtype=np.int64)
    # Membership bit of vertex j for mask b: bit j-1 of b (vertex 0 fixed out).
    shifts = np.arange(n, dtype=np.uint64)
    best = -1
    best_mask = 0
    chunk = max(1, _CHUNK_CELLS // max(1, len(g.edges)))
    for lo in range(0, states, chunk):
        masks = np.arange(lo, min(lo + chunk, states), dtype=np.uint64)
        bits = (masks[:, None] << np.uint64(1) >> shifts[None, :]) & np.uint64(1)
        crossing = (bits[:, eu] != bits[:, ev]).sum(axis=1)
        idx = int(np.argmax(crossing))
        if int(crossing[idx]) > best:
            best = int(crossing[idx])
            best_mask = lo + idx
    side = frozenset(v for v in range(1, n) if (best_mask >> (v - 1)) & 1)
    return OracleResult(best, side, states)


def _count_matrix(bounds: tuple[int, ...]) -> np.ndarray:
    """All integer vectors with 0 <= vec[i] <= bounds[i], one per row."""
    grids = np.meshgrid(*[np.arange(b + 1, dtype=np.int64) for b in bounds], indexing="ij")
    return np.stack([grid.ravel() for grid in grids], axis=1)


def brute_force_multiplicity(
    form: ChainForm, limit: int = DEFAULT_MULTIPLICITY_LIMIT
) -> OracleResult:
    """Maximum cut of a ChainForm by enumerating all count vectors.

    The cut value splits into a part depending on s alone, a part on
    s_prime alone, and a bilinear coupling, so the full table over
    (all s) x (all s_prime) is a rank-(k+1) matrix product.  States are
    enumerated exhaustively; the budget caps len(s-grid) * len(sp-grid).
    """
    m = np.array(form.m, dtype=np.int64)
    mp = np.array(form.m_prime, dtype=np.int64)
    n_s = 1
    for v in form.m:
        n_s *= v + 1
    n_sp = 1
    for v in form.m_prime:
        n_sp *= v + 1
    states = n_s * n_sp
    if states > limit:
        raise BudgetExceededError(states, limit)

    svecs = _count_matrix(form.m)  # (n_s, k+1)
    spvecs = _count_matrix(form.m_prime)  # (n_sp, k+1)

    total_m = int(m.sum())
    total_mp = int(mp.sum())
    pref_mp = np.concatenate(([0], np.cumsum(mp)[:-1]))  # primed copies below row i

    x = svecs.sum(axis=1)
    u = x * (total_m - x) + svecs @ pref_mp  # s-only part

    cum_sp = np.cumsum(spvecs, axis=1)
    below_in = np.concatenate(
        (np.zeros((n_sp, 1), dtype=np.int64), cum_sp[:, :-1]), axis=1
    )  # C_i per s_prime row
    xp = spvecs.sum(axis=1)
    w = xp * (total_mp - xp) + below_in @ m  # s_prime-only part

    best = -1
    best_i = 0
    best_j = 0
    chunk = max(1, _CHUNK_CELLS // max(1, n_sp))
    for lo in range(0, n_s, chunk):
        hi = min(lo + chunk, n_s)
        block = u[lo:hi, None] + w[None, :] - 2 * (svecs[lo:hi] @ below_in.T)
        flat = int(np.argmax(block))
        i, j = divmod(flat, n_sp)
        if int(block[i, j]) > best:
            best = int(block[i, j])
            best_i = lo + i
            best_j = j
    witness = CutAssignment(tuple(svecs[best_i].tolist()), tuple(spvecs[best_j].tolist()))
    return OracleResult(best, witness, states)
