"""Exact maximum cut of a ChainForm by dynamic programming.

States are trimmed per row: after deciding rows 0..i, only the side sums
x = s_0 + .. + s_i and x' = s'_0 + .. + s'_i matter for the rows above,
because every vertex of row i+1 upward sees all copies below it on its own
side and all primed copies below it across.  The table F_i(x, x') holds the
best cut of the first i+1 rows with the given side sums; one layer follows
from the previous through a window of feasible per-row counts (s_i, s'_i).
The final answer is the maximum over the last layer, and the witnessing
count vectors fall out by walking the recorded choices backward.

Layer sizes are bounded by the vertex count N, so the table has O(N^2 k)
entries and the whole run costs O(N^4) in the worst case.  A rolling
two-layer variant gives the size alone in O(N^2) memory.

Unreachable states carry an explicit large negative sentinel, never 0; a
bracket value can be legitimately negative, so zero-initialising the
running maximum would corrupt the table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .forms import ChainForm, CutAssignment, cut_size

NEG = np.iinfo(np.int64).min // 4


@dataclass(frozen=True)
class Solution:
    """Optimal cut size with a witnessing assignment.

    objective_at is the (x, x') pair of side sums where the outer maximum
    was attained.
    """

    size: int
    cut: CutAssignment
    objective_at: tuple[int, int]


@dataclass(frozen=True)
class DpTable:
    """All layers of the recurrence plus the argmax choices for backtracking.

    layers[i][x, xp] is the best cut size of rows 0..i with side sums
    (x, xp); choice_s[i][x, xp] and choice_sp[i][x, xp] hold the last-row
    counts of one maximizing cut (the lexicographically smallest one).
    """

    layers: tuple[np.ndarray, ...]
    choice_s: tuple[np.ndarray, ...]
    choice_sp: tuple[np.ndarray, ...]


def _layer_pass(
    prev: np.ndarray,
    m_i: int,
    mp_i: int,
    pre_m: int,
    pre_mp: int,
    want_choices: bool,
):
    """One recurrence step from layer i-1 to layer i.

    For fixed per-row counts (s, sp) the bracket is the previous layer
    shifted by (s, sp) plus terms linear in x and xp, so each candidate is
    a single vectorized slice update.  Scanning (s, sp) in ascending order
    with a strict comparison leaves the lexicographically smallest argmax
    in the choice arrays.
    """
    big_x = pre_m + m_i
    big_xp = pre_mp + mp_i
    cur = np.full((big_x + 1, big_xp + 1), NEG, dtype=np.int64)
    ch_s = np.full_like(cur, -1, dtype=np.int32) if want_choices else None
    ch_sp = np.full_like(cur, -1, dtype=np.int32) if want_choices else None
    xs = np.arange(big_x + 1, dtype=np.int64)
    xps = np.arange(big_xp + 1, dtype=np.int64)
    for s in range(m_i + 1):
        x_term = -2 * s * xs[s : s + pre_m + 1]
        for sp in range(mp_i + 1):
            const = sp * (pre_mp - m_i) + s * (pre_m + pre_mp) + (s + sp) ** 2
            xp_term = -2 * (s + sp) * xps[sp : sp + pre_mp + 1]
            cand = prev + (const + x_term)[:, None] + xp_term[None, :]
            region = cur[s : s + pre_m + 1, sp : sp + pre_mp + 1]
            if want_choices:
                better = cand > region
                region[better] = cand[better]
                ch_s[s : s + pre_m + 1, sp : sp + pre_mp + 1][better] = s
                ch_sp[s : s + pre_m + 1, sp : sp + pre_mp + 1][better] = sp
            else:
                np.maximum(region, cand, out=region)
    # Every in-domain state is reachable, so nothing may remain at the sentinel.
    if not (cur > NEG // 2).all():
        raise RuntimeError("dp layer left unreachable states in its domain")
    cur += mp_i * xps[None, :] + m_i * (xs[:, None] + xps[None, :])
    return cur, ch_s, ch_sp


def build_table(form: ChainForm) -> DpTable:
    """Fill every layer of the recurrence, keeping choices for backtracking."""
    layers = []
    choice_s = []
    choice_sp = []
    prev = np.zeros((1, 1), dtype=np.int64)
    pre_m = 0
    pre_mp = 0
    for i in range(form.k + 1):
        cur, ch_s, ch_sp = _layer_pass(
            prev, form.m[i], form.m_prime[i], pre_m, pre_mp, want_choices=True
        )
        layers.append(cur)
        choice_s.append(ch_s)
        choice_sp.append(ch_sp)
        pre_m += form.m[i]
        pre_mp += form.m_prime[i]
        prev = cur
    return DpTable(tuple(layers), tuple(choice_s), tuple(choice_sp))


def solve(form: ChainForm) -> Solution:
    """Maximum cut size with a witnessing CutAssignment.

    Deterministic: the outer maximum takes the lexicographically smallest
    (x, x'), and each backtracking step the lexicographically smallest
    per-row counts among the maximizers.  The witness is re-evaluated
    through cut_size before returning.
    """
    table = build_table(form)
    last = table.layers[-1]
    flat = int(np.argmax(last))
    x, xp = divmod(flat, last.shape[1])
    size = int(last[x, xp])
    k = form.k
    s_vec = [0] * (k + 1)
    sp_vec = [0] * (k + 1)
    cx, cxp = x, xp
    for i in range(k, -1, -1):
        s = int(table.choice_s[i][cx, cxp])
        sp = int(table.choice_sp[i][cx, cxp])
        s_vec[i] = s
        sp_vec[i] = sp
        cx -= s
        cxp -= sp
    if (cx, cxp) != (0, 0):
        raise RuntimeError("backtracking did not return to the base state")
    cut = CutAssignment(tuple(s_vec), tuple(sp_vec))
    check = cut_size(form, cut)
    if check != size:
        raise RuntimeError(f"certificate evaluates to {check}, table says {size}")
    return Solution(size, cut, (x, xp))


def max_cut_size(form: ChainForm) -> int:
    """Size-only variant keeping two layers in memory, no certificate."""
    prev = np.zeros((1, 1), dtype=np.int64)
    pre_m = 0
    pre_mp = 0
    for i in range(form.k + 1):
        prev, _, _ = _layer_pass(
            prev, form.m[i], form.m_prime[i], pre_m, pre_mp, want_choices=False
        )
        pre_m += form.m[i]
        pre_mp += form.m_prime[i]
    return int(prev.max())


def calculate_opt(
    m_i: int,
    mp_i: int,
    pre_m: int,
    pre_mp: int,
    prev: dict[tuple[int, int], int],
    x: int,
    xp: int,
) -> tuple[int, tuple[int, int]] | None:
    """Scalar reference for one table entry.

    prev maps (x, xp) of layer i-1 to its value; pre_m and pre_mp are the
    multiplicity sums below row i.  Returns (value, (s, sp)) with the
    lexicographically smallest maximizing counts, or None when the state
    is unreachable.  The running maximum starts empty rather than at zero
    because bracket values can be negative.
    """
    lo, hi = max(0, x - pre_m), min(m_i, x)
    lop, hip = max(0, xp - pre_mp), min(mp_i, xp)
    best = None
    arg = None
    for s in range(lo, hi + 1):
        for sp in range(lop, hip + 1):
            f_prev = prev.get((x - s, xp - sp))
            if f_prev is None:
                continue
            val = (
                f_prev
                + sp * (pre_mp - m_i - 2 * xp)
                + s * (pre_m + pre_mp - 2 * (x + xp))
                + (s + sp) ** 2
            )
            if best is None or val > best:
                best = val
                arg = (s, sp)
    if best is None:
        return None
    return best + mp_i * xp + m_i * (x + xp), arg


def reference_layers(form: ChainForm) -> list[dict[tuple[int, int], int]]:
    """All layers computed through calculate_opt alone; slow, for testing."""
    prev: dict[tuple[int, int], int] = {(0, 0): 0}
    out = []
    pre_m = 0
    pre_mp = 0
    for i in range(form.k + 1):
        cur: dict[tuple[int, int], int] = {}
        for x in range(pre_m + form.m[i] + 1):
            for xp in range(pre_mp + form.m_prime[i] + 1):
                got = calculate_opt(form.m[i], form.m_prime[i], pre_m, pre_mp, prev, x, xp)
                if got is not None:
                    cur[(x, xp)] = got[0]
        out.append(cur)
        pre_m += form.m[i]
        pre_mp += form.m_prime[i]
        prev = cur
    return out
