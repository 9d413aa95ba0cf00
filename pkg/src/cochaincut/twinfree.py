"""Twin-free skeletons and their cut structure.

With every multiplicity equal to one there are exactly two graphs per row
count: the full skeleton on rows 0..k and the trimmed one that drops the
last primed vertex (which makes v_k universal).  Cuts of these graphs are
conveniently described row by row, because each row (v_i, v'_i) falls in
exactly one of four states relative to the cut side S.  Maximum cuts can
then be brought into a fixed order of at most four blocks, and the block
lengths alone determine the cut size through a small quadratic polynomial.
This module implements that machinery: the mirror symmetry that exchanges
the two cliques, the neighbor-row swap with its +-1 size law, block
patterns with their exact objective, and both a closed-form and an
exhaustive-search optimizer over patterns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .forms import ChainForm, CutAssignment
from .graphs import SimpleGraph, expand

# Row states: first letter is the unprimed vertex, second the primed one;
# "S" means inside the cut side S, "B" outside it.
ROW_TYPES = ("SS", "BS", "BB", "SB")

_IN_S = {"SS": (True, True), "BS": (False, True), "BB": (False, False), "SB": (True, False)}


def skeleton(k: int, trimmed: bool = False) -> ChainForm:
    """The all-ones form on rows 0..k; trimmed drops the last primed vertex."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if trimmed:
        if k < 1:
            raise ValueError("the trimmed skeleton needs k >= 1")
        return ChainForm(k, (1,) * (k + 1), (1,) * k + (0,))
    return ChainForm(k, (1,) * (k + 1), (1,) * (k + 1))


def mirror_form(form: ChainForm) -> ChainForm:
    """The relabeling that exchanges the two cliques.

    Reading the rows bottom-up from the other side is again a valid
    labeling, so every form has exactly two (possibly equal) labelings:
    itself and this mirror.  For a trimmed form the universal vertex stays
    at the top unprimed position.  The operation is an involution.
    """
    k = form.k
    if form.m == (0,) * (k + 1):
        return form  # the empty graph
    if form.trimmed:
        m = tuple(reversed(form.m_prime[:k])) + (form.m[k],)
        mp = tuple(reversed(form.m[:k])) + (0,)
    else:
        m = tuple(reversed(form.m_prime))
        mp = tuple(reversed(form.m))
    return ChainForm(k, m, mp)


def canonical_form(form: ChainForm) -> ChainForm:
    """The lexicographically smaller of the two labelings of the same graph."""
    other = mirror_form(form)
    return min(form, other, key=lambda f: (f.m, f.m_prime))


def mirror_permutation(k: int, trimmed: bool = False) -> tuple[int, ...]:
    """The mirror symmetry as a vertex permutation of the expanded skeleton.

    Vertex ids follow expand(): unprimed vertices are 0..k, primed ones
    continue upward.  Unprimed row i goes to primed row k-i and back; a
    trimmed skeleton keeps its universal vertex fixed and mirrors the rest.
    The result is checked to preserve adjacency before being returned.
    """
    form = skeleton(k, trimmed)
    n = form.total
    perm = [-1] * n
    if trimmed:
        perm[k] = k
        for i in range(k):
            perm[i] = k + 1 + (k - 1 - i)
            perm[k + 1 + i] = k - 1 - i
    else:
        for i in range(k + 1):
            perm[i] = k + 1 + (k - i)
            perm[k + 1 + i] = k - i
    g = expand(form)
    mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in g.edges}
    if mapped != set(g.edges):
        raise RuntimeError("mirror permutation failed to preserve adjacency")
    return tuple(perm)


@dataclass(frozen=True)
class RowCut:
    """A cut of a skeleton given by per-row states.

    ``types`` covers the rows that contain both vertices: rows 0..k for the
    full skeleton, rows 0..k-1 for the trimmed one.  A trimmed cut also
    needs ``apex_in_s`` to place the universal vertex v_k; full cuts leave
    it None.
    """

    types: tuple[str, ...]
    trimmed: bool = False
    apex_in_s: bool | None = None

    def __post_init__(self) -> None:
        if not self.types:
            raise ValueError("a row cut needs at least one row")
        for t in self.types:
            if t not in ROW_TYPES:
                raise ValueError(f"unknown row type {t!r}")
        if self.trimmed and self.apex_in_s is None:
            raise ValueError("trimmed cuts must place the universal vertex")
        if not self.trimmed and self.apex_in_s is not None:
            raise ValueError("apex_in_s applies only to trimmed cuts")

    @property
    def k(self) -> int:
        return len(self.types) - 1 + (1 if self.trimmed else 0)

    def form(self) -> ChainForm:
        return skeleton(self.k, self.trimmed)

    def assignment(self) -> CutAssignment:
        """The equivalent count vectors on the all-ones form."""
        s = [1 if _IN_S[t][0] else 0 for t in self.types]
        sp = [1 if _IN_S[t][1] else 0 for t in self.types]
        if self.trimmed:
            s.append(1 if self.apex_in_s else 0)
            sp.append(0)
        return CutAssignment(tuple(s), tuple(sp))


def swap(cut: RowCut, i: int) -> RowCut:
    """Exchange the states of rows i and i+1.

    The cut size changes by 0 when both rows are monochromatic or both
    bi-chromatic, and by +-1 otherwise; it grows exactly when the vertex
    separated from the other three sits at position v_i or v'_{i+1}.
    """
    if not 0 <= i < len(cut.types) - 1:
        raise IndexError(f"swap position {i} out of range")
    types = list(cut.types)
    types[i], types[i + 1] = types[i + 1], types[i]
    return RowCut(tuple(types), cut.trimmed, cut.apex_in_s)


def rotate(cut: RowCut, i: int, j: int) -> RowCut:
    """Move the state of row j to row i, shifting rows i..j-1 up by one."""
    if not 0 <= i <= j < len(cut.types):
        raise IndexError(f"rotate range ({i}, {j}) out of range")
    out = cut
    for pos in range(j - 1, i - 1, -1):
        out = swap(out, pos)
    return out


def rev_rotate(cut: RowCut, i: int, j: int) -> RowCut:
    """Inverse of rotate with the same indices."""
    if not 0 <= i <= j < len(cut.types):
        raise IndexError(f"rotate range ({i}, {j}) out of range")
    out = cut
    for pos in range(i, j):
        out = swap(out, pos)
    return out


@dataclass(frozen=True)
class BlockPattern:
    """Block lengths (x, y, z, t) for the row-state order SS, BS, BB, SB.

    x rows with both vertices in S, then y rows with only the primed vertex
    in S, then z rows with neither, then t rows with only the unprimed one.
    The lengths sum to k+1 on the full skeleton and to k on the trimmed one.
    """

    x: int
    y: int
    z: int
    t: int

    def __post_init__(self) -> None:
        if min(self.x, self.y, self.z, self.t) < 0:
            raise ValueError("block lengths must be nonnegative")

    @property
    def total(self) -> int:
        return self.x + self.y + self.z + self.t

    def row_types(self) -> tuple[str, ...]:
        return ("SS",) * self.x + ("BS",) * self.y + ("BB",) * self.z + ("SB",) * self.t


def block_objective(x, y, z, t):
    """Cut size of the pattern on the full skeleton, as a polynomial.

    Exact for integers and for Fractions, which the rounding analysis uses.
    """
    doubled = (
        2 * ((y + z) * (x + t) + (x + y) * (z + t) + x * y + y * z + x * z + z * t)
        + y * (y - 1)
        + t * (t - 1)
    )
    if isinstance(doubled, int):
        return doubled // 2
    return doubled / 2


def apex_gain(x, y, z, t, apex_in_s: bool):
    """Extra crossing edges contributed by the universal vertex of a trimmed cut."""
    if apex_in_s:
        return y + 2 * z + t
    return 2 * x + y + t


def pattern_row_cut(
    p: BlockPattern, trimmed: bool = False, apex_in_s: bool | None = None
) -> RowCut:
    k = p.total if trimmed else p.total - 1
    if k < 0 or (trimmed and k < 1):
        raise ValueError("pattern too short for a skeleton")
    return RowCut(p.row_types(), trimmed, apex_in_s if trimmed else None)


def pattern_to_cut(
    p: BlockPattern, trimmed: bool = False, apex_in_s: bool | None = None
) -> CutAssignment:
    """The pattern as count vectors on the matching all-ones form."""
    return pattern_row_cut(p, trimmed, apex_in_s).assignment()


def pattern_cut_size(
    p: BlockPattern, trimmed: bool = False, apex_in_s: bool | None = None
) -> int:
    """Exact cut size of the pattern, evaluated from the block polynomial."""
    base = block_objective(p.x, p.y, p.z, p.t)
    if not trimmed:
        if apex_in_s is not None:
            raise ValueError("apex_in_s applies only to trimmed patterns")
        return base
    if apex_in_s is None:
        raise ValueError("trimmed patterns need the side of the universal vertex")
    return base + apex_gain(p.x, p.y, p.z, p.t, apex_in_s)


def _round_half_even(value: Fraction) -> int:
    return round(value)


def closed_form_optimum(k: int, trimmed: bool = False) -> tuple[BlockPattern, int]:
    """Optimal block pattern and maximum cut size of the skeleton, in O(1).

    Full skeleton: the real-valued optimum of the block objective sits at
    x = z = k/3 + 1/2, y = k/3, t = 0; rounding x to the nearest integer
    (ties to even) and keeping x = z stays optimal because the objective
    drops by less than 1 within that rounding window.  Trimmed skeleton:
    the rounding depends on k mod 3 and the universal vertex goes to the
    better of its two sides.  The returned value is always evaluated
    through the block polynomial, never through a separate formula.
    """
    if k < 1:
        raise ValueError("closed form needs k >= 1")
    if not trimmed:
        x_hat = _round_half_even(Fraction(2 * k + 3, 6))
        pattern = BlockPattern(x_hat, k + 1 - 2 * x_hat, x_hat, 0)
        return pattern, pattern_cut_size(pattern)
    a, r = divmod(k, 3)
    if r == 0:
        pattern = BlockPattern(a, a, a, 0)
    elif r == 1:
        pattern = BlockPattern(a + 1, a, a, 0)
    else:
        pattern = BlockPattern(a + 1, a, a + 1, 0)
    value = max(
        pattern_cut_size(pattern, trimmed=True, apex_in_s=True),
        pattern_cut_size(pattern, trimmed=True, apex_in_s=False),
    )
    return pattern, value


def pattern_search(k: int, trimmed: bool = False) -> tuple[BlockPattern, int]:
    """Exhaustive maximum over all block patterns, O(k^3) states.

    Independent check of the closed form.  Ties resolve to the
    lexicographically smallest (x, y, z, t).
    """
    if k < 1:
        raise ValueError("pattern search needs k >= 1")
    total = k if trimmed else k + 1
    r = np.arange(total + 1, dtype=np.int64)
    y2 = r[:, None]
    z2 = r[None, :]
    best_val = -1
    best_pat = None
    for x in range(total + 1):
        t2 = total - x - y2 - z2
        feasible = t2 >= 0
        t_safe = np.where(feasible, t2, 0)
        vals = (
            2 * ((y2 + z2) * (x + t_safe) + (x + y2) * (z2 + t_safe)
                 + x * y2 + y2 * z2 + x * z2 + z2 * t_safe)
            + y2 * (y2 - 1)
            + t_safe * (t_safe - 1)
        ) // 2
        if trimmed:
            in_s = vals + y2 + 2 * z2 + t_safe
            out_s = vals + 2 * x + y2 + t_safe
            vals = np.maximum(in_s, out_s)
        vals = np.where(feasible, vals, -1)
        idx = int(np.argmax(vals))
        yy, zz = divmod(idx, total + 1)
        v = int(vals[yy, zz])
        if v > best_val:
            best_val = v
            best_pat = BlockPattern(x, yy, zz, total - x - yy - zz)
    return best_pat, best_val
