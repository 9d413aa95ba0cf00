"""Normalized instances of co-bipartite chain graphs.

A co-bipartite chain graph is determined, up to isomorphism, by how many
twin copies sit at each position of a fixed twin-free skeleton.  The
skeleton consists of two cliques whose vertices are labeled in rows
``v_0 .. v_k`` and ``v'_0 .. v'_k``, with the cross edges obeying a single
law: ``v_i`` is adjacent to ``v'_j`` exactly when ``j < i``.  A ChainForm
records the row count together with the two multiplicity vectors.  Setting
the last primed multiplicity to zero encodes the trimmed skeleton that is
missing ``v'_k`` altogether.

Cuts of such an instance never need to name individual vertices: all
copies at one position are interchangeable, so a cut is described by how
many copies of each position land in the side ``S``.  That count pair
(``s``, ``s_prime``) is a CutAssignment, and ``cut_size`` evaluates the
number of crossing edges directly from it in O(k) time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class ChainForm:
    """A co-bipartite chain graph in normalized multiplicity form.

    Fields:
        k:        highest row index; rows are 0..k.
        m:        k+1 multiplicities for the unprimed side (clique K).
        m_prime:  k+1 multiplicities for the primed side (clique K').

    Every multiplicity must be at least 1, with two sanctioned
    exceptions: m_prime[k] may be 0 (the trimmed skeleton), and the
    single form k=0, m=(0,), m_prime=(0,) stands for the empty graph.
    """

    k: int
    m: tuple[int, ...]
    m_prime: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("row index k must be nonnegative")
        m = tuple(int(v) for v in self.m)
        mp = tuple(int(v) for v in self.m_prime)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "m_prime", mp)
        if len(m) != self.k + 1 or len(mp) != self.k + 1:
            raise ValueError("multiplicity vectors must have length k+1")
        if self.k == 0 and m == (0,) and mp == (0,):
            return  # the empty graph
        if any(v < 1 for v in m):
            raise ValueError("unprimed multiplicities must be >= 1")
        if any(v < 1 for v in mp[:-1]):
            raise ValueError("primed multiplicities before row k must be >= 1")
        if mp[-1] < 0:
            raise ValueError("primed multiplicity at row k must be >= 0")

    @property
    def trimmed(self) -> bool:
        """True when the last primed position is absent (m_prime[k] == 0)."""
        return self.m_prime[self.k] == 0

    @property
    def total(self) -> int:
        """Number of vertices of the expanded graph."""
        return sum(self.m) + sum(self.m_prime)


@dataclass(frozen=True)
class CutAssignment:
    """How many copies of each position lie in the cut side S.

    Valid with respect to a ChainForm when 0 <= s[i] <= m[i] and
    0 <= s_prime[i] <= m_prime[i] for every row i.
    """

    s: tuple[int, ...]
    s_prime: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", tuple(int(v) for v in self.s))
        object.__setattr__(self, "s_prime", tuple(int(v) for v in self.s_prime))
        if any(v < 0 for v in self.s) or any(v < 0 for v in self.s_prime):
            raise ValueError("cut counts must be nonnegative")

    def complement(self, form: ChainForm) -> "CutAssignment":
        """The same cut with the two sides exchanged."""
        check_cut(form, self)
        return CutAssignment(
            tuple(m - v for m, v in zip(form.m, self.s)),
            tuple(m - v for m, v in zip(form.m_prime, self.s_prime)),
        )


class InvalidCutError(ValueError):
    """A CutAssignment violates the bounds of the ChainForm it was used with."""


def check_cut(form: ChainForm, cut: CutAssignment) -> None:
    """Raise InvalidCutError unless cut respects form's multiplicity bounds."""
    if len(cut.s) != form.k + 1 or len(cut.s_prime) != form.k + 1:
        raise InvalidCutError("cut vectors must have length k+1")
    for i in range(form.k + 1):
        if not 0 <= cut.s[i] <= form.m[i]:
            raise InvalidCutError(f"s[{i}]={cut.s[i]} outside [0, {form.m[i]}]")
        if not 0 <= cut.s_prime[i] <= form.m_prime[i]:
            raise InvalidCutError(
                f"s_prime[{i}]={cut.s_prime[i]} outside [0, {form.m_prime[i]}]"
            )


def cut_size(form: ChainForm, cut: CutAssignment) -> int:
    """Number of edges crossing the cut, computed in O(k).

    The three edge families contribute independently.  Clique edges on the
    unprimed side cross iff their endpoints are split, giving X*(M-X) with
    X = sum(s), M = sum(m); likewise for the primed clique.  A cross edge
    touches v_i and some v'_j with j < i, so copies of v_i placed in S pair
    with the primed copies below row i placed outside S, and vice versa.
    """
    check_cut(form, cut)
    total_m = sum(form.m)
    total_mp = sum(form.m_prime)
    in_s = sum(cut.s)
    in_s_p = sum(cut.s_prime)
    crossing = in_s * (total_m - in_s) + in_s_p * (total_mp - in_s_p)
    below_out = 0  # primed copies below current row that are outside S
    below_in = 0  # primed copies below current row that are inside S
    for i in range(form.k + 1):
        crossing += cut.s[i] * below_out + (form.m[i] - cut.s[i]) * below_in
        below_in += cut.s_prime[i]
        below_out += form.m_prime[i] - cut.s_prime[i]
    return crossing


def edge_count(form: ChainForm) -> int:
    """Edge count of the expanded graph: two cliques plus the cross edges."""
    total_m = sum(form.m)
    total_mp = sum(form.m_prime)
    edges = total_m * (total_m - 1) // 2 + total_mp * (total_mp - 1) // 2
    below = 0
    for i in range(form.k + 1):
        edges += form.m[i] * below
        below += form.m_prime[i]
    return edges


def all_cuts(form: ChainForm) -> Iterator[CutAssignment]:
    """Yield every CutAssignment of the form (use only at small scale)."""
    ranges = [range(v + 1) for v in form.m + form.m_prime]

    def rec(idx: int, acc: list[int]) -> Iterator[CutAssignment]:
        if idx == len(ranges):
            yield CutAssignment(tuple(acc[: form.k + 1]), tuple(acc[form.k + 1 :]))
            return
        for v in ranges[idx]:
            acc.append(v)
            yield from rec(idx + 1, acc)
            acc.pop()

    yield from rec(0, [])
