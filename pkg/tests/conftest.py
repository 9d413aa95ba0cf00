"""Shared helpers: small-form enumeration and cut materialization."""

from __future__ import annotations

import itertools
from typing import Iterator

from cochaincut import ChainForm, CutAssignment


def small_forms(max_k: int, max_mult: int, include_empty: bool = False) -> Iterator[ChainForm]:
    """Every valid form with k <= max_k and multiplicities <= max_mult."""
    if include_empty:
        yield ChainForm(0, (0,), (0,))
    inner = range(1, max_mult + 1)
    last = range(0, max_mult + 1)
    for k in range(max_k + 1):
        for m in itertools.product(inner, repeat=k + 1):
            for mp_inner in itertools.product(inner, repeat=k):
                for mp_last in last:
                    yield ChainForm(k, m, mp_inner + (mp_last,))


def cut_vertices(form: ChainForm, cut: CutAssignment) -> frozenset[int]:
    """The cut as a vertex subset of expand(form).

    expand numbers vertices block by block, unprimed rows first; taking
    the first s_i ids of each block realizes the count vector exactly.
    """
    ids = []
    offset = 0
    for size, take in zip(form.m + form.m_prime, cut.s + cut.s_prime):
        ids.extend(range(offset, offset + take))
        offset += size
    return frozenset(ids)
