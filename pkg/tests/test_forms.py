"""Count-vector cut arithmetic checked against the expanded graph."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cochaincut import (
    ChainForm,
    CutAssignment,
    InvalidCutError,
    all_cuts,
    check_cut,
    cut_size,
    edge_count,
    expand,
    subset_cut_size,
)
from conftest import cut_vertices, small_forms


def test_rejects_malformed_multiplicity_vectors():
    with pytest.raises(ValueError):
        ChainForm(1, (1,), (1, 1))  # m too short
    with pytest.raises(ValueError):
        ChainForm(1, (1, 1), (1,))  # mp too short
    with pytest.raises(ValueError):
        ChainForm(1, (0, 1), (1, 1))  # unprimed rows are never empty
    with pytest.raises(ValueError):
        ChainForm(1, (1, 1), (0, 1))  # inner primed rows are never empty
    with pytest.raises(ValueError):
        ChainForm(-1, (), ())
    with pytest.raises(ValueError):
        ChainForm(0, (1,), (-1,))


def test_only_the_last_primed_row_may_be_empty():
    assert ChainForm(1, (1, 1), (1, 0)).trimmed
    assert not ChainForm(1, (1, 1), (1, 2)).trimmed
    # the one exception: the empty graph
    empty = ChainForm(0, (0,), (0,))
    assert empty.total == 0
    assert edge_count(empty) == 0


def test_total_counts_both_sides():
    assert ChainForm(2, (2, 1, 3), (1, 2, 0)).total == 9


def test_check_cut_rejects_bad_vectors():
    form = ChainForm(1, (2, 1), (1, 1))
    check_cut(form, CutAssignment((2, 0), (1, 0)))
    with pytest.raises(InvalidCutError):
        check_cut(form, CutAssignment((2,), (1, 0)))  # wrong length
    with pytest.raises(InvalidCutError):
        check_cut(form, CutAssignment((3, 0), (1, 0)))  # exceeds the multiplicity
    # negative counts never even construct
    with pytest.raises(ValueError):
        CutAssignment((-1, 0), (1, 0))


def test_edge_count_fixed_values():
    # a single clique, and two disjoint cliques (k = 0 has no cross edges)
    assert edge_count(ChainForm(0, (5,), (0,))) == 10
    assert edge_count(ChainForm(0, (3,), (2,))) == 4
    # all-ones form with k rows on both sides: 3 * C(k+1, 2) edges
    assert edge_count(ChainForm(5, (1,) * 6, (1,) * 6)) == 45


def test_edge_count_matches_expansion():
    for form in small_forms(2, 3, include_empty=True):
        assert edge_count(form) == len(expand(form).edges), form


def test_cut_size_matches_expanded_graph_exhaustively():
    for form in small_forms(2, 2, include_empty=True):
        g = expand(form)
        for cut in all_cuts(form):
            want = subset_cut_size(g, cut_vertices(form, cut))
            assert cut_size(form, cut) == want, (form, cut)


def test_all_cuts_enumerates_every_vector_once():
    form = ChainForm(1, (2, 1), (1, 2))
    cuts = list(all_cuts(form))
    expected = 1
    for v in form.m + form.m_prime:
        expected *= v + 1
    assert len(cuts) == expected
    assert len(set(cuts)) == expected
    for cut in cuts:
        check_cut(form, cut)


@st.composite
def form_with_cut(draw):
    k = draw(st.integers(0, 3))
    m = tuple(draw(st.integers(1, 4)) for _ in range(k + 1))
    mp = tuple(draw(st.integers(1, 4)) for _ in range(k)) + (draw(st.integers(0, 4)),)
    form = ChainForm(k, m, mp)
    s = tuple(draw(st.integers(0, v)) for v in m)
    sp = tuple(draw(st.integers(0, v)) for v in mp)
    return form, CutAssignment(s, sp)


@settings(max_examples=200, deadline=None)
@given(form_with_cut())
def test_cut_size_properties(fc):
    form, cut = fc
    size = cut_size(form, cut)
    # swapping the two sides leaves every crossing edge crossing
    assert size == cut_size(form, cut.complement(form))
    # never more edges than exist, never negative
    assert 0 <= size <= edge_count(form)
    # agrees with direct counting on the expansion
    assert size == subset_cut_size(expand(form), cut_vertices(form, cut))


def test_complement_flips_every_count():
    form = ChainForm(2, (2, 1, 3), (1, 2, 0))
    cut = CutAssignment((1, 0, 2), (1, 1, 0))
    comp = cut.complement(form)
    assert comp.s == (1, 1, 1)
    assert comp.s_prime == (0, 1, 0)
