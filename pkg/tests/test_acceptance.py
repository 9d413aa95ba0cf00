"""Acceptance gate: one test per shipping criterion.

Each test is independent and self-contained so that a verbose run gives
one pass/fail line per criterion.  Tolerances and budgets are pinned as
module constants; everything not marked as a wall-clock budget is exact.
"""

import itertools
import math
import time
from fractions import Fraction

import pytest

from cochaincut import (
    ROW_TYPES,
    BlockPattern,
    GenSpec,
    Rejection,
    RowCut,
    STAGE_CHAIN,
    STAGE_COMPLEMENT,
    block_structure_counterexample,
    brute_force_multiplicity,
    brute_force_subsets,
    canonical_form,
    closed_form_optimum,
    counterexample_block_cut,
    cut_size,
    edge_count,
    expand,
    graph_from_edges,
    normalize,
    pattern_cut_size,
    pattern_search,
    random_chain_forms,
    shuffle_expand,
    skeleton,
    swap,
)
from cochaincut.cli import run_bench
from cochaincut.dp import solve

REMARK_BUDGET_S = 1.0  # fixed 36-vertex instance must solve well under this
EXHAUSTIVE_BUDGET_S = 10.0  # the full k <= five sweep, both variants
RANDOM_SUITE_BUDGET_S = 300.0  # two hundred randomized dp-vs-oracle instances
RANDOM_COUNT = 200
STATE_CAP = 10**6  # oracle state budget per randomized instance
SUBSET_CAP = 1 << 12  # subset budget per exhaustive instance
SCALING_EXPONENT_BOUND = 4.6
ASYMPTOTIC_WINDOW = 0.01  # see the marked test at the bottom


def _random_instances(count=RANDOM_COUNT):
    """Deterministic sample of forms whose oracle state space fits the cap."""
    spec = GenSpec((0, 4), (1, 3), seed=20240817, trimmed_weight=0.25)
    accepted = []
    for form in random_chain_forms(spec, 4 * count):
        states = 1
        for v in form.m + form.m_prime:
            states *= v + 1
        if states <= STATE_CAP:
            accepted.append(form)
            if len(accepted) == count:
                return accepted
    raise AssertionError("rejection sampling starved; widen the draw")


def test_a01_heavy_row_instance_beats_the_block_cut():
    """The fixed counterexample solves to 223; its block cut only reaches 210."""
    form = block_structure_counterexample()
    start = time.perf_counter()
    solution = solve(form)
    elapsed = time.perf_counter() - start
    assert solution.size == 223
    assert cut_size(form, counterexample_block_cut()) == 210
    assert cut_size(form, solution.cut) == 223
    assert elapsed < REMARK_BUDGET_S


def test_a02_oracle_confirms_the_heavy_row_optimum():
    """Exhaustive count-vector enumeration reproduces 223 over ~7.9e6 states."""
    result = brute_force_multiplicity(block_structure_counterexample())
    assert result.size == 223
    assert result.states_examined == 7929856
    assert cut_size(block_structure_counterexample(), result.witness) == 223


def test_a03_four_way_agreement_on_small_skeletons():
    """Subset oracle, pattern search, closed form, and dp agree for k <= 5."""
    start = time.perf_counter()
    for k in range(1, 6):
        for trimmed in (False, True):
            form = skeleton(k, trimmed)
            oracle = brute_force_subsets(expand(form), limit=SUBSET_CAP)
            searched = pattern_search(k, trimmed)[1]
            closed = closed_form_optimum(k, trimmed)[1]
            solved = solve(form).size
            assert oracle.size == searched == closed == solved, (k, trimmed)
    assert time.perf_counter() - start < EXHAUSTIVE_BUDGET_S


def test_a04_closed_form_uses_the_corrected_sign():
    """Optima match floor(5k^2/6 + 3k/2 + 3/4); the minus-sign variant is wrong."""
    for k in range(1, 6):
        truth = brute_force_subsets(expand(skeleton(k))).size
        plus = math.floor(Fraction(5, 6) * k * k + Fraction(3, 2) * k + Fraction(3, 4))
        minus = math.floor(Fraction(5, 6) * k * k - Fraction(3, 2) * k + Fraction(3, 4))
        assert truth == plus, k
        assert truth != minus, k
        assert closed_form_optimum(k)[1] == plus, k


def test_a05_an_optimal_pattern_with_balanced_blocks_exists():
    """For k <= 6 some optimal pattern has t = 0 and x, y, z within 1 of k/3."""
    for k in range(1, 7):
        truth = brute_force_subsets(expand(skeleton(k))).size
        rows = k + 1
        balanced = []
        for x in range(rows + 1):
            for y in range(rows + 1 - x):
                for z in range(rows + 1 - x - y):
                    p = BlockPattern(x, y, z, rows - x - y - z)
                    if pattern_cut_size(p) != truth:
                        continue
                    if p.t == 0 and all(abs(3 * v - k) <= 3 for v in (p.x, p.y, p.z)):
                        balanced.append(p)
        assert balanced, k


def test_a06_randomized_dp_matches_oracle_with_certificates():
    """200 seeded instances: dp equals the oracle and both witnesses check out."""
    start = time.perf_counter()
    for form in _random_instances():
        solution = solve(form)
        confirmed = brute_force_multiplicity(form, limit=STATE_CAP)
        assert solution.size == confirmed.size, form
        assert cut_size(form, solution.cut) == solution.size, form
        assert cut_size(form, confirmed.witness) == confirmed.size, form
    assert time.perf_counter() - start < RANDOM_SUITE_BUDGET_S


def _expected_swap_delta(cut, i):
    # 0 when the four vertices split evenly or not at all; otherwise the
    # size grows iff the lone separated vertex sits at v_i or v'_{i+1}
    in_s = {"SS": (1, 1), "BS": (0, 1), "BB": (0, 0), "SB": (1, 0)}
    va, pa = in_s[cut.types[i]]
    vb, pb = in_s[cut.types[i + 1]]
    total = va + pa + vb + pb
    if total not in (1, 3):
        return 0
    target = 1 if total == 1 else 0
    if va == target or pb == target:
        return 1
    return -1


def test_a07_swap_deltas_follow_the_case_table():
    """Exchanging adjacent rows changes the cut by the predicted -1, 0, or +1."""
    checks = 0
    for k in range(1, 5):
        form = skeleton(k)
        for types in itertools.product(ROW_TYPES, repeat=k + 1):
            cut = RowCut(types)
            before = cut_size(form, cut.assignment())
            for i in range(k):
                after = cut_size(form, swap(cut, i).assignment())
                assert after - before == _expected_swap_delta(cut, i), (types, i)
                checks += 1
    assert checks == 5008


def test_a08_solutions_cut_at_least_half_the_edges():
    """Every instance from the randomized sample cuts >= ceil(edges / 2)."""
    for form in _random_instances():
        bound = -(-edge_count(form) // 2)
        assert solve(form).size >= bound, form
    form = block_structure_counterexample()
    assert solve(form).size >= -(-edge_count(form) // 2)


def test_a09_recognition_round_trips_and_rejections():
    """100 shuffled expansions normalize back; C4 and C5 are turned away."""
    spec = GenSpec((0, 5), (1, 4), seed=777, trimmed_weight=0.25)
    for i, form in enumerate(random_chain_forms(spec, 100)):
        shuffled = shuffle_expand(form, seed=i)
        result = normalize(shuffled)
        assert not isinstance(result, Rejection), form
        assert canonical_form(result.form) == canonical_form(form), form
    c4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    verdict = normalize(c4)
    assert isinstance(verdict, Rejection) and verdict.stage == STAGE_CHAIN
    c5 = graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    verdict = normalize(c5)
    assert isinstance(verdict, Rejection) and verdict.stage == STAGE_COMPLEMENT


def test_a10_scaling_stays_polynomial():
    """Doubling n on the bench ladder fits an exponent comfortably below 4.6."""
    result = run_bench([64, 128, 256], repeats=3)
    assert result["fitted_exponent"] is not None
    assert result["fitted_exponent"] <= SCALING_EXPONENT_BOUND
    for row in result["rows"]:
        assert row["size"] == closed_form_optimum(row["n"] // 2 - 1)[1]


@pytest.mark.known_failing
def test_asymptotic_ratio_hits_the_published_window():
    """Pins value(k=100)/k^2 to within 0.01 of 5/6; the exact optimum misses it.

    The full-skeleton optimum is floor(5k^2/6 + 3k/2 + 3/4), so the ratio
    at k = 100 is 0.8484 and its distance to 5/6 is 0.0151.  The window
    only holds with the lower-order terms removed (or for the trimmed
    variant, whose optimum is smaller).  Kept failing on purpose rather
    than silently widening the tolerance; see the companion test below
    for the bound the optimum does satisfy.
    """
    _, value = closed_form_optimum(100)
    assert value == 8484  # the exact optimum itself is not in question
    assert abs(value / 100**2 - 5 / 6) <= ASYMPTOTIC_WINDOW


def test_asymptotic_ratio_approaches_five_sixths():
    """Both variants satisfy |value/k^2 - 5/6| <= 2/k, hence converge to 5/6."""
    for k in (50, 100, 200, 400):
        for trimmed in (False, True):
            _, value = closed_form_optimum(k, trimmed)
            gap = abs(Fraction(value, k * k) - Fraction(5, 6))
            assert gap <= Fraction(2, k), (k, trimmed, float(gap))
    assert closed_form_optimum(100)[1] == 8484
    assert closed_form_optimum(100, trimmed=True)[1] == 8417
