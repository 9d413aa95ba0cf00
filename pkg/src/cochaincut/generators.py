"""Instance construction: fixed showcase instances and seeded random ones.

Randomness comes from a self-contained splitmix64 generator rather than
the standard library, so that a seed produces the same instances on every
platform, Python version, and reimplementation in another language.  The
algorithm is fully determined by three published 64-bit constants; see the
SplitMix64 docstring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forms import ChainForm, CutAssignment
from .graphs import SimpleGraph, expand

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 pseudo-random generator.

    State advances by the additive constant 0x9E3779B97F4A7C15; each output
    mixes the state with xor-shifts by 30, 27, 31 and the multipliers
    0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.  Reference outputs from
    seed 0 start with 0xE220A8397B1DCDAF.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_below(self, n: int) -> int:
        """Uniform-ish draw from 0..n-1 (plain modulo; bias is negligible here)."""
        if n <= 0:
            raise ValueError("n must be positive")
        return self.next_u64() % n

    def next_unit(self) -> float:
        """A float in [0, 1) built from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def shuffle(self, seq: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(seq) - 1, 0, -1):
            j = self.next_below(i + 1)
            seq[i], seq[j] = seq[j], seq[i]


@dataclass(frozen=True)
class GenSpec:
    """Parameters of the random instance distribution.

    k is uniform over k_range, every multiplicity uniform over
    multiplicity_range, and with probability trimmed_weight the last primed
    multiplicity is forced to zero instead of drawn.  Both range ends are
    inclusive.
    """

    k_range: tuple[int, int]
    multiplicity_range: tuple[int, int]
    seed: int
    trimmed_weight: float = 0.0

    def __post_init__(self) -> None:
        klo, khi = self.k_range
        mlo, mhi = self.multiplicity_range
        if not 0 <= klo <= khi:
            raise ValueError("k_range must be nonempty and nonnegative")
        if not 1 <= mlo <= mhi:
            raise ValueError("multiplicity_range must be nonempty with lower end >= 1")
        if not 0.0 <= self.trimmed_weight <= 1.0:
            raise ValueError("trimmed_weight must lie in [0, 1]")


def _draw_form(spec: GenSpec, rng: SplitMix64) -> ChainForm:
    klo, khi = spec.k_range
    mlo, mhi = spec.multiplicity_range
    width = mhi - mlo + 1
    k = klo + rng.next_below(khi - klo + 1)
    m = tuple(mlo + rng.next_below(width) for _ in range(k + 1))
    mp = [mlo + rng.next_below(width) for _ in range(k)]
    if rng.next_unit() < spec.trimmed_weight:
        mp.append(0)
    else:
        mp.append(mlo + rng.next_below(width))
    return ChainForm(k, m, tuple(mp))


def random_chain_form(spec: GenSpec) -> ChainForm:
    """The first form of the stream determined by spec.seed."""
    return _draw_form(spec, SplitMix64(spec.seed))


def random_chain_forms(spec: GenSpec, count: int) -> list[ChainForm]:
    """The first count forms of the stream determined by spec.seed."""
    rng = SplitMix64(spec.seed)
    return [_draw_form(spec, rng) for _ in range(count)]


def shuffle_expand(form: ChainForm, seed: int | None = None) -> SimpleGraph:
    """Expand the form and relabel its vertices by a seeded permutation.

    seed None skips the relabeling and returns the plain expansion.  Used
    to stress recognition: normalizing the result must recover the form up
    to the mirror relabeling.
    """
    g = expand(form)
    if seed is None:
        return g
    perm = list(range(g.n))
    SplitMix64(seed).shuffle(perm)
    edges = frozenset((perm[u], perm[v]) for u, v in g.edges)
    return SimpleGraph(g.n, edges)


def block_structure_counterexample() -> ChainForm:
    """Fixed instance showing that heavy rows break the block structure.

    On twin-free skeletons some maximum cut always uses at most four
    contiguous row blocks.  With multiplicities that is no longer true:
    on this instance the best block-shaped cut reaches 210 while the true
    optimum is 223.
    """
    return ChainForm(8, (1, 1, 1, 10, 1, 1, 1, 1, 1), (1, 1, 1, 1, 1, 10, 1, 1, 1))


def counterexample_block_cut() -> CutAssignment:
    """The natural block-shaped cut of the counterexample; evaluates to 210."""
    return CutAssignment((1, 1, 1, 3, 0, 0, 0, 0, 0), (1, 1, 1, 1, 1, 7, 0, 0, 0))


def counterexample_optimal_cut() -> CutAssignment:
    """A cut of the counterexample attaining the optimum 223."""
    return CutAssignment((0, 0, 0, 8, 1, 1, 0, 0, 0), (0, 0, 0, 0, 0, 10, 0, 0, 0))
