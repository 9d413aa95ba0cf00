"""Raw graphs, recognition, and twin contraction.

The input side of the package: a SimpleGraph is an undirected simple graph
over dense integer vertex ids.  ``recognize`` decides membership in the
co-bipartite chain class, ``normalize`` contracts twin classes into a
canonical ChainForm, and ``expand`` materializes a ChainForm back into a
concrete SimpleGraph.

Recognition runs in two stages.  First the complement must be bipartite;
a proper 2-coloring of the complement splits the vertices into two cliques.
Second the cross neighborhoods of one clique, sorted by size, must form an
inclusion chain.  Rejection at either stage is reported as a normal return
value carrying the failed stage, not as an exception.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .forms import ChainForm

# Side tags used by CliqueBipartition and VertexMap.
SIDE_K = 0
SIDE_K_PRIME = 1

# Stage names reported on rejection; also printed by the CLI.
STAGE_COMPLEMENT = "complement not bipartite"
STAGE_CHAIN = "chain condition violated"


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph: vertex ids 0..n-1 and a set of edges."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(canon))

    def adjacency(self) -> list[set[int]]:
        """Neighbor sets indexed by vertex id."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def graph_from_edges(n: int, edges) -> SimpleGraph:
    return SimpleGraph(n, frozenset(tuple(e) for e in edges))


def subset_cut_size(g: SimpleGraph, side: set[int] | frozenset[int]) -> int:
    """Edges of g with exactly one endpoint in the given vertex subset."""
    return sum(1 for u, v in g.edges if (u in side) != (v in side))


@dataclass(frozen=True)
class CliqueBipartition:
    """A split of the vertices into two cliques with nested cross neighborhoods.

    K is ordered by nondecreasing degree into K_prime, so consecutive
    members have inclusion-comparable cross neighborhoods.
    """

    K: tuple[int, ...]
    K_prime: tuple[int, ...]


@dataclass(frozen=True)
class Rejection:
    """Negative recognition verdict naming the stage that failed."""

    stage: str
    detail: str = ""


@dataclass(frozen=True)
class VertexMap:
    """Where each original vertex landed in the normalized form.

    ``assignments[v]`` is a pair (side, row) with side SIDE_K or
    SIDE_K_PRIME.  Exactly m[i] vertices map to (SIDE_K, i) and exactly
    m_prime[i] to (SIDE_K_PRIME, i).
    """

    assignments: tuple[tuple[int, int], ...]

    def row_of(self, v: int) -> tuple[int, int]:
        return self.assignments[v]


@dataclass(frozen=True)
class Normalized:
    """Result of normalize: the canonical form plus the vertex placement."""

    form: ChainForm
    vertex_map: VertexMap


def _complement_coloring(g: SimpleGraph) -> tuple[list[int], None] | tuple[None, Rejection]:
    """Properly 2-color the complement of g, or reject with an odd-cycle witness.

    Colors are 0/1 per vertex.  Each connected component of the complement
    is colored independently with its lowest vertex receiving color 0, which
    makes the output deterministic.  The chain verdict downstream does not
    depend on the per-component color flip, so one fixed coloring suffices.
    """
    adj = g.adjacency()
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            non_neighbors = set(range(g.n)) - adj[u] - {u}
            for w in non_neighbors:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None, Rejection(
                        STAGE_COMPLEMENT,
                        f"complement edge {u}-{w} closes an odd cycle",
                    )
    return color, None


def _chain_order(g: SimpleGraph, side: list[int], other: set[int]) -> tuple[list[int], None] | tuple[None, Rejection]:
    """Order one clique by cross degree and verify the inclusion chain."""
    adj = g.adjacency()
    cross = {u: adj[u] & other for u in side}
    ordered = sorted(side, key=lambda u: (len(cross[u]), u))
    for a, b in zip(ordered, ordered[1:]):
        if not cross[a] <= cross[b]:
            return None, Rejection(
                STAGE_CHAIN,
                f"cross neighborhoods of {a} and {b} are not nested",
            )
    return ordered, None


def recognize(g: SimpleGraph) -> CliqueBipartition | Rejection:
    """Decide whether g is a co-bipartite chain graph.

    Returns a CliqueBipartition whose K side is sorted by nondecreasing
    cross degree, or a Rejection naming the failed stage.  Nestedness on
    one side implies it on the other, so only K is checked.
    """
    color, rej = _complement_coloring(g)
    if rej is not None:
        return rej
    side_k = [v for v in range(g.n) if color[v] == 0]
    side_kp = [v for v in range(g.n) if color[v] == 1]
    ordered_k, rej = _chain_order(g, side_k, set(side_kp))
    if rej is not None:
        return rej
    ordered_kp, rej = _chain_order(g, side_kp, set(side_k))
    if rej is not None:  # cannot happen for a chain graph; kept as a safety net
        return rej
    return CliqueBipartition(tuple(ordered_k), tuple(ordered_kp))


def _twin_classes(g: SimpleGraph) -> list[list[int]]:
    """Partition vertices into maximal classes of equal closed neighborhood.

    Vertices sharing a closed neighborhood are automatically pairwise
    adjacent, so each class is a set of mutual twins.  Classes are listed
    in order of their smallest member.
    """
    adj = g.adjacency()
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(frozenset(adj[v] | {v}), []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


def _label_candidate(
    k_classes: list[int],
    kp_classes: list[int],
    class_adj: list[set[int]],
    sizes: list[int],
) -> tuple[tuple[int, ...], tuple[int, ...], list[int], list[int]] | None:
    """Try to label one side assignment as rows of the skeleton.

    Returns (m, m_prime, k_rows, kp_rows) where the row lists give class
    indices in row order, or None when the assignment does not fit the
    skeleton adjacency law.
    """
    k = len(k_classes) - 1
    if len(kp_classes) not in (k, k + 1):
        return None
    kp_set = set(kp_classes)
    k_set = set(k_classes)
    # Cross degrees are relative to the candidate split.
    deg = {c: len(class_adj[c] & kp_set) for c in k_classes}
    degp = {c: len(class_adj[c] & k_set) for c in kp_classes}
    k_rows = sorted(k_classes, key=lambda c: deg[c])
    kp_rows = sorted(kp_classes, key=lambda c: -degp[c])
    if len({deg[c] for c in k_classes}) != len(k_classes):
        return None  # tied cross degrees would mean uncontracted twins
    if len({degp[c] for c in kp_classes}) != len(kp_classes):
        return None
    for i, ci in enumerate(k_rows):
        for j, cj in enumerate(kp_rows):
            if (cj in class_adj[ci]) != (j < i):
                return None
    m = tuple(sizes[c] for c in k_rows)
    mp = tuple(sizes[c] for c in kp_rows)
    if len(kp_rows) == k:
        mp = mp + (0,)
    return m, mp, k_rows, kp_rows


def normalize(g: SimpleGraph) -> Normalized | Rejection:
    """Contract twins and label the contraction as a canonical ChainForm.

    The contraction of an accepted graph is always one of the two twin-free
    skeletons, which admits at most two row labelings (the mirror pair).
    Both are tried and the lexicographically smaller (m, m_prime) wins,
    making the output deterministic.  A labeling failure after acceptance
    indicates a bug, not bad input, and raises RuntimeError.
    """
    verdict = recognize(g)
    if isinstance(verdict, Rejection):
        return verdict
    if g.n == 0:
        form = ChainForm(0, (0,), (0,))
        return Normalized(form, VertexMap(()))

    classes = _twin_classes(g)
    sizes = [len(c) for c in classes]
    adj = g.adjacency()
    class_adj: list[set[int]] = [set() for _ in classes]
    rep = [c[0] for c in classes]
    class_of = {}
    for idx, members in enumerate(classes):
        for v in members:
            class_of[v] = idx
    for idx, r in enumerate(rep):
        class_adj[idx] = {class_of[w] for w in adj[r] if class_of[w] != idx}

    universal = [i for i in range(len(classes)) if len(class_adj[i]) == len(classes) - 1]
    rest = [i for i in range(len(classes)) if i not in universal]
    if len(universal) > 1:
        raise RuntimeError("distinct universal twin classes survived contraction")

    if not rest:
        # A single clique (or a lone universal class): one row, empty primed side.
        m = (sizes[universal[0]],)
        assignments = [(SIDE_K, 0)] * g.n
        return Normalized(
            ChainForm(0, m, (0,)), VertexMap(tuple(assignments))
        )

    # 2-color the complement of the contracted graph restricted to `rest`.
    rest_set = set(rest)
    col: dict[int, int] = {}
    for start in sorted(rest):
        if start in col:
            continue
        col[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in rest_set - class_adj[u] - {u}:
                if w not in col:
                    col[w] = 1 - col[u]
                    queue.append(w)
                elif col[w] == col[u]:
                    raise RuntimeError("contracted complement not bipartite after acceptance")
    side_a = [c for c in rest if col[c] == 0]
    side_b = [c for c in rest if col[c] == 1]

    candidates = []
    for ka, kb in ((side_a, side_b), (side_b, side_a)):
        labeled = _label_candidate(ka + universal, kb, class_adj, sizes)
        if labeled is not None:
            candidates.append(labeled)
    if not candidates:
        raise RuntimeError("accepted graph does not fit the skeleton adjacency law")
    m, mp, k_rows, kp_rows = min(candidates, key=lambda c: (c[0], c[1]))

    assignments: list[tuple[int, int]] = [(-1, -1)] * g.n
    for row, cls in enumerate(k_rows):
        for v in classes[cls]:
            assignments[v] = (SIDE_K, row)
    for row, cls in enumerate(kp_rows):
        for v in classes[cls]:
            assignments[v] = (SIDE_K_PRIME, row)
    form = ChainForm(len(k_rows) - 1, m, mp)
    return Normalized(form, VertexMap(tuple(assignments)))


def expand(form: ChainForm) -> SimpleGraph:
    """Materialize a ChainForm as a concrete SimpleGraph.

    Vertex ids are assigned row-major: all unprimed copies first
    (row 0 upward), then all primed copies.  Copies on one side are
    mutually adjacent; a copy of v_i is adjacent to a copy of v'_j
    exactly when j < i.
    """
    k = form.k
    ids_k: list[list[int]] = []
    next_id = 0
    for i in range(k + 1):
        ids_k.append(list(range(next_id, next_id + form.m[i])))
        next_id += form.m[i]
    ids_kp: list[list[int]] = []
    for i in range(k + 1):
        ids_kp.append(list(range(next_id, next_id + form.m_prime[i])))
        next_id += form.m_prime[i]

    flat_k = [v for row in ids_k for v in row]
    flat_kp = [v for row in ids_kp for v in row]
    edges = set()
    for a in range(len(flat_k)):
        for b in range(a + 1, len(flat_k)):
            edges.add((flat_k[a], flat_k[b]))
    for a in range(len(flat_kp)):
        for b in range(a + 1, len(flat_kp)):
            edges.add((flat_kp[a], flat_kp[b]))
    for i in range(k + 1):
        for j in range(i):
            for u in ids_k[i]:
                for w in ids_kp[j]:
                    edges.add((u, w))
    return SimpleGraph(next_id, frozenset(edges))
