#!/usr/bin/env python3
"""
Expand a chain form, scramble the vertex labels, and recover the form.

Recognition has two stages: 2-color the complement (co-bipartiteness),
then order each clique by cross-degree and verify the neighborhoods are
nested.  Graphs failing either stage are rejected with the stage named.
Accepted graphs are twin-contracted back to a canonical form, which must
match the one we started from up to the mirror relabeling.
"""

from cochaincut import (
    ChainForm,
    Rejection,
    canonical_form,
    graph_from_edges,
    normalize,
    shuffle_expand,
)


def main() -> None:
    form = ChainForm(2, (2, 1, 3), (1, 2, 2))
    print(f"start:      k={form.k}, m={form.m}, mp={form.m_prime}")

    g = shuffle_expand(form, seed=2024)
    print(f"scrambled:  {g.n} vertices, {len(g.edges)} edges")

    result = normalize(g)
    got = result.form
    print(f"recovered:  k={got.k}, m={got.m}, mp={got.m_prime}")
    assert canonical_form(got) == canonical_form(form)
    print("canonical forms agree")
    print()

    # where did each scrambled vertex land?
    side_names = {0: "K", 1: "K'"}
    placements = {}
    for v in range(g.n):
        side, row = result.vertex_map.row_of(v)
        placements.setdefault((side, row), []).append(v)
    for (side, row), vs in sorted(placements.items()):
        print(f"  {side_names[side]} row {row}: vertices {vs}")
    print()

    # two graphs just outside the class
    for name, graph in [
        ("C4", graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])),
        ("C5", graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])),
    ]:
        verdict = normalize(graph)
        assert isinstance(verdict, Rejection)
        print(f"{name}: rejected, {verdict.stage} ({verdict.detail})")


if __name__ == "__main__":
    main()
