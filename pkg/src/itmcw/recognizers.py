"""Polynomial recognizers for the structurally characterized classes:
trees, cycles, complete multipartite graphs, block-cactus graphs, cographs,
and forbidden-induced-subgraph scans."""

from __future__ import annotations

from typing import Iterable

from .graph import (
    Graph,
    blocks,
    complement,
    connected_components,
    induced_subgraph,
    max_degree,
)
from .containment import contains_induced

__all__ = [
    "is_tree",
    "is_cycle_graph",
    "is_complete_multipartite",
    "recognize_paw_itm_free",
    "is_block_cactus",
    "is_cograph",
    "is_forbidden_free",
    "is_subcubic_triangle_free",
]


def is_tree(g: Graph) -> bool:
    """Connected with m = n - 1.  A single vertex counts."""
    if g.n == 0:
        return False
    return len(connected_components(g)) == 1 and g.m == g.n - 1


def is_cycle_graph(g: Graph) -> bool:
    """Connected and 2-regular."""
    if g.n < 3:
        return False
    return len(connected_components(g)) == 1 and all(
        g.degree(v) == 2 for v in range(g.n)
    )


def _is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])


def is_complete_multipartite(g: Graph) -> bool:
    """True iff the complement is a disjoint union of cliques."""
    co = complement(g)
    return all(_is_clique(co, comp) for comp in connected_components(co))


def recognize_paw_itm_free(g: Graph) -> bool:
    """Every connected component is a tree, a cycle, or complete multipartite."""
    for comp in connected_components(g):
        c = induced_subgraph(g, comp)
        if not (is_tree(c) or is_cycle_graph(c) or is_complete_multipartite(c)):
            return False
    return True


def is_block_cactus(g: Graph) -> bool:
    """Every block induces a cycle or a complete graph.  Single vertices and
    single edges count as complete."""
    for b in blocks(g).blocks:
        sub = induced_subgraph(g, b)
        if not (is_cycle_graph(sub) or _is_clique(sub, range(sub.n))):
            return False
    return True


def is_cograph(g: Graph) -> bool:
    """P4-freeness by the cotree rule: every induced subgraph with >= 2
    vertices is disconnected or has disconnected complement."""
    if g.n <= 1:
        return True
    comps = connected_components(g)
    if len(comps) > 1:
        return all(is_cograph(induced_subgraph(g, c)) for c in comps)
    co_comps = connected_components(complement(g))
    if len(co_comps) == 1:
        return False
    return all(is_cograph(induced_subgraph(g, c)) for c in co_comps)


def is_forbidden_free(g: Graph, forbidden: Iterable[Graph]) -> bool:
    """No member of ``forbidden`` appears as an induced subgraph of g."""
    return all(contains_induced(g, h) is None for h in forbidden)


def is_subcubic_triangle_free(g: Graph) -> bool:
    if max_degree(g) > 3:
        return False
    return all(
        not (g.has_edge(u, w) and g.has_edge(v, w))
        for u, v in g.edges
        for w in range(g.n)
        if w != u and w != v
    )
