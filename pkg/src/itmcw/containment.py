"""Induced-subgraph and induced-topological-minor containment.

An induced topological minor witness is a :class:`SubdivisionModel`: an
injective branch map plus one internally disjoint path per pattern edge, such
that the union of all placed vertices induces exactly the corresponding
subdivision (no chords).

`contains_itm` is the search-based detector; `contains_itm_oracle` applies the
definition literally by scanning vertex subsets against an enumerated
subdivision table, and exists so the two can be played against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graph import (
    Graph,
    contract_edges,
    find_isomorphism,
    induced_subgraph,
)
from .generators import all_subdivisions

__all__ = [
    "SubdivisionModel",
    "contains_induced",
    "contains_itm",
    "contains_itm_oracle",
    "verify_model",
    "contract_model",
    "ORACLE_MAX_VERTICES",
]

ORACLE_MAX_VERTICES = 12


@dataclass(frozen=True)
class SubdivisionModel:
    """Witness that a subdivision of H is an induced subgraph of G.

    ``branch_map`` sends V(H) into V(G); ``edge_paths`` sends each edge uv of
    H to the full vertex sequence of its path in G, starting at
    branch_map[u] and ending at branch_map[v].
    """

    branch_map: dict[int, int]
    edge_paths: dict[tuple[int, int], tuple[int, ...]]

    def placed_vertices(self) -> set[int]:
        out = set(self.branch_map.values())
        for p in self.edge_paths.values():
            out.update(p)
        return out


# ---------------------------------------------------------------------------
# induced subgraph containment


def contains_induced(g: Graph, h: Graph) -> Optional[set[int]]:
    """A vertex set X of g with g[X] isomorphic to h, or None.

    Backtracking over degree-compatible assignments; adjacency must match
    exactly (induced condition).
    """
    if h.n > g.n or h.m > g.m:
        return None
    if h.n == 0:
        return set()
    order = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    gadj, hadj = g.adj, h.adj
    image = [-1] * h.n
    used = 0

    def rec(i: int) -> bool:
        nonlocal used
        if i == h.n:
            return True
        v = order[i]
        req = 0
        for u in order[:i]:
            if (hadj[v] >> u) & 1:
                req |= 1 << image[u]
        for w in range(g.n):
            if (used >> w) & 1:
                continue
            if gadj[w].bit_count() < hadj[v].bit_count():
                continue
            if (gadj[w] & used) != req:
                continue
            image[v] = w
            used |= 1 << w
            if rec(i + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    if rec(0):
        return {image[v] for v in range(h.n)}
    return None


# ---------------------------------------------------------------------------
# induced topological minor detection


def contains_itm(g: Graph, h: Graph) -> Optional[SubdivisionModel]:
    """A SubdivisionModel of h in g, or None.

    Branch vertices are assigned in descending h-degree order (candidates in
    ascending g-index), then edge paths are routed one at a time in
    (min endpoint, max endpoint) order.  The induced condition is maintained
    incrementally: a new path vertex may touch, among everything already
    placed, only its predecessor (and the target branch vertex, in which case
    the path closes immediately).
    """
    if h.n > g.n:
        return None
    isolated = [v for v in range(h.n) if h.degree(v) == 0]
    core = sorted(
        (v for v in range(h.n) if h.degree(v) > 0), key=lambda v: (-h.degree(v), v)
    )
    h_edges = sorted(h.edges)
    gadj = g.adj

    branch: dict[int, int] = {}

    def assign_branches(i: int) -> Optional[SubdivisionModel]:
        if i == len(core):
            placed = 0
            for w in branch.values():
                placed |= 1 << w
            return route_paths(0, placed, {})
        v = core[i]
        for w in range(g.n):
            if g.degree(w) < h.degree(v):
                continue
            ok = True
            for u, x in branch.items():
                if x == w:
                    ok = False
                    break
                # a chord between non-adjacent branch vertices is fatal
                if not h.has_edge(u, v) and (gadj[w] >> x) & 1:
                    ok = False
                    break
            if not ok:
                continue
            branch[v] = w
            r = assign_branches(i + 1)
            if r is not None:
                return r
            del branch[v]
        return None

    def paths_for_edge(
        bu: int, bv: int, placed: int
    ) -> Iterator[tuple[tuple[int, ...], int]]:
        """All valid induced paths from bu to bv, with the updated placed mask."""
        if (gadj[bu] >> bv) & 1:
            # adjacent branch vertices force the one-edge path
            yield (bu, bv), placed
            return

        def extend(cur: int, rev: list[int], mask: int) -> Iterator[tuple[tuple[int, ...], int]]:
            if (gadj[cur] >> bv) & 1:
                # a chord to the target forces closing here
                yield tuple(rev) + (bv,), mask
                return
            allowed_self = 1 << cur
            tbit = 1 << bv
            for y in range(g.n):
                if (mask >> y) & 1 or y == bv:
                    continue
                hit = gadj[y] & mask
                if hit == allowed_self or hit == (allowed_self | tbit):
                    rev.append(y)
                    yield from extend(y, rev, mask | (1 << y))
                    rev.pop()

        yield from extend(bu, [bu], placed)

    def route_paths(
        i: int, placed: int, paths: dict[tuple[int, int], tuple[int, ...]]
    ) -> Optional[SubdivisionModel]:
        if i == len(h_edges):
            return place_isolated(placed, paths)
        u, v = h_edges[i]
        for p, mask in paths_for_edge(branch[u], branch[v], placed):
            paths[(u, v)] = p
            r = route_paths(i + 1, mask, paths)
            if r is not None:
                return r
            del paths[(u, v)]
        return None

    def place_isolated(
        placed: int, paths: dict[tuple[int, int], tuple[int, ...]]
    ) -> Optional[SubdivisionModel]:
        chosen: list[int] = []

        def rec(j: int, mask: int) -> bool:
            if j == len(isolated):
                return True
            for w in range(g.n):
                if (mask >> w) & 1:
                    continue
                if gadj[w] & mask:
                    continue
                chosen.append(w)
                if rec(j + 1, mask | (1 << w)):
                    return True
                chosen.pop()
            return False

        if not rec(0, placed):
            return None
        bmap = dict(branch)
        for v, w in zip(isolated, chosen):
            bmap[v] = w
        return SubdivisionModel(bmap, dict(paths))

    return assign_branches(0)


# ---------------------------------------------------------------------------
# definition-level oracle

_SUBDIV_TABLE_CACHE: dict[tuple, dict] = {}


def _subdivision_table(h: Graph, budget: int) -> dict[tuple, list[Graph]]:
    """Subdivisions of h with <= budget extra vertices, keyed by
    (n, m, degree sequence)."""
    key = (h.n, h.edges, budget)
    table = _SUBDIV_TABLE_CACHE.get(key)
    if table is None:
        table = {}
        for s in all_subdivisions(h, budget):
            table.setdefault((s.n, s.m, s.degree_sequence()), []).append(s)
        _SUBDIV_TABLE_CACHE[key] = table
    return table


def contains_itm_oracle(g: Graph, h: Graph) -> bool:
    """Literal definition: does some vertex subset of g induce a graph
    isomorphic to a subdivision of h?  Budget-limited to small hosts."""
    if g.n > ORACLE_MAX_VERTICES:
        raise ValueError(f"oracle budget is |V(G)| <= {ORACLE_MAX_VERTICES}")
    if h.n == 0:
        return True
    if h.n > g.n:
        return False
    table = _subdivision_table(h, g.n - h.n)
    gadj = g.adj
    for mask in range(1, 1 << g.n):
        k = mask.bit_count()
        if k < h.n:
            continue
        degs = sorted((gadj[v] & mask).bit_count() for v in range(g.n) if (mask >> v) & 1)
        m2 = sum(degs) // 2
        cands = table.get((k, m2, tuple(degs)))
        if not cands:
            continue
        sub = induced_subgraph(g, [v for v in range(g.n) if (mask >> v) & 1])
        for s in cands:
            if find_isomorphism(sub, s) is not None:
                return True
    return False


# ---------------------------------------------------------------------------
# certificate checking


def verify_model(g: Graph, h: Graph, model: SubdivisionModel) -> bool:
    """Re-check every SubdivisionModel invariant from scratch."""
    bmap = model.branch_map
    if set(bmap) != set(range(h.n)):
        return False
    if len(set(bmap.values())) != h.n:
        return False
    if any(not 0 <= w < g.n for w in bmap.values()):
        return False
    if set(model.edge_paths) != set(h.edges):
        return False

    branch_set = set(bmap.values())
    internal_seen: set[int] = set()
    required_edges: set[tuple[int, int]] = set()
    for (u, v), p in model.edge_paths.items():
        if len(p) < 2 or p[0] != bmap[u] or p[-1] != bmap[v]:
            return False
        internals = p[1:-1]
        if len(set(internals)) != len(internals):
            return False
        for x in internals:
            if not 0 <= x < g.n:
                return False
            if x in branch_set or x in internal_seen:
                return False
            internal_seen.add(x)
        for a, b in zip(p, p[1:]):
            required_edges.add((a, b) if a < b else (b, a))

    union = branch_set | internal_seen
    induced_edges = {
        (a, b) for a, b in g.edges if a in union and b in union
    }
    if induced_edges != required_edges:
        return False
    # isolated pattern vertices must have no neighbour inside the union
    for v in range(h.n):
        if h.degree(v) == 0:
            w = bmap[v]
            if any(g.has_edge(w, x) for x in union if x != w):
                return False
    return True


def contract_model(g: Graph, h: Graph, model: SubdivisionModel) -> Graph:
    """Contract each edge path of a verified model back to a single edge.

    The result is isomorphic to h whenever the model is valid.
    """
    if not verify_model(g, h, model):
        raise ValueError("invalid subdivision model")
    union = sorted(model.placed_vertices())
    pos = {v: i for i, v in enumerate(union)}
    sub = induced_subgraph(g, union)
    to_contract = []
    for p in model.edge_paths.values():
        # contract all path edges but the last, merging internals into the start
        for a, b in list(zip(p, p[1:]))[:-1]:
            to_contract.append((pos[a], pos[b]))
    return contract_edges(sub, to_contract)
