"""Simple undirected graphs and the basic operations everything else builds on.

Vertices are always the integers 0..n-1.  All graph values are immutable:
every operation returns a new Graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence

__all__ = [
    "Graph",
    "BlockDecomposition",
    "induced_subgraph",
    "is_isomorphic",
    "find_isomorphism",
    "canonical_form",
    "blocks",
    "line_graph",
    "subdivide",
    "contract_edges",
    "max_degree",
    "complement",
    "disjoint_union",
    "connected_components",
]

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A finite simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add(_norm_edge(u, v))
        self.n = n
        self.edges: frozenset[Edge] = frozenset(norm)
        self._adj: Optional[tuple[int, ...]] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adj(self) -> tuple[int, ...]:
        """Per-vertex neighbour bitmasks (cached)."""
        if self._adj is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            self._adj = tuple(masks)
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and (self.adj[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.adj[v].bit_count() for v in range(self.n)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal subgraphs without cut vertices) and cut vertices."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# basic transformations


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabeled 0..k-1 in ascending order."""
    xs = sorted(set(vertices))
    for v in xs:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(xs)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(xs), edges)


def complement(g: Graph) -> Graph:
    edges = [
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; ``a``'s vertices keep their numbers, ``b``'s are shifted."""
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    return Graph(a.n + b.n, edges)


def line_graph(g: Graph) -> Graph:
    """One vertex per edge of ``g`` (in lexicographic edge order); adjacency
    means sharing an endpoint."""
    es = sorted(g.edges)
    out = []
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            if set(es[i]) & set(es[j]):
                out.append((i, j))
    return Graph(len(es), out)


def subdivide(g: Graph, times: Mapping[tuple[int, int], int]) -> Graph:
    """Replace each edge uv with ``times[uv]`` subdivision vertices.

    New vertices are numbered after the originals, in lexicographic order of
    the subdivided edges and then by position along the path.
    """
    norm_times: dict[Edge, int] = {}
    for (u, v), t in times.items():
        e = _norm_edge(u, v)
        if e not in g.edges:
            raise ValueError(f"{(u, v)} is not an edge")
        if t < 0:
            raise ValueError("subdivision count must be non-negative")
        norm_times[e] = norm_times.get(e, 0) + t
    edges: list[Edge] = []
    nxt = g.n
    for e in sorted(g.edges):
        t = norm_times.get(e, 0)
        if t == 0:
            edges.append(e)
            continue
        chain = [e[0]] + list(range(nxt, nxt + t)) + [e[1]]
        nxt += t
        edges.extend(zip(chain, chain[1:]))
    return Graph(nxt, edges)


def contract_edges(g: Graph, contract: Iterable[tuple[int, int]]) -> Graph:
    """Quotient by the connected components of the given edge set.

    Loops and parallel edges produced by contraction are dropped (simple-graph
    closure).  Component numbering is by smallest original vertex.
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in contract:
        if _norm_edge(u, v) not in g.edges:
            raise ValueError(f"{(u, v)} is not an edge")
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    roots = sorted({find(v) for v in range(g.n)})
    comp = {r: i for i, r in enumerate(roots)}
    edges = set()
    for u, v in g.edges:
        cu, cv = comp[find(u)], comp[find(v)]
        if cu != cv:
            edges.add(_norm_edge(cu, cv))
    return Graph(len(roots), edges)


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


# ---------------------------------------------------------------------------
# block decomposition (Hopcroft-Tarjan, iterative)


def blocks(g: Graph) -> BlockDecomposition:
    """Blocks and cut vertices via one DFS with low-point values.

    Isolated vertices form singleton blocks; a bridge is a 2-vertex block.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    cut: set[int] = set()
    block_list: list[frozenset[int]] = []
    edge_stack: list[Edge] = []
    timer = 0

    for root in range(g.n):
        if disc[root] != -1:
            continue
        if g.degree(root) == 0:
            block_list.append(frozenset([root]))
            disc[root] = timer
            timer += 1
            continue
        root_children = 0
        # frames: (vertex, parent, iterator over neighbours)
        stack = [(root, -1, iter(g.neighbors(root)))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append(_norm_edge(v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append(_norm_edge(v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    # u separates v's subtree: pop one block
                    verts: set[int] = set()
                    while True:
                        e = edge_stack.pop()
                        verts.update(e)
                        if e == _norm_edge(u, v):
                            break
                    block_list.append(frozenset(verts))
                    if u != root or root_children > 1:
                        cut.add(u)
        # any leftover edges of this DFS tree were popped above
    # root cut-vertex rule is handled inline; recheck roots with >1 child
    return BlockDecomposition(tuple(block_list), frozenset(cut))


# ---------------------------------------------------------------------------
# isomorphism via iterated degree refinement + backtracking


def _refine(nbrs: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    """Iterated neighbourhood refinement with canonical color renumbering."""
    n = len(colors)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(n)
        ]
        remap = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [remap[sigs[v]] for v in range(n)]
        if new == colors:
            return colors
        colors = new


def _neighbor_lists(g: Graph) -> list[list[int]]:
    return [g.neighbors(v) for v in range(g.n)]


def find_isomorphism(
    g: Graph,
    h: Graph,
    g_colors: Optional[Sequence[int]] = None,
    h_colors: Optional[Sequence[int]] = None,
) -> Optional[dict[int, int]]:
    """An edge-preserving bijection g -> h (color-preserving if colors given),
    or None.

    Backtracking over refinement-compatible color classes; adjacency
    consistency is checked with bitmasks.
    """
    if g.n != h.n or g.m != h.m:
        return None
    gc = _refine(_neighbor_lists(g), list(g_colors) if g_colors else [0] * g.n)
    hc = _refine(_neighbor_lists(h), list(h_colors) if h_colors else [0] * h.n)
    if sorted(gc) != sorted(hc):
        return None

    n = g.n
    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(hc[w], []).append(w)
    # most-constrained first: small color classes, then high degree
    order = sorted(range(n), key=lambda v: (len(by_color[gc[v]]), -g.degree(v), v))
    gadj, hadj = g.adj, h.adj
    mapping: dict[int, int] = {}
    used_mask = 0
    image = [0] * n  # image[v] for mapped v

    def rec(i: int) -> bool:
        nonlocal used_mask
        if i == n:
            return True
        v = order[i]
        # required image adjacency against already-mapped vertices
        req = 0
        for u in mapping:
            if (gadj[v] >> u) & 1:
                req |= 1 << image[u]
        for w in by_color.get(gc[v], ()):
            if (used_mask >> w) & 1:
                continue
            if (hadj[w] & used_mask) != req:
                continue
            mapping[v] = w
            image[v] = w
            used_mask |= 1 << w
            if rec(i + 1):
                return True
            del mapping[v]
            used_mask &= ~(1 << w)
        return False

    if rec(0):
        return dict(mapping)
    return None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """True iff an edge-preserving bijection between g and h exists."""
    return find_isomorphism(g, h) is not None


# ---------------------------------------------------------------------------
# canonical certificates (refinement + individualization, twin pruning)


def canonical_form(
    g: Graph, colors: Optional[Sequence[int]] = None
) -> tuple[tuple, tuple[int, ...]]:
    """A canonical certificate and vertex order for (g, colors).

    Two colored graphs get equal certificates iff they are isomorphic by a
    color-preserving bijection.  Colors are compared by exact value, so label
    names matter.
    """
    n = g.n
    base = tuple(colors) if colors is not None else tuple([0] * n)
    if n == 0:
        return (0, (), 0), ()
    nbrs = _neighbor_lists(g)
    adj = g.adj
    best: list[Optional[tuple]] = [None, None]  # cert, order

    def encode(order: Sequence[int]) -> tuple:
        pos = {v: i for i, v in enumerate(order)}
        bits = 0
        idx = 0
        for i in range(n):
            for j in range(i + 1, n):
                if (adj[order[i]] >> order[j]) & 1:
                    bits |= 1 << idx
                idx += 1
        return (n, tuple(base[v] for v in order), bits)

    def rec(cols: list[int]) -> None:
        cols = _refine(nbrs, cols)
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(cols[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            order = tuple(sorted(range(n), key=lambda v: cols[v]))
            cert = encode(order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return
        # branch once per twin class: swapping twins is an automorphism
        reps: list[int] = []
        for v in target:
            if any(
                (adj[v] & ~(1 << r)) == (adj[r] & ~(1 << v)) for r in reps
            ):
                continue
            reps.append(v)
        mark = max(cols) + 1
        for v in reps:
            nxt = list(cols)
            nxt[v] = mark
            rec(nxt)

    rec(list(base))
    assert best[0] is not None and best[1] is not None
    return best[0], best[1]
