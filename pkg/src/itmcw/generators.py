"""Deterministic graph family constructors, seeded random generators, and
exhaustive enumerators for the test harness.

Random generators use splitmix64 so that a (n, seed) pair yields the same
graph in any implementation of the same algorithm; see the README for the
exact recurrence.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .graph import (
    Graph,
    disjoint_union,
    find_isomorphism,
    induced_subgraph,
    subdivide,
)

__all__ = [
    "path",
    "cycle",
    "complete",
    "complete_multipartite",
    "grid",
    "wall",
    "named",
    "NAMED_GRAPHS",
    "all_graphs",
    "all_subdivisions",
    "random_cograph",
    "random_block_cactus",
    "random_graph",
    "SplitMix64",
]

MAX_ENUM_VERTICES = 7


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Parts occupy consecutive vertex ranges; edges join distinct parts."""
    if not parts or any(p < 1 for p in parts):
        raise ValueError("parts must be a non-empty list of positive sizes")
    bounds = [0]
    for p in parts:
        bounds.append(bounds[-1] + p)
    n = bounds[-1]
    edges = []
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            for u in range(bounds[a], bounds[a + 1]):
                for v in range(bounds[b], bounds[b + 1]):
                    edges.append((u, v))
    return Graph(n, edges)


def grid(n: int, m: int) -> Graph:
    """The (n x m)-grid with row-major numbering: vertex (i, j) -> i*m + j."""
    if n < 1 or m < 1:
        raise ValueError("grid needs n, m >= 1")
    edges = []
    for i in range(n):
        for j in range(m):
            if j + 1 < m:
                edges.append((i * m + j, i * m + j + 1))
            if i + 1 < n:
                edges.append((i * m + j, (i + 1) * m + j))
    return Graph(n * m, edges)


def wall(k: int) -> Graph:
    """The (k x k)-wall: from the (k x 2k)-grid, drop the odd vertical edges
    of odd columns and the even vertical edges of even columns, then drop
    degree-one vertices.

    Columns and edge positions are 1-indexed; the vertical edges of a column
    are ordered top to bottom.  Vertex numbering is inherited from the grid
    (ascending surviving indices).
    """
    if k < 3:
        raise ValueError("wall needs k >= 3")
    m = 2 * k
    g = grid(k, m)
    removed = set()
    for col in range(1, m + 1):  # 1-indexed column
        for pos in range(1, k):  # edge between rows pos and pos+1
            if (col % 2 == 1) == (pos % 2 == 1):
                u = (pos - 1) * m + (col - 1)
                v = pos * m + (col - 1)
                removed.add((u, v) if u < v else (v, u))
    edges = set(g.edges) - removed
    keep = set(range(g.n))
    while True:
        deg = {v: 0 for v in keep}
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        drop = {v for v in keep if deg[v] <= 1}
        if not drop:
            break
        keep -= drop
        edges = {(u, v) for u, v in edges if u in keep and v in keep}
    return induced_subgraph(Graph(g.n, edges), keep)


def _named_graphs() -> dict[str, Graph]:
    p4 = path(4)
    gem = Graph(5, list(p4.edges) + [(4, 0), (4, 1), (4, 2), (4, 3)])
    paw = Graph(4, [(0, 3), (1, 2), (1, 3), (2, 3)])
    diamond = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    claw = Graph(4, [(0, 1), (0, 2), (0, 3)])
    fat_house = Graph(5, list(complete(4).edges) + [(4, 0), (4, 1)])
    return {
        "P4": p4,
        "gem": gem,
        "paw": paw,
        "diamond": diamond,
        "claw": claw,
        "fat-house": fat_house,
        "K4": complete(4),
    }


NAMED_GRAPHS = _named_graphs()


def named(name: str) -> Graph:
    """One of the fixed small graphs: P4, gem, paw, diamond, claw,
    fat-house, K4 (case-insensitive; 'fathouse' also accepted)."""
    key = name.strip().lower().replace("_", "-")
    aliases = {"fathouse": "fat-house"}
    key = aliases.get(key, key)
    for canon in NAMED_GRAPHS:
        if canon.lower() == key:
            return NAMED_GRAPHS[canon]
    raise ValueError(f"unknown named graph {name!r}")


def all_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labeled graphs on n vertices, in lexicographic
    edge-bitmask order (bit i = i-th pair in lexicographic pair order)."""
    if n > MAX_ENUM_VERTICES:
        raise ValueError(f"all_graphs budget is n <= {MAX_ENUM_VERTICES}")
    if n < 0:
        raise ValueError("n must be non-negative")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, (pairs[i] for i in range(len(pairs)) if (mask >> i) & 1))


def all_subdivisions(h: Graph, budget: int) -> Iterator[Graph]:
    """All subdivisions of ``h`` with at most ``budget`` total subdivision
    vertices, deduplicated up to isomorphism."""
    if budget < 0:
        raise ValueError("budget must be non-negative")
    es = sorted(h.edges)
    seen: list[Graph] = []

    def assignments(i: int, left: int, counts: list[int]) -> Iterator[list[int]]:
        if i == len(es):
            yield list(counts)
            return
        for t in range(left + 1):
            counts.append(t)
            yield from assignments(i + 1, left - t, counts)
            counts.pop()

    for counts in assignments(0, budget, []):
        s = subdivide(h, dict(zip(es, counts)))
        if any(
            s.n == r.n and s.m == r.m and find_isomorphism(s, r) is not None
            for r in seen
        ):
            continue
        seen.append(s)
        yield s


# ---------------------------------------------------------------------------
# seeded random generation


class SplitMix64:
    """splitmix64: state += 0x9E3779B97F4B07B5; output mixes with xor-shifts.

    Small, portable, and good enough for fuzzing inputs.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4B07B5) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        # modulo bias is irrelevant at fuzzing scale
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        return self.next_u64() % n

    def chance(self, num: int, den: int) -> bool:
        return self.randrange(den) < num


def random_cograph(n: int, seed: int) -> Graph:
    """A cograph built by a random union/join construction tree."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = SplitMix64(seed)

    def build(size: int) -> Graph:
        if size == 1:
            return Graph(1)
        split = 1 + rng.randrange(size - 1)
        left, right = build(split), build(size - split)
        g = disjoint_union(left, right)
        if rng.chance(1, 2):  # join
            extra = [(u, v + left.n) for u in range(left.n) for v in range(right.n)]
            g = Graph(g.n, list(g.edges) + extra)
        return g

    return build(n)


def random_block_cactus(n: int, seed: int) -> Graph:
    """A connected graph whose blocks are random cycles and cliques, glued at
    random cut vertices."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = SplitMix64(seed)
    count = 1
    edges: list[tuple[int, int]] = []
    while count < n:
        room = n - count
        cut = rng.randrange(count)
        size = 2 + rng.randrange(min(room, 6))  # block vertex count incl. cut
        if size - 1 > room:
            size = room + 1
        verts = [cut] + list(range(count, count + size - 1))
        count += size - 1
        if size >= 3 and rng.chance(1, 2):
            edges.extend(zip(verts, verts[1:] + verts[:1]))  # cycle block
        else:
            edges.extend(combinations(verts, 2))  # clique block
    return Graph(n, edges)


def random_graph(n: int, seed: int, num: int = 1, den: int = 2) -> Graph:
    """Erdos-Renyi-style graph with edge probability num/den."""
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = SplitMix64(seed)
    edges = [e for e in combinations(range(n), 2) if rng.chance(num, den)]
    return Graph(n, edges)
