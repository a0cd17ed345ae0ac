"""The k-expression algebra and everything that produces or checks
clique-width certificates.

A k-expression is a term over four constructors: create(i) makes a single
vertex with label i, union is disjoint union, join(i, j) adds every edge
between the label-i and label-j vertices, and relabel(i, j) turns every label
i into j.  Its width is the number of distinct labels appearing anywhere in
the term; evaluating it yields a labeled graph, which certifies a clique-width
upper bound for the underlying graph.

Terms serialize to the compact syntax ``c(i)``, ``u(e1,e2)``, ``j(i,j,e)``,
``r(i,j,e)``; see the CLI docs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional, Union as _Union

from .graph import (
    Graph,
    canonical_form,
    connected_components,
    disjoint_union,
    find_isomorphism,
    induced_subgraph,
    max_degree,
)
from .generators import complete
from .recognizers import (
    is_block_cactus,
    is_cograph,
    is_cycle_graph,
    is_tree,
    recognize_paw_itm_free,
)
from . import graph as _graph_mod

__all__ = [
    "Create",
    "Union",
    "Join",
    "Relabel",
    "KExpression",
    "LabeledGraph",
    "eval_expression",
    "width",
    "labels_used",
    "format_term",
    "parse_term",
    "build_cograph_expr",
    "build_cycle_expr",
    "compose_blocks",
    "build_bounded_expr",
    "exact_cw",
    "SearchBudgetExceeded",
]


@dataclass(frozen=True)
class Create:
    label: int

    def __post_init__(self):
        if self.label < 1:
            raise ValueError("labels are positive integers")


@dataclass(frozen=True)
class Union:
    left: "KExpression"
    right: "KExpression"


@dataclass(frozen=True)
class Join:
    label_i: int
    label_j: int
    child: "KExpression"

    def __post_init__(self):
        if self.label_i < 1 or self.label_j < 1:
            raise ValueError("labels are positive integers")
        if self.label_i == self.label_j:
            raise ValueError("join requires two distinct labels")


@dataclass(frozen=True)
class Relabel:
    label_from: int
    label_to: int
    child: "KExpression"

    def __post_init__(self):
        if self.label_from < 1 or self.label_to < 1:
            raise ValueError("labels are positive integers")
        if self.label_from == self.label_to:
            raise ValueError("relabel requires two distinct labels")


KExpression = _Union[Create, Union, Join, Relabel]


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[int, ...]


def eval_expression(expr: KExpression) -> LabeledGraph:
    """Evaluate a term.  Vertices are numbered by in-order leaf position
    (union puts the left operand's vertices first)."""
    if isinstance(expr, Create):
        return LabeledGraph(Graph(1), (expr.label,))
    if isinstance(expr, Union):
        a = eval_expression(expr.left)
        b = eval_expression(expr.right)
        return LabeledGraph(disjoint_union(a.graph, b.graph), a.labels + b.labels)
    if isinstance(expr, Join):
        c = eval_expression(expr.child)
        ii = [v for v, l in enumerate(c.labels) if l == expr.label_i]
        jj = [v for v, l in enumerate(c.labels) if l == expr.label_j]
        edges = set(c.graph.edges)
        edges.update((u, v) if u < v else (v, u) for u in ii for v in jj)
        return LabeledGraph(Graph(c.graph.n, edges), c.labels)
    if isinstance(expr, Relabel):
        c = eval_expression(expr.child)
        labels = tuple(
            expr.label_to if l == expr.label_from else l for l in c.labels
        )
        return LabeledGraph(c.graph, labels)
    raise TypeError(f"not a k-expression: {expr!r}")


def labels_used(expr: KExpression) -> frozenset[int]:
    if isinstance(expr, Create):
        return frozenset([expr.label])
    if isinstance(expr, Union):
        return labels_used(expr.left) | labels_used(expr.right)
    if isinstance(expr, Join):
        return labels_used(expr.child) | {expr.label_i, expr.label_j}
    if isinstance(expr, Relabel):
        return labels_used(expr.child) | {expr.label_from, expr.label_to}
    raise TypeError(f"not a k-expression: {expr!r}")


def width(expr: KExpression) -> int:
    """Number of distinct labels appearing anywhere in the term."""
    return len(labels_used(expr))


def rename_labels(expr: KExpression, mapping: Mapping[int, int]) -> KExpression:
    """Apply a label renaming uniformly to a whole term."""

    def f(l: int) -> int:
        return mapping.get(l, l)

    if isinstance(expr, Create):
        return Create(f(expr.label))
    if isinstance(expr, Union):
        return Union(rename_labels(expr.left, mapping), rename_labels(expr.right, mapping))
    if isinstance(expr, Join):
        return Join(f(expr.label_i), f(expr.label_j), rename_labels(expr.child, mapping))
    if isinstance(expr, Relabel):
        return Relabel(
            f(expr.label_from), f(expr.label_to), rename_labels(expr.child, mapping)
        )
    raise TypeError(f"not a k-expression: {expr!r}")


# ---------------------------------------------------------------------------
# term syntax


def format_term(expr: KExpression) -> str:
    if isinstance(expr, Create):
        return f"c({expr.label})"
    if isinstance(expr, Union):
        return f"u({format_term(expr.left)},{format_term(expr.right)})"
    if isinstance(expr, Join):
        return f"j({expr.label_i},{expr.label_j},{format_term(expr.child)})"
    if isinstance(expr, Relabel):
        return f"r({expr.label_from},{expr.label_to},{format_term(expr.child)})"
    raise TypeError(f"not a k-expression: {expr!r}")


class TermSyntaxError(ValueError):
    pass


def parse_term(text: str) -> KExpression:
    """Parse the c/u/j/r term syntax (whitespace-insensitive)."""
    s = "".join(text.split())
    pos = 0

    def fail(msg: str):
        raise TermSyntaxError(f"{msg} at position {pos}")

    def expect(ch: str):
        nonlocal pos
        if pos >= len(s) or s[pos] != ch:
            fail(f"expected {ch!r}")
        pos += 1

    def number() -> int:
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == start:
            fail("expected a label")
        return int(s[start:pos])

    def term() -> KExpression:
        nonlocal pos
        if pos >= len(s):
            fail("unexpected end of input")
        head = s[pos]
        pos += 1
        expect("(")
        if head == "c":
            label = number()
            expect(")")
            return Create(label)
        if head == "u":
            left = term()
            expect(",")
            right = term()
            expect(")")
            return Union(left, right)
        if head in ("j", "r"):
            i = number()
            expect(",")
            j = number()
            expect(",")
            child = term()
            expect(")")
            return Join(i, j, child) if head == "j" else Relabel(i, j, child)
        fail(f"unknown constructor {head!r}")

    try:
        result = term()
    except ValueError as e:
        if isinstance(e, TermSyntaxError):
            raise
        raise TermSyntaxError(str(e)) from e
    if pos != len(s):
        fail("trailing input")
    return result


# ---------------------------------------------------------------------------
# constructive builders


def _as_label(expr: KExpression, frm: int, to: int) -> KExpression:
    return Relabel(frm, to, expr)


def build_cograph_expr(g: Graph) -> KExpression:
    """A width <= 2 expression for a cograph (width 1 for K1), via the
    union/join cotree recursion.  Every intermediate result ends with all
    vertices labeled 1."""
    if not is_cograph(g):
        raise ValueError("input is not a cograph")
    if g.n == 0:
        raise ValueError("empty graph has no expression")

    def build(h: Graph) -> KExpression:
        if h.n == 1:
            return Create(1)
        comps = connected_components(h)
        if len(comps) > 1:
            acc = build(induced_subgraph(h, comps[0]))
            for c in comps[1:]:
                acc = Union(acc, build(induced_subgraph(h, c)))
            return acc
        co_comps = connected_components(_graph_mod.complement(h))
        acc = build(induced_subgraph(h, co_comps[0]))
        for c in co_comps[1:]:
            nxt = _as_label(build(induced_subgraph(h, c)), 1, 2)
            acc = _as_label(Join(1, 2, Union(acc, nxt)), 2, 1)
        return acc

    return build(g)


def build_cycle_expr(n: int) -> KExpression:
    """A width <= 4 expression for the n-cycle (width 2 for the triangle).

    Standard sliding construction: label 1 pins the first endpoint, label 2
    is the live end, finished interior vertices are parked on label 3, and
    label 4 carries each new vertex in."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    if n == 3:
        return build_cograph_expr(complete(3))
    e: KExpression = Join(1, 2, Union(Create(1), Create(2)))
    for _ in range(n - 2):
        e = Relabel(4, 2, Relabel(2, 3, Join(2, 4, Union(e, Create(4)))))
    return Join(1, 2, e)


def _leaf_count(expr: KExpression) -> int:
    if isinstance(expr, Create):
        return 1
    if isinstance(expr, Union):
        return _leaf_count(expr.left) + _leaf_count(expr.right)
    return _leaf_count(expr.child)


def compose_blocks(
    g: Graph, expr_for_block: Mapping[frozenset[int], KExpression]
) -> KExpression:
    """Glue per-block expressions into an expression for a connected graph,
    spending at most two extra labels beyond the widest block.

    Block labels are normalized to 1..W; label W+1 marks the cut vertex a
    child subtree hands to its parent, and W+2 is the neutral label finished
    vertices are parked on.  Each child subtree is plugged in place of its cut
    vertex's create-leaf: the subtree arrives with the cut vertex on the
    marker label, is relabeled to the leaf's original label, and then behaves
    exactly like that leaf for the rest of the block's construction.
    """
    decomp = _graph_mod.blocks(g)
    if g.n == 0:
        raise ValueError("empty graph")
    if len(connected_components(g)) != 1:
        raise ValueError("compose_blocks requires a connected graph")
    if set(expr_for_block) != set(decomp.blocks):
        raise ValueError("expression map does not match the block decomposition")

    # validate, normalize labels, and map leaves to graph vertices
    norm: dict[frozenset[int], KExpression] = {}
    leaf_vertex: dict[frozenset[int], list[int]] = {}
    w_max = 1
    for b, expr in expr_for_block.items():
        lv = eval_expression(expr)
        target = induced_subgraph(g, b)
        iso = find_isomorphism(lv.graph, target)
        if iso is None:
            raise ValueError(f"expression for block {sorted(b)} does not evaluate to it")
        ordered = sorted(labels_used(expr))
        norm[b] = rename_labels(expr, {l: i + 1 for i, l in enumerate(ordered)})
        w_max = max(w_max, len(ordered))
        bs = sorted(b)
        leaf_vertex[b] = [bs[iso[v]] for v in range(lv.graph.n)]
    alpha, beta = w_max + 1, w_max + 2

    # root the block-cut tree at the first block
    blocks_of: dict[int, list[frozenset[int]]] = {}
    for b in decomp.blocks:
        for v in b:
            if v in decomp.cut_vertices:
                blocks_of.setdefault(v, []).append(b)

    def child_blocks(v: int, parent_block: frozenset[int]) -> list[frozenset[int]]:
        return sorted(
            (b for b in blocks_of.get(v, []) if b != parent_block),
            key=lambda b: sorted(b),
        )

    def transform(
        expr: KExpression,
        actions: list,
        leaf_idx: list[int],
    ) -> tuple[KExpression, Optional[int]]:
        """Rebuild a block term applying per-leaf actions.  Returns the new
        term and the tracked vertex's shadow label, if any.  The tracked
        vertex lives on label alpha; joins that would have touched its shadow
        label are mirrored onto alpha."""
        if isinstance(expr, Create):
            action = actions[leaf_idx[0]]
            leaf_idx[0] += 1
            kind = action[0]
            if kind == "keep":
                return expr, None
            if kind == "plug":
                return Relabel(alpha, expr.label, action[1]), None
            # kind == "track": substitute base (or a fresh alpha vertex)
            base = action[1] if action[1] is not None else Create(alpha)
            return base, expr.label
        if isinstance(expr, Union):
            left, s1 = transform(expr.left, actions, leaf_idx)
            right, s2 = transform(expr.right, actions, leaf_idx)
            return Union(left, right), s1 if s1 is not None else s2
        if isinstance(expr, Join):
            child, shadow = transform(expr.child, actions, leaf_idx)
            out: KExpression = Join(expr.label_i, expr.label_j, child)
            if shadow == expr.label_i:
                out = Join(alpha, expr.label_j, out)
            elif shadow == expr.label_j:
                out = Join(alpha, expr.label_i, out)
            return out, shadow
        if isinstance(expr, Relabel):
            child, shadow = transform(expr.child, actions, leaf_idx)
            if shadow == expr.label_from:
                shadow = expr.label_to
            return Relabel(expr.label_from, expr.label_to, child), shadow
        raise TypeError(f"not a k-expression: {expr!r}")

    def block_subtree(
        b: frozenset[int], parent_cut: Optional[int], base: Optional[KExpression]
    ) -> KExpression:
        expr = norm[b]
        verts = leaf_vertex[b]
        actions = []
        for v in verts:
            if v == parent_cut:
                actions.append(("track", base))
            elif v in decomp.cut_vertices and child_blocks(v, b):
                actions.append(("plug", vertex_subtree(v, b)))
            else:
                actions.append(("keep",))
        out, _ = transform(expr, actions, [0])
        if parent_cut is not None:
            for l in sorted(labels_used(norm[b])):
                out = Relabel(l, beta, out)
        return out

    def vertex_subtree(v: int, parent_block: frozenset[int]) -> KExpression:
        base: Optional[KExpression] = None
        for b in child_blocks(v, parent_block):
            base = block_subtree(b, v, base)
        assert base is not None
        return base

    root = min(decomp.blocks, key=lambda b: sorted(b))
    return block_subtree(root, None, None)


def build_bounded_expr(g: Graph, route: str) -> KExpression:
    """An expression for g along one of the three bounded routes.

    p4-route: cographs, width <= 2.  paw-route: components are trees, cycles,
    or complete multipartite, width <= 6 (trees and cycles use <= 4).
    diamond-route: block-cactus graphs, width <= 6.
    """
    if g.n == 0:
        raise ValueError("empty graph has no expression")
    if route == "p4-route":
        return build_cograph_expr(g)

    def k2_expr() -> KExpression:
        return Join(1, 2, Union(Create(1), Create(2)))

    def component_expr(c: Graph) -> KExpression:
        if route == "paw-route":
            if c.n == 1:
                return Create(1)
            if is_cycle_graph(c):
                return build_cycle_expr(c.n)
            if is_tree(c):
                return compose_blocks(
                    c, {b: k2_expr() for b in _graph_mod.blocks(c).blocks}
                )
            return build_cograph_expr(c)  # complete multipartite
        # diamond-route
        if c.n == 1:
            return Create(1)
        exprs: dict[frozenset[int], KExpression] = {}
        for b in _graph_mod.blocks(c).blocks:
            sub = induced_subgraph(c, b)
            if is_cycle_graph(sub):
                exprs[b] = build_cycle_expr(sub.n)
            else:
                exprs[b] = build_cograph_expr(complete(sub.n))
        return compose_blocks(c, exprs)

    if route == "paw-route":
        if not recognize_paw_itm_free(g):
            raise ValueError("graph is not paw-itm-free")
    elif route == "diamond-route":
        if not is_block_cactus(g):
            raise ValueError("graph is not a block-cactus graph")
    else:
        raise ValueError(f"unknown route {route!r}")

    acc: Optional[KExpression] = None
    for comp in connected_components(g):
        e = component_expr(induced_subgraph(g, comp))
        acc = e if acc is None else Union(acc, e)
    assert acc is not None
    return acc


# ---------------------------------------------------------------------------
# exact solver


class SearchBudgetExceeded(RuntimeError):
    """The state budget ran out before the search space was exhausted."""


EXACT_MAX_VERTICES = 8
EXACT_MAX_WIDTH = 5
DEFAULT_NODE_BUDGET = 10_000_000


def exact_cw(
    g: Graph, k_max: int = EXACT_MAX_WIDTH, node_budget: int = DEFAULT_NODE_BUDGET
) -> Optional[tuple[int, KExpression]]:
    """The minimum k <= k_max admitting a k-expression for g, with a
    certificate, or None if no such k exists.

    Iterative deepening on k.  For each k, forward search over labeled-graph
    states reachable by create/union/join/relabel, deduplicated by a canonical
    form with labels as colors, and pruned to states that can still embed
    into g (same-label vertices must receive identical future edges).  Raises
    SearchBudgetExceeded if the budget runs out, which is distinct from a
    definite "no expression with k <= k_max".
    """
    if g.n == 0 or g.n > EXACT_MAX_VERTICES:
        raise ValueError(f"exact_cw budget is 1 <= |V(G)| <= {EXACT_MAX_VERTICES}")
    if not 1 <= k_max <= EXACT_MAX_WIDTH:
        raise ValueError(f"exact_cw budget is k_max <= {EXACT_MAX_WIDTH}")
    for k in range(1, k_max + 1):
        found = _search_width(g, k, node_budget)
        if found is not None:
            return k, found
    return None


def _search_width(g: Graph, k: int, node_budget: int) -> Optional[KExpression]:
    n, m = g.n, g.m
    gadj = g.adj
    gmax = max_degree(g)
    target_cert, _ = canonical_form(g)

    states: dict[tuple, tuple[LabeledGraph, tuple]] = {}
    by_size: dict[int, list[tuple]] = {}
    queue: deque[tuple] = deque()
    budget = [node_budget]
    hit: list[Optional[tuple]] = [None]

    def add(lg: LabeledGraph, recipe: tuple) -> None:
        if hit[0] is not None:
            return
        h = lg.graph
        if h.n > n or h.m > m:
            return
        if any(h.degree(v) > gmax for v in range(h.n)):
            return
        cert, _ = canonical_form(h, lg.labels)
        if cert in states:
            return
        if not _embeddable(h, lg.labels, g):
            return
        if budget[0] <= 0:
            raise SearchBudgetExceeded(f"state budget exhausted at k={k}")
        budget[0] -= 1
        states[cert] = (lg, recipe)
        by_size.setdefault(h.n, []).append(cert)
        queue.append(cert)
        if h.n == n and h.m == m and canonical_form(h)[0] == target_cert:
            hit[0] = cert

    for i in range(1, k + 1):
        add(LabeledGraph(Graph(1), (i,)), ("create", i))
        if hit[0] is not None:
            break

    while queue and hit[0] is None:
        cert = queue.popleft()
        lg, _ = states[cert]
        h, labels = lg.graph, lg.labels
        present = sorted(set(labels))
        # relabel
        for i in present:
            for j in range(1, k + 1):
                if j == i:
                    continue
                nl = tuple(j if l == i else l for l in labels)
                add(LabeledGraph(h, nl), ("relabel", i, j, cert))
                if hit[0] is not None:
                    break
            if hit[0] is not None:
                break
        if hit[0] is not None:
            break
        # join
        for ai in range(len(present)):
            for bi in range(ai + 1, len(present)):
                i, j = present[ai], present[bi]
                ii = [v for v, l in enumerate(labels) if l == i]
                jj = [v for v, l in enumerate(labels) if l == j]
                new_edges = {
                    (u, v) if u < v else (v, u) for u in ii for v in jj
                } - h.edges
                if not new_edges:
                    continue
                h2 = Graph(h.n, set(h.edges) | new_edges)
                add(LabeledGraph(h2, labels), ("join", i, j, cert))
                if hit[0] is not None:
                    break
            if hit[0] is not None:
                break
        if hit[0] is not None:
            break
        # union with every state recorded so far (later states pair up with
        # this one when they are popped)
        for size, certs in list(by_size.items()):
            if size + h.n > n:
                continue
            for other in list(certs):
                olg, _ = states[other]
                merged = LabeledGraph(
                    disjoint_union(h, olg.graph), labels + olg.labels
                )
                add(merged, ("union", cert, other))
                if hit[0] is not None:
                    break
            if hit[0] is not None:
                break

    if hit[0] is None:
        return None

    memo: dict[tuple, KExpression] = {}

    def rebuild(c: tuple) -> KExpression:
        if c in memo:
            return memo[c]
        recipe = states[c][1]
        op = recipe[0]
        if op == "create":
            e: KExpression = Create(recipe[1])
        elif op == "relabel":
            e = Relabel(recipe[1], recipe[2], rebuild(recipe[3]))
        elif op == "join":
            e = Join(recipe[1], recipe[2], rebuild(recipe[3]))
        else:
            e = Union(rebuild(recipe[1]), rebuild(recipe[2]))
        memo[c] = e
        return e

    return rebuild(hit[0])


def _embeddable(h: Graph, labels: tuple[int, ...], g: Graph) -> bool:
    """Can h occur as the evaluation of a subterm of some expression for g?

    Necessary conditions: h embeds into g preserving its edges (later joins
    only add edges), and since same-label vertices receive identical edges
    from every later join, each same-label pair must look alike towards the
    rest of g.
    """
    hn, gn = h.n, g.n
    hadj, gadj = h.adj, g.adj
    pairs = [
        (u, v)
        for u in range(hn)
        for v in range(u + 1, hn)
        if labels[u] == labels[v]
    ]
    order = sorted(range(hn), key=lambda v: (-h.degree(v), v))
    image = [-1] * hn
    used = 0

    def ok_complete() -> bool:
        img_mask = used
        for u, v in pairs:
            pu, pv = image[u], image[v]
            if not (hadj[u] >> v) & 1 and (gadj[pu] >> pv) & 1:
                return False
            if (gadj[pu] & ~img_mask) != (gadj[pv] & ~img_mask):
                return False
            for w in range(hn):
                if w == u or w == v:
                    continue
                if (hadj[u] >> w) & 1 or (hadj[v] >> w) & 1:
                    continue
                pw = image[w]
                if ((gadj[pu] >> pw) & 1) != ((gadj[pv] >> pw) & 1):
                    return False
        return True

    def rec(i: int) -> bool:
        nonlocal used
        if i == hn:
            return ok_complete()
        v = order[i]
        req = 0
        for u in order[:i]:
            if (hadj[v] >> u) & 1:
                req |= 1 << image[u]
        for w in range(gn):
            if (used >> w) & 1:
                continue
            if gadj[w].bit_count() < hadj[v].bit_count():
                continue
            if (gadj[w] & used) & req != req:
                continue
            image[v] = w
            used |= 1 << w
            if rec(i + 1):
                return True
            used &= ~(1 << w)
        return False

    return rec(0)
