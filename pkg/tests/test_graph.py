import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from itmcw.graph import (
    Graph,
    blocks,
    canonical_form,
    complement,
    connected_components,
    contract_edges,
    disjoint_union,
    find_isomorphism,
    induced_subgraph,
    is_isomorphic,
    line_graph,
    max_degree,
    subdivide,
)
from itmcw.generators import (
    all_graphs,
    complete,
    cycle,
    grid,
    named,
    path,
    random_graph,
    wall,
)


def small_graphs(max_n=6):
    return st.integers(0, max_n).flatmap(
        lambda n: st.builds(
            Graph,
            st.just(n),
            st.lists(
                st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)))
                .filter(lambda e: e[0] != e[1]),
                max_size=12,
            )
            if n >= 2
            else st.just([]),
        )
    )


class TestGraphBasics:
    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, [(0, 2)])

    def test_parallel_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0)])
        assert g.m == 1

    def test_degree_and_neighbors(self):
        g = named("paw")
        assert sorted(g.degree(v) for v in range(4)) == [1, 2, 2, 3]


class TestInducedSubgraph:
    def test_k4_any_triple_is_triangle(self):
        k4 = complete(4)
        for trip in itertools.combinations(range(4), 3):
            assert induced_subgraph(k4, trip) == complete(3)

    def test_gem_non_apex_is_p4(self):
        gem = named("gem")
        assert is_isomorphic(induced_subgraph(gem, [0, 1, 2, 3]), path(4))

    def test_diamond_two_deg2_one_deg3_is_p3(self):
        d = named("diamond")
        deg2 = [v for v in range(4) if d.degree(v) == 2]
        deg3 = [v for v in range(4) if d.degree(v) == 3]
        assert is_isomorphic(induced_subgraph(d, deg2 + deg3[:1]), path(3))

    def test_out_of_range_vertex(self):
        with pytest.raises(ValueError):
            induced_subgraph(complete(3), [0, 5])

    @given(small_graphs(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_exactly_the_inside_edges(self, g, data):
        xs = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n))
        xs = {v for v in xs if v < g.n}
        sub = induced_subgraph(g, xs)
        order = sorted(xs)
        expected = {
            (i, j)
            for i, u in enumerate(order)
            for j, v in enumerate(order)
            if i < j and g.has_edge(u, v)
        }
        assert sub.edges == frozenset(expected)


class TestIsomorphism:
    def test_line_graph_of_claw_is_triangle(self):
        assert is_isomorphic(line_graph(named("claw")), complete(3))

    def test_grid22_is_c4(self):
        assert is_isomorphic(grid(2, 2), cycle(4))

    def test_p4_not_paw(self):
        assert not is_isomorphic(path(4), named("paw"))

    @given(small_graphs(), st.randoms(use_true_random=False))
    @settings(max_examples=60, deadline=None)
    def test_invariant_under_permutation(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
        assert is_isomorphic(g, g)
        assert is_isomorphic(g, h)
        assert is_isomorphic(h, g)

    def test_mapping_preserves_edges(self):
        g = random_graph(8, 11)
        perm = [3, 1, 7, 2, 0, 6, 5, 4]
        h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
        iso = find_isomorphism(g, h)
        assert iso is not None
        for u, v in g.edges:
            assert h.has_edge(iso[u], iso[v])

    def test_canonical_form_separates_non_isomorphic(self):
        seen = {}
        for g in all_graphs(4):
            cert, _ = canonical_form(g)
            if cert in seen:
                assert is_isomorphic(g, seen[cert])
            seen[cert] = g
        assert len(seen) == 11


class TestBlocks:
    def test_paw_blocks(self):
        bd = blocks(named("paw"))
        sizes = sorted(len(b) for b in bd.blocks)
        assert sizes == [2, 3]
        assert len(bd.cut_vertices) == 1

    def test_c5_single_block(self):
        bd = blocks(cycle(5))
        assert len(bd.blocks) == 1 and not bd.cut_vertices

    def test_p4_three_bridges(self):
        bd = blocks(path(4))
        assert sorted(len(b) for b in bd.blocks) == [2, 2, 2]
        assert bd.cut_vertices == frozenset({1, 2})

    def test_isolated_vertex_block(self):
        bd = blocks(Graph(3, [(0, 1)]))
        assert frozenset({2}) in bd.blocks

    @pytest.mark.parametrize("seed", range(8))
    def test_invariants_on_random_graphs(self, seed):
        g = random_graph(9, seed, 1, 3)
        bd = blocks(g)
        # every edge in exactly one block
        cover = {}
        for b in bd.blocks:
            sub_edges = [(u, v) for u, v in g.edges if u in b and v in b]
            for e in sub_edges:
                assert e not in cover
                cover[e] = b
        assert set(cover) == set(g.edges)
        # pairwise intersections are single cut vertices
        for b1, b2 in itertools.combinations(bd.blocks, 2):
            inter = b1 & b2
            assert len(inter) <= 1
            assert all(v in bd.cut_vertices for v in inter)
        # blocks have no internal cut vertex
        for b in bd.blocks:
            sub = induced_subgraph(g, b)
            assert not blocks(sub).cut_vertices

    @pytest.mark.parametrize("seed", range(4))
    def test_removing_non_cut_vertex_keeps_block_connected(self, seed):
        g = random_graph(8, 100 + seed, 1, 3)
        bd = blocks(g)
        for b in bd.blocks:
            for v in b:
                if v in bd.cut_vertices or len(b) == 1:
                    continue
                rest = induced_subgraph(g, b - {v})
                assert len(connected_components(rest)) <= 1 or rest.n == 0


class TestLineGraph:
    def test_k3_self_line_graph(self):
        assert is_isomorphic(line_graph(complete(3)), complete(3))

    def test_p4_gives_p3(self):
        assert is_isomorphic(line_graph(path(4)), path(3))

    @given(small_graphs())
    @settings(max_examples=60, deadline=None)
    def test_edge_count_formula(self, g):
        lg = line_graph(g)
        expected = sum(
            g.degree(v) * (g.degree(v) - 1) // 2 for v in range(g.n)
        )
        assert lg.m == expected


class TestSubdivideContract:
    def test_k3_one_edge_once_is_c4(self):
        assert is_isomorphic(subdivide(complete(3), {(0, 1): 1}), cycle(4))

    def test_k3_each_edge_once_is_c6(self):
        g = subdivide(complete(3), {e: 1 for e in complete(3).edges})
        assert is_isomorphic(g, cycle(6))

    def test_all_zero_is_identity(self):
        g = named("gem")
        assert subdivide(g, {e: 0 for e in g.edges}) == g

    def test_non_edge_key_rejected(self):
        with pytest.raises(ValueError):
            subdivide(path(3), {(0, 2): 1})

    def test_contract_c4_edge_gives_k3(self):
        assert is_isomorphic(contract_edges(cycle(4), [(0, 1)]), complete(3))

    def test_contract_empty_is_identity(self):
        g = named("fat-house")
        assert contract_edges(g, []) == g

    def test_contract_non_edge_rejected(self):
        with pytest.raises(ValueError):
            contract_edges(path(3), [(0, 2)])

    def test_contract_inverts_subdivision_of_diamond(self):
        d = named("diamond")
        s = subdivide(d, {(0, 2): 1})
        # the subdivided edge became a two-edge path through the new vertex
        new = s.n - 1
        assert is_isomorphic(contract_edges(s, [(0, new)]), d)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_contract_inverts_subdivision(self, n):
        rnd = random.Random(n)
        for _ in range(12):
            g = random_graph(n, rnd.randrange(10**6), 1, 2)
            if not g.edges:
                continue
            es = sorted(g.edges)
            times = {}
            total = 3
            for e in es:
                if total == 0:
                    break
                t = rnd.randint(0, total)
                if t:
                    times[e] = t
                    total -= t
            if not times:
                continue
            s = subdivide(g, times)
            # one contraction per subdivided edge path collapses it back
            contract = []
            nxt = g.n
            for e in es:
                t = times.get(e, 0)
                if t:
                    contract.append((e[0], nxt))
                    nxt += t
            shrunk = s
            # contract the full interior of each path in one pass
            full = []
            nxt = g.n
            for e in es:
                t = times.get(e, 0)
                if t:
                    chain = [e[0]] + list(range(nxt, nxt + t))
                    full.extend(zip(chain, chain[1:]))
                    nxt += t
            assert is_isomorphic(contract_edges(s, full), g)


class TestMaxDegree:
    def test_wall5_is_subcubic(self):
        assert max_degree(wall(5)) == 3

    def test_k5(self):
        assert max_degree(complete(5)) == 4

    def test_edgeless(self):
        assert max_degree(Graph(3)) == 0
        assert max_degree(Graph(0)) == 0


class TestHelpers:
    def test_complement_involution(self):
        g = named("paw")
        assert complement(complement(g)) == g

    def test_disjoint_union_counts(self):
        g = disjoint_union(complete(3), path(2))
        assert (g.n, g.m) == (5, 4)

    def test_components(self):
        g = disjoint_union(complete(3), path(3))
        assert connected_components(g) == [[0, 1, 2], [3, 4, 5]]
