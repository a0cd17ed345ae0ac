import pytest
from hypothesis import given, settings, strategies as st

import networkx as nx

from itmcw.graph import Graph
from itmcw.generators import complete, cycle, named, path, random_graph
from itmcw.formats import (
    FormatError,
    emit_dot,
    emit_edgelist,
    emit_graph6,
    parse_dot,
    parse_edgelist,
    parse_graph6,
    parse_graph6_line,
)


def graphs(max_n=9):
    return st.builds(
        random_graph,
        st.integers(0, max_n),
        st.integers(0, 10**6),
        st.integers(1, 3),
        st.just(4),
    )


class TestEdgelist:
    def test_round_trip_examples(self):
        for g in (Graph(0), Graph(3), named("paw"), complete(6), random_graph(10, 3)):
            assert parse_edgelist(emit_edgelist(g)) == g

    @given(graphs())
    @settings(max_examples=50, deadline=None)
    def test_round_trip(self, g):
        text = emit_edgelist(g)
        assert parse_edgelist(text) == g
        assert emit_edgelist(parse_edgelist(text)) == text

    @pytest.mark.parametrize(
        "bad",
        [
            "",
            "3\n",
            "a b\n",
            "2 1\n0 0\n",  # loop
            "3 1\n1 0\n",  # u < v violated
            "3 1\n0 3\n",  # out of range
            "3 2\n0 1\n0 1\n",  # duplicate
            "3 2\n0 1\n",  # count mismatch
            "3 0\n0 1\n",
        ],
    )
    def test_rejections(self, bad):
        with pytest.raises(FormatError):
            parse_edgelist(bad)


class TestGraph6:
    def test_known_values(self):
        # spot values checked against the reference implementation
        assert emit_graph6(complete(3)) == nx.to_graph6_bytes(
            nx.complete_graph(3), header=False
        ).decode().strip()
        assert parse_graph6_line(emit_graph6(path(4))) == path(4)

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_matches_networkx(self, g):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        ref = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert emit_graph6(g) == ref
        assert parse_graph6_line(ref) == g

    def test_large_n_size_field(self):
        g = Graph(70)  # needs the 3-character size form
        assert parse_graph6_line(emit_graph6(g)) == g

    def test_header_prefix_accepted(self):
        s = ">>graph6<<" + emit_graph6(cycle(5))
        assert parse_graph6_line(s) == cycle(5)

    def test_multi_line(self):
        text = emit_graph6(path(3)) + "\n" + emit_graph6(complete(4)) + "\n"
        assert parse_graph6(text) == [path(3), complete(4)]

    @pytest.mark.parametrize("bad", ["", "\x07", "B", "BwA"])
    def test_rejections(self, bad):
        with pytest.raises(FormatError):
            parse_graph6_line(bad)


class TestDot:
    def test_round_trip_examples(self):
        for g in (Graph(0), Graph(4), named("diamond"), random_graph(8, 9)):
            assert parse_dot(emit_dot(g)) == g

    @given(graphs())
    @settings(max_examples=40, deadline=None)
    def test_round_trip(self, g):
        assert parse_dot(emit_dot(g)) == g

    def test_isolated_vertices_survive(self):
        g = Graph(5, [(1, 3)])
        assert "0;" in emit_dot(g).replace(" ", "")
        assert parse_dot(emit_dot(g)) == g

    @pytest.mark.parametrize("bad", ["", "digraph { 0 -- 1; }", "graph { a -- b; }"])
    def test_rejections(self, bad):
        with pytest.raises(FormatError):
            parse_dot(bad)
