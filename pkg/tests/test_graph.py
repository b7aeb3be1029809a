import pytest
from hypothesis import given

import oracles
from conftest import graphs
from rainbow_kit import (EdgeColoredGraph, GraphError, RainbowWitness, WitnessError, build_graph, color_degree,
                         color_stats, induced_subgraph, min_color_degree, replication, unique_neighborhood)
from rainbow_kit.graph import color_degree_within


def test_edges_normalized_and_sorted():
    g = EdgeColoredGraph(4, [(3, 1, 5), (0, 2, 1), (1, 0, 7)])
    assert g.colored_edges() == ((0, 1, 7), (0, 2, 1), (1, 3, 5))
    assert g.color(3, 1) == g.color(1, 3) == 5
    assert list(g.neighbors(1)) == [0, 3]
    assert g.palette == {1, 5, 7}


@pytest.mark.parametrize("edges, fragment", [
    ([(0, 4, 1)], "out of range"),
    ([(2, 2, 1)], "loop"),
    ([(0, 1, -1)], "non-negative"),
    ([(0, 1, 6), (1, 0, 6)], "edge (0, 1, 6): duplicate edge"),
    ([(0, 1, 6), (0, 1, 2)], "duplicate edge"),
])
def test_malformed_edges_rejected(edges, fragment):
    with pytest.raises(GraphError, match=fragment.replace("(", r"\(").replace(")", r"\)")):
        EdgeColoredGraph(4, edges)


def test_color_query_on_non_edge():
    g = EdgeColoredGraph(3, [(0, 1, 0)])
    with pytest.raises(GraphError):
        g.color(0, 2)
    with pytest.raises(GraphError):
        g.adjacency(3)


def test_star_with_repeated_color():
    # center sees colors {0, 1}; leaves see one color each
    g = build_graph(4, [(0, 1, 0), (0, 2, 0), (0, 3, 1)])
    assert color_degree(g, 0) == 2
    assert min_color_degree(g) == 1
    assert g.alpha_neighborhood(0, 0) == (1, 2)
    assert unique_neighborhood(g, 0) == {3}
    assert replication(g) == (2, (0, 0))


def test_replication_tie_breaks_by_vertex_then_color():
    g = build_graph(5, [(1, 2, 4), (1, 3, 4), (1, 0, 3), (1, 4, 3)])
    # vertex 1 has two classes of size 2; the smaller color wins
    assert replication(g) == (2, (1, 3))


def test_replication_needs_an_edge():
    with pytest.raises(GraphError, match="no colors"):
        replication(EdgeColoredGraph(3))


def test_min_color_degree_needs_a_vertex():
    with pytest.raises(GraphError):
        min_color_degree(EdgeColoredGraph(0))


@given(graphs(max_n=7))
def test_statistics_match_definitions(g):
    n, edges = g.n, oracles.edge_map(g)
    for v in range(n):
        assert color_degree(g, v) == oracles.color_degree(n, edges, v)
        assert unique_neighborhood(g, v) == oracles.unique_nbhd(n, edges, v)
    if g.num_edges:
        assert replication(g) == oracles.replication(n, edges)
        stats = color_stats(g)
        assert stats.min_color_degree == oracles.min_color_degree(n, edges)


def test_color_degree_within():
    g = build_graph(4, [(0, 1, 0), (0, 2, 1), (0, 3, 1)])
    assert color_degree_within(g, 0, [1, 2]) == 2
    assert color_degree_within(g, 0, [2, 3]) == 1


def test_induced_subgraph_relabels():
    g = build_graph(5, [(0, 2, 1), (2, 4, 2), (1, 3, 3), (0, 4, 9)])
    h = induced_subgraph(g, [4, 2, 0])
    assert h.n == 3 and h.origin == (0, 2, 4)
    assert h.colored_edges() == ((0, 1, 1), (0, 2, 9), (1, 2, 2))


def test_equality_by_structure():
    a = build_graph(3, [(0, 1, 2), (1, 2, 3)])
    b = build_graph(3, [(2, 1, 3), (1, 0, 2)])
    assert a == b
    assert a != build_graph(4, [(0, 1, 2), (1, 2, 3)])


class TestWitness:
    g = build_graph(4, [(0, 1, 0), (1, 2, 1), (2, 3, 2), (0, 3, 3), (0, 2, 0)])

    def test_valid_cycle(self):
        w = RainbowWitness.from_vertices(self.g, "cycle", (0, 1, 2, 3))
        assert w.colors == (0, 1, 2, 3)
        assert w.edges() == [(0, 1), (1, 2), (2, 3), (3, 0)]
        assert w.to_dict() == {"kind": "cycle", "vertices": [0, 1, 2, 3], "colors": [0, 1, 2, 3]}

    def test_not_rainbow(self):
        with pytest.raises(WitnessError, match="not rainbow"):
            RainbowWitness.from_vertices(self.g, "cycle", (0, 1, 2))

    def test_missing_edge(self):
        with pytest.raises(WitnessError, match="not an edge"):
            RainbowWitness.from_vertices(self.g, "path", (1, 3))

    def test_wrong_color_detected(self):
        bad = RainbowWitness("path", (0, 1), (5,))
        assert not bad.is_valid(self.g)

    def test_repeated_vertex(self):
        with pytest.raises(WitnessError, match="repeats"):
            RainbowWitness("path", (0, 1, 0), (0, 0)).validate(self.g)

    def test_single_vertex_path(self):
        RainbowWitness("path", (2,), ()).validate(self.g)
