import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import graphs
from rainbow_kit import (EdgeColoredGraph, PreconditionError, WitnessError, build_digraph_D, build_digraph_F,
                         check_averaging_bound, check_maxdeg_bound, check_sigma_cap, check_triangle_reach_bound,
                         edge_minimal_reduce, layered_reach, min_color_degree, rho, separating_colors,
                         separation_report, sigma, unique_neighborhood)
from rainbow_kit.constructions import rainbow_complete_bipartite
from rainbow_kit.graph import replication
from rainbow_kit.search import repeated_colors
from rainbow_kit.separation import build_neighborhood_digraph, neighborhood_digraph_facts, restricted_colors


def rainbow_complete(n):
    return EdgeColoredGraph(n, [(u, v, u * n + v) for u in range(n) for v in range(u + 1, n)])


# five vertices, color 0 repeated on the star at 0 and on {1, 3}
FIVE = EdgeColoredGraph(5, [(0, 1, 0), (0, 2, 0), (0, 3, 1), (1, 3, 0), (1, 4, 2), (2, 3, 3), (2, 4, 4),
                            (3, 4, 2)])


def test_hand_instance_matches_oracle():
    edges = oracles.edge_map(FIVE)
    X = [1, 2, 3]
    for y in (1, 2, 3, 4):
        assert separating_colors(FIVE, 0, X, y) == oracles.separating(5, edges, 0, X, y)
        assert restricted_colors(FIVE, 0, X, y) == oracles.restricted(5, edges, 0, X, y)
    # y = 4 sees 1 (color 2), 2 (color 4), 3 (color 2): all differ from the v-edges
    assert separating_colors(FIVE, 0, X, 4) == {2, 4}
    # y = 3: edge {1,3} has color 0 == c(0,1), so only {2,3} separates
    assert separating_colors(FIVE, 0, X, 3) == {3}
    assert restricted_colors(FIVE, 0, X, 3) == {3} - {2}


def test_no_neighbors_in_X():
    assert separating_colors(FIVE, 0, [3], 2) == {3}
    assert separating_colors(FIVE, 0, [1], 2) == set()


def test_rainbow_single_x():
    g = rainbow_complete(5)
    assert separating_colors(g, 0, [1], 3) == {g.color(1, 3)}
    star = EdgeColoredGraph(3, [(0, 1, 0), (1, 2, 1)])
    assert restricted_colors(star, 0, [1], 2) == {1}


def test_preconditions():
    with pytest.raises(PreconditionError, match="N\\(0\\)"):
        separating_colors(FIVE, 0, [4], 1)
    with pytest.raises(PreconditionError):
        separating_colors(FIVE, 0, [1], 0)
    with pytest.raises(PreconditionError):
        build_digraph_D(FIVE, 0, [1], [])
    with pytest.raises(PreconditionError):
        build_digraph_D(FIVE, 0, [1], [0, 2])


@given(graphs(min_n=2, max_n=7, min_density=0.3), st.data())
def test_sigma_rho_and_digraphs_match_definitions(g, data):
    n, edges = g.n, oracles.edge_map(g)
    v = data.draw(st.integers(0, n - 1))
    X = sorted(data.draw(st.sets(st.sampled_from(sorted(g.adjacency(v)) or [None]))) - {None})
    Y = sorted(data.draw(st.sets(st.integers(0, n - 1), min_size=1)) - {v}) or None
    for y in range(n):
        if y == v:
            continue
        sep = separating_colors(g, v, X, y)
        res = restricted_colors(g, v, X, y)
        assert sep == oracles.separating(n, edges, v, X, y)
        assert res == oracles.restricted(n, edges, v, X, y)
        assert res <= sep and rho(g, v, X, y) <= sigma(g, v, X, y)
    if Y:
        D = build_digraph_D(g, v, X, Y)
        assert D.arcs == oracles.digraph_D(n, edges, v, X, Y)
        assert sum(D.in_degree(y) for y in Y) == len(D) == sum(D.out_degree(x) for x in X)
    F = build_digraph_F(g, v, X)
    assert F.arcs == oracles.digraph_F(n, edges, v, X)


def test_rainbow_graph_has_no_D_arcs():
    g = rainbow_complete(6)
    assert len(build_digraph_D(g, 0, [1, 2, 3], [4, 5])) == 0


def test_single_D_arc():
    g = EdgeColoredGraph(4, [(0, 1, 5), (1, 2, 5), (1, 3, 6)])
    assert build_digraph_D(g, 0, [1], [2, 3]).arcs == {(1, 2)}


def test_mono_star_has_no_F_arcs():
    g = EdgeColoredGraph(5, [(0, v, 3) for v in range(1, 5)])
    assert len(build_digraph_F(g, 0, [1, 2, 3, 4])) == 0


@given(graphs(min_n=3, max_n=8, max_colors=5, min_density=0.3))
def test_edge_minimal_D_structure(g):
    h = edge_minimal_reduce(g)
    if not h.num_edges:
        return
    R = replication(h)[0]
    delta = min_color_degree(h)
    for v in range(h.n):
        X = sorted(h.adjacency(v))
        Y = [y for y in range(h.n) if y != v]
        if not Y:
            continue
        D = build_digraph_D(h, v, X, Y)
        uniq = unique_neighborhood(h, v)
        assert all(x in uniq for x, _ in D.arcs)
        assert all(D.out_degree(x) <= R - 1 for x in X)
        F = build_digraph_F(h, v, X)
        assert all(F.out_degree(x) >= h.color_degree(x) - 1 for x in X)
        assert len(F) >= len(X) * (delta - 1)
        assert all(neighborhood_digraph_facts(h, v).values())


def test_neighborhood_digraph_heads_are_unique_neighbors():
    g = edge_minimal_reduce(EdgeColoredGraph(5, [(0, 1, 0), (0, 2, 0), (0, 3, 1), (1, 3, 1), (2, 4, 2),
                                                 (3, 4, 3), (1, 4, 4)]))
    D = build_neighborhood_digraph(g, 0)
    assert all(y in unique_neighborhood(g, 0) for _, y in D.arcs)


# -- averaging bound -----------------------------------------------------------

def test_rainbow_k5_averaging():
    g = rainbow_complete(5)
    rep = check_averaging_bound(g, 0, [1, 2, 3, 4], [1, 2, 3, 4])
    assert rep.holds
    assert rep.sigma_avg >= rep.rho_avg
    assert rep.rhs == Fraction(4 + 4 - 5)


def test_bipartite_chain_gives_half_bound():
    # no rainbow triangle: delta <= n/2 follows from the averaging bound with X = N(z)
    g = rainbow_complete_bipartite(5, 5)
    z = 0
    X = sorted(g.adjacency(z))
    rep = check_averaging_bound(g, z, X, X)
    assert rep.holds
    assert rep.delta == 5 and 2 * rep.delta <= g.n


def test_averaging_refuses_non_minimal():
    g = EdgeColoredGraph(4, [(0, 1, 0), (1, 2, 0), (2, 3, 0)])
    with pytest.raises(PreconditionError, match="edge-minimal"):
        check_averaging_bound(g, 1, [0, 2], [3])
    assert separation_report(g, 1, [0, 2], [3]).v == 1


@given(graphs(min_n=2, max_n=9, min_density=0.2), st.data())
def test_averaging_bound_holds_on_minimal_graphs(g, data):
    h = edge_minimal_reduce(g)
    v = data.draw(st.integers(0, h.n - 1))
    X = sorted(data.draw(st.sets(st.sampled_from(sorted(h.adjacency(v)) or [None]))) - {None})
    Y = sorted(data.draw(st.sets(st.integers(0, h.n - 1), min_size=1)) - {v})
    if not Y:
        return
    rep = check_averaging_bound(h, v, X, Y)
    assert rep.holds
    assert rep.sigma_avg >= rep.rho_avg
    unique_in = len(set(X) & unique_neighborhood(h, v))
    exact = rep.rho_avg >= rep.delta + len(X) - h.n - Fraction((rep.R - 1) * unique_in, len(Y))
    assert exact


def test_report_json():
    rep = check_averaging_bound(rainbow_complete(4), 0, [1, 2], [1, 2, 3])
    doc = json.loads(json.dumps(rep.to_dict()))
    assert doc["holds"] is True
    assert set(doc["sigma_avg"]) == {"num", "den"}
    assert [r["y"] for r in doc["records"]] == [1, 2, 3]


# -- separation cap and friends ---------------------------------------------

def test_sigma_cap_on_bipartite():
    g = rainbow_complete_bipartite(5, 5)
    X = sorted(g.adjacency(0))
    reach = layered_reach(g, 0, repeated_colors(g, 0, X), 2, mode="exact")
    Y = list(reach.layer(2).items())
    out = check_sigma_cap(g, 3, 0, X, None, Y)
    assert out and all(out.values())
    assert max(sigma(g, 0, X, y) for y, _ in Y) <= 9


def test_sigma_cap_certifies_hypotheses():
    with pytest.raises(PreconditionError, match="rainbow 3-cycle"):
        check_sigma_cap(rainbow_complete(4), 3, 0, [1], None, [])
    g = rainbow_complete_bipartite(3, 3)
    with pytest.raises(WitnessError, match="y=4"):
        check_sigma_cap(g, 3, 0, [3], None, [(4, (0, 3, 1, 4))])
    with pytest.raises(PreconditionError, match="C_rep"):
        bad = EdgeColoredGraph(4, [(0, 1, 0), (0, 2, 0), (1, 3, 1), (2, 3, 2)])
        check_sigma_cap(bad, 3, 0, [1, 2], [], [])


def test_sigma_cap_on_mono_cycle():
    g = EdgeColoredGraph(6, [(i, (i + 1) % 6, 0) for i in range(6)])
    h = edge_minimal_reduce(g)
    reach = layered_reach(h, 0, (), 2, mode="exact")
    out = check_sigma_cap(h, 3, 0, sorted(h.adjacency(0)), None, list(reach.layer(2).items()))
    assert all(out.values())


def test_maxdeg_bound():
    assert check_maxdeg_bound(rainbow_complete_bipartite(4, 4), 3) is None   # delta below the gate
    assert check_maxdeg_bound(EdgeColoredGraph(3, [(0, 1, 0), (1, 2, 0), (0, 2, 0)]), 3) is None
    big = rainbow_complete_bipartite(90, 90)   # delta = 90 >= 5 + 81
    assert check_maxdeg_bound(big, 3) is True


def test_triangle_reach_preconditions():
    g = rainbow_complete_bipartite(3, 3)
    with pytest.raises(PreconditionError):
        check_triangle_reach_bound(rainbow_complete(4), 3, (0, 1, 2), 0, (), 3)
    tri = EdgeColoredGraph(4, [(0, 1, 0), (1, 2, 1), (0, 2, 2), (2, 3, 3)])
    with pytest.raises(PreconditionError, match="triangle vertex"):
        check_triangle_reach_bound(tri, 4, (0, 1, 2), 3, (), 1)
    with pytest.raises(PreconditionError, match="C_T"):
        check_triangle_reach_bound(tri, 4, (0, 1, 2), 0, (1,), 1)
    assert check_triangle_reach_bound(tri, 4, (0, 1, 2), 0, (3,), 0)
    assert g.n == 6
