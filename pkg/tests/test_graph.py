import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geothick.graph import DegreeError, GraphError, MultiGraph, build_graph, dfs, euler_tour
from corpus import random_connected


def test_edge_ids_follow_input_order():
    g = build_graph(4, [(2, 3), (0, 1), (1, 2)])
    assert g.edges == ((2, 3), (0, 1), (1, 2))
    assert g.adjacency[2] == (0, 2)
    assert g.other(2, 1) == 2 and g.neighbors(1) == [0, 2]


@pytest.mark.parametrize(
    "pairs, message",
    [([(0, 0)], "self-loop"), ([(0, 1), (1, 0)], "duplicate"), ([(0, 5)], "outside")],
)
def test_build_rejects(pairs, message):
    with pytest.raises(GraphError, match=message):
        build_graph(3, pairs)


def test_degree_error_names_label():
    g = build_graph(5, [(0, i) for i in range(1, 5)])
    with pytest.raises(DegreeError, match="hub has degree 4 > 3"):
        g.require_max_degree(3, ["hub", "a", "b", "c", "d"])


def test_components_and_subgraph():
    g = build_graph(6, [(0, 1), (4, 5), (1, 2)])
    assert g.components() == [[0, 1, 2], [3], [4, 5]]
    sub, vmap, emap = g.subgraph([4, 5])
    assert sub.edges == ((0, 1),) and vmap == [4, 5] and emap == [1]


def test_flat_view_matches_tuples():
    g = random_connected(40, 3, random.Random(2))
    fa = g.flat
    for v in range(g.n):
        assert tuple(fa.inc[fa.start[v] : fa.start[v + 1]]) == g.adjacency[v]
    for e, (a, b) in enumerate(g.edges):
        assert fa.xor[e] ^ a == b and (fa.ends[2 * e], fa.ends[2 * e + 1]) == (a, b)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 40), st.integers(0, 10**6))
def test_dfs_tree_is_spanning_and_non_tree_edges_are_back_edges(n, seed):
    g = random_connected(n, 4, random.Random(seed))
    t = dfs(g, seed % n)
    rank = t.discovery()
    tree = {t.parent_edge[v] for v in range(n) if t.parent[v] >= 0}
    assert len(tree) == n - 1
    assert sorted(tree | set(t.non_tree_edges)) == list(range(g.m))
    ancestors = lambda v: {v} | (ancestors(t.parent[v]) if t.parent[v] >= 0 else set())
    for e in t.non_tree_edges:
        a, b = g.edges[e]
        lo, hi = (a, b) if rank[a] < rank[b] else (b, a)
        assert lo in ancestors(hi)
    bottoms = [max(rank[a], rank[b]) for a, b in (g.edges[e] for e in t.non_tree_edges)]
    assert bottoms == sorted(bottoms)


def test_dfs_rejects_disconnected():
    with pytest.raises(GraphError, match="disconnected"):
        dfs(build_graph(3, [(0, 1)]), 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 30), st.integers(0, 10**6))
def test_euler_tour_uses_every_edge_once(n, seed):
    h = nx.random_regular_graph(4, n + 2, seed=seed) if (n + 2) > 4 else nx.complete_graph(5)
    mg = MultiGraph(h.number_of_nodes(), [tuple(e) for e in h.edges()])
    if not nx.is_connected(h):
        return
    tour = euler_tour(mg, 0)
    assert sorted(tour.sequence) == list(range(len(mg.edges)))
    assert tour.vertices[0] == tour.vertices[-1] == 0
    for i, e in enumerate(tour.sequence):
        assert set(mg.edges[e]) == {tour.vertices[i], tour.vertices[i + 1]}


def test_euler_tour_handles_parallel_edges():
    mg = MultiGraph(2, [(0, 1), (0, 1), (1, 0), (0, 1)])
    tour = euler_tour(mg)
    assert len(tour.sequence) == 4 and tour.is_closed


def test_euler_tour_rejects_odd_degree():
    with pytest.raises(GraphError, match="odd degree"):
        euler_tour(MultiGraph(3, [(0, 1), (1, 2)]))
