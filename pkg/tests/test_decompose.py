import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geothick import named
from geothick.decompose import (
    cycles_from_lists,
    euler_partition,
    eulerize,
    forests_to_paths,
    is_linear_forest,
    layer_cycles,
    linear_forests_deg3,
    paths_to_cycle_structure,
)
from geothick.graph import DegreeError, build_graph
from corpus import atlas_connected, random_connected, random_connected_regular


def layer_nx(g, layer_of, c):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges[e] for e, k in enumerate(layer_of) if k == c)
    return h


def assert_linear_forests(g, p):
    assert len(p.layer_of) == g.m and set(p.layer_of) <= {0, 1}
    for c in (0, 1):
        h = layer_nx(g, p.layer_of, c)
        assert max((d for _, d in h.degree()), default=0) <= 2
        assert nx.is_forest(h)


def test_deg3_atlas():
    for g in atlas_connected(3):
        assert_linear_forests(g, linear_forests_deg3(g))


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 120), st.integers(0, 10**9))
def test_deg3_random(n, seed):
    g = random_connected(n, 3, random.Random(seed))
    assert_linear_forests(g, linear_forests_deg3(g))


@pytest.mark.parametrize("name", ["k4", "petersen", "coxeter"])
def test_deg3_named(name):
    g = named.named_graph(name)
    p = linear_forests_deg3(g)
    assert_linear_forests(g, p)
    assert is_linear_forest(g, p.layer_of, 0) and is_linear_forest(g, p.layer_of, 1)


def test_deg3_rejects_degree_four():
    with pytest.raises(DegreeError):
        linear_forests_deg3(named.complete(5))


def test_layer_cycles_and_forest_check_agree_with_networkx():
    g = named.cycle(6)
    assert layer_cycles(g, [0] * 6, 0) == [list(range(6))]
    assert not is_linear_forest(g, [0] * 6, 0)
    assert is_linear_forest(g, [0] * 5 + [1], 0)
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert not is_linear_forest(star, [0, 0, 0], 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(5, 80), st.integers(0, 10**9))
def test_euler_split_of_4_regular_is_two_2_factors(n, seed):
    g = random_connected_regular(4, n, seed)
    p = euler_partition(g).partition
    for c in (0, 1):
        assert all(d == 2 for _, d in layer_nx(g, p.layer_of, c).degree())


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 80), st.integers(0, 10**9), st.floats(0, 2))
def test_euler_split_max_degree_two(n, seed, extra):
    g = random_connected(n, 4, random.Random(seed), extra)
    eg = eulerize(g)
    degrees = [0] * eg.graph.n
    for a, b in eg.graph.edges:
        degrees[a] += 1
        degrees[b] += 1
    assert all(d % 2 == 0 for d in degrees) and len(eg.graph.edges) % 2 == 0
    assert eg.graph.edges[: g.m] == list(g.edges)
    p = euler_partition(g).partition
    assert len(p.layer_of) == g.m
    for c in (0, 1):
        assert max((d for _, d in layer_nx(g, p.layer_of, c).degree()), default=0) <= 2


def test_eulerize_hangs_triangle_when_needed():
    # Odd edge count, all degrees even: a 5-cycle.
    eg = eulerize(named.cycle(5))
    assert len(eg.graph.edges) == 8 and list(eg.dummy_vertices) == [5, 6]


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 80), st.integers(0, 10**9))
def test_spanning_paths_cover_layers(n, seed):
    g = random_connected(n, 3, random.Random(seed))
    p = linear_forests_deg3(g)
    for c, sp in enumerate(forests_to_paths(p, g)):
        assert sorted(sp.order) == list(range(g.n))
        assert len(sp.links) == g.n - 1
        real = [e for e in sp.links if e is not None]
        assert sorted(real) == [e for e, k in enumerate(p.layer_of) if k == c]
        for i, e in enumerate(sp.links):
            if e is not None:
                assert set(g.edges[e]) == {sp.order[i], sp.order[i + 1]}
        pieces = nx.number_connected_components(layer_nx(g, p.layer_of, c))
        assert len(sp.temporaries) == pieces - 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 80), st.integers(0, 10**9))
def test_cycle_structure_partitions_vertices(n, seed):
    g = random_connected(n, 4, random.Random(seed))
    p = euler_partition(g).partition
    for c, cycles in enumerate(paths_to_cycle_structure(p, g)):
        assert sorted(v for cyc in cycles for v in cyc.vertices) == list(range(g.n))
        real = sorted(e for cyc in cycles for e in cyc.links if e is not None)
        assert real == [e for e, k in enumerate(p.layer_of) if k == c]
        for cyc in cycles:
            L = len(cyc)
            assert len(cyc.links) == (0 if L == 1 else L)
            for i, e in enumerate(cyc.links):
                if e is not None:
                    assert set(g.edges[e]) == {cyc.vertices[i], cyc.vertices[(i + 1) % L]}


def test_oriented_back_edge_is_last():
    (cyc,) = cycles_from_lists(0, [(3, 1, 4, 0)])
    verts, links = cyc.oriented(4)
    assert verts == [4, 0, 3, 1]
    verts, links = cyc.oriented(4, reverse=True)
    assert verts == [4, 1, 3, 0]


def test_two_cycle_keeps_real_edge_as_path_edge():
    g = build_graph(2, [(0, 1)])
    (cyc,) = cycles_from_lists(1, [(0, 1)], g)
    assert cyc.links == (0, None)
    assert cyc.oriented(1, reverse=True)[1] == [0, None]


def test_fig2_forests_resolve_against_graph():
    g = named.fig2_graph()
    a = cycles_from_lists(0, named.FIG2_A, g)
    b = cycles_from_lists(1, named.FIG2_B, g)
    assert sorted(e for c in a for e in c.links) == list(range(12))
    assert sorted(e for c in b for e in c.links) == list(range(12, 24))
