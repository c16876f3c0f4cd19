import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geothick import named
from geothick.decompose import LayerPartition
from geothick.drawing import HV, SEGMENT, VH, DrawnEdge, Drawing
from geothick.graph import GraphError, build_graph
from geothick.verify import brute_force_thickness2_exists, verify_drawing
from oracles import rational_intersection


def drawing(pos, edges, mode="straight"):
    return Drawing(list(pos), [DrawnEdge(*e) if isinstance(e, tuple) else e for e in edges], mode, "test")


def test_crossed_square_has_one_crossing():
    d = drawing([(0, 0), (2, 2), (0, 2), (2, 0)], [(0, 1, 0), (2, 3, 0)])
    r = verify_drawing(d, distinct=False)
    assert [v.kind for v in r.violations] == ["crossing"]
    assert r.violations[0].witnesses == (0, (0, 1), (2, 3))


def test_crossing_on_other_layer_is_fine():
    d = drawing([(0, 0), (2, 2), (0, 2), (2, 0)], [(0, 1, 0), (2, 3, 1)])
    assert verify_drawing(d, distinct=False).ok


def test_vertex_inside_edge_is_a_crossing():
    d = drawing([(0, 0), (1, 1), (2, 2)], [(0, 2, 0)])
    assert verify_drawing(d).kinds() == {"crossing"}


def test_collinear_overlap():
    d = drawing([(0, 0), (2, 1), (4, 2), (6, 3)], [(0, 2, 0), (1, 3, 0)])
    r = verify_drawing(d)
    assert "overlap" in r.kinds()


def test_layer_degree_and_cycle():
    tri = drawing([(0, 0), (1, 2), (2, 1)], [(0, 1, 0), (1, 2, 0), (2, 0, 0)])
    assert verify_drawing(tri).ok
    assert verify_drawing(tri, linear_forests=True).kinds() == {"layer-cycle"}
    star = drawing([(0, 0), (1, 3), (2, 1), (3, 2)], [(0, 1, 1), (0, 2, 1), (0, 3, 1)])
    assert verify_drawing(star).kinds() == {"layer-degree"}


def test_grid_bound_and_collisions():
    d = drawing([(0, 0), (5, 1), (1, 1)], [(0, 1, 0)])
    r = verify_drawing(d, extent=4)
    assert r.kinds() == {"grid-bound", "coordinate-collision"}


def test_partition_checks():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    pos = [(0, 0), (1, 2), (2, 1)]
    good = [(0, 1, 0), (1, 2, 1), (0, 2, 0)]
    assert verify_drawing(drawing(pos, good), g, LayerPartition((0, 1, 0))).ok
    wrong = verify_drawing(drawing(pos, good), g, LayerPartition((0, 0, 0)))
    assert [v.witnesses[0] for v in wrong.violations] == ["layer differs from partition"]
    missing = verify_drawing(drawing(pos, good[:2]), g)
    assert missing.violations[0].witnesses[0] == "edge missing from drawing"
    twice = verify_drawing(drawing(pos, good + [(2, 1, 0)]), g)
    assert "edge drawn twice" in [v.witnesses[0] for v in twice.violations]
    temp = verify_drawing(drawing(pos, good + [DrawnEdge(0, 2, 1, temporary=True)]), g)
    assert "temporary edge in final drawing" in [v.witnesses[0] for v in temp.violations]
    stray = verify_drawing(drawing(pos + [(3, 3)], good + [(0, 3, 1)]), build_graph(4, g.edges))
    assert "drawn edge not in graph" in [v.witnesses[0] for v in stray.violations]


def test_geometry_checks():
    pos = [(0, 0), (2, 3)]
    assert verify_drawing(drawing(pos, [DrawnEdge(0, 1, 0, VH)])).kinds() == {"geometry"}
    assert verify_drawing(drawing(pos, [(0, 1, 0)], mode="orthogonal")).kinds() == {"geometry"}
    flat = [(0, 0), (0, 3)]
    r = verify_drawing(drawing(flat, [DrawnEdge(0, 1, 0, VH)], mode="orthogonal"), distinct=False)
    assert r.violations[0].witnesses[0] == "zero-length segment"


def test_orthogonal_bends_cross_within_layer():
    # 0 -> 1 goes up then right; 2 -> 3 goes right then up through it.
    pos = [(0, 0), (4, 4), (-1, 2), (2, 5)]
    edges = [DrawnEdge(0, 1, 0, VH), DrawnEdge(2, 3, 0, HV)]
    r = verify_drawing(drawing(pos, edges, mode="orthogonal"))
    assert r.kinds() == {"crossing"}
    edges[1] = DrawnEdge(2, 3, 1, HV)
    r = verify_drawing(drawing(pos, edges, mode="orthogonal"))
    assert r.ok and r.stats["bends"] == 2


def test_cross_layer_overlap_is_counted_not_rejected():
    pos = [(0, 0), (3, 3), (1, 5), (2, -2)]
    edges = [DrawnEdge(0, 1, 0, HV), DrawnEdge(2, 3, 1, VH)]
    r = verify_drawing(drawing(pos, edges, mode="orthogonal"))
    assert r.ok and r.stats["cross_layer_overlaps"] == 0
    # Collinear horizontal pieces on y = 3 overlapping between the two bends.
    pos = [(0, 3), (3, 0), (4, 3), (1, 6)]
    edges = [DrawnEdge(0, 1, 0, HV), DrawnEdge(2, 3, 1, HV)]
    r = verify_drawing(drawing(pos, edges, mode="orthogonal"), distinct=False)
    assert r.ok and r.stats["cross_layer_overlaps"] == 1


coord = st.integers(0, 6)
pt = st.tuples(coord, coord)


@settings(max_examples=150, deadline=None)
@given(st.lists(pt, min_size=2, max_size=9, unique=True), st.data())
def test_sweep_agrees_with_all_pairs(pos, data):
    n = len(pos)
    pairs = data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=10))
    pairs = sorted({tuple(sorted(p)) for p in pairs if p[0] != p[1]})
    edges = [(a, b, 0) for a, b in pairs]
    r = verify_drawing(drawing(pos, edges), distinct=False)
    found = {v.witnesses[1:] for v in r.violations if v.kind in ("crossing", "overlap")}
    expected = set()
    for (a, b, _), (c, d, _) in itertools.combinations(edges, 2):
        rel = rational_intersection((pos[a], pos[b]), (pos[c], pos[d]))
        if rel in ("crossing", "overlapping"):
            expected.add(((a, b), (c, d)))
        elif rel == "shared-endpoint-only" and not {a, b} & {c, d}:
            expected.add(((a, b), (c, d)))
    for a, b, _ in edges:
        for v, q in enumerate(pos):
            if v not in (a, b) and _on_segment(q, pos[a], pos[b]):
                expected.add(((a, b), ("vertex", v)))
    assert found == expected


def _on_segment(q, a, b):
    # q lies on ab iff abq is flat and q is inside ab's bounding box.
    flat = (b[0] - a[0]) * (q[1] - a[1]) == (b[1] - a[1]) * (q[0] - a[0])
    return flat and min(a[0], b[0]) <= q[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= q[1] <= max(a[1], b[1])


def test_brute_force_positive_cases():
    for k in (4, 5, 6, 7):
        assert brute_force_thickness2_exists(named.complete(k))
    assert brute_force_thickness2_exists(named.octahedron())


def test_brute_force_size_limit():
    with pytest.raises(GraphError):
        brute_force_thickness2_exists(named.petersen())
