"""Degree-three drawings: two spanning paths placed by their positions."""

from __future__ import annotations

from array import array
from typing import Optional, Sequence

from .decompose import SpanningPath, forests_to_paths, linear_forests_deg3
from .drawing import DrawnEdge, Drawing, combine_diagonal
from .geometry import Point
from .graph import Graph, GraphError


def embed_two_paths(first: Sequence[int], second: Sequence[int]) -> list[Point]:
    """Put v at (position of v in ``first``, position of v in ``second``).

    Both sequences must be permutations of the same vertex set 0..n-1.
    """
    n = len(first)
    if len(second) != n:
        raise GraphError(f"path lengths differ: {n} and {len(second)}")
    xs = array("i", [-1]) * n
    ys = array("i", [-1]) * n
    for i, v in enumerate(first):
        if not 0 <= v < n or xs[v] >= 0:
            raise GraphError(f"first order is not a permutation of 0..{n - 1} (at {v})")
        xs[v] = i
    for i, v in enumerate(second):
        if not 0 <= v < n or ys[v] >= 0:
            raise GraphError(f"second order is not a permutation of 0..{n - 1} (at {v})")
        ys[v] = i
    return list(zip(xs, ys))


def path_drawing(paths: tuple[SpanningPath, SpanningPath], keep_temporary: bool = False) -> Drawing:
    pos = embed_two_paths(paths[0].order, paths[1].order)
    edges = []
    for layer, p in enumerate(paths):
        for i, e in enumerate(p.links):
            if e is None and not keep_temporary:
                continue
            edges.append(DrawnEdge(p.order[i], p.order[i + 1], layer, temporary=e is None, edge_id=e))
    return Drawing(pos, edges, "straight", "deg3-paths")


def _embed_connected(g: Graph) -> Drawing:
    partition = linear_forests_deg3(g)
    return path_drawing(forests_to_paths(partition, g))


def embed_degree3(g: Graph, labels: Optional[list[str]] = None) -> Drawing:
    """Two-layer straight-line drawing of a max-degree-3 graph on the n x n grid."""
    g.require_max_degree(3, labels)
    if g.is_connected():
        d = _embed_connected(g)
    else:
        # Forests already yield spanning paths through the whole vertex set;
        # splitting by component just keeps the DFS precondition simple.
        parts = []
        for comp in g.components():
            sub, vmap, emap = g.subgraph(comp)
            parts.append((_embed_connected(sub), vmap, emap))
        d = combine_diagonal(parts, g.n, "straight", "deg3-paths")
    d.labels = labels
    d.stats["max_coordinate"] = d.extent
    return d
