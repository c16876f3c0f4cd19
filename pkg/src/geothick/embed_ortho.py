"""Orthogonal two-layer drawings with one bend per edge on the n x n grid.

Vertices keep their unit rank positions.  Path edges of x-block cycles go
vertical-then-horizontal, those of y-block cycles horizontal-then-vertical,
and back edges take the other route, so every back edge runs along the
outside of its own monotone path.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .decompose import Cycle, euler_partition, paths_to_cycle_structure
from .drawing import HV, VH, DrawnEdge, Drawing, combine_diagonal
from .embed_cycles import CoordAssignment, DegenerateCycles, StartChoice, assign_degenerate, order_and_assign
from .graph import Graph


def rank_assignment(cycles_a: Sequence[Cycle], cycles_b: Sequence[Cycle], n: int) -> CoordAssignment:
    try:
        return order_and_assign(cycles_a, cycles_b, n)
    except DegenerateCycles:
        return assign_degenerate(cycles_a, cycles_b, n, StartChoice(0, cycles_a[0].vertices[0]))


def ortho_cycle_drawing(ca: CoordAssignment) -> Drawing:
    pos = list(zip(ca.xrank, ca.yrank))
    edges = []
    for c in ca.order:
        path_kind, back_kind = (VH, HV) if c.layer == 0 else (HV, VH)
        L = len(c.vertices)
        for k, e in enumerate(c.links):
            if e is None or (L == 2 and k == 1):
                continue
            if k < L - 1:
                edges.append(DrawnEdge(c.vertices[k], c.vertices[k + 1], c.source.layer, path_kind, edge_id=e))
            else:
                edges.append(DrawnEdge(c.start, c.end, c.source.layer, back_kind, edge_id=e))
    return Drawing(pos, edges, "orthogonal", "deg4-ortho")


def embed_cycle_pair_ortho(cycles_a: Sequence[Cycle], cycles_b: Sequence[Cycle], n: int) -> Drawing:
    if n == 0:
        return Drawing([], [], "orthogonal", "deg4-ortho")
    if n == 1:
        return Drawing([(0, 0)], [], "orthogonal", "deg4-ortho")
    return ortho_cycle_drawing(rank_assignment(cycles_a, cycles_b, n))


def _connected(g: Graph) -> Drawing:
    split = euler_partition(g)
    in_a, in_b = paths_to_cycle_structure(split.partition, g)
    return embed_cycle_pair_ortho(in_a, in_b, g.n)


def embed_degree4_ortho(g: Graph, labels: Optional[list[str]] = None) -> Drawing:
    """Orthogonal two-layer drawing, one bend per edge, max coordinate n - 1."""
    g.require_max_degree(4, labels)
    parts = []
    for comp in g.components():
        sub, vmap, emap = g.subgraph(comp)
        parts.append((_connected(sub), vmap, emap))
    d = combine_diagonal(parts, g.n, "orthogonal", "deg4-ortho")
    d.labels = labels
    d.stats["max_coordinate"] = d.extent
    return d
