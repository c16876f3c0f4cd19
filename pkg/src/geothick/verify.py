"""Exact checks on finished drawings.

Everything here is integer arithmetic; the verifier trusts nothing the
embedders believe about their own output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Optional

from .decompose import LayerPartition
from .drawing import HV, SEGMENT, VH, Drawing
from .geometry import Relation, segments_cross
from .graph import Graph, GraphError

__all__ = [
    "VerificationReport",
    "Violation",
    "brute_force_thickness2_exists",
    "segments_cross",
    "verify_drawing",
]

KINDS = (
    "layer-degree",
    "layer-cycle",
    "crossing",
    "overlap",
    "grid-bound",
    "coordinate-collision",
    "partition",
    "geometry",
)


@dataclass(frozen=True)
class Violation:
    kind: str
    witnesses: tuple

    def __str__(self) -> str:
        return f"{self.kind}: {self.witnesses}"


@dataclass
class VerificationReport:
    violations: list[Violation] = field(default_factory=list)
    stats: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, *witnesses) -> None:
        assert kind in KINDS, kind
        self.violations.append(Violation(kind, witnesses))

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


def _bbox(seg):
    (ax, ay), (bx, by) = seg
    return min(ax, bx), max(ax, bx), min(ay, by), max(ay, by)


def _touching_pairs(segs):
    """Index pairs of segments whose bounding boxes meet (sweep over x)."""
    boxes = [_bbox(s) for s in segs]
    order = sorted(range(len(segs)), key=lambda i: boxes[i][0])
    active: list[int] = []
    for i in order:
        x0, _, y0, y1 = boxes[i]
        active = [j for j in active if boxes[j][1] >= x0]
        for j in active:
            if boxes[j][2] <= y1 and y0 <= boxes[j][3]:
                yield (j, i) if j < i else (i, j)
        active.append(i)


def _segments(d: Drawing, report: VerificationReport):
    """(edge index, segment) for every drawable piece; bad geometry goes to the report."""
    out = []
    for k, e in enumerate(d.edges):
        if not (0 <= e.source < d.n and 0 <= e.target < d.n) or e.source == e.target:
            report.add("geometry", "bad endpoints", k, (e.source, e.target))
            continue
        want = (VH, HV) if d.mode == "orthogonal" else (SEGMENT,)
        if e.geometry not in want:
            report.add("geometry", "wrong edge shape for mode", k, e.geometry)
            continue
        pieces = e.segments(d.positions)
        if any(a == b for a, b in pieces):
            report.add("geometry", "zero-length segment", k, (e.source, e.target))
            continue
        out.extend((k, s) for s in pieces)
    return out


def _check_partition(d: Drawing, g: Graph, p: Optional[LayerPartition], report: VerificationReport) -> None:
    index = g.edge_index()
    seen: dict[int, int] = {}
    for k, e in enumerate(d.edges):
        if e.temporary:
            report.add("partition", "temporary edge in final drawing", (e.source, e.target))
            continue
        if e.layer not in (0, 1):
            report.add("partition", "layer out of range", k, e.layer)
            continue
        eid = e.edge_id if e.edge_id is not None else index.get(frozenset((e.source, e.target)))
        if eid is None or not 0 <= eid < g.m or set(g.edges[eid]) != {e.source, e.target}:
            report.add("partition", "drawn edge not in graph", (e.source, e.target))
            continue
        if eid in seen:
            report.add("partition", "edge drawn twice", g.edges[eid])
            continue
        seen[eid] = e.layer
        if p is not None and p.layer_of[eid] != e.layer:
            report.add("partition", "layer differs from partition", g.edges[eid], p.layer_of[eid], e.layer)
    for eid in range(g.m):
        if eid not in seen:
            report.add("partition", "edge missing from drawing", g.edges[eid])


def _check_layers(d: Drawing, linear_forests: bool, report: VerificationReport) -> None:
    for c in (0, 1):
        adj: dict[int, list[int]] = {}
        edges = [e for e in d.edges if e.layer == c and e.source != e.target]
        for e in edges:
            adj.setdefault(e.source, []).append(e.target)
            adj.setdefault(e.target, []).append(e.source)
        for v, nb in adj.items():
            if len(nb) > 2:
                report.add("layer-degree", c, v, len(nb))
        if linear_forests:
            # Union-find: an edge joining an existing component closes a cycle.
            parent: dict[int, int] = {}

            def find(x):
                while parent.setdefault(x, x) != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for e in edges:
                a, b = find(e.source), find(e.target)
                if a == b:
                    report.add("layer-cycle", c, (e.source, e.target))
                else:
                    parent[a] = b


def verify_drawing(
    d: Drawing,
    g: Optional[Graph] = None,
    p: Optional[LayerPartition] = None,
    *,
    linear_forests: bool = False,
    extent: Optional[int] = None,
    distinct: bool = True,
) -> VerificationReport:
    """Check a drawing; ``extent`` bounds every coordinate to [0, extent]."""
    report = VerificationReport()
    if g is not None:
        if g.n != d.n:
            report.add("partition", "vertex count differs", g.n, d.n)
            return report
        _check_partition(d, g, p, report)
    _check_layers(d, linear_forests, report)

    pos = d.positions
    top = max((max(q) for q in pos), default=0)
    low = min((min(q) for q in pos), default=0)
    report.stats["max_coordinate"] = top
    if extent is not None and (top > extent or low < 0):
        report.add("grid-bound", "coordinates outside [0, %d]" % extent, low, top)
    if distinct:
        for axis, name in ((0, "x"), (1, "y")):
            first: dict[int, int] = {}
            for v, q in enumerate(pos):
                if q[axis] in first:
                    report.add("coordinate-collision", name, first[q[axis]], v, q[axis])
                else:
                    first[q[axis]] = v

    pieces = _segments(d, report)
    checked = 0
    per_layer = {0: [], 1: []}
    for k, s in pieces:
        per_layer.setdefault(d.edges[k].layer, []).append((k, s))
    for c in (0, 1):
        items = per_layer[c]
        for i, j in _touching_pairs([s for _, s in items]):
            (ki, si), (kj, sj) = items[i], items[j]
            if ki == kj:
                continue
            checked += 1
            rel = segments_cross(si, sj)
            ei, ej = d.edges[ki], d.edges[kj]
            if rel is Relation.CROSSING:
                report.add("crossing", c, (ei.source, ei.target), (ej.source, ej.target))
            elif rel is Relation.OVERLAPPING:
                report.add("overlap", c, (ei.source, ei.target), (ej.source, ej.target))
            elif rel is Relation.SHARED_ENDPOINT:
                # Two pieces may only meet at a vertex both edges actually share.
                common = set(si) & set(sj)
                if not common <= {pos[v] for v in {ei.source, ei.target} & {ej.source, ej.target}}:
                    report.add("crossing", c, (ei.source, ei.target), (ej.source, ej.target))
        # A vertex resting inside a same-layer edge it does not belong to.
        for k, s in items:
            e = d.edges[k]
            (ax, ay), (bx, by) = s
            for v, q in enumerate(pos):
                if v in (e.source, e.target) or q in (pos[e.source], pos[e.target]):
                    continue
                if (bx - ax) * (q[1] - ay) == (by - ay) * (q[0] - ax) and (
                    min(ax, bx) <= q[0] <= max(ax, bx) and min(ay, by) <= q[1] <= max(ay, by)
                ):
                    report.add("crossing", c, (e.source, e.target), ("vertex", v))
    report.stats["pairs_checked"] = checked
    if d.mode == "orthogonal":
        overlaps = 0
        a = [s for _, s in per_layer[0]]
        b = [s for _, s in per_layer[1]]
        both = a + b
        for i, j in _touching_pairs(both):
            if (i < len(a)) != (j < len(a)) and segments_cross(both[i], both[j]) is Relation.OVERLAPPING:
                overlaps += 1
        report.stats["cross_layer_overlaps"] = overlaps
        report.stats["bends"] = sum(1 for e in d.edges if e.geometry in (VH, HV))
    return report


def brute_force_thickness2_exists(g: Graph, limit: int = 7) -> bool:
    """Exhaustive search for an edge 2-colouring with both colour classes planar."""
    import networkx as nx

    if g.n > limit:
        raise GraphError(f"brute force limited to n <= {limit}, got {g.n}")

    def planar(edges) -> bool:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(edges)
        return nx.check_planarity(h)[0]

    if planar(g.edges):
        return True
    rest = g.edges[1:]
    for bits in product((0, 1), repeat=len(rest)):
        # Edge 0 is pinned to colour 0; swapping colours gives the same split.
        zero = [g.edges[0]] + [e for e, b in zip(rest, bits) if b == 0]
        one = [e for e, b in zip(rest, bits) if b == 1]
        if planar(zero) and planar(one):
            return True
    return False
