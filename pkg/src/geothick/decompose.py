"""Edge decompositions into two layers.

Degree three graphs are split into two linear forests by a DFS colouring
with a single repair step at the root.  Degree four graphs are split by
alternating along an Euler tour of an even supergraph, which leaves two
subgraphs of maximum degree two.  Both kinds of layer are then closed up
with temporary edges: forests into spanning paths, path/cycle unions into
cycle forests.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import EulerTour, Graph, GraphError, MultiGraph, dfs, euler_tour


class DecompositionError(RuntimeError):
    """Internal invariant violated during decomposition."""


@dataclass(frozen=True)
class LayerPartition:
    layer_of: tuple[int, ...]

    @property
    def by_layer(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        zero = tuple(e for e, c in enumerate(self.layer_of) if c == 0)
        one = tuple(e for e, c in enumerate(self.layer_of) if c == 1)
        return zero, one

    def counts(self) -> tuple[int, int]:
        ones = sum(self.layer_of)
        return len(self.layer_of) - ones, ones


# ---------------------------------------------------------------------------
# Layer inspection helpers
# ---------------------------------------------------------------------------


def layer_adjacency(g: Graph, layer_of: Sequence[int], layer: int) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for e, c in enumerate(layer_of):
        if c == layer:
            a, b = g.edges[e]
            adj[a].append(e)
            adj[b].append(e)
    return adj


def layer_slots(g: Graph, layer_of: Sequence[int], layer: int) -> Optional[array]:
    """Edges of a max-degree-two layer as ``slots[2v], slots[2v + 1]`` (-1 when empty).

    Returns None if some vertex has three or more edges in the layer.
    """
    slots = array("i", [-1]) * (2 * g.n)
    ends = g.flat.ends
    for e, c in enumerate(layer_of):
        if c == layer:
            for k in (2 * ends[2 * e], 2 * ends[2 * e + 1]):
                if slots[k] < 0:
                    slots[k] = e
                elif slots[k + 1] < 0:
                    slots[k + 1] = e
                else:
                    return None
    return slots


def _walk(xor: array, slots: array, seen, start: int, first: int) -> tuple[list[int], list[int], bool]:
    """Follow a layer from ``start`` along ``first``; returns (vertices, links, closed)."""
    verts, links = [start], []
    seen[start] = 1
    e, v = first, start
    while e >= 0:
        w = xor[e] ^ v
        links.append(e)
        if w == start:
            return verts, links, True
        verts.append(w)
        seen[w] = 1
        k = 2 * w
        e = slots[k + 1] if slots[k] == e else slots[k]
        v = w
    return verts, links, False


def _split(g: Graph, slots: array, keep_paths: bool = True):
    """Paths (from degree <= 1 vertices, in vertex order) and then cycles of a layer."""
    xor = g.flat.xor
    seen = bytearray(g.n)
    paths, cycles = [], []
    for v in range(g.n):
        if not seen[v] and slots[2 * v + 1] < 0:
            if keep_paths:
                verts, links, _ = _walk(xor, slots, seen, v, slots[2 * v])
                paths.append((verts, links))
                continue
            seen[v] = 1
            e, u = slots[2 * v], v
            while e >= 0:
                u = xor[e] ^ u
                seen[u] = 1
                k = 2 * u
                e = slots[k + 1] if slots[k] == e else slots[k]
    for v in range(g.n):
        if not seen[v]:
            e0, e1 = slots[2 * v], slots[2 * v + 1]
            first = e0 if xor[e0] ^ v < xor[e1] ^ v else e1
            verts, links, closed = _walk(xor, slots, seen, v, first)
            assert closed
            cycles.append((verts, links))
    return paths, cycles


def layer_cycles(g: Graph, layer_of: Sequence[int], layer: int) -> list[list[int]]:
    """Cycles (as sorted edge-id lists) of a layer whose maximum degree is at most two."""
    slots = layer_slots(g, layer_of, layer)
    if slots is None:
        raise DecompositionError(f"layer {layer} has a vertex of degree above two")
    return [sorted(links) for _, links in _split(g, slots, keep_paths=False)[1]]


def is_linear_forest(g: Graph, layer_of: Sequence[int], layer: int) -> bool:
    slots = layer_slots(g, layer_of, layer)
    return slots is not None and not _split(g, slots, keep_paths=False)[1]


# ---------------------------------------------------------------------------
# Degree three: two linear forests
# ---------------------------------------------------------------------------


def _path_end(g: Graph, adj: list[list[int]], start: int, first_edge: int) -> int:
    prev_e, v = first_edge, g.other(first_edge, start)
    while True:
        nxt = [e for e in adj[v] if e != prev_e]
        if not nxt:
            return v
        prev_e = nxt[0]
        v = g.other(prev_e, v)
        if v == start:
            return v


def linear_forests_deg3(g: Graph) -> LayerPartition:
    """Partition the edges of a connected graph with d(v) <= 3 into two linear forests."""
    g.require_max_degree(3)
    if g.n <= 1 or g.m == 0:
        return LayerPartition(tuple(0 for _ in g.edges))
    # A leaf of any spanning tree is not a cut vertex, so rooted there the DFS
    # tree has a single root child and the root never carries three layer-0 edges.
    root = dfs(g, 0).order[-1]
    tree = dfs(g, root)
    depth, rank = tree.depth, tree.discovery()
    color = array("b", [-1]) * g.m
    count = array("b", [0]) * (2 * g.n)  # count[2v + c]: edges of colour c at v
    fl = g.flat.ends

    def assign(e: int, c: int) -> None:
        color[e] = c
        count[2 * fl[2 * e] + c] += 1
        count[2 * fl[2 * e + 1] + c] += 1

    for v in tree.order:
        p = tree.parent[v]
        if p >= 0:
            assign(tree.parent_edge[v], depth[p] % 2)

    def ends(e: int) -> tuple[int, int]:
        a, b = fl[2 * e], fl[2 * e + 1]
        return (a, b) if rank[a] < rank[b] else (b, a)

    # Non-tree edges already arrive grouped by bottom endpoint in discovery
    # order; within a group the edge reaching the root goes first.
    nt = tree.non_tree_edges
    pending: list[int] = []
    i = 0
    while i < len(nt):
        bottom = ends(nt[i])[1]
        j = i + 1
        while j < len(nt) and ends(nt[j])[1] == bottom:
            j += 1
        group = nt[i:j]
        pending += [e for e in group if ends(e)[0] == root]
        pending += [e for e in group if ends(e)[0] != root]
        i = j
    for e in pending:
        a, b = ends(e)
        preferred = (depth[a] + 1) % 2
        for c in (preferred, 1 - preferred):
            if count[2 * a + c] < 2 and count[2 * b + c] < 2:
                assign(e, c)
                break
        else:
            raise DecompositionError(f"non-tree edge {g.edges[e]} cannot be placed in either layer")

    cycles = [(c, cyc) for c in (0, 1) for cyc in layer_cycles(g, color, c)]
    if len(cycles) > 1:
        raise DecompositionError(f"{len(cycles)} monochromatic cycles remain before root repair")
    if cycles:
        c, cyc = cycles[0]
        at_root = [e for e in cyc if root in g.edges[e]]
        if len(at_root) != 2:
            raise DecompositionError("monochromatic cycle avoids the DFS root")
        for e in at_root:
            other = 1 - c
            a, b = g.edges[e]
            if count[2 * a + other] >= 2 or count[2 * b + other] >= 2:
                continue
            # Flipping e closes a cycle in the other layer iff a and b are
            # already the two ends of one path there.
            adj = layer_adjacency(g, color, other)
            if adj[a] and _path_end(g, adj, a, adj[a][0]) == b:
                continue
            count[2 * a + c] -= 1
            count[2 * b + c] -= 1
            assign(e, other)
            break
        else:
            raise DecompositionError("neither root-incident cycle edge can be reassigned")
        # Dropping e broke the only cycle; only the receiving layer needs a recheck.
        if not is_linear_forest(g, color, other):
            raise DecompositionError(f"layer {other} is not a linear forest after repair")
    return LayerPartition(tuple(color))


# ---------------------------------------------------------------------------
# Degree four: Euler tour alternation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Eulerized:
    graph: MultiGraph
    n_real_vertices: int
    n_real_edges: int  # edges 0..n_real_edges-1 are the input edges, same ids

    @property
    def dummy_edges(self) -> range:
        return range(self.n_real_edges, len(self.graph.edges))

    @property
    def dummy_vertices(self) -> range:
        return range(self.n_real_vertices, self.graph.n)


def eulerize(g: Graph) -> Eulerized:
    """Even-degree, even-size connected supergraph of ``g``.

    Odd vertices are paired in id order by dummy edges.  If the edge total is
    then odd, one dummy edge is subdivided by a dummy vertex; with no dummy
    edge available a dummy triangle is hung on a vertex of degree at most two.
    """
    g.require_max_degree(4)
    edges = list(g.edges)
    n = g.n
    odd = [v for v in range(g.n) if g.degree(v) % 2]
    for u, v in zip(odd[::2], odd[1::2]):
        edges.append((u, v))
    if len(edges) % 2:
        if len(edges) > g.m:
            u, v = edges.pop()
            edges.extend([(u, n), (n, v)])
            n += 1
        else:
            hub = min(range(g.n), key=lambda v: (g.degree(v), v))
            if g.degree(hub) > 2:
                raise DecompositionError("odd edge count on a 4-regular graph")
            edges.extend([(hub, n), (n, n + 1), (n + 1, hub)])
            n += 2
    return Eulerized(MultiGraph(n, edges), g.n, g.m)


@dataclass(frozen=True)
class AlternatingSplit:
    partition: LayerPartition  # real edges only
    full_layer_of: tuple[int, ...]  # every edge of the eulerized graph


def alternating_partition(tour: EulerTour, eg: Eulerized) -> AlternatingSplit:
    if len(tour.sequence) % 2:
        raise DecompositionError(f"tour length {len(tour.sequence)} is odd")
    full = [0] * len(eg.graph.edges)
    for pos, e in enumerate(tour.sequence):
        full[e] = pos % 2
    return AlternatingSplit(LayerPartition(tuple(full[: eg.n_real_edges])), tuple(full))


def euler_partition(g: Graph) -> AlternatingSplit:
    """Eulerize, tour, and alternate; one entry point for the degree four split."""
    eg = eulerize(g)
    if not eg.graph.edges:
        return AlternatingSplit(LayerPartition(()), ())
    tour = euler_tour(eg.graph, start=0)
    return alternating_partition(tour, eg)


# ---------------------------------------------------------------------------
# Closing layers up with temporary edges
# ---------------------------------------------------------------------------


def _pieces(g: Graph, layer_of: Sequence[int], layer: int):
    """Split one max-degree-two layer into paths and cycles.

    Paths start at their smaller endpoint, cycles at their smallest vertex
    heading towards the smaller neighbour.  Each piece is returned as a
    (vertices, links) pair where links[i] is the edge id joining
    vertices[i] and vertices[i + 1] (cyclically for cycles).
    """
    slots = layer_slots(g, layer_of, layer)
    if slots is None:
        adj = layer_adjacency(g, layer_of, layer)
        v = next(v for v, inc in enumerate(adj) if len(inc) > 2)
        raise DecompositionError(f"vertex {v} has degree {len(adj[v])} in layer {layer}")
    paths, cycles = _split(g, slots)
    for verts, links in paths:
        if len(verts) > 1 and verts[-1] < verts[0]:
            verts.reverse()
            links.reverse()
    paths.sort(key=lambda p: min(p[0]))
    return paths, cycles


@dataclass(frozen=True)
class SpanningPath:
    order: tuple[int, ...]
    links: tuple[Optional[int], ...]  # None marks a temporary edge

    @property
    def temporaries(self) -> list[tuple[int, int]]:
        return [(self.order[i], self.order[i + 1]) for i, e in enumerate(self.links) if e is None]


def _far_end(xor: array, slots: array, v: int, e: int) -> int:
    """End reached from v along e, or -1 if the walk returns to v."""
    start = v
    while e >= 0:
        v = xor[e] ^ v
        if v == start:
            return -1
        k = 2 * v
        e = slots[k + 1] if slots[k] == e else slots[k]
    return v


def _spanning_path(g: Graph, slots: array, layer: int) -> SpanningPath:
    """Chain the paths of a linear-forest layer, smallest vertex first, each
    read from its smaller endpoint; same result as ordering ``_pieces``."""
    xor = g.flat.xor
    seen = bytearray(g.n)
    order = array("i")
    links = array("i")
    for v in range(g.n):
        if seen[v]:
            continue
        ends = [v if slots[2 * v + i] < 0 else _far_end(xor, slots, v, slots[2 * v + i]) for i in (0, 1)]
        if -1 in ends:
            raise DecompositionError(f"layer {layer} contains a cycle")
        u = min(ends)
        if order:
            links.append(-1)
        order.append(u)
        seen[u] = 1
        e = slots[2 * u]
        while e >= 0:
            w = xor[e] ^ u
            links.append(e)
            order.append(w)
            seen[w] = 1
            k = 2 * w
            e = slots[k + 1] if slots[k] == e else slots[k]
            u = w
    return SpanningPath(tuple(order), tuple(None if e < 0 else e for e in links))


def forests_to_paths(p: LayerPartition, g: Graph) -> tuple[SpanningPath, SpanningPath]:
    out = []
    for layer in (0, 1):
        slots = layer_slots(g, p.layer_of, layer)
        if slots is None:
            _pieces(g, p.layer_of, layer)  # raises with the offending vertex
        out.append(_spanning_path(g, slots, layer))
    return out[0], out[1]


@dataclass(frozen=True)
class Cycle:
    """One cycle of a layer; links[i] joins vertices[i] to vertices[i+1 mod L].

    A link of None is a temporary edge.  Length-1 cycles have no links and
    length-2 cycles carry two parallel links, at most one of them real.
    """

    layer: int
    vertices: tuple[int, ...]
    links: tuple[Optional[int], ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def oriented(self, start: int, reverse: bool = False) -> tuple[list[int], list[Optional[int]]]:
        """Vertices and links starting at ``start``; the last link is the back edge."""
        L = len(self.vertices)
        i = self.vertices.index(start)
        if L == 1:
            return [start], []
        if not reverse:
            verts = [self.vertices[(i + k) % L] for k in range(L)]
            links = [self.links[(i + k) % L] for k in range(L)]
        else:
            verts = [self.vertices[(i - k) % L] for k in range(L)]
            links = [self.links[(i - k - 1) % L] for k in range(L)]
        if L == 2:
            # A real edge, when present, is drawn as the path edge.
            if links[0] is None:
                links = [links[1], None]
        return verts, links


def paths_to_cycle_structure(p: LayerPartition, g: Graph) -> tuple[list[Cycle], list[Cycle]]:
    """Cycle forests for both layers: real cycles kept, all paths chained into one."""
    out = []
    for layer in (0, 1):
        paths, cycles = _pieces(g, p.layer_of, layer)
        result = [Cycle(layer, tuple(v), tuple(l)) for v, l in cycles]
        if paths:
            verts: list[int] = []
            links: list[Optional[int]] = []
            for pv, pl in paths:
                if verts:
                    links.append(None)
                verts.extend(pv)
                links.extend(pl)
            if len(verts) > 1:
                links.append(None)
            result.append(Cycle(layer, tuple(verts), tuple(links)))
        result.sort(key=lambda c: min(c.vertices))
        out.append(result)
    return out[0], out[1]


def cycles_from_lists(layer: int, cycles: Sequence[Sequence[int]], g: Optional[Graph] = None) -> list[Cycle]:
    """Cycles given as vertex lists; links resolve against ``g`` when supplied."""
    index = g.edge_index() if g is not None else None
    out = []
    for verts in cycles:
        verts = tuple(verts)
        L = len(verts)
        links: list[Optional[int]] = []
        if L > 1:
            for i in range(L):
                key = frozenset((verts[i], verts[(i + 1) % L]))
                links.append(index.get(key) if index is not None else None)
            if L == 2 and links[0] is not None:
                links[1] = None
        out.append(Cycle(layer, verts, tuple(links)))
    return out


__all__ = [
    "AlternatingSplit",
    "Cycle",
    "DecompositionError",
    "Eulerized",
    "GraphError",
    "LayerPartition",
    "SpanningPath",
    "alternating_partition",
    "cycles_from_lists",
    "euler_partition",
    "eulerize",
    "forests_to_paths",
    "is_linear_forest",
    "layer_cycles",
    "linear_forests_deg3",
    "paths_to_cycle_structure",
]
