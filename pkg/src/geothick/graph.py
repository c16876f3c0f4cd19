"""Undirected simple graphs on dense integer vertices, plus DFS and Euler tours."""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or violated traversal preconditions."""


class DegreeError(GraphError):
    """Raised when a vertex exceeds the allowed maximum degree."""

    def __init__(self, vertex: int, degree: int, limit: int, label: Optional[str] = None):
        self.vertex = vertex
        self.degree = degree
        self.limit = limit
        name = label if label is not None else str(vertex)
        super().__init__(f"vertex {name} has degree {degree} > {limit}")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Edge ids are positions in ``edges``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @property
    def m(self) -> int:
        return len(self.edges)

    def other(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if a == v else a

    def neighbors(self, v: int) -> list[int]:
        return [self.other(e, v) for e in self.adjacency[v]]

    @cached_property
    def flat(self) -> "FlatAdjacency":
        return FlatAdjacency.of(self)

    def edge_index(self) -> dict[frozenset, int]:
        return {frozenset(e): i for i, e in enumerate(self.edges)}

    def require_max_degree(self, limit: int, labels: Optional[Sequence[str]] = None) -> None:
        for v, inc in enumerate(self.adjacency):
            if len(inc) > limit:
                raise DegreeError(v, len(inc), limit, labels[v] if labels else None)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for e in self.adjacency[v]:
                    w = self.other(e, v)
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int], list[int]]:
        """Induced subgraph relabelled to 0..k-1.

        Returns the subgraph, the vertex map (new -> old) and the edge map
        (new edge id -> old edge id).
        """
        index = {v: i for i, v in enumerate(vertices)}
        pairs, emap = [], []
        for eid, (a, b) in enumerate(self.edges):
            if a in index and b in index:
                pairs.append((index[a], index[b]))
                emap.append(eid)
        return build_graph(len(vertices), pairs), list(vertices), emap


def build_graph(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph, assigning edge ids in input order."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adjacency: list[list[int]] = [[] for _ in range(n)]
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adjacency[u].append(len(edges))
        adjacency[v].append(len(edges))
        edges.append((u, v))
    return Graph(n, tuple(edges), tuple(tuple(a) for a in adjacency))


@dataclass(frozen=True)
class FlatAdjacency:
    """CSR view of a graph in machine-int arrays.

    Edges incident to v are ``inc[start[v]:start[v + 1]]``; the far end of
    edge e from v is ``xor[e] ^ v`` and its endpoints are ``ends[2e]``,
    ``ends[2e + 1]``.  Traversals over large graphs touch
    these compact buffers instead of per-vertex tuples, which keeps them
    cache friendly.
    """

    start: array
    inc: array
    xor: array
    ends: array

    @classmethod
    def of(cls, g: Graph) -> "FlatAdjacency":
        start = array("i", [0]) * (g.n + 1)
        for v, a in enumerate(g.adjacency):
            start[v + 1] = start[v] + len(a)
        inc = array("i", [e for a in g.adjacency for e in a])
        ends = array("i", [v for e in g.edges for v in e])
        xor = array("i", [a ^ b for a, b in g.edges])
        return cls(start, inc, xor, ends)


@dataclass(frozen=True)
class DfsTree:
    root: int
    parent: array  # parent vertex, -1 at the root
    parent_edge: array  # tree edge to the parent, -1 at the root
    depth: array
    order: array  # vertices in discovery order
    non_tree_edges: array

    def discovery(self) -> array:
        rank = array("i", [0]) * len(self.depth)
        for i, v in enumerate(self.order):
            rank[v] = i
        return rank


def dfs(g: Graph, root: int) -> DfsTree:
    """Iterative DFS scanning adjacency lists in input order.

    Non-tree edges are listed by discovery time of their bottom endpoint
    (the later-discovered one); edges sharing a bottom endpoint keep the
    order in which that endpoint's adjacency list mentions them.
    """
    if not 0 <= root < g.n:
        raise GraphError(f"root {root} outside 0..{g.n - 1}")
    fa = g.flat
    start, inc, xor = fa.start, fa.inc, fa.xor
    n = g.n
    parent = array("i", [-1]) * n
    parent_edge = array("i", [-1]) * n
    depth = array("i", [-1]) * n
    ptr = start[:n]
    order = array("i", [root])
    depth[root] = 0
    stack = array("i", [root])
    while stack:
        v = stack[-1]
        i = ptr[v]
        if i == start[v + 1]:
            stack.pop()
            continue
        ptr[v] = i + 1
        e = inc[i]
        w = xor[e] ^ v
        if depth[w] < 0:
            depth[w] = depth[v] + 1
            parent[w] = v
            parent_edge[w] = e
            order.append(w)
            stack.append(w)
    if len(order) != n:
        missing = next(v for v in range(n) if depth[v] < 0)
        raise GraphError(f"graph is disconnected: vertex {missing} unreachable from {root}")
    rank = array("i", [0]) * n
    for i, v in enumerate(order):
        rank[v] = i
    non_tree = array("i")
    for v in order:
        rv, pe = rank[v], parent_edge[v]
        for i in range(start[v], start[v + 1]):
            e = inc[i]
            if e != pe and rank[xor[e] ^ v] < rv:
                non_tree.append(e)
    return DfsTree(root, parent, parent_edge, depth, order, non_tree)


@dataclass
class MultiGraph:
    """Mutable multigraph working copy used for Eulerization and touring."""

    n: int
    edges: list[tuple[int, int]]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (a, b) in enumerate(self.edges):
            adj[a].append(eid)
            adj[b].append(eid)
        return adj


@dataclass(frozen=True)
class EulerTour:
    sequence: tuple[int, ...]
    vertices: tuple[int, ...]  # len(sequence) + 1 vertices along the walk
    is_closed: bool


def euler_tour(mg: MultiGraph, start: Optional[int] = None) -> EulerTour:
    """Hierholzer's algorithm on a connected multigraph with all degrees even."""
    adj = mg.adjacency()
    for v, inc in enumerate(adj):
        if len(inc) % 2:
            raise GraphError(f"vertex {v} has odd degree {len(inc)}")
    if not mg.edges:
        s = 0 if start is None else start
        return EulerTour((), (s,) if mg.n else (), True)
    if start is None:
        start = mg.edges[0][0]
    used = [False] * len(mg.edges)
    ptr = [0] * mg.n
    # Stack of (vertex, edge used to arrive); the tour is emitted in reverse.
    stack: list[tuple[int, int]] = [(start, -1)]
    out_v: list[int] = []
    out_e: list[int] = []
    while stack:
        v, via = stack[-1]
        inc = adj[v]
        while ptr[v] < len(inc) and used[inc[ptr[v]]]:
            ptr[v] += 1
        if ptr[v] == len(inc):
            stack.pop()
            out_v.append(v)
            if via >= 0:
                out_e.append(via)
            continue
        e = inc[ptr[v]]
        used[e] = True
        a, b = mg.edges[e]
        stack.append((b if a == v else a, e))
    if len(out_e) != len(mg.edges):
        missing = next(i for i, u in enumerate(used) if not u)
        raise GraphError(f"multigraph is disconnected: edge {missing} {mg.edges[missing]} not reachable")
    out_v.reverse()
    out_e.reverse()
    return EulerTour(tuple(out_e), tuple(out_v), True)
