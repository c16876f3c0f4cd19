"""Two-layer drawings: one shared vertex placement and per-layer edge geometry."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .geometry import Point

SEGMENT = "segment"
VH = "ortho-VH"  # vertical from source, then horizontal into target
HV = "ortho-HV"


@dataclass(frozen=True)
class DrawnEdge:
    source: int
    target: int
    layer: int
    geometry: str = SEGMENT
    temporary: bool = False
    edge_id: Optional[int] = None

    def bend(self, pos: list[Point]) -> Optional[Point]:
        s, t = pos[self.source], pos[self.target]
        if self.geometry == VH:
            return (s[0], t[1])
        if self.geometry == HV:
            return (t[0], s[1])
        return None

    def segments(self, pos: list[Point]) -> list[tuple[Point, Point]]:
        s, t = pos[self.source], pos[self.target]
        b = self.bend(pos)
        if b is None:
            return [(s, t)]
        return [(s, b), (b, t)]


@dataclass
class Drawing:
    positions: list[Point]
    edges: list[DrawnEdge]
    mode: str  # "straight" or "orthogonal"
    algorithm: str
    labels: Optional[list[str]] = None
    stats: dict[str, Any] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.positions)

    def layer(self, c: int) -> list[DrawnEdge]:
        return [e for e in self.edges if e.layer == c]

    @property
    def extent(self) -> int:
        """Largest coordinate in use (the drawing fits [0, extent]^2)."""
        return max((max(p) for p in self.positions), default=0)

    def min_coordinate(self) -> int:
        return min((min(p) for p in self.positions), default=0)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def normalized(self) -> "Drawing":
        """Translate so the minimum x and y are zero."""
        if not self.positions:
            return self
        mx = min(p[0] for p in self.positions)
        my = min(p[1] for p in self.positions)
        if mx == 0 and my == 0:
            return self
        pos = [(x - mx, y - my) for x, y in self.positions]
        return Drawing(pos, list(self.edges), self.mode, self.algorithm, self.labels, dict(self.stats))


def combine_diagonal(
    parts: list[tuple[Drawing, list[int], list[int]]], n: int, mode: str, algorithm: str
) -> Drawing:
    """Place per-component drawings in disjoint boxes along the diagonal.

    Each part is (drawing, vertex map, edge map), maps going local -> global.
    """
    pos: list[Point] = [(0, 0)] * n
    edges: list[DrawnEdge] = []
    offset = 0
    stats: dict[str, Any] = {"components": len(parts)}
    for d, vmap, emap in parts:
        d = d.normalized()
        size = d.extent + 1 if d.positions else 0
        for local, (x, y) in enumerate(d.positions):
            pos[vmap[local]] = (x + offset, y + offset)
        for e in d.edges:
            edges.append(
                DrawnEdge(
                    vmap[e.source],
                    vmap[e.target],
                    e.layer,
                    e.geometry,
                    e.temporary,
                    None if e.edge_id is None else emap[e.edge_id],
                )
            )
        for k, v in d.stats.items():
            if isinstance(v, (int, float)) and not isinstance(v, bool):
                stats[k] = max(stats.get(k, v), v) if k.startswith("max") else stats.get(k, 0) + v
        offset += size
    return Drawing(pos, edges, mode, algorithm, None, stats)
