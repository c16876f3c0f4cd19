"""Mode selection and the embed-then-verify chain shared by the CLI and the report."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import named
from .decompose import LayerPartition, cycles_from_lists, euler_partition, linear_forests_deg3
from .drawing import Drawing
from .embed_cycles import cycle_drawing, embed_cycle_pair, embed_degree4
from .embed_ortho import embed_cycle_pair_ortho, embed_degree4_ortho, rank_assignment
from .embed_paths import embed_degree3
from .graph import Graph
from .verify import VerificationReport, verify_drawing

MODES = ("auto", "deg3", "deg4-straight", "deg4-ortho")
DEGREE_LIMIT = {"deg3": 3, "deg4-straight": 4, "deg4-ortho": 4}


def resolve_mode(mode: str, g: Graph) -> str:
    if mode == "auto":
        return "deg3" if g.max_degree() <= 3 else "deg4-straight"
    if mode not in DEGREE_LIMIT:
        raise ValueError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
    return mode


def embed(g: Graph, mode: str, labels: Optional[list[str]] = None) -> Drawing:
    mode = resolve_mode(mode, g)
    if mode == "deg3":
        return embed_degree3(g, labels)
    if mode == "deg4-straight":
        return embed_degree4(g, labels)
    return embed_degree4_ortho(g, labels)


def verify_for_mode(d: Drawing, g: Optional[Graph] = None, p: Optional[LayerPartition] = None) -> VerificationReport:
    """The checks each embedder promises: linear forests and n x n for degree three, n x n for orthogonal."""
    n = d.n
    if d.algorithm == "deg3-paths":
        return verify_drawing(d, g, p, linear_forests=True, extent=n - 1)
    if d.mode == "orthogonal":
        return verify_drawing(d, g, p, extent=n - 1)
    return verify_drawing(d, g, p, extent=d.extent)


def decompose(g: Graph, mode: str) -> LayerPartition:
    mode = resolve_mode(mode, g)
    g.require_max_degree(DEGREE_LIMIT[mode])
    layer_of = [0] * g.m
    for comp in g.components():
        sub, _, emap = g.subgraph(comp)
        part = linear_forests_deg3(sub) if mode == "deg3" else euler_partition(sub).partition
        for local, c in enumerate(part.layer_of):
            layer_of[emap[local]] = c
    return LayerPartition(tuple(layer_of))


@dataclass
class Fig2Result:
    graph: Graph
    partition: LayerPartition
    order: list[tuple[int, tuple[int, ...]]]  # (layer, vertices from the start vertex) per cycle
    drawing: Drawing


def fig2(mode: str = "deg4-straight") -> Fig2Result:
    """Embed the worked-example cycle forests as given, A on layer 0."""
    g = named.fig2_graph()
    in_a = cycles_from_lists(0, named.FIG2_A, g)
    in_b = cycles_from_lists(1, named.FIG2_B, g)
    partition = LayerPartition(tuple([0] * 12 + [1] * 12))
    labels = [f"p{i}" for i in range(12)]
    if mode == "deg4-ortho":
        d = embed_cycle_pair_ortho(in_a, in_b, g.n)
        ca = rank_assignment(in_a, in_b, g.n)
    else:
        emb = embed_cycle_pair(in_a, in_b, g.n)
        d = cycle_drawing(emb, g.n)
        ca = emb.assignment
    d.labels = labels
    d.stats["max_coordinate"] = d.extent
    order = [(c.layer, tuple(c.vertices)) for c in ca.order]
    return Fig2Result(g, partition, order, d)
