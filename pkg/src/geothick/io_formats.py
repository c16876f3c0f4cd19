"""Reading graphs (edge list, graph6/sparse6, GraphML) and writing layouts (JSON, SVG)."""

from __future__ import annotations

import hashlib
import json
import math
import xml.etree.ElementTree as ET
from xml.sax.saxutils import escape, quoteattr
from dataclasses import dataclass, field
from typing import Optional

from .drawing import HV, SEGMENT, VH, DrawnEdge, Drawing
from .graph import DegreeError, Graph, GraphError, build_graph


class ParseError(GraphError):
    """Input text does not describe a graph in the expected format."""


@dataclass(frozen=True)
class ParsedGraph:
    graph: Graph
    labels: list[str]


def _check_degree(g: Graph, labels: list[str], max_degree: Optional[int]) -> None:
    if max_degree is not None:
        g.require_max_degree(max_degree, labels)


# ---------------------------------------------------------------------------
# Edge list
# ---------------------------------------------------------------------------


def parse_edge_list(text: str, max_degree: Optional[int] = 4) -> ParsedGraph:
    """``u v`` per line; a lone token declares an isolated vertex; ``#`` starts a comment."""
    index: dict[str, int] = {}
    labels: list[str] = []
    pairs = []

    def vid(tok: str) -> int:
        if tok not in index:
            index[tok] = len(labels)
            labels.append(tok)
        return index[tok]

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) == 1:
            vid(toks[0])
        elif len(toks) == 2:
            pairs.append((vid(toks[0]), vid(toks[1]), lineno))
        else:
            raise ParseError(f"line {lineno}: expected 'u v', got {len(toks)} tokens")
    try:
        edges = [(u, v) for u, v, _ in pairs]
        g = build_graph(len(labels), edges)
    except GraphError as exc:
        for u, v, lineno in pairs:
            if u == v:
                raise ParseError(f"line {lineno}: self-loop on {labels[u]}") from exc
        seen = set()
        for u, v, lineno in pairs:
            key = frozenset((u, v))
            if key in seen:
                raise ParseError(f"line {lineno}: duplicate edge {labels[u]} {labels[v]}") from exc
            seen.add(key)
        raise
    _check_degree(g, labels, max_degree)
    return ParsedGraph(g, labels)


def format_edge_list(g: Graph, labels: Optional[list[str]] = None) -> str:
    name = labels if labels else [str(v) for v in range(g.n)]
    lines = [f"{name[a]} {name[b]}" for a, b in g.edges]
    touched = {v for e in g.edges for v in e}
    lines += [name[v] for v in range(g.n) if v not in touched]
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# graph6 / sparse6
# ---------------------------------------------------------------------------


def _decode_n(data: bytes, pos: int) -> tuple[int, int]:
    def val(i: int) -> int:
        if i >= len(data):
            raise ParseError(f"byte {i}: truncated vertex count")
        b = data[i] - 63
        if not 0 <= b < 64:
            raise ParseError(f"byte {i}: {data[i]!r} outside the printable range 63..126")
        return b

    if pos >= len(data):
        raise ParseError("empty graph6 input")
    if data[pos] != 126:
        return val(pos), pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        n = 0
        for i in range(pos + 2, pos + 8):
            n = (n << 6) | val(i)
        return n, pos + 8
    n = 0
    for i in range(pos + 1, pos + 4):
        n = (n << 6) | val(i)
    return n, pos + 4


def _ascii(line: str) -> bytes:
    try:
        return line.strip().encode("ascii")
    except UnicodeEncodeError as exc:
        raise ParseError(f"byte {exc.start}: non-ASCII character in graph6/sparse6 input") from None


def _bits(data: bytes, start: int):
    for i in range(start, len(data)):
        b = data[i] - 63
        if not 0 <= b < 64:
            raise ParseError(f"byte {i}: {data[i]!r} outside the printable range 63..126")
        for k in range(5, -1, -1):
            yield (b >> k) & 1


def decode_graph6(line: str) -> Graph:
    data = _ascii(line)
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    n, pos = _decode_n(data, 0)
    need = n * (n - 1) // 2
    have = 6 * (len(data) - pos)
    if have < need or have - need >= 6:
        raise ParseError(f"byte {len(data)}: expected {(need + 5) // 6} data bytes after the header, got {len(data) - pos}")
    bits = _bits(data, pos)
    edges = []
    for j in range(1, n):
        for i in range(j):
            if next(bits):
                edges.append((i, j))
    return build_graph(n, edges)


def decode_sparse6(line: str) -> Graph:
    data = _ascii(line)
    if data.startswith(b">>sparse6<<"):
        data = data[11:]
    if not data.startswith(b":"):
        raise ParseError("byte 0: sparse6 must start with ':'")
    n, pos = _decode_n(data, 1)
    k = max(1, (n - 1).bit_length()) if n > 1 else 1
    stream = list(_bits(data, pos))
    edges = []
    v = 0
    i = 0
    while i + k + 1 <= len(stream):
        b = stream[i]
        x = 0
        for t in stream[i + 1 : i + 1 + k]:
            x = (x << 1) | t
        i += k + 1
        if b:
            v += 1
        if v >= n:
            break
        if x > v:
            v = x
        else:
            edges.append((x, v))
    return build_graph(n, edges)


def parse_graph6(text: str, max_degree: Optional[int] = 4, batch: bool = False):
    """First graph of graph6/sparse6 text, or every graph when ``batch`` is set."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty graph6 input")
    out = []
    for ln in lines if batch else lines[:1]:
        sparse = ln.startswith((":", ">>sparse6<<"))
        g = decode_sparse6(ln) if sparse else decode_graph6(ln)
        labels = [str(v) for v in range(g.n)]
        _check_degree(g, labels, max_degree)
        out.append(ParsedGraph(g, labels))
    return out if batch else out[0]


def encode_graph6(g: Graph) -> str:
    """Plain graph6 for n < 258048 (used for round-trip tests and batch output)."""
    n = g.n
    if n < 63:
        head = [n + 63]
    else:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    adj = {frozenset(e) for e in g.edges}
    bits = [1 if frozenset((i, j)) in adj else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [63 + int("".join(map(str, bits[i : i + 6])), 2) for i in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")


# ---------------------------------------------------------------------------
# GraphML
# ---------------------------------------------------------------------------


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def parse_graphml(text: str, max_degree: Optional[int] = 4) -> ParsedGraph:
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise ParseError(f"XML error: {exc}") from exc
    graphs = [el for el in root.iter() if _local(el.tag) == "graph"]
    if not graphs:
        raise ParseError("no <graph> element")
    if len(graphs) > 1:
        raise ParseError("nested or multiple <graph> elements are not supported")
    graph = graphs[0]
    for el in graph.iter():
        if _local(el.tag) in ("hyperedge", "port"):
            raise ParseError(f"<{_local(el.tag)}> is not supported")
    index: dict[str, int] = {}
    labels: list[str] = []
    for el in graph:
        if _local(el.tag) == "node":
            nid = el.get("id")
            if nid is None:
                raise ParseError("<node> without id")
            if nid in index:
                raise ParseError(f"node id {nid!r} declared twice")
            index[nid] = len(labels)
            labels.append(nid)
    pairs = []
    for el in graph:
        if _local(el.tag) == "edge":
            s, t = el.get("source"), el.get("target")
            for end in (s, t):
                if end not in index:
                    raise ParseError(f"edge {s!r} -> {t!r} references undeclared node {end!r}")
            pairs.append((index[s], index[t]))
    g = build_graph(len(labels), pairs)
    _check_degree(g, labels, max_degree)
    return ParsedGraph(g, labels)


def format_graphml(g: Graph, labels: Optional[list[str]] = None) -> str:
    name = labels if labels else [f"n{v}" for v in range(g.n)]
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <graph id="G" edgedefault="undirected">',
    ]
    out += [f"    <node id={quoteattr(name[v])}/>" for v in range(g.n)]
    out += [f"    <edge source={quoteattr(name[a])} target={quoteattr(name[b])}/>" for a, b in g.edges]
    out += ["  </graph>", "</graphml>"]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Format sniffing
# ---------------------------------------------------------------------------

EXTENSIONS = {
    ".txt": "edgelist",
    ".edges": "edgelist",
    ".el": "edgelist",
    ".edgelist": "edgelist",
    ".g6": "graph6",
    ".graph6": "graph6",
    ".s6": "graph6",
    ".sparse6": "graph6",
    ".graphml": "graphml",
    ".xml": "graphml",
}


def detect_format(text: str, path: Optional[str] = None) -> str:
    if path:
        for ext, fmt in EXTENSIONS.items():
            if path.lower().endswith(ext):
                return fmt
    head = text.lstrip()
    if head.startswith("<"):
        return "graphml"
    first = head.splitlines()[0].strip() if head else ""
    if first and " " not in first and "\t" not in first and all(63 <= ord(c) <= 126 or c in ":>" for c in first):
        # A single printable token: graph6 unless it is a lone edge-list label.
        if first.startswith((":", ">>")) or len(head.split()) == 1:
            return "graph6"
    return "edgelist"


def parse_any(text: str, fmt: str = "auto", path: Optional[str] = None, max_degree: Optional[int] = 4) -> ParsedGraph:
    if fmt == "auto":
        fmt = detect_format(text, path)
    if fmt == "edgelist":
        return parse_edge_list(text, max_degree)
    if fmt == "graph6":
        return parse_graph6(text, max_degree)
    if fmt == "graphml":
        return parse_graphml(text, max_degree)
    raise ParseError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# Layout documents
# ---------------------------------------------------------------------------


def partition_digest(labels: list[str], edges: list[tuple[str, str, int]]) -> str:
    """Order-independent hash of which labelled edge sits on which layer."""
    rows = sorted(f"{min(a, b)}\t{max(a, b)}\t{c}" for a, b, c in edges)
    return hashlib.sha256("\n".join(rows).encode("utf-8")).hexdigest()


def write_layout(d: Drawing) -> str:
    labels = [d.label(v) for v in range(d.n)]
    if len(set(labels)) != len(labels):
        raise GraphError("vertex labels must be unique to write a layout")
    vertices = [{"label": labels[v], "x": str(x), "y": str(y)} for v, (x, y) in enumerate(d.positions)]
    edges = [
        {
            "source": labels[e.source],
            "target": labels[e.target],
            "layer": e.layer,
            "geometry": e.geometry,
            "temporary": e.temporary,
        }
        for e in d.edges
    ]
    counts = [sum(1 for e in d.edges if e.layer == c) for c in (0, 1)]
    meta = {
        "algorithm": d.algorithm,
        "mode": d.mode,
        "extent": str(d.extent),
        "n": d.n,
        "layer_edges": counts,
        "partition_digest": partition_digest(labels, [(labels[e.source], labels[e.target], e.layer) for e in d.edges]),
    }
    return json.dumps({"meta": meta, "vertices": vertices, "edges": edges}, indent=1) + "\n"


@dataclass
class LayoutDocument:
    drawing: Drawing
    meta: dict = field(default_factory=dict)


def read_layout(text: str) -> LayoutDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"layout is not JSON: {exc}") from exc
    if not isinstance(doc, dict) or set(doc) != {"meta", "vertices", "edges"}:
        raise ParseError("layout must have exactly the keys meta, vertices, edges")
    try:
        labels = [str(v["label"]) for v in doc["vertices"]]
        pos = [(int(v["x"]), int(v["y"])) for v in doc["vertices"]]
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise ParseError("duplicate vertex label in layout")
        edges = []
        for e in doc["edges"]:
            if e["source"] not in index or e["target"] not in index:
                raise ParseError(f"edge {e['source']!r}-{e['target']!r} references an undeclared vertex")
            if e["layer"] not in (0, 1):
                raise ParseError(f"edge layer {e['layer']!r} is not 0 or 1")
            if e["geometry"] not in (SEGMENT, VH, HV):
                raise ParseError(f"unknown edge geometry {e['geometry']!r}")
            edges.append(DrawnEdge(index[e["source"]], index[e["target"]], e["layer"], e["geometry"], bool(e["temporary"])))
        meta = doc["meta"]
        mode = meta["mode"]
        algorithm = meta["algorithm"]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed layout document: {exc!r}") from exc
    return LayoutDocument(Drawing(pos, edges, mode, algorithm, labels), meta)


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------


@dataclass
class SvgOptions:
    colors: tuple[str, str] = ("#1f4e9c", "#c0392b")
    dashes: tuple[str, str] = ("", "6,4")
    stroke_width: float = 1.6
    vertex_radius: float = 3.0
    scale: Optional[float] = None  # pixels per unit; None fits ``size``
    size: float = 600.0
    margin: float = 20.0
    side_by_side: bool = False
    log_compress: bool = False  # display-only, not geometric
    show_labels: bool = False

    def __post_init__(self):
        if self.scale is not None and self.scale <= 0:
            raise ValueError("scale must be positive")


def _display(v: int, log: bool) -> float:
    if not log:
        return float(v)
    return math.copysign(math.log2(1 + abs(v)), v)


def render_svg(d: Drawing, opts: Optional[SvgOptions] = None) -> str:
    opts = opts or SvgOptions()
    pts = [(_display(x, opts.log_compress), _display(y, opts.log_compress)) for x, y in d.positions]
    bends = []
    for e in d.edges:
        b = e.bend(d.positions)
        if b is not None:
            bends.append((_display(b[0], opts.log_compress), _display(b[1], opts.log_compress)))
    allp = pts + bends
    x0 = min((p[0] for p in allp), default=0.0)
    y0 = min((p[1] for p in allp), default=0.0)
    span = max([max(p[0] - x0, p[1] - y0) for p in allp] + [1.0])
    scale = opts.scale if opts.scale is not None else opts.size / span
    side = span * scale + 2 * opts.margin
    panels = (0, 1) if opts.side_by_side else (None,)
    width = side * len(panels)

    def tx(p, k):
        return (k * side + opts.margin + (p[0] - x0) * scale, side - opts.margin - (p[1] - y0) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.1f}" height="{side:.1f}" '
        f'viewBox="0 0 {width:.1f} {side:.1f}">',
        f"<title>{d.algorithm} ({d.mode}), n={d.n}, extent={d.extent}</title>",
    ]
    if opts.log_compress:
        out.append("<!-- log-compressed display: positions are NOT the true coordinates -->")
        out.append(f'<text x="{opts.margin:.1f}" y="{opts.margin * 0.7:.1f}" font-size="10">log-compressed display</text>')
    for k, only in enumerate(panels):
        out.append(f'<g id="panel{k}">')
        for e in d.edges:
            if only is not None and e.layer != only:
                continue
            style = f'stroke="{opts.colors[e.layer]}" stroke-width="{opts.stroke_width}" fill="none"'
            if opts.dashes[e.layer]:
                style += f' stroke-dasharray="{opts.dashes[e.layer]}"'
            ends = [(d.positions[e.source]), e.bend(d.positions), d.positions[e.target]]
            chain = [tx((_display(p[0], opts.log_compress), _display(p[1], opts.log_compress)), k) for p in ends if p is not None]
            attrs = f'data-layer="{e.layer}" data-geometry="{e.geometry}"'
            if len(chain) == 2:
                (ax, ay), (bx, by) = chain
                out.append(f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" {style} {attrs}/>')
            else:
                pts_s = " ".join(f"{x:.2f},{y:.2f}" for x, y in chain)
                out.append(f'<polyline points="{pts_s}" {style} {attrs}/>')
        for v, p in enumerate(pts):
            cx, cy = tx(p, k)
            out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{opts.vertex_radius}" fill="black"/>')
            if opts.show_labels:
                out.append(f'<text x="{cx + 4:.2f}" y="{cy - 4:.2f}" font-size="9">{escape(d.label(v))}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


__all__ = [
    "DegreeError",
    "LayoutDocument",
    "ParseError",
    "ParsedGraph",
    "SvgOptions",
    "decode_graph6",
    "decode_sparse6",
    "detect_format",
    "encode_graph6",
    "format_edge_list",
    "format_graphml",
    "parse_any",
    "parse_edge_list",
    "parse_graph6",
    "parse_graphml",
    "partition_digest",
    "read_layout",
    "render_svg",
    "write_layout",
]
