"""Command-line driver: ``geothick {embed,decompose,verify,report}``.

Exit codes: 0 success, 2 unreadable input, 3 degree too high for the mode,
4 verification or embedding failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import named
from .decompose import DecompositionError
from .embed_cycles import EmbeddingError
from .graph import DegreeError, Graph, GraphError, build_graph
from .io_formats import (
    ParsedGraph,
    ParseError,
    SvgOptions,
    detect_format,
    parse_any,
    parse_graph6,
    partition_digest,
    read_layout,
    render_svg,
    write_layout,
)
from .pipeline import MODES, decompose, embed, fig2, resolve_mode, verify_for_mode
from .verify import VerificationReport

EXIT_OK, EXIT_PARSE, EXIT_DEGREE, EXIT_VERIFY = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _err(msg: str) -> None:
    print(f"geothick: {msg}", file=sys.stderr)


def _load_graphs(args) -> list[tuple[str, ParsedGraph]]:
    """(name, parsed graph) pairs from --demo or --input."""
    if args.demo:
        try:
            g = named.named_graph(args.demo)
        except KeyError as exc:
            raise CliError(EXIT_PARSE, str(exc.args[0]))
        labels = [f"p{v}" for v in range(g.n)] if args.demo == "fig2" else [str(v) for v in range(g.n)]
        return [(args.demo, ParsedGraph(g, labels))]
    if not args.input:
        raise CliError(EXIT_PARSE, "give --input PATH or --demo NAME")
    try:
        text = Path(args.input).read_text(encoding="utf-8") if args.input != "-" else sys.stdin.read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {args.input}: {exc.strerror}")
    fmt = args.format if args.format != "auto" else detect_format(text, args.input)
    try:
        if fmt == "graph6" and getattr(args, "batch", False):
            parsed = parse_graph6(text, max_degree=None, batch=True)
            return [(f"{Path(args.input).stem}[{i}]", p) for i, p in enumerate(parsed)]
        return [(Path(args.input).stem, parse_any(text, fmt, args.input, max_degree=None))]
    except DegreeError as exc:
        raise CliError(EXIT_DEGREE, str(exc))
    except GraphError as exc:
        raise CliError(EXIT_PARSE, str(exc))


def _indexed(path: Optional[str], i: int, many: bool) -> Optional[Path]:
    if path is None:
        return None
    p = Path(path)
    return p.with_name(f"{p.stem}-{i}{p.suffix}") if many else p


def report_json(report: VerificationReport) -> str:
    doc = {
        "ok": report.ok,
        "violations": [{"kind": v.kind, "witnesses": v.witnesses} for v in report.violations],
        "stats": report.stats,
    }
    return json.dumps(doc, indent=1, default=str) + "\n"


def _mode_limit(mode: str, g: Graph, labels) -> str:
    resolved = resolve_mode(mode, g)
    try:
        g.require_max_degree(3 if resolved == "deg3" else 4, labels)
    except DegreeError as exc:
        raise CliError(EXIT_DEGREE, f"{exc} (mode {resolved})")
    return resolved


def cmd_embed(args) -> int:
    items = _load_graphs(args)
    many = len(items) > 1
    worst = EXIT_OK
    for i, (name, pg) in enumerate(items):
        g, labels = pg.graph, pg.labels
        try:
            if args.demo == "fig2":
                mode = "deg4-ortho" if args.mode == "deg4-ortho" else "deg4-straight"
                res = fig2(mode)
                d, partition = res.drawing, res.partition
            else:
                mode = _mode_limit(args.mode, g, labels)
                d, partition = embed(g, mode, labels), None
        except (EmbeddingError, DecompositionError) as exc:
            _err(f"{name}: embedding failed: {exc}")
            out_report = _indexed(args.out_report, i, many)
            if out_report:
                failed = {"ok": False, "error": str(exc), "violations": [], "stats": getattr(exc, "state", {})}
                out_report.write_text(json.dumps(failed, indent=1, default=str) + "\n", encoding="utf-8")
            worst = max(worst, EXIT_VERIFY)
            continue
        report = verify_for_mode(d, g, partition)
        side = args.side_by_side if args.side_by_side is not None else d.mode == "orthogonal"
        out_layout = _indexed(args.out_layout, i, many)
        if out_layout:
            out_layout.write_text(write_layout(d), encoding="utf-8")
        out_svg = _indexed(args.out_svg, i, many)
        if out_svg:
            opts = SvgOptions(scale=args.scale, side_by_side=side, log_compress=args.log_display, show_labels=args.labels)
            out_svg.write_text(render_svg(d, opts), encoding="utf-8")
        out_report = _indexed(args.out_report, i, many)
        if out_report:
            out_report.write_text(report_json(report), encoding="utf-8")
        counts = [sum(1 for e in d.edges if e.layer == c) for c in (0, 1)]
        status = "ok" if report.ok else f"FAILED ({len(report.violations)} violations)"
        print(f"{name}: mode={mode} n={g.n} m={g.m} extent={d.extent} layers={counts[0]}/{counts[1]} {status}")
        for v in report.violations[:5]:
            _err(f"{name}: {v}")
        if not report.ok:
            worst = max(worst, EXIT_VERIFY)
    return worst


def cmd_decompose(args) -> int:
    items = _load_graphs(args)
    docs = []
    for name, pg in items:
        g, labels = pg.graph, pg.labels
        mode = _mode_limit(args.mode, g, labels)
        try:
            p = decompose(g, mode)
        except DecompositionError as exc:
            _err(f"{name}: {exc}")
            return EXIT_VERIFY
        docs.append(
            {
                "graph": name,
                "mode": mode,
                "layer_edges": list(p.counts()),
                "edges": [
                    {"source": labels[a], "target": labels[b], "layer": c} for (a, b), c in zip(g.edges, p.layer_of)
                ],
            }
        )
    text = json.dumps(docs if len(docs) > 1 else docs[0], indent=1) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        doc = read_layout(Path(args.layout).read_text(encoding="utf-8"))
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {args.layout}: {exc.strerror}")
    except ParseError as exc:
        raise CliError(EXIT_PARSE, str(exc))
    d, meta = doc.drawing, doc.meta
    g = None
    if args.input:
        items = _load_graphs(args)
        pg = items[0][1]
        where = {lab: i for i, lab in enumerate(d.labels or [])}
        missing = [lab for lab in pg.labels if lab not in where]
        if missing or len(pg.labels) != d.n:
            raise CliError(EXIT_PARSE, f"graph and layout vertex sets differ (e.g. {missing[:1]})")
        g = build_graph(d.n, [(where[pg.labels[a]], where[pg.labels[b]]) for a, b in pg.graph.edges])
    report = verify_for_mode(d, g)
    labels = [d.label(v) for v in range(d.n)]
    counts = [sum(1 for e in d.edges if e.layer == c) for c in (0, 1)]
    if "layer_edges" in meta and list(meta["layer_edges"]) != counts:
        report.add("partition", "per-layer edge counts differ from the document's record", meta["layer_edges"], counts)
    if "partition_digest" in meta:
        digest = partition_digest(labels, [(labels[e.source], labels[e.target], e.layer) for e in d.edges])
        if digest != meta["partition_digest"]:
            report.add("partition", "layer assignment differs from the recorded digest")
    try:
        if "extent" in meta and int(meta["extent"]) < d.extent:
            report.add("grid-bound", "declared extent below max coordinate", meta["extent"], d.extent)
    except (TypeError, ValueError):
        raise CliError(EXIT_PARSE, f"meta extent {meta['extent']!r} is not an integer")
    if args.out_report:
        Path(args.out_report).write_text(report_json(report), encoding="utf-8")
    print(f"{args.layout}: {'ok' if report.ok else 'FAILED'} ({len(report.violations)} violations)")
    for v in report.violations[:10]:
        _err(str(v))
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_report(args) -> int:
    from .report import run_report, write_report

    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        raise CliError(EXIT_PARSE, f"--sizes must be comma-separated integers, got {args.sizes!r}")
    modes = args.modes.split(",")
    for m in modes:
        if m not in MODES or m == "auto":
            raise CliError(EXIT_PARSE, f"unknown mode {m!r} in --modes")
    rows = run_report(sizes, args.per_size, modes, args.seed)
    fig = write_report(rows, Path(args.out_report))
    bad = sum(1 for r in rows if not r.verified)
    print(f"{len(rows)} runs, {bad} unverified; wrote {args.out_report} and {fig}")
    return EXIT_OK if not bad else EXIT_VERIFY


def _graph_source(p: argparse.ArgumentParser, batch: bool = True) -> None:
    p.add_argument("--input", "-i", help="graph file (edge list, graph6/sparse6, GraphML); '-' for stdin")
    p.add_argument("--format", default="auto", choices=("auto", "edgelist", "graph6", "graphml"))
    p.add_argument("--demo", choices=sorted(named.NAMED), help="use a built-in graph instead of --input")
    if batch:
        p.add_argument("--batch", action="store_true", help="process every graph6 line, not just the first")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="geothick", description="Two-layer drawings of graphs with maximum degree four.")
    sub = ap.add_subparsers(dest="command", required=True)

    e = sub.add_parser("embed", help="decompose, embed, verify and write outputs")
    _graph_source(e)
    e.add_argument("--mode", default="auto", choices=MODES)
    e.add_argument("--seed", type=int, default=0, help="reserved; the pipeline has no randomized steps")
    e.add_argument("--out-layout", help="layout JSON path")
    e.add_argument("--out-svg", help="SVG path")
    e.add_argument("--out-report", help="verification report JSON path")
    e.add_argument("--scale", type=float, help="SVG pixels per grid unit (default: fit to 600px)")
    side = e.add_mutually_exclusive_group()
    side.add_argument("--side-by-side", dest="side_by_side", action="store_true", default=None)
    side.add_argument("--overlay", dest="side_by_side", action="store_false")
    e.add_argument("--log-display", action="store_true", help="log-compress SVG coordinates (display only)")
    e.add_argument("--labels", action="store_true", help="draw vertex labels in the SVG")
    e.set_defaults(func=cmd_embed)

    d = sub.add_parser("decompose", help="write the edge-to-layer assignment as JSON")
    _graph_source(d)
    d.add_argument("--mode", default="auto", choices=MODES)
    d.add_argument("--seed", type=int, default=0, help="reserved; the pipeline has no randomized steps")
    d.add_argument("--output", "-o", help="output path (default stdout)")
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="re-check a stored layout")
    v.add_argument("layout")
    _graph_source(v, batch=False)
    v.add_argument("--out-report", help="verification report JSON path")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report", help="coordinate growth over random regular graphs (CSV + PNG)")
    r.add_argument("--sizes", default="8,16,32,64")
    r.add_argument("--per-size", type=int, default=3)
    r.add_argument("--modes", default="deg3,deg4-straight,deg4-ortho")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--out-report", default="report.csv", help="CSV path; the figure goes next to it as .png")
    r.set_defaults(func=cmd_report)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "demo", None) and getattr(args, "input", None):
        _err("--demo and --input are mutually exclusive")
        return EXIT_PARSE
    try:
        return args.func(args)
    except CliError as exc:
        _err(str(exc))
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
