"""Coordinate-growth report: one CSV row per run, plus a PNG plot beside the CSV."""

from __future__ import annotations

import csv
import random
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .graph import Graph, build_graph
from .pipeline import embed, verify_for_mode

FIELDS = ("mode", "family", "n", "m", "seed", "max_coordinate", "coordinate_bits", "verified", "seconds")
FAMILY_OF_MODE = {"deg3": "cubic", "deg4-straight": "quartic", "deg4-ortho": "quartic"}


@dataclass
class ReportRow:
    mode: str
    family: str
    n: int
    m: int
    seed: int
    max_coordinate: int
    coordinate_bits: int
    verified: bool
    seconds: float


def random_regular(d: int, n: int, seed: int) -> Graph:
    import networkx as nx

    h = nx.random_regular_graph(d, n, seed=seed)
    return build_graph(n, sorted(tuple(sorted(e)) for e in h.edges()))


def run_report(
    sizes: Sequence[int], per_size: int, modes: Sequence[str] = ("deg3", "deg4-straight", "deg4-ortho"), seed: int = 0
) -> list[ReportRow]:
    rng = random.Random(seed)
    rows = []
    for n in sizes:
        for _ in range(per_size):
            s = rng.randrange(2**31)
            for mode in modes:
                deg = 3 if mode == "deg3" else 4
                if n <= deg or (n * deg) % 2:
                    continue
                g = random_regular(deg, n, s)
                t0 = time.perf_counter()
                d = embed(g, mode)
                dt = time.perf_counter() - t0
                ok = verify_for_mode(d, g).ok
                rows.append(
                    ReportRow(mode, FAMILY_OF_MODE[mode], n, g.m, s, d.extent, d.extent.bit_length(), ok, round(dt, 6))
                )
    return rows


def write_csv(rows: Iterable[ReportRow], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=FIELDS)
        w.writeheader()
        for r in rows:
            w.writerow(asdict(r))


def plot(rows: Sequence[ReportRow], path: Path) -> None:
    """Max coordinate (log scale) against n, one series per mode, with n - 1 for reference."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for mode in sorted({r.mode for r in rows}):
        pts = sorted((r.n, max(r.max_coordinate, 1)) for r in rows if r.mode == mode)
        ax.plot([p[0] for p in pts], [p[1] for p in pts], "o", ms=3, alpha=0.7, label=mode)
    ns = sorted({r.n for r in rows})
    if ns:
        ax.plot(ns, [n - 1 for n in ns], "k--", lw=0.8, label="n - 1")
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("max coordinate")
    ax.set_title("Grid growth")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_report(rows: Sequence[ReportRow], csv_path: Path) -> Path:
    """Write the CSV and the figure next to it; returns the figure path."""
    csv_path = Path(csv_path)
    write_csv(rows, csv_path)
    fig_path = csv_path.with_suffix(".png")
    plot(rows, fig_path)
    return fig_path
