"""Small named graphs used by the demo flag and the tests."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, build_graph

# The two cycle forests of the worked example: A holds c0, c2, c3 and B holds
# c1, c4, c5 on the twelve points p0..p11.
FIG2_A = ((0, 1, 2, 3), (4, 5, 6, 7), (8, 9, 10, 11))
FIG2_B = ((0, 5, 10, 4), (1, 8, 3, 11), (2, 6, 9, 7))


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def octahedron() -> Graph:
    """K_{2,2,2}: every vertex misses only its antipode i + 3."""
    return build_graph(6, [(i, j) for i, j in combinations(range(6), 2) if j - i != 3])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def coxeter() -> Graph:
    """Cubic, 28 vertices, girth 7.

    Three 7-cycles a, b, c with steps 1, 2 and 3 plus seven hubs d_i, each
    joined to a_i, b_i and c_i.
    """
    a, b, c, d = 0, 7, 14, 21
    edges = []
    for base, step in ((a, 1), (b, 2), (c, 3)):
        edges += [(base + i, base + (i + step) % 7) for i in range(7)]
    for i in range(7):
        edges += [(d + i, a + i), (d + i, b + i), (d + i, c + i)]
    return build_graph(28, edges)


def fig2_graph() -> Graph:
    """Union of the worked-example cycle forests; edges 0..11 form A, 12..23 form B."""
    pairs = []
    for cyc in FIG2_A + FIG2_B:
        pairs += [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
    return build_graph(12, pairs)


NAMED = {
    "k4": lambda: complete(4),
    "k5": lambda: complete(5),
    "octahedron": octahedron,
    "petersen": petersen,
    "coxeter": coxeter,
    "fig2": fig2_graph,
}


def named_graph(name: str) -> Graph:
    try:
        return NAMED[name.lower()]()
    except KeyError:
        raise KeyError(f"unknown graph {name!r}; choose from {', '.join(sorted(NAMED))}") from None
