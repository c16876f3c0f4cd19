"""Independent reference solvers: rational intersection and networkx planarity."""

from __future__ import annotations

from fractions import Fraction

import networkx as nx


def _cross(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def rational_intersection(s1, s2) -> str:
    """Classify two closed segments by solving for the intersection exactly.

    Returns one of the Relation values of geothick.geometry, computed from
    the parametric intersection set a + t(b - a), t in [0, 1].
    """
    (a, b), (c, d) = s1, s2
    r = (b[0] - a[0], b[1] - a[1])
    s = (d[0] - c[0], d[1] - c[1])
    ca = (c[0] - a[0], c[1] - a[1])
    den = _cross(r, s)
    if den != 0:
        t = Fraction(_cross(ca, s), den)
        u = Fraction(_cross(ca, r), den)
        if not (0 <= t <= 1 and 0 <= u <= 1):
            return "disjoint"
        p = (a[0] + t * r[0], a[1] + t * r[1])
        return "shared-endpoint-only" if p in (a, b) and p in (c, d) else "crossing"
    if _cross(ca, r) != 0:
        return "disjoint"  # parallel, distinct lines
    rr = r[0] * r[0] + r[1] * r[1]
    tc = Fraction(ca[0] * r[0] + ca[1] * r[1], rr)
    td = tc + Fraction(s[0] * r[0] + s[1] * r[1], rr)
    lo, hi = max(Fraction(0), min(tc, td)), min(Fraction(1), max(tc, td))
    if lo > hi:
        return "disjoint"
    if lo < hi:
        return "overlapping"
    p = (a[0] + lo * r[0], a[1] + lo * r[1])
    return "shared-endpoint-only" if p in (a, b) and p in (c, d) else "crossing"


def is_planar(edges) -> bool:
    h = nx.Graph()
    h.add_edges_from(edges)
    return nx.check_planarity(h)[0]
