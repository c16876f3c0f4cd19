"""Exact integer geometry: orientation and segment relations."""

from __future__ import annotations

from enum import Enum

Point = tuple[int, int]


class Relation(str, Enum):
    DISJOINT = "disjoint"
    SHARED_ENDPOINT = "shared-endpoint-only"
    CROSSING = "crossing"
    OVERLAPPING = "overlapping"


class DegenerateSegment(ValueError):
    pass


def orient(a: Point, b: Point, c: Point) -> int:
    """Twice the signed area of abc: >0 left turn, <0 right turn, 0 collinear."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _between(a: Point, b: Point, p: Point) -> bool:
    """p collinear with ab lies on the closed segment ab."""
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segments_cross(s1: tuple[Point, Point], s2: tuple[Point, Point]) -> Relation:
    """Classify two closed segments.

    Touching at a common endpoint is SHARED_ENDPOINT; an endpoint resting in
    the other segment's interior counts as CROSSING; collinear segments that
    share more than one point are OVERLAPPING.
    """
    a, b = s1
    c, d = s2
    if a == b or c == d:
        raise DegenerateSegment(f"zero-length segment in {s1!r} / {s2!r}")
    o1, o2 = sign(orient(a, b, c)), sign(orient(a, b, d))
    o3, o4 = sign(orient(c, d, a)), sign(orient(c, d, b))
    if o1 == 0 and o2 == 0:
        # Collinear: compare along the dominant axis.
        axis = 0 if a[0] != b[0] else 1
        lo1, hi1 = sorted((a[axis], b[axis]))
        lo2, hi2 = sorted((c[axis], d[axis]))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi:
            return Relation.DISJOINT
        if lo < hi:
            return Relation.OVERLAPPING
        return Relation.SHARED_ENDPOINT if {a, b} & {c, d} else Relation.CROSSING
    shared = {a, b} & {c, d}
    if shared:
        # Non-collinear segments meet only at the shared endpoint.
        return Relation.SHARED_ENDPOINT
    if o1 * o2 < 0 and o3 * o4 < 0:
        return Relation.CROSSING
    if o1 == 0 and _between(a, b, c) or o2 == 0 and _between(a, b, d):
        return Relation.CROSSING
    if o3 == 0 and _between(c, d, a) or o4 == 0 and _between(c, d, b):
        return Relation.CROSSING
    return Relation.DISJOINT
