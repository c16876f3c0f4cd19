"""Simultaneous straight-line embedding of two cycle forests on one point set.

Cycles of layer A own consecutive blocks of x-ranks, cycles of layer B own
consecutive blocks of y-ranks.  Every cycle is first drawn without its back
edge, which leaves an x-monotone (A) or y-monotone (B) path.  Back edges are
then closed in reverse cycle order by stretching one rank gap next to the
cycle's start vertex.  The first two cycles share their start vertex v0; it is
settled last by moving it down and to the left along a direction that lets it
see both closing neighbours at once.

Stretches are kept as per-gap integer increments over the unit rank grid,
so shifting never disturbs the rank order and coordinates stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from typing import Iterator, Optional, Sequence

from .decompose import Cycle, euler_partition, paths_to_cycle_structure
from .drawing import DrawnEdge, Drawing, combine_diagonal
from .geometry import Point, Relation, orient, segments_cross
from .graph import Graph, GraphError

MAX_CANDIDATES = 512


class DegenerateCycles(Exception):
    """No first cycle meets two cycles of the other layer."""


class EmbeddingError(RuntimeError):
    """The endgame found no position for v0; carries the geometric state."""

    def __init__(self, message: str, state: Optional[dict] = None):
        super().__init__(message)
        self.state = state or {}


# ---------------------------------------------------------------------------
# Rank assignment
# ---------------------------------------------------------------------------


@dataclass
class OrderedCycle:
    layer: int  # 0 = the x-block layer ("A"), 1 = the y-block layer ("B")
    source: Cycle
    vertices: list[int]  # start vertex first, back edge joins last to first
    links: list[Optional[int]]

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @property
    def back_link(self) -> Optional[int]:
        return self.links[-1] if len(self.vertices) > 2 else None

    def interior(self) -> list[int]:
        return self.vertices[1:-1]


@dataclass
class CoordAssignment:
    n: int
    xrank: list[int]
    yrank: list[int]
    order: list[OrderedCycle]  # c_0 ... c_k
    cycle_of: list[tuple[int, int]]  # vertex -> (index in order of its A cycle, of its B cycle)
    degenerate: bool = False

    def block(self, i: int) -> tuple[int, int]:
        c = self.order[i]
        ranks = self.xrank if c.layer == 0 else self.yrank
        vals = [ranks[v] for v in c.vertices]
        return min(vals), max(vals)

    def second_b_index(self) -> Optional[int]:
        """Index of c_b, the second cycle of layer B in the order."""
        seen = 0
        for i, c in enumerate(self.order):
            if c.layer == 1:
                seen += 1
                if seen == 2:
                    return i
        return None


@dataclass(frozen=True)
class StartChoice:
    cycle: int  # index into the A list
    start: int
    reverse: bool = False
    reverse_second: bool = False


def _membership(n: int, cycles: Sequence[Cycle], name: str) -> list[int]:
    member = [-1] * n
    for i, c in enumerate(cycles):
        for v in c.vertices:
            if not 0 <= v < n:
                raise GraphError(f"layer {name} cycle mentions vertex {v} outside 0..{n - 1}")
            if member[v] >= 0:
                raise GraphError(f"vertex {v} lies on two cycles of layer {name}")
            member[v] = i
    missing = [v for v in range(n) if member[v] < 0]
    if missing:
        raise GraphError(f"vertex {missing[0]} is on no cycle of layer {name}")
    return member


def start_choices(cycles_a: Sequence[Cycle], cycles_b: Sequence[Cycle], n: int) -> Iterator[StartChoice]:
    """Admissible (c0, v0, direction) triples in deterministic order.

    c0 must touch more than one B cycle and its last vertex must lie on a
    different B cycle than v0.
    """
    mb = _membership(n, cycles_b, "B")
    for ci, c in enumerate(cycles_a):
        if len({mb[v] for v in c.vertices}) < 2:
            continue
        L = len(c.vertices)
        for reverse in (False, True):
            for k in range(L):
                v0 = c.vertices[k]
                last = c.vertices[(k + 1) % L] if reverse else c.vertices[(k - 1) % L]
                if mb[last] != mb[v0]:
                    yield StartChoice(ci, v0, reverse)


def order_and_assign(
    cycles_a: Sequence[Cycle],
    cycles_b: Sequence[Cycle],
    n: int,
    choice: Optional[StartChoice] = None,
) -> CoordAssignment:
    """Order the cycles c_0..c_k and hand out consecutive rank blocks.

    Raises DegenerateCycles when no admissible first cycle exists.
    """
    ma = _membership(n, cycles_a, "A")
    mb = _membership(n, cycles_b, "B")
    if choice is None:
        choice = next(start_choices(cycles_a, cycles_b, n), None)
        if choice is None:
            raise DegenerateCycles("no cycle of A meets two cycles of B")
    return _assign(cycles_a, cycles_b, ma, mb, n, choice, degenerate=False)


def _assign(cycles_a, cycles_b, ma, mb, n, choice: StartChoice, degenerate: bool) -> CoordAssignment:
    xrank = [-1] * n
    yrank = [-1] * n
    xs: list[int] = []  # rank -> vertex
    ys: list[int] = []
    done_a = [False] * len(cycles_a)
    done_b = [False] * len(cycles_b)
    order: list[OrderedCycle] = []
    index_a = [-1] * len(cycles_a)
    index_b = [-1] * len(cycles_b)

    def take(layer: int, ci: int, start: int, reverse: bool) -> None:
        cyc = (cycles_a if layer == 0 else cycles_b)[ci]
        verts, links = cyc.oriented(start, reverse)
        if layer == 0:
            done_a[ci] = True
            index_a[ci] = len(order)
            for v in verts:
                xrank[v] = len(xs)
                xs.append(v)
        else:
            done_b[ci] = True
            index_b[ci] = len(order)
            for v in verts:
                yrank[v] = len(ys)
                ys.append(v)
        order.append(OrderedCycle(layer, cyc, verts, links))

    take(0, choice.cycle, choice.start, choice.reverse)
    px = py = 0
    while True:
        while py < len(ys) and xrank[ys[py]] >= 0:
            py += 1
        if py < len(ys):
            v = ys[py]
            take(0, ma[v], v, False)
            continue
        while px < len(xs) and yrank[xs[px]] >= 0:
            px += 1
        if px < len(xs):
            v = xs[px]
            take(1, mb[v], v, choice.reverse_second and len(order) == 1)
            continue
        break
    if len(xs) != n or len(ys) != n:
        raise GraphError("union of the two layers is disconnected")
    cycle_of = [(index_a[ma[v]], index_b[mb[v]]) for v in range(n)]
    return CoordAssignment(n, xrank, yrank, order, cycle_of, degenerate)


def assign_degenerate(cycles_a, cycles_b, n: int, choice: StartChoice) -> CoordAssignment:
    """Two spanning cycles: cut both at v0 and place by the two-path rule."""
    ma = _membership(n, cycles_a, "A")
    mb = _membership(n, cycles_b, "B")
    return _assign(cycles_a, cycles_b, ma, mb, n, choice, degenerate=True)


# ---------------------------------------------------------------------------
# Stretchable grid
# ---------------------------------------------------------------------------


class _Fenwick:
    def __init__(self, n: int):
        self.n = n
        self.tree = [0] * (n + 1)

    def add(self, i: int, delta: int) -> None:
        i += 1
        while i <= self.n:
            self.tree[i] += delta
            i += i & -i

    def prefix(self, i: int) -> int:
        """Sum of entries 0..i-1."""
        s = 0
        while i > 0:
            s += self.tree[i]
            i -= i & -i
        return s


class StretchGrid:
    """Coordinates = rank + accumulated extra spacing of the gaps below the rank."""

    def __init__(self, ca: CoordAssignment):
        self.ca = ca
        self.extra = (_Fenwick(max(ca.n, 1)), _Fenwick(max(ca.n, 1)))
        self.total = [0, 0]

    def stretch(self, axis: int, rank: int, amount: int) -> None:
        """Widen the gap between ``rank`` and ``rank + 1`` on ``axis``."""
        if amount <= 0:
            return
        self.extra[axis].add(rank, amount)
        self.total[axis] += amount

    def coord(self, axis: int, v: int) -> int:
        r = (self.ca.xrank if axis == 0 else self.ca.yrank)[v]
        return r + self.extra[axis].prefix(r)

    def pos(self, v: int) -> Point:
        return (self.coord(0, v), self.coord(1, v))

    def positions(self) -> list[Point]:
        n = self.ca.n
        out = []
        for axis, ranks in ((0, self.ca.xrank), (1, self.ca.yrank)):
            by_rank = [0] * n
            for v in range(n):
                by_rank[ranks[v]] = v
            vals = [0] * n
            acc = 0
            for r in range(n):
                vals[by_rank[r]] = acc
                acc += 1 + (self.extra[axis].prefix(r + 1) - self.extra[axis].prefix(r))
            out.append(vals)
        return list(zip(out[0], out[1]))


# ---------------------------------------------------------------------------
# Back edges
# ---------------------------------------------------------------------------


def back_edge_clear(pos: dict[int, Point] | list[Point], c: OrderedCycle) -> bool:
    """True when the back edge of ``c`` misses the rest of its own cycle.

    The cycle minus its back edge is monotone in the block axis, so the back
    edge is crossing-free exactly when every interior vertex lies strictly on
    one side of the chord from the last vertex to the start vertex.
    """
    if len(c.vertices) < 3:
        return True
    a, b = pos[c.start], pos[c.end]
    sides = {orient(a, b, pos[v]) > 0 for v in c.interior() if orient(a, b, pos[v]) != 0}
    if any(orient(a, b, pos[v]) == 0 for v in c.interior()):
        return False
    return len(sides) <= 1


def minimal_shift(pos, c: OrderedCycle) -> int:
    """Smallest stretch next to the start vertex that lets it see the end vertex.

    For an A cycle the gap directly above v_i grows, which lowers v_i relative
    to the rest of its cycle; each interior vertex v then needs
    orient(v_i, w_i, v) > 0, linear in the stretch d with slope x(w_i) - x(v).
    B cycles are the mirror image with the gap to the right of v_i.
    """
    if back_edge_clear(pos, c):
        return 0
    (xi, yi), (xw, yw) = pos[c.start], pos[c.end]
    need = 0
    for v in c.interior():
        xv, yv = pos[v]
        base = orient((xi, yi), (xw, yw), (xv, yv))
        if c.layer == 0:
            slope, target = xw - xv, base  # want base + d*slope > 0
        else:
            slope, target = yw - yv, -base  # want base - d*slope < 0
        if target <= 0:
            need = max(need, (-target) // slope + 1)
    return need


# ---------------------------------------------------------------------------
# Endgame: placing v0 = v1
# ---------------------------------------------------------------------------

Halfplane = tuple[int, int, int]  # (a, b, c): a*x + b*y + c > 0


@dataclass
class EndgamePlan:
    """Where v0 goes.

    A ray plan moves v0 by -scale * direction through the two rank-0 gaps.
    A window plan multiplies every coordinate by ``factor`` and puts v0 at
    ``point`` (already in scaled coordinates).
    """

    window: str  # "A1B1", "A2B1", ...
    sides: tuple[int, int]
    direction: Optional[tuple[int, int]] = None
    scale: int = 0
    point: Optional[Point] = None
    factor: int = 1

    @property
    def shift(self) -> tuple[int, int]:
        if self.direction is None:
            return (0, 0)
        return self.direction[0] * self.scale, self.direction[1] * self.scale


def _constraints(pos, c: OrderedCycle, origin: Point) -> list[tuple[int, int, int]]:
    """(cross, dx, dy) per interior vertex, relative to v0's current position."""
    if len(c.vertices) < 3 or c.back_link is None:
        return []
    ox, oy = origin
    wx, wy = pos[c.end][0] - ox, pos[c.end][1] - oy
    out = []
    for v in c.interior():
        vx, vy = pos[v][0] - ox, pos[v][1] - oy
        out.append((wx * vy - wy * vx, wx - vx, wy - vy))
    return out


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Simplest rational strictly inside (lo, hi), lo >= 0 (Stern-Brocot descent)."""
    a, b, c, d = 0, 1, 1, 0  # left = a/b, right = c/d
    while True:
        m = Fraction(a + c, b + d)
        if m <= lo:
            a, b = a + c, b + d
        elif m >= hi:
            c, d = a + c, b + d
        else:
            return m


def plan_ray(pos, first: OrderedCycle, second: OrderedCycle) -> Optional[EndgamePlan]:
    """Cheapest integer move of v0 down and to the left closing both first cycles.

    With v0 = origin - lambda * (p, q), every side condition on an interior
    vertex becomes cross + lambda * K > 0 (up to the chosen side sign), with
    K = q*dx - p*dy.  A direction is usable when every K has the right sign;
    the smallest integer lambda then follows from the constants.
    """
    origin = pos[first.start]
    cons_a = _constraints(pos, first, origin)
    cons_b = _constraints(pos, second, origin)
    best: Optional[EndgamePlan] = None
    for sa in (1, -1):
        for sb in (-1, 1):
            lo, hi = Fraction(-1), None  # strict bounds on r = q/p
            ok = True
            for _, dx, dy in cons_a:  # dx > 0 for A interiors
                m = Fraction(dy, dx)
                if sa > 0:
                    lo = max(lo, m)
                else:
                    hi = m if hi is None else min(hi, m)
            for _, dx, dy in cons_b:  # dy > 0 for B interiors
                if dx > 0:
                    m = Fraction(dy, dx)
                    if sb < 0:
                        hi = m if hi is None else min(hi, m)
                    else:
                        lo = max(lo, m)
                elif sb > 0:
                    ok = False
            if not ok or (hi is not None and hi <= max(lo, Fraction(0))):
                continue
            if lo < 0:
                direction = (1, 0)
            elif hi is None:
                r = Fraction(int(lo) + 1)
                direction = (r.denominator, r.numerator)
            else:
                r = _simplest_between(lo, hi)
                direction = (r.denominator, r.numerator)
            scale = _scale_for(direction, sa, sb, cons_a, cons_b)
            if scale is None:
                continue
            plan = EndgamePlan("A1B1", (sa, sb), direction, scale)
            if best is None or max(plan.shift) < max(best.shift):
                best = plan
    return best


def _scale_for(direction, sa, sb, cons_a, cons_b) -> Optional[int]:
    p, q = direction
    need = 0
    for sigma, cons in ((sa, cons_a), (sb, cons_b)):
        for cross, dx, dy in cons:
            k = sigma * (q * dx - p * dy)
            c = sigma * cross
            if k <= 0:
                if k == 0 and c > 0:
                    continue
                return None
            if c <= 0:
                need = max(need, (-c) // k + 1)
    return need


def _sees(pos, target: int, blockers: Sequence[int], sigma: int) -> list[Halfplane]:
    """Half-planes of points P with sigma * orient(P, target, v) > 0 for all blockers v."""
    wx, wy = pos[target]
    out = []
    for v in blockers:
        vx, vy = pos[v]
        out.append((sigma * (wy - vy), sigma * (vx - wx), sigma * (wx * vy - wy * vx)))
    return out


def _clip(poly: list[tuple[Fraction, Fraction]], h: Halfplane) -> list[tuple[Fraction, Fraction]]:
    a, b, c = h
    out = []
    for i, p in enumerate(poly):
        q = poly[(i + 1) % len(poly)]
        fp = a * p[0] + b * p[1] + c
        fq = a * q[0] + b * q[1] + c
        if fp >= 0:
            out.append(p)
        if (fp > 0 > fq) or (fp < 0 < fq):
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def _windows(grid: StretchGrid, first: OrderedCycle, second: OrderedCycle):
    """Candidate regions for v0 with the linear conditions that apply inside each.

    Along x, v0 either stays left of every vertex (A1), so it sees u0 for
    free and must see w0, or moves into the empty band right of c0's block
    (A2), where it sees w0 for free and must see u0.  Along y the same holds
    with B1 below everything and B2 in the band between c1 and c_b.  Edges
    of all other cycles live in disjoint bands, so nothing else can block.
    """
    ca = grid.ca
    n = ca.n
    by_x = sorted(range(n), key=ca.xrank.__getitem__)
    by_y = sorted(range(n), key=ca.yrank.__getitem__)
    pos = {v: grid.pos(v) for v in set(first.vertices) | set(second.vertices) | {by_x[1], by_y[1]}}
    for v in (first.end, second.end):
        for by, ranks in ((by_x, ca.xrank), (by_y, ca.yrank)):
            if ranks[v] + 1 < n:
                u = by[ranks[v] + 1]
                pos[u] = grid.pos(u)
    extent = max(max(abs(c) for c in p) for p in pos.values()) + 1
    far = 4 * extent * extent

    def band(axis: int, v: int, by: list[int], ranks: list[int]) -> tuple[int, Optional[int]]:
        lo = pos[v][axis]
        return lo, (pos[by[ranks[v] + 1]][axis] if ranks[v] + 1 < n else None)

    def options(c: OrderedCycle, axis: int, by, ranks):
        first_free = pos[by[1]][axis]
        L = len(c.vertices)
        closes = L >= 3 and c.back_link is not None
        opens = L >= 2 and c.links[0] is not None
        yield 1, (None, first_free), (c.end, c.interior()) if closes else None
        if L >= 2:
            lo, hi = band(axis, c.end, by, ranks)
            sees_u = (c.vertices[1], c.vertices[2:]) if opens and L >= 3 else None
            yield 2, (lo, hi), sees_u

    for ka, (xlo, xhi), need_a in options(first, 0, by_x, ca.xrank):
        for kb, (ylo, yhi), need_b in options(second, 1, by_y, ca.yrank):
            bounds = []
            if xlo is not None:
                bounds.append((1, 0, -xlo))
            if xhi is not None:
                bounds.append((-1, 0, xhi))
            if ylo is not None:
                bounds.append((0, 1, -ylo))
            if yhi is not None:
                bounds.append((0, -1, yhi))
            box = (
                xlo if xlo is not None else xhi - far,
                ylo if ylo is not None else yhi - far,
                xhi if xhi is not None else xlo + far,
                yhi if yhi is not None else ylo + far,
            )
            for sa in (1, -1) if need_a else (1,):
                for sb in (-1, 1) if need_b else (-1,):
                    hs = list(bounds)
                    if need_a:
                        hs += _sees(pos, need_a[0], need_a[1], sa)
                    if need_b:
                        hs += _sees(pos, need_b[0], need_b[1], sb)
                    yield f"A{ka}B{kb}", (sa, sb), box, hs


def _interior_point(box, hs: list[Halfplane]) -> Optional[tuple[Point, int]]:
    """A point strictly inside all half-planes, as integers over a power-of-two denominator."""
    x0, y0, x1, y1 = (Fraction(v) for v in box)
    poly = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    for h in hs:
        poly = _clip(poly, h)
        if len(poly) < 3:
            return None
    cx = sum(p[0] for p in poly) / len(poly)
    cy = sum(p[1] for p in poly) / len(poly)
    if not all(a * cx + b * cy + c > 0 for a, b, c in hs):
        return None  # the clipped polygon has no interior
    s = 1
    while True:
        px, py = round(cx * s), round(cy * s)
        if all(a * px + b * py + c * s > 0 for a, b, c in hs):
            return (px, py), s
        s *= 2


def plan_window(grid: StretchGrid, first: OrderedCycle, second: OrderedCycle) -> Optional[EndgamePlan]:
    """Exact placement of v0 in the cheapest feasible window, with rescaling."""
    best: Optional[EndgamePlan] = None
    for window, sides, box, hs in _windows(grid, first, second):
        found = _interior_point(box, hs)
        if found is None:
            continue
        point, factor = found
        plan = EndgamePlan(window, sides, point=point, factor=factor)
        if best is None or factor < best.factor:
            best = plan
            if factor == 1:
                break
    return best


def solve_endgame(grid: StretchGrid) -> Optional[EndgamePlan]:
    ca = grid.ca
    if len(ca.order) < 2:
        return EndgamePlan("A1B1", (1, -1), (0, 0), 0)
    first, second = ca.order[0], ca.order[1]
    pos = {v: grid.pos(v) for v in set(first.vertices) | set(second.vertices)}
    return plan_ray(pos, first, second) or plan_window(grid, first, second)


# ---------------------------------------------------------------------------
# Tracing of the structural lemmas
# ---------------------------------------------------------------------------


@dataclass
class EmbedTrace:
    below_left_violations: list[tuple[int, int]] = field(default_factory=list)
    shift_safety_violations: list[tuple[int, int]] = field(default_factory=list)
    shifts: list[tuple[int, int, int, int]] = field(default_factory=list)  # (cycle, axis, rank, amount)
    horizontal_after_cb: list[int] = field(default_factory=list)
    fixed_wedge_rays: Optional[list[tuple[int, int]]] = None
    fixed_wedge_rays_final: Optional[list[tuple[int, int]]] = None
    endgame: Optional[EndgamePlan] = None
    four_visibility: Optional[bool] = None
    candidates_tried: int = 0

    @property
    def fixed_wedge_ok(self) -> bool:
        return self.fixed_wedge_rays == self.fixed_wedge_rays_final

    @property
    def lemmas_ok(self) -> bool:
        return (
            not self.below_left_violations
            and not self.shift_safety_violations
            and not self.horizontal_after_cb
            and self.fixed_wedge_ok
            and self.four_visibility is not False
        )


def below_left_violations(ca: CoordAssignment) -> list[tuple[int, int]]:
    out = []
    for i, c in enumerate(ca.order):
        v = c.start
        for w in c.vertices[1:]:
            if not (ca.xrank[v] < ca.xrank[w] and ca.yrank[v] < ca.yrank[w]):
                out.append((i, w))
    return out


def _check_shift_safety(ca: CoordAssignment, i: int, axis: int, rank: int, trace: EmbedTrace) -> None:
    ranks = ca.xrank if axis == 0 else ca.yrank
    for j in range(i + 1, len(ca.order)):
        verts = ca.order[j].vertices
        if i == 0 and j == 1:
            verts = verts[1:]  # the shared start vertex is the one being moved
        if len({ranks[v] > rank for v in verts}) > 1:
            trace.shift_safety_violations.append((i, j))


def _wedge_rays(grid: StretchGrid, ca: CoordAssignment, top_of_second: int) -> list[tuple[int, int]]:
    """Rays from w0 to the vertices of c0 above the second cycle's block."""
    first = ca.order[0]
    wx, wy = grid.pos(first.end)
    rays = []
    for v in first.interior():
        if ca.yrank[v] > top_of_second:
            vx, vy = grid.pos(v)
            rays.append((vx - wx, vy - wy))
    return rays


def four_visibility(positions: Sequence[Point], ca: CoordAssignment) -> bool:
    """v0 sees u0, w0, u1 and w1 past every same-layer edge of every cycle."""
    if len(ca.order) < 2:
        return True
    layer_edges: dict[int, list[tuple[int, int]]] = {0: [], 1: []}
    for c in ca.order:
        L = len(c.vertices)
        for k, e in enumerate(c.links):
            if e is not None and not (L == 2 and k == 1):
                layer_edges[c.layer].append((c.vertices[k], c.vertices[(k + 1) % L]))
    v0 = ca.order[0].start
    for c in ca.order[:2]:
        targets = []
        if len(c.vertices) >= 2 and c.links[0] is not None:
            targets.append(c.vertices[1])
        if c.back_link is not None:
            targets.append(c.end)
        for t in targets:
            seg = (positions[v0], positions[t])
            for a, b in layer_edges[c.layer]:
                if {a, b} == {v0, t}:
                    continue
                rel = segments_cross(seg, (positions[a], positions[b]))
                if rel in (Relation.CROSSING, Relation.OVERLAPPING):
                    return False
    return True


# ---------------------------------------------------------------------------
# Full embedding of a cycle pair
# ---------------------------------------------------------------------------


def place_without_back_edges(ca: CoordAssignment) -> StretchGrid:
    return StretchGrid(ca)


def insert_back_edges(grid: StretchGrid, trace: Optional[EmbedTrace] = None) -> Optional[EndgamePlan]:
    """Close every back edge, last cycle first, then plan where v0 goes.

    Ray plans are applied to the grid right away; window plans are applied
    by :func:`final_positions`.  Returns None when v0 cannot be placed.
    """
    ca = grid.ca
    trace = trace if trace is not None else EmbedTrace()
    cb = ca.second_b_index()
    top_of_second = ca.block(1)[1] if len(ca.order) > 1 else -1
    for i in range(len(ca.order) - 1, 1, -1):
        c = ca.order[i]
        if c.back_link is not None:
            pos = {v: grid.pos(v) for v in c.vertices}
            d = minimal_shift(pos, c)
            if d:
                axis = 1 if c.layer == 0 else 0
                rank = (ca.yrank if axis == 1 else ca.xrank)[c.start]
                _check_shift_safety(ca, i, axis, rank, trace)
                grid.stretch(axis, rank, d)
                trace.shifts.append((i, axis, rank, d))
                if cb is not None and i < cb and axis == 0:
                    trace.horizontal_after_cb.append(i)
        if cb is not None and i == cb:
            trace.fixed_wedge_rays = _wedge_rays(grid, ca, top_of_second)
    if cb is not None:
        if cb < 2:
            trace.fixed_wedge_rays = _wedge_rays(grid, ca, top_of_second)
        trace.fixed_wedge_rays_final = _wedge_rays(grid, ca, top_of_second)
    plan = solve_endgame(grid)
    if plan is not None:
        apply_ray(grid, plan, trace)
    return plan


def apply_ray(grid: StretchGrid, plan: EndgamePlan, trace: EmbedTrace) -> None:
    dx, dy = plan.shift
    for axis, amount in ((0, dx), (1, dy)):
        if amount:
            _check_shift_safety(grid.ca, 0, axis, 0, trace)
            grid.stretch(axis, 0, amount)
            trace.shifts.append((0, axis, 0, amount))
    trace.endgame = plan


def final_positions(grid: StretchGrid, plan: EndgamePlan) -> list[Point]:
    pos = grid.positions()
    if plan.point is None:
        return pos
    f = plan.factor
    pos = [(x * f, y * f) for x, y in pos]
    pos[grid.ca.order[0].start] = plan.point
    return pos


def _degenerate_stretch(grid: StretchGrid, amount: int) -> None:
    """Widen the gaps before the two last vertices (only two cycles exist)."""
    ca = grid.ca
    first, second = ca.order[0], ca.order[1] if len(ca.order) > 1 else ca.order[0]
    grid.stretch(0, ca.xrank[first.end] - 1, amount)
    if second is not first and second.end != first.end:
        grid.stretch(1, ca.yrank[second.end] - 1, amount)


@dataclass
class CycleEmbedding:
    assignment: CoordAssignment
    positions: list[Point]
    trace: EmbedTrace
    swapped: bool  # True when the x-block layer is the input's layer 1


def _attempts(cycles_a, cycles_b, n) -> Iterator[tuple[bool, StartChoice, bool]]:
    emitted = False
    for swapped in (False, True):
        ca_, cb_ = (cycles_b, cycles_a) if swapped else (cycles_a, cycles_b)
        for ch in start_choices(ca_, cb_, n):
            emitted = True
            for rs in (False, True):
                yield swapped, StartChoice(ch.cycle, ch.start, ch.reverse, rs), False
    if not emitted:
        for v in range(n):
            for rev in (False, True):
                for rs in (False, True):
                    yield False, StartChoice(0, v, rev, rs), True


def embed_cycle_pair(cycles_a: Sequence[Cycle], cycles_b: Sequence[Cycle], n: int) -> CycleEmbedding:
    """Straight-line simultaneous embedding of two cycle forests covering 0..n-1."""
    if n == 0:
        return CycleEmbedding(CoordAssignment(0, [], [], [], []), [], EmbedTrace(), False)
    ma = _membership(n, cycles_a, "A")
    mb = _membership(n, cycles_b, "B")
    if n == 1:
        ca = CoordAssignment(1, [0], [0], [], [(0, 0)])
        return CycleEmbedding(ca, [(0, 0)], EmbedTrace(four_visibility=True), False)
    tried = 0
    for swapped, choice, degenerate in islice(_attempts(cycles_a, cycles_b, n), MAX_CANDIDATES):
        tried += 1
        ca_, cb_ = (cycles_b, cycles_a) if swapped else (cycles_a, cycles_b)
        ma_, mb_ = (mb, ma) if swapped else (ma, mb)
        ca = _assign(ca_, cb_, ma_, mb_, n, choice, degenerate)
        trace = EmbedTrace(below_left_violations=below_left_violations(ca))
        grid = place_without_back_edges(ca)
        plan = insert_back_edges(grid, trace)
        amount = n
        while plan is None and degenerate and amount < n << 64:
            _degenerate_stretch(grid, amount)
            plan = solve_endgame(grid)
            if plan is not None:
                apply_ray(grid, plan, trace)
            amount *= 2
        if plan is None:
            continue
        trace.endgame = plan
        trace.candidates_tried = tried
        positions = final_positions(grid, plan)
        trace.four_visibility = four_visibility(positions, ca)
        return CycleEmbedding(ca, positions, trace, swapped)
    raise EmbeddingError(f"no admissible start in {tried} candidates places v0", {"n": n, "tried": tried})


def cycle_drawing(emb: CycleEmbedding, n: int, algorithm: str = "deg4-straight") -> Drawing:
    """Drawing of all real cycle edges on their input layers, translated to the origin."""
    edges = []
    for c in emb.assignment.order:
        layer = c.source.layer
        L = len(c.vertices)
        for k, e in enumerate(c.links):
            if e is None or (L == 2 and k == 1):
                continue
            a, b = c.vertices[k], c.vertices[(k + 1) % L]
            edges.append(DrawnEdge(a, b, layer, edge_id=e))
    t = emb.trace
    stats = {
        "candidates_tried": t.candidates_tried,
        "lemma_failures": 0 if t.lemmas_ok else 1,
    }
    return Drawing(list(emb.positions), edges, "straight", algorithm, stats=stats).normalized()


def embed_degree4(g: Graph, labels: Optional[list[str]] = None) -> Drawing:
    """Two-layer straight-line drawing of a graph with maximum degree four."""
    g.require_max_degree(4, labels)
    parts = []
    for comp in g.components():
        sub, vmap, emap = g.subgraph(comp)
        parts.append((_embed_degree4_connected(sub), vmap, emap))
    d = combine_diagonal(parts, g.n, "straight", "deg4-straight")
    d.labels = labels
    d.stats["max_coordinate"] = d.extent
    return d


def embed_degree4_traced(g: Graph) -> list[CycleEmbedding]:
    """Per-component cycle embeddings with their lemma traces (connected pieces only)."""
    out = []
    for comp in g.components():
        sub, _, _ = g.subgraph(comp)
        split = euler_partition(sub)
        in_a, in_b = paths_to_cycle_structure(split.partition, sub)
        out.append(embed_cycle_pair(in_a, in_b, sub.n))
    return out


def _embed_degree4_connected(g: Graph) -> Drawing:
    split = euler_partition(g)
    in_a, in_b = paths_to_cycle_structure(split.partition, g)
    return cycle_drawing(embed_cycle_pair(in_a, in_b, g.n), g.n)
