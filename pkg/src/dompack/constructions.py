"""Non-recursive certified constructions: dominating-pair paths, convex
interval sweeps, unit-disk coverings, and the max-degree fallback."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .engine import EngineError, WitnessPair, _ratio, _validate_witness
from .graph import (
    Graph,
    GraphError,
    XYInstance,
    closed_neighborhood,
    distances_from,
    is_connected,
)


class NotFoundError(EngineError):
    """No dominating pair: the input is disconnected or not AT-free."""


class EncodingInvalid(EngineError):
    pass


# ---------------------------------------------------------------------------
# AT-free graphs: dominating pair + shortest path
# ---------------------------------------------------------------------------


def is_dominating_pair(g: Graph, u: int, v: int) -> bool:
    """True iff every u-v path is a dominating set: whenever u and v both
    avoid N[z], removing N[z] must disconnect them."""
    for z in g.vertices():
        ball = g.adj[z] | {z}
        if u in ball or v in ball:
            continue
        reach = {u}
        stack = [u]
        while stack:
            a = stack.pop()
            for b in g.adj[a]:
                if b not in ball and b not in reach:
                    reach.add(b)
                    stack.append(b)
        if v in reach:
            return False
    return True


def find_dominating_pair(g: Graph):
    """First pair (by id order) whose every connecting path dominates.

    Exhaustive over pairs; any valid pair serves the construction.
    """
    if not is_connected(g) or g.n == 0:
        raise NotFoundError("dominating pair requires a connected nonempty graph")
    if g.n == 1:
        return (0, 0)
    for u in g.vertices():
        for v in range(u + 1, g.n):
            if is_dominating_pair(g, u, v):
                return (u, v)
    raise NotFoundError("no dominating pair (input not AT-free?)")


def _shortest_path(g: Graph, u: int, v: int) -> list[int]:
    # BFS parents with minimum-id tie-breaking for a deterministic path.
    dist = distances_from(g, u)
    path = [v]
    cur = v
    while cur != u:
        cur = min(w for w in g.adj[cur] if dist.get(w, -1) == dist[cur] - 1)
        path.append(cur)
    path.reverse()
    return path


def construct_atfree(g: Graph) -> WitnessPair:
    """D = a shortest path between a dominating pair, P = every third vertex.

    |D| <= 3|P| + 2; a degenerate two-vertex path still packs one vertex.
    """
    u, v = find_dominating_pair(g)
    path = _shortest_path(g, u, v)
    d = set(path)
    k = len(path) // 3
    p = {path[3 * i] for i in range(k)} if k >= 1 else {path[0]}
    if len(d) > 3 * len(p) + 2:
        raise EngineError("AT-free budget violated")
    inst = XYInstance(g)
    _validate_witness(inst, d, p, "at-free", ())
    return WitnessPair(frozenset(d), frozenset(p), "at-free", Fraction(3), (), _ratio(d, p))


# ---------------------------------------------------------------------------
# Convex bipartite graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConvexEncoding:
    """One side ordered so that every opposite vertex sees an interval.

    x_order is the ordering of the interval-side vertex ids; y_neighbors maps
    each other-side vertex to its neighbor list.
    """

    x_order: tuple[int, ...]
    y_neighbors: dict[int, tuple[int, ...]]

    def to_json(self) -> str:
        return json.dumps(
            {
                "x_order": list(self.x_order),
                "y_neighbors": {str(y): sorted(ns) for y, ns in sorted(self.y_neighbors.items())},
            },
            separators=(",", ":"),
        )

    @staticmethod
    def from_json(s: str) -> "ConvexEncoding":
        try:
            doc = json.loads(s)
            return ConvexEncoding(
                tuple(doc["x_order"]),
                {int(y): tuple(ns) for y, ns in doc["y_neighbors"].items()},
            )
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise EncodingInvalid(f"bad convex encoding JSON: {exc}") from exc

    def to_graph(self) -> Graph:
        n = len(self.x_order) + len(self.y_neighbors)
        ids = sorted(self.x_order) + sorted(self.y_neighbors)
        if sorted(ids) != list(range(n)):
            raise EncodingInvalid("vertex ids must be dense 0..n-1")
        edges = [(x, y) for y, ns in self.y_neighbors.items() for x in ns]
        return Graph.from_edges(n, edges)

    def interval(self, y: int) -> tuple[int, int] | None:
        pos = {x: i for i, x in enumerate(self.x_order)}
        ns = self.y_neighbors[y]
        if not ns:
            return None
        ps = sorted(pos[x] for x in ns)
        return ps[0], ps[-1]


def _check_encoding(g: Graph, enc: ConvexEncoding) -> dict[int, tuple[int, int]]:
    from .families import is_convex_order

    if not is_convex_order(g, enc):
        raise EncodingInvalid("encoding does not match the graph or is not convex")
    if any(not g.adj[v] for v in g.vertices()):
        raise EncodingInvalid("convex construction requires no isolated vertices")
    return {y: enc.interval(y) for y in enc.y_neighbors}


def _packing_ok(intervals, pos, members) -> bool:
    xs = sorted(pos[v] for v in members if v in pos)
    ys = [v for v in members if v not in pos]
    # Interval-side pairs: intervals pairwise disjoint.
    ivs = sorted(intervals[y] for y in ys)
    for (a1, b1), (a2, b2) in zip(ivs, ivs[1:]):
        if a2 <= b1:
            return False
    # A point inside a chosen interval is distance <= 2 from its chooser.
    for lo, hi in ivs:
        if any(lo <= q <= hi for q in xs):
            return False
    # Two points inside one interval (chosen or not) are distance 2 apart.
    for iv in intervals.values():
        if iv is None:
            continue
        lo, hi = iv
        if sum(1 for q in xs if lo <= q <= hi) >= 2:
            return False
    return True


def construct_convex(g: Graph, enc: ConvexEncoding) -> WitnessPair:
    """Interval sweep: maximal packing with short intervals, endpoints and
    extremal intervals as the dominating complement; |D| <= 3|P|."""
    intervals = _check_encoding(g, enc)
    pos = {x: i for i, x in enumerate(enc.x_order)}
    order = sorted(g.vertices())

    def extend(members: set[int]) -> set[int]:
        for v in order:
            if v not in members and _packing_ok(intervals, pos, members | {v}):
                members.add(v)
        return members

    p = extend(set())
    # Improvement loop: swap a packed interval for a strictly shorter one,
    # re-extend, repeat to a fixed point (guarded against cycling).
    seen = set()
    for _ in range(1 + len(intervals) * (len(enc.x_order) + 1)):
        key = frozenset(p)
        if key in seen:
            break
        seen.add(key)
        swapped = False
        for y in sorted(v for v in p if v in intervals):
            lo, hi = intervals[y]
            width = hi - lo
            for y2 in sorted(intervals):
                if y2 in p or intervals[y2] is None:
                    continue
                lo2, hi2 = intervals[y2]
                if hi2 - lo2 >= width:
                    continue
                candidate = (p - {y}) | {y2}
                if _packing_ok(intervals, pos, candidate):
                    p = extend(candidate)
                    swapped = True
                    break
            if swapped:
                break
        if not swapped:
            break

    d = set(p)
    for y in sorted(v for v in p if v in intervals):
        lo, hi = intervals[y]
        d.add(enc.x_order[lo])
        d.add(enc.x_order[hi])
    for x in sorted(v for v in p if v in pos):
        q = pos[x]
        containing = [y for y, iv in intervals.items() if iv and iv[0] <= q <= iv[1]]
        if containing:
            d.add(min(containing, key=lambda y: (intervals[y][0], y)))
            d.add(max(containing, key=lambda y: (intervals[y][1], -y)))
    if len(d) > 3 * len(p):
        raise EngineError("convex budget violated")

    # Direct checks of the two covering properties, then the plain checker.
    x_not_d = [pos[x] for x in pos if x not in d]
    covered = set()
    for y in intervals:
        if y in d and intervals[y]:
            lo, hi = intervals[y]
            covered.update(range(lo, hi + 1))
    if any(q not in covered for q in x_not_d):
        raise EngineError("convex property (interval cover of free points) violated")
    d_points = sorted(pos[x] for x in pos if x in d)
    for y, iv in intervals.items():
        if y in d or iv is None:
            continue
        lo, hi = iv
        if not any(lo <= q <= hi for q in d_points):
            raise EngineError("convex property (points hit uncovered intervals) violated")
    inst = XYInstance(g)
    _validate_witness(inst, d, p, "convex", ())
    return WitnessPair(frozenset(d), frozenset(p), "convex", Fraction(3), (), _ratio(d, p))


# ---------------------------------------------------------------------------
# Unit-disk graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiskConfiguration:
    """Unit-disk centers; disks i and j intersect iff |c_i - c_j| <= 2."""

    centers: tuple[tuple[Fraction, Fraction], ...]

    @staticmethod
    def from_csv(text: str) -> "DiskConfiguration":
        pts = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line:
                continue
            try:
                xs, ys = line.split(",")
                pts.append((Fraction(xs.strip()), Fraction(ys.strip())))
            except (ValueError, ZeroDivisionError) as exc:
                raise GraphError(f"disk CSV line {lineno}: {exc}") from exc
        return DiskConfiguration(tuple(pts))

    def to_csv(self) -> str:
        def fmt(q: Fraction) -> str:
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

        return "\n".join(f"{fmt(x)},{fmt(y)}" for x, y in self.centers) + ("\n" if self.centers else "")

    def intersection_graph(self) -> Graph:
        n = len(self.centers)
        edges = []
        for i in range(n):
            xi, yi = self.centers[i]
            for j in range(i + 1, n):
                xj, yj = self.centers[j]
                if (xi - xj) ** 2 + (yi - yj) ** 2 <= 4:
                    edges.append((i, j))
        return Graph.from_edges(n, edges)


_SQRT3 = 1.7320508075688772


def covering_points(radius: float) -> list[tuple[float, float]]:
    """Centers of unit disks covering the radius-`radius` disk at the origin.

    Hexagonal lattice with nearest-neighbor spacing sqrt(3): each Voronoi
    cell has circumradius 1, so the cells of the returned points cover the
    target disk.  Points whose cell cannot meet the target are dropped.
    """
    pts = []
    reach = radius + 1.0
    span = int(reach / _SQRT3) + 2
    for a in range(-span, span + 1):
        for b in range(-2 * span, 2 * span + 1):
            x = _SQRT3 * a + (_SQRT3 / 2.0) * b
            y = 1.5 * b
            if x * x + y * y <= reach * reach + 1e-12:
                pts.append((x, y))
    pts.sort()
    return pts


def verify_covering(points, radius: float, step: float = 0.01, tol: float = 1e-9) -> bool:
    """Dense-grid check that every sampled point of the target disk lies
    within distance 1 of some covering point (squared-distance tolerance)."""
    import numpy as np

    if radius == 0:
        px = np.array([p[0] for p in points])
        py = np.array([p[1] for p in points])
        return bool(np.min(px * px + py * py) <= 1.0 + tol)
    xs = np.arange(-radius, radius + step / 2, step)
    pts = np.array(points)
    for x in xs:
        span = (radius * radius - x * x)
        if span < 0:
            continue
        h = span ** 0.5
        ys = np.arange(-h, h + step / 2, step)
        dx = x - pts[:, 0]
        d2 = dx[None, :] * dx[None, :] + (ys[:, None] - pts[None, :, 1]) ** 2
        if not np.all(d2.min(axis=1) <= 1.0 + tol):
            return False
    return True


_VERIFIED_COVERINGS: dict[float, list[tuple[float, float]]] = {}


def _covering_for(radius: float) -> list[tuple[float, float]]:
    if radius not in _VERIFIED_COVERINGS:
        pts = covering_points(radius)
        if not verify_covering(pts, radius):
            raise EngineError(f"lattice covering failed grid verification at radius {radius}")
        _VERIFIED_COVERINGS[radius] = pts
    return _VERIFIED_COVERINGS[radius]


def covering_constant() -> int:
    """Cardinality of the verified radius-5 covering used by construct_unitdisk."""
    return len(_covering_for(5.0))


def construct_unitdisk(cfg: DiskConfiguration) -> WitnessPair:
    """Greedy maximal packing; each packed disk's double neighborhood is
    dominated by one input disk per covering point.  |D| <= c_cov * |P|."""
    g = cfg.intersection_graph()
    if g.n == 0:
        return WitnessPair(frozenset(), frozenset(), "unit-disk",
                           Fraction(covering_constant()), (), None)
    p: set[int] = set()
    for v in g.vertices():
        dist = distances_from(g, v)
        if all(dist.get(u, 3) >= 3 for u in p):
            p.add(v)
    cover = _covering_for(5.0)
    d: set[int] = set()
    for v in sorted(p):
        cx, cy = cfg.centers[v]
        for px, py in cover:
            tx, ty = float(cx) + px, float(cy) + py
            best = None
            for i, (xi, yi) in enumerate(cfg.centers):
                if (float(xi) - tx) ** 2 + (float(yi) - ty) ** 2 <= 1.0 + 1e-12:
                    best = i
                    break
            if best is not None:
                d.add(best)
    if len(d) > covering_constant() * len(p):
        raise EngineError("unit-disk budget violated")
    inst = XYInstance(g)
    _validate_witness(inst, d, p, "unit-disk", ())
    return WitnessPair(frozenset(d), frozenset(p), "unit-disk",
                       Fraction(covering_constant()), (), _ratio(d, p))


# ---------------------------------------------------------------------------
# Generic max-degree fallback
# ---------------------------------------------------------------------------


def construct_generic(g: Graph) -> WitnessPair:
    """Greedy maximal packing P and D = N[P]; |D| <= (max degree + 1)|P|."""
    p: set[int] = set()
    for v in sorted(g.vertices(), key=lambda v: (g.degree(v), v)):
        dist = distances_from(g, v)
        if all(dist.get(u, 3) >= 3 for u in p):
            p.add(v)
    d = set(closed_neighborhood(g, p))
    if g.n and len(d) > (g.max_degree() + 1) * max(len(p), 1):
        raise EngineError("generic budget violated")
    inst = XYInstance(g)
    _validate_witness(inst, d, p, "generic", ())
    return WitnessPair(frozenset(d), frozenset(p), "generic",
                       Fraction(g.max_degree() + 1), (), _ratio(d, p))
