"""Immutable graph substrate: adjacency, distances, degeneracy, conflict graphs, I/O.

Vertices are dense integers 0..n-1. Edges carry a color tag, black by default;
a graph with no red edges is "plain". Graphs are immutable after construction:
the builder-style mutators return new values.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from enum import Enum
from math import inf

Edge = tuple[int, int]

INFINITY = inf


class GraphError(ValueError):
    """Malformed graph construction or invalid vertex/edge reference."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with an optional red/black edge coloring."""

    n: int
    adj: tuple[frozenset[int], ...]
    red: frozenset[Edge] = frozenset()
    labels: tuple[str, ...] | None = None

    @staticmethod
    def from_edges(n, edges=(), red_edges=(), labels=None) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        red = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        for u, v in red_edges:
            e = _norm(u, v)
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise GraphError(f"bad red edge ({u},{v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            red.add(e)
        if labels is not None and len(labels) != n:
            raise GraphError("labels length must equal vertex count")
        return Graph(
            n,
            tuple(frozenset(s) for s in nbrs),
            frozenset(red),
            tuple(labels) if labels is not None else None,
        )

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self.adj[u]

    def is_red(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.red

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def is_plain(self) -> bool:
        return not self.red

    def max_degree(self) -> int:
        return max((len(s) for s in self.adj), default=0)

    def black_neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(u for u in self.adj[v] if _norm(u, v) not in self.red)

    def _check(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def check_vertex_set(self, s) -> frozenset[int]:
        s = frozenset(s)
        for v in s:
            self._check(v)
        return s


class Mode(Enum):
    PLAIN = "plain"
    TOTAL = "total"
    BLACK = "black"


@dataclass(frozen=True)
class XYInstance:
    """A graph with free-dominator set X, pre-dominated set Y, and a mode tag.

    X dominates for free and may have had a deleted neighbor in the packing;
    Y is already dominated and may sit at distance two from a deleted packing
    vertex.  Plain/Total instances must be on plain (all-black) graphs; Black
    instances may carry red edges but require X to be empty.
    """

    graph: Graph
    x_set: frozenset[int] = frozenset()
    y_set: frozenset[int] = frozenset()
    mode: Mode = Mode.PLAIN

    def __post_init__(self):
        object.__setattr__(self, "x_set", self.graph.check_vertex_set(self.x_set))
        object.__setattr__(self, "y_set", self.graph.check_vertex_set(self.y_set))
        if self.mode is not Mode.BLACK and self.graph.red:
            raise GraphError(f"{self.mode.value} mode requires an all-black graph")
        if self.mode is Mode.BLACK and self.x_set:
            raise GraphError("black mode is defined for empty X only")


# ---------------------------------------------------------------------------
# Neighborhood and distance primitives
# ---------------------------------------------------------------------------


def closed_neighborhood(g: Graph, s) -> frozenset[int]:
    """N[s]: the members of s together with all their neighbors."""
    s = g.check_vertex_set(s)
    out = set(s)
    for v in s:
        out |= g.adj[v]
    return frozenset(out)


def open_neighborhood(g: Graph, s) -> frozenset[int]:
    """N(s): all neighbors of members of s (members excluded unless adjacent)."""
    s = g.check_vertex_set(s)
    out = set()
    for v in s:
        out |= g.adj[v]
    return frozenset(out)


def distances_from(g: Graph, u: int) -> dict[int, int]:
    """BFS distance map from u; unreachable vertices are absent."""
    g._check(u)
    dist = {u: 0}
    q = deque([u])
    while q:
        w = q.popleft()
        for x in g.adj[w]:
            if x not in dist:
                dist[x] = dist[w] + 1
                q.append(x)
    return dist


def distance(g: Graph, u: int, v: int):
    """Shortest-path distance; INFINITY when disconnected. Edge colors are ignored."""
    g._check(v)
    return distances_from(g, u).get(v, INFINITY)


def power2_conflict_graph(g: Graph) -> Graph:
    """Same vertices; edge uv iff 1 <= dist(u,v) <= 2.

    Independent sets of this graph are exactly the packings of g.
    """
    edges = []
    for u in range(g.n):
        ball = set(g.adj[u])
        for w in g.adj[u]:
            ball |= g.adj[w]
        ball.discard(u)
        edges.extend((u, v) for v in ball if u < v)
    return Graph.from_edges(g.n, edges)


def degeneracy_ordering(g: Graph) -> tuple[list[int], int]:
    """Repeatedly remove a minimum-degree vertex (ties by id).

    Returns the removal order and the largest degree seen at removal time,
    which equals the degeneracy of the graph.
    """
    deg = {v: g.degree(v) for v in range(g.n)}
    live_adj = {v: set(g.adj[v]) for v in range(g.n)}
    order: list[int] = []
    degeneracy = 0
    remaining = set(range(g.n))
    while remaining:
        v = min(remaining, key=lambda x: (deg[x], x))
        degeneracy = max(degeneracy, deg[v])
        order.append(v)
        remaining.discard(v)
        for w in live_adj[v]:
            live_adj[w].discard(v)
            deg[w] -= 1
        del live_adj[v], deg[v]
    return order, degeneracy


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components as vertex sets, ordered by smallest member."""
    seen: set[int] = set()
    out = []
    for v in range(g.n):
        if v in seen:
            continue
        comp = set(distances_from(g, v))
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(distances_from(g, 0)) == g.n


# ---------------------------------------------------------------------------
# Builder-mode mutators (each returns a new Graph value)
# ---------------------------------------------------------------------------


def induced(g: Graph, s) -> Graph:
    """Induced subgraph on s, reindexed to 0..|s|-1 in sorted id order."""
    keep = sorted(g.check_vertex_set(s))
    index = {v: i for i, v in enumerate(keep)}
    edges = []
    red = []
    for u in keep:
        for v in g.adj[u]:
            if u < v and v in index:
                (red if g.is_red(u, v) else edges).append((index[u], index[v]))
    labels = tuple(g.labels[v] for v in keep) if g.labels is not None else None
    return Graph.from_edges(len(keep), edges, red, labels)


def delete_vertex(g: Graph, v: int) -> Graph:
    g._check(v)
    return induced(g, set(range(g.n)) - {v})


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"no edge ({u},{v})")
    e = _norm(u, v)
    edges = [f for f in g.edges() if f != e]
    red = [f for f in g.red if f != e]
    return Graph.from_edges(g.n, [f for f in edges if f not in g.red], red, g.labels)


def add_vertex(g: Graph, label: str | None = None) -> tuple[Graph, int]:
    """Append a fresh isolated vertex; returns the new graph and its id."""
    labels = None
    if g.labels is not None or label is not None:
        old = g.labels if g.labels is not None else ("",) * g.n
        labels = old + (label if label is not None else "",)
    black = [e for e in g.edges() if e not in g.red]
    return Graph.from_edges(g.n + 1, black, g.red, labels), g.n


def add_edge(g: Graph, u: int, v: int, color: str = "black") -> Graph:
    g._check(u)
    g._check(v)
    if u == v:
        raise GraphError("self-loop")
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u},{v}) already present")
    black = [e for e in g.edges() if e not in g.red]
    red = list(g.red)
    if color == "red":
        red.append(_norm(u, v))
    elif color == "black":
        black.append(_norm(u, v))
    else:
        raise GraphError(f"unknown edge color {color!r}")
    return Graph.from_edges(g.n, black, red, g.labels)


# ---------------------------------------------------------------------------
# graph6 codec (bit-exact: 6-bit chunks, 63-offset bytes, column-major upper
# triangle) and the JSON edge-list format.
# ---------------------------------------------------------------------------


class Graph6Error(ValueError):
    pass


def _g6_encode_n(n: int) -> str:
    if n < 0:
        raise Graph6Error("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error("order too large for this encoder")


def _g6_decode_n(s: str) -> tuple[int, str]:
    if not s:
        raise Graph6Error("empty graph6 string")
    if s[0] != "~":
        return ord(s[0]) - 63, s[1:]
    if len(s) < 4 or s[1] == "~":
        raise Graph6Error("unsupported graph6 order prefix")
    n = 0
    for c in s[1:4]:
        n = (n << 6) | (ord(c) - 63)
    return n, s[4:]


def to_graph6(g: Graph) -> str:
    """Encode the underlying plain graph (colors are not representable)."""
    bits = []
    for v in range(1, g.n):
        row = g.adj[v]
        bits.extend(1 if u in row else 0 for u in range(v))
    while len(bits) % 6:
        bits.append(0)
    out = [_g6_encode_n(g.n)]
    for i in range(0, len(bits), 6):
        word = 0
        for b in bits[i : i + 6]:
            word = (word << 1) | b
        out.append(chr(word + 63))
    return "".join(out)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    n, body = _g6_decode_n(s)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    bits = []
    for c in body:
        w = ord(c) - 63
        if not (0 <= w < 64):
            raise Graph6Error(f"byte {c!r} out of graph6 range")
        bits.extend((w >> s6) & 1 for s6 in (5, 4, 3, 2, 1, 0))
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph.from_edges(n, edges)


def to_edge_json(g: Graph) -> str:
    doc = {
        "n": g.n,
        "edges": sorted(e for e in g.edges() if e not in g.red),
        "red_edges": sorted(g.red),
    }
    return json.dumps(doc, separators=(",", ":"))


def from_edge_json(s: str) -> Graph:
    try:
        doc = json.loads(s)
        return Graph.from_edges(doc["n"], doc["edges"], doc.get("red_edges", ()))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise GraphError(f"bad edge-list JSON: {exc}") from exc
