"""Named graph families, class recognizers, certificate validators, and
desk-scale brute-force certificate finders."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .constructions import ConvexEncoding, DiskConfiguration
from .graph import Graph, GraphError, degeneracy_ordering, distances_from


class OversizeFamilyError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Certificate types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ContractionSequence:
    """Ordered merges (u, v, w) with fresh ids w, ending at a single vertex,
    keeping red degree at most declared_width throughout."""

    merges: tuple[tuple[int, int, int], ...]
    declared_width: int

    def to_json(self) -> str:
        return json.dumps(
            {"width": self.declared_width, "merges": [list(m) for m in self.merges]},
            separators=(",", ":"),
        )

    @staticmethod
    def from_json(s: str) -> "ContractionSequence":
        try:
            doc = json.loads(s)
            return ContractionSequence(
                tuple((int(a), int(b), int(c)) for a, b, c in doc["merges"]),
                int(doc["width"]),
            )
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise GraphError(f"bad contraction-sequence JSON: {exc}") from exc


@dataclass(frozen=True)
class RotationSystem:
    """Per-vertex cyclic order of neighbors (a combinatorial embedding)."""

    rotations: dict[int, tuple[int, ...]]

    def to_json(self) -> str:
        return json.dumps(
            {"rotations": {str(v): list(r) for v, r in sorted(self.rotations.items())}},
            separators=(",", ":"),
        )

    @staticmethod
    def from_json(s: str) -> "RotationSystem":
        try:
            doc = json.loads(s)
            return RotationSystem({int(v): tuple(r) for v, r in doc["rotations"].items()})
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise GraphError(f"bad rotation-system JSON: {exc}") from exc


# ---------------------------------------------------------------------------
# Extremal families
# ---------------------------------------------------------------------------


def gen_chained_blocks(i: int) -> Graph:
    """The subcubic chain of i blocks closed by an extra edge {u1, u2}.

    A block is a six-vertex path with two extra long edges; the chain with
    its closing edge is 3-regular on 6i + 2 vertices and achieves
    gamma = 2i + 1 against rho = i.
    """
    if i < 1:
        raise ValueError("need at least one block")

    def block(base):
        vs = list(range(base, base + 6))
        edges = [(vs[j], vs[j + 1]) for j in range(5)]
        edges += [(vs[0], vs[4]), (vs[1], vs[5])]
        return vs, edges

    edges = []
    blocks = []
    for j in range(i):
        vs, es = block(6 * j)
        blocks.append(vs)
        edges += es
    for j in range(i - 1):
        a, b = blocks[j], blocks[j + 1]
        edges += [(a[0], b[2]), (a[5], b[3])]
    u1, u2 = 6 * i, 6 * i + 1
    edges += [(u1, u2)]
    edges += [(u1, blocks[0][2]), (u2, blocks[0][3])]
    edges += [(u1, blocks[i - 1][0]), (u2, blocks[i - 1][5])]
    return Graph.from_edges(6 * i + 2, edges)


def gen_split(k: int) -> Graph:
    """Split graph with a (2k-1)-clique and one independent vertex per
    k-subset of the clique; gamma = k while rho = 1."""
    if k < 1:
        raise ValueError("k >= 1")
    if k > 5:
        raise OversizeFamilyError("split family grows as C(2k-1,k); capped at k=5")
    c = 2 * k - 1
    subsets = list(combinations(range(c), k))
    n = c + len(subsets)
    edges = [(a, b) for a in range(c) for b in range(a + 1, c)]
    for idx, sub in enumerate(subsets):
        v = c + idx
        edges += [(a, v) for a in sub]
    return Graph.from_edges(n, edges)


def gen_threedeg(k: int) -> Graph:
    """3-degenerate family: 2k spine vertices, one joint vertex per spine
    pair, and an apex over all joints; rho <= 2 while gamma >= k."""
    if k < 1:
        raise ValueError("k >= 1")
    if k > 4:
        raise OversizeFamilyError("family grows as C(2k,2); capped at k=4")
    a = 2 * k
    pairs = list(combinations(range(a), 2))
    n = a + len(pairs) + 1
    apex = n - 1
    edges = []
    for idx, (x, y) in enumerate(pairs):
        b = a + idx
        edges += [(x, b), (y, b), (b, apex)]
    return Graph.from_edges(n, edges)


def gen_rook(n: int) -> Graph:
    """Cartesian product of two n-cliques."""
    if n < 1:
        raise ValueError("n >= 1")
    vid = lambda r, c: r * n + c
    edges = []
    for r in range(n):
        for c1 in range(n):
            for c2 in range(c1 + 1, n):
                edges.append((vid(r, c1), vid(r, c2)))
    for c in range(n):
        for r1 in range(n):
            for r2 in range(r1 + 1, n):
                edges.append((vid(r1, c), vid(r2, c)))
    return Graph.from_edges(n * n, edges)


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("n >= 1")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def gen_petersen() -> Graph:
    edges = [(v, (v + 1) % 5) for v in range(5)]
    edges += [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    edges += [(v, 5 + v) for v in range(5)]
    return Graph.from_edges(10, edges)


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree from a random Pruefer sequence."""
    if n < 1:
        raise ValueError("n >= 1")
    if n == 1:
        return Graph.from_edges(1)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for v in seq:
        deg[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if deg[u] == 1)
        edges.append((leaf, v))
        deg[leaf] -= 1
        deg[v] -= 1
    last = [u for u in range(n) if deg[u] == 1]
    edges.append((last[0], last[1]))
    return Graph.from_edges(n, edges)


def gen_random_unitdisk(n: int, box: float, seed: int) -> DiskConfiguration:
    """n centers uniform in a box x box square, on a hundredth grid."""
    rng = random.Random(seed)
    grid = max(1, int(box * 100))
    pts = tuple(
        (Fraction(rng.randrange(grid + 1), 100), Fraction(rng.randrange(grid + 1), 100))
        for _ in range(n)
    )
    return DiskConfiguration(pts)


def gen_random_convex(nx: int, ny: int, seed: int) -> ConvexEncoding:
    """Random convex bipartite encoding: each right vertex gets a random
    interval over the left ordering, consecutive by construction.  Left
    positions missed by every interval get one singleton interval each so
    the encoding never carries isolated vertices."""
    if nx < 1 or ny < 0:
        raise ValueError("need nx >= 1, ny >= 0")
    rng = random.Random(seed)
    x_order = list(range(nx))
    rng.shuffle(x_order)
    y_neighbors = {}
    covered = set()
    for j in range(ny):
        lo = rng.randrange(nx)
        hi = min(nx - 1, lo + rng.randrange(1 + nx // 2))
        y_neighbors[nx + j] = tuple(x_order[q] for q in range(lo, hi + 1))
        covered.update(range(lo, hi + 1))
    nid = nx + ny
    for q in range(nx):
        if q not in covered:
            y_neighbors[nid] = (x_order[q],)
            nid += 1
    return ConvexEncoding(tuple(x_order), y_neighbors)


# ---------------------------------------------------------------------------
# Recognizers
# ---------------------------------------------------------------------------


def recognize_at_free(g: Graph) -> bool:
    """No independent triple where each pair connects outside the third's
    closed neighborhood (exhaustive over triples)."""

    def linked_avoiding(a: int, b: int, z: int) -> bool:
        ball = g.adj[z] | {z}
        if a in ball or b in ball:
            return False
        reach = {a}
        stack = [a]
        while stack:
            x = stack.pop()
            for w in g.adj[x]:
                if w not in ball and w not in reach:
                    reach.add(w)
                    stack.append(w)
        return b in reach

    for u, v, w in combinations(range(g.n), 3):
        if v in g.adj[u] or w in g.adj[u] or w in g.adj[v]:
            continue
        if (
            linked_avoiding(u, v, w)
            and linked_avoiding(u, w, v)
            and linked_avoiding(v, w, u)
        ):
            return False
    return True


def recognize_split(g: Graph):
    """Degree-sequence split test; returns (clique, independent) or None."""
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            m = i
    lhs = sum(degs[:m])
    rhs = m * (m - 1) + sum(degs[m:])
    if lhs != rhs:
        return None
    clique = set(order[:m])
    indep = set(order[m:])
    for a, b in combinations(sorted(clique), 2):
        if b not in g.adj[a]:
            return None
    for a, b in combinations(sorted(indep), 2):
        if b in g.adj[a]:
            return None
    return frozenset(clique), frozenset(indep)


def recognize_distance_hereditary(g: Graph) -> bool:
    """Iterated isolated/pendant/twin pruning down to nothing."""
    adj = {v: set(g.adj[v]) for v in g.vertices()}

    def drop(v):
        for w in adj[v]:
            adj[w].discard(v)
        del adj[v]

    while len(adj) > 1:
        victim = None
        for v in sorted(adj):
            if len(adj[v]) <= 1:
                victim = v
                break
        if victim is None:
            for u, v in combinations(sorted(adj), 2):
                if adj[u] == adj[v] or (v in adj[u] and adj[u] - {v} == adj[v] - {u}):
                    victim = u
                    break
        if victim is None:
            return False
        drop(victim)
    return True


def recognize_chordal(g: Graph):
    """Perfect elimination order by repeated simplicial removal, or None."""
    adj = {v: set(g.adj[v]) for v in g.vertices()}
    peo = []
    while adj:
        pick = None
        for v in sorted(adj):
            nb = sorted(adj[v])
            if all(b in adj[a] for i, a in enumerate(nb) for b in nb[i + 1 :]):
                pick = v
                break
        if pick is None:
            return None
        peo.append(pick)
        for w in adj[pick]:
            adj[w].discard(pick)
        del adj[pick]
    return peo


def degeneracy(g: Graph) -> int:
    return degeneracy_ordering(g)[1]


def max_degree(g: Graph) -> int:
    return g.max_degree()


def is_convex_order(g: Graph, enc: ConvexEncoding) -> bool:
    """Encoding matches the graph and every right neighborhood is an interval."""
    xs = set(enc.x_order)
    ys = set(enc.y_neighbors)
    if len(xs) != len(enc.x_order) or xs & ys:
        return False
    if xs | ys != set(g.vertices()):
        return False
    edges = {(min(x, y), max(x, y)) for y, ns in enc.y_neighbors.items() for x in ns}
    if any(x not in xs for _, ns in enc.y_neighbors.items() for x in ns):
        return False
    if edges != set(g.edges()):
        return False
    pos = {x: i for i, x in enumerate(enc.x_order)}
    for ns in enc.y_neighbors.values():
        if not ns:
            continue
        ps = sorted(pos[x] for x in ns)
        if ps[-1] - ps[0] + 1 != len(ps):
            return False
    return True


# ---------------------------------------------------------------------------
# Certificate validators
# ---------------------------------------------------------------------------


def validate_tw_certificate(g: Graph, completion: Graph, k: int) -> bool:
    """Chordal supergraph on the same vertices with clique number <= k+1."""
    if completion.n != g.n or not completion.is_plain():
        return False
    gedges = set(g.edges())
    cedges = set(completion.edges())
    if not gedges <= cedges:
        return False
    peo = recognize_chordal(completion)
    if peo is None:
        return False
    later = {}
    seen = set()
    for v in peo:
        later[v] = completion.adj[v] - seen
        seen.add(v)
    clique_number = max((1 + len(later[v]) for v in peo), default=0)
    return clique_number <= k + 1


def validate_contraction_sequence(g: Graph, seq: ContractionSequence, width=None) -> bool:
    """Replay the merges with the recoloring rule; red degree must stay within
    the width at every step and the trigraph must shrink to one vertex."""
    w = seq.declared_width if width is None else width
    adj = {v: set(g.adj[v]) for v in g.vertices()}
    red = {frozenset(e) for e in g.red}

    def red_deg_ok():
        count = {v: 0 for v in adj}
        for e in red:
            for v in e:
                count[v] += 1
        return all(c <= w for c in count.values())

    if not red_deg_ok():
        return False
    used = set(adj)
    for a, b, c in seq.merges:
        if a not in adj or b not in adj or a == b or c in used:
            return False
        used.add(c)
        nbrs = {}
        for x in (adj[a] | adj[b]) - {a, b}:
            black_a = x in adj[a] and frozenset((x, a)) not in red
            black_b = x in adj[b] and frozenset((x, b)) not in red
            nbrs[x] = "black" if (black_a and black_b) else "red"
        for v in (a, b):
            for x in adj[v]:
                adj[x].discard(v)
                red.discard(frozenset((v, x)))
            del adj[v]
        adj[c] = set(nbrs)
        for x, color in nbrs.items():
            adj[x].add(c)
            if color == "red":
                red.add(frozenset((c, x)))
        if not red_deg_ok():
            return False
    return len(adj) <= 1


def validate_rotation_planarity(g: Graph, rs: RotationSystem) -> bool:
    """Face-trace the embedding; genus 0 means V - E + F = 2 per component."""
    if set(rs.rotations) != set(g.vertices()):
        return False
    for v, rot in rs.rotations.items():
        if sorted(rot) != sorted(g.adj[v]):
            return False
    succ = {}
    for v, rot in rs.rotations.items():
        for i, u in enumerate(rot):
            succ[(v, u)] = rot[(i + 1) % len(rot)]
    for comp in _components_sets(g):
        darts = [(u, v) for u in comp for v in g.adj[u]]
        faces = 0
        unseen = set(darts)
        while unseen:
            dart = min(unseen)
            faces += 1
            u, v = dart
            while (u, v) in unseen:
                unseen.discard((u, v))
                u, v = v, succ[(v, u)]
        if not darts:
            faces = 1
        e = sum(len(g.adj[u]) for u in comp) // 2
        if len(comp) - e + faces != 2:
            return False
    return True


def _components_sets(g: Graph):
    seen = set()
    out = []
    for v in g.vertices():
        if v not in seen:
            comp = set(distances_from(g, v))
            seen |= comp
            out.append(comp)
    return out


# ---------------------------------------------------------------------------
# Brute-force certificate finders (desk scale)
# ---------------------------------------------------------------------------


def brute_force_tw_certificate(g: Graph, k: int):
    """Chordal completion of width <= k via elimination-order DP, or None."""
    if g.n > 10:
        raise OversizeFamilyError("treewidth finder capped at n = 10")
    if g.n == 0:
        return Graph.from_edges(0)
    n = g.n
    full = (1 << n) - 1

    def reach_degree(v: int, inside: int) -> int:
        # Neighbors of v outside `inside` plus those reachable through it.
        seen = 1 << v
        stack = [v]
        out = set()
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                bit = 1 << y
                if seen & bit:
                    continue
                seen |= bit
                if inside & bit:
                    stack.append(y)
                else:
                    out.add(y)
        return len(out)

    INF = n + 1
    width = [INF] * (1 << n)
    choice = [-1] * (1 << n)
    width[0] = 0
    for s in range(1, 1 << n):
        best = INF
        pick = -1
        t = s
        while t:
            v = (t & -t).bit_length() - 1
            t &= t - 1
            rest = s & ~(1 << v)
            cand = max(width[rest], reach_degree(v, rest))
            if cand < best:
                best = cand
                pick = v
        width[s] = best
        choice[s] = pick
    if width[full] > k:
        return None
    order = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s &= ~(1 << v)
    order.reverse()  # elimination order: order[0] eliminated first
    adj = {v: set(g.adj[v]) for v in g.vertices()}
    fill = set(g.edges())
    for v in order:
        nb = sorted(adj[v])
        for i, a in enumerate(nb):
            for b in nb[i + 1 :]:
                if b not in adj[a]:
                    adj[a].add(b)
                    adj[b].add(a)
                fill.add((a, b) if a < b else (b, a))
        for w in adj[v]:
            adj[w].discard(v)
        del adj[v]
    completion = Graph.from_edges(n, sorted(fill))
    assert validate_tw_certificate(g, completion, k)
    return completion


def brute_force_tww_sequence(g: Graph, k: int):
    """Width-k contraction sequence by DFS over partitions, or None."""
    if g.n > 8:
        raise OversizeFamilyError("twin-width finder capped at n = 8")
    if g.n <= 1:
        return ContractionSequence((), k)

    base_adj = g.adj
    base_red = g.red

    def relation(bag_a, bag_b):
        any_edge = False
        all_black = True
        for a in bag_a:
            for b in bag_b:
                if b in base_adj[a]:
                    any_edge = True
                    if frozenset((a, b)) in base_red:
                        all_black = False
                else:
                    all_black = False
        if not any_edge:
            return None
        return "black" if all_black else "red"

    def red_ok(bags):
        for x in bags:
            deg = sum(1 for y in bags if y != x and relation(x, y) == "red")
            if deg > k:
                return False
        return True

    start = tuple(frozenset((v,)) for v in range(g.n))
    if not red_ok(start):
        return None
    failed = set()

    def dfs(bags):
        if len(bags) == 1:
            return []
        key = frozenset(bags)
        if key in failed:
            return None
        for i, j in combinations(range(len(bags)), 2):
            merged = bags[i] | bags[j]
            nxt = tuple(b for t, b in enumerate(bags) if t not in (i, j)) + (merged,)
            if not red_ok(nxt):
                continue
            sub = dfs(nxt)
            if sub is not None:
                return [(bags[i], bags[j], merged)] + sub
        failed.add(key)
        return None

    plan = dfs(start)
    if plan is None:
        return None
    names = {frozenset((v,)): v for v in range(g.n)}
    fresh = g.n
    merges = []
    for a, b, c in plan:
        merges.append((names[a], names[b], fresh))
        names[c] = fresh
        fresh += 1
    seq = ContractionSequence(tuple(merges), k)
    assert validate_contraction_sequence(g, seq)
    return seq


# ---------------------------------------------------------------------------
# Enumeration (labeled, and unlabeled with bounded degree)
# ---------------------------------------------------------------------------


def enumerate_labeled_graphs(n: int):
    """All labeled graphs on n vertices (no isomorphism rejection), n <= 7."""
    if n > 7:
        raise OversizeFamilyError("labeled enumeration capped at n = 7")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        yield Graph.from_edges(n, edges)


def _refine_masks(adj: tuple[int, ...]) -> tuple[tuple, tuple]:
    n = len(adj)
    colors = tuple(adj[v].bit_count() for v in range(n))
    for _ in range(n):
        raw = []
        for v in range(n):
            m = adj[v]
            around = []
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                around.append(colors[u])
            around.sort()
            raw.append((colors[v], tuple(around)))
        ranks = {val: i for i, val in enumerate(sorted(set(raw)))}
        new = tuple(ranks[r] for r in raw)
        if new == colors:
            break
        colors = new
    return tuple(sorted(colors)), colors


def _masks_isomorphic(a1: tuple[int, ...], a2: tuple[int, ...], col1, col2) -> bool:
    n = len(a1)
    order = sorted(range(n), key=lambda v: (col1[v], -a1[v].bit_count(), v))
    targets: dict[int, list[int]] = {}
    for v in range(n):
        targets.setdefault(col2[v], []).append(v)
    mapping = [-1] * n
    mapped_src = 0
    mapped_img = 0

    def extend(idx: int) -> bool:
        nonlocal mapped_src, mapped_img
        if idx == n:
            return True
        v = order[idx]
        want = a1[v] & mapped_src
        for w in targets.get(col1[v], ()):
            bw = 1 << w
            if mapped_img & bw:
                continue
            # Edges from v to mapped vertices must map onto edges at w.
            img = 0
            m = want
            good = True
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                img |= 1 << mapping[u]
            if (a2[w] & mapped_img) != img:
                good = False
            if good:
                mapping[v] = w
                mapped_src |= 1 << v
                mapped_img |= bw
                if extend(idx + 1):
                    return True
                mapped_src &= ~(1 << v)
                mapped_img &= ~bw
                mapping[v] = -1
        return False

    return extend(0)


def _masks_to_graph(adj: tuple[int, ...]) -> Graph:
    edges = []
    for u in range(len(adj)):
        m = adj[u] >> (u + 1)
        v = u + 1
        while m:
            if m & 1:
                edges.append((u, v))
            m >>= 1
            v += 1
    return Graph.from_edges(len(adj), edges)


def enumerate_connected_bounded_degree(n_max: int, max_deg: int):
    """One representative per isomorphism class of connected graphs with the
    degree bound, for every order up to n_max.  Grown by vertex augmentation
    (every connected graph has a non-cut vertex), deduplicated by a
    refinement certificate plus exact isomorphism."""
    reps: list[tuple[int, ...]] = [(0,)]
    yield Graph.from_edges(1)
    for n in range(2, n_max + 1):
        buckets: dict[tuple, list[tuple]] = {}
        out: list[tuple[int, ...]] = []
        new_bit = 1 << (n - 1)
        for adj in reps:
            low = [v for v in range(n - 1) if adj[v].bit_count() < max_deg]
            for size in range(1, max_deg + 1):
                for sub in combinations(low, size):
                    grown = list(adj) + [0]
                    for v in sub:
                        grown[v] |= new_bit
                        grown[n - 1] |= 1 << v
                    cand = tuple(grown)
                    sig, colors = _refine_masks(cand)
                    edge_count = sum(m.bit_count() for m in cand) // 2
                    key = (edge_count, sig)
                    bucket = buckets.setdefault(key, [])
                    clash = False
                    for other, other_colors in bucket:
                        if _masks_isomorphic(cand, other, colors, other_colors):
                            clash = True
                            break
                    if clash:
                        continue
                    bucket.append((cand, colors))
                    out.append(cand)
        for cand in out:
            yield _masks_to_graph(cand)
        reps = out


# ---------------------------------------------------------------------------
# Family metadata for the CLI
# ---------------------------------------------------------------------------


def family_metadata() -> list[dict]:
    return [
        {
            "name": "chained-blocks",
            "parameters": {"i": "number of blocks, >= 1"},
            "guarantees": "max degree 3, connected; gamma = 2i+1, rho = i",
        },
        {
            "name": "split",
            "parameters": {"k": "1..5"},
            "guarantees": "split graph; gamma = k, rho = 1",
        },
        {
            "name": "threedeg",
            "parameters": {"k": "1..4"},
            "guarantees": "3-degenerate; rho <= 2, gamma >= k",
        },
        {
            "name": "rook",
            "parameters": {"n": ">= 1"},
            "guarantees": "product of two n-cliques; gamma = n, rho = 1",
        },
        {"name": "cycle", "parameters": {"n": ">= 3"}, "guarantees": "gamma <= rho + 1"},
        {"name": "path", "parameters": {"n": ">= 1"}, "guarantees": "tree: gamma = rho"},
        {"name": "petersen", "parameters": {}, "guarantees": "gamma = 3 = 2*rho + 1"},
        {
            "name": "random-tree",
            "parameters": {"n": ">= 1", "seed": "int"},
            "guarantees": "uniform labeled tree; gamma = rho",
        },
        {
            "name": "random-unitdisk",
            "parameters": {"n": ">= 0", "box": "side length", "seed": "int"},
            "guarantees": "unit-disk configuration (CSV output)",
        },
        {
            "name": "random-convex",
            "parameters": {"nx": ">= 1", "ny": ">= 0", "seed": "int"},
            "guarantees": "convex bipartite encoding (JSON output)",
        },
    ]
