import math

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from dompack.graph import (
    Graph,
    GraphError,
    Graph6Error,
    INFINITY,
    add_edge,
    add_vertex,
    closed_neighborhood,
    components,
    degeneracy_ordering,
    delete_edge,
    delete_vertex,
    distance,
    from_edge_json,
    from_graph6,
    induced,
    power2_conflict_graph,
    to_edge_json,
    to_graph6,
)
from conftest import complete, named

from dompack import families


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, picks) if keep])


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 2)])

    def test_adjacency_symmetric(self):
        g = named("c5")
        for u in g.vertices():
            for v in g.adj[u]:
                assert u in g.adj[v]

    def test_red_edges(self):
        g = Graph.from_edges(3, [(0, 1)], red_edges=[(1, 2)])
        assert g.is_red(1, 2) and g.is_red(2, 1)
        assert not g.is_red(0, 1)
        assert g.black_neighbors(1) == {0}
        assert not g.is_plain()


class TestClosedNeighborhood:
    def test_petersen_singleton(self, petersen):
        assert len(closed_neighborhood(petersen, {0})) == 4

    def test_empty(self):
        assert closed_neighborhood(named("c5"), ()) == frozenset()

    def test_c5_pair(self):
        assert closed_neighborhood(named("c5"), {0, 2}) == frozenset(range(5))

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_union_homomorphism(self, g):
        verts = list(g.vertices())
        s1 = frozenset(verts[::2])
        s2 = frozenset(verts[1::3])
        assert closed_neighborhood(g, s1 | s2) == closed_neighborhood(
            g, s1
        ) | closed_neighborhood(g, s2)


class TestDistance:
    def test_c5(self):
        assert distance(named("c5"), 0, 2) == 2

    def test_disconnected_infinite(self):
        g = Graph.from_edges(2)
        assert distance(g, 0, 1) == INFINITY
        assert math.isinf(distance(g, 0, 1))

    def test_chained_blocks_chaining_edge(self):
        # Chaining joins the first block's outer vertex to the next block's
        # level-one vertex, so they sit at distance 1.
        g = families.gen_chained_blocks(2)
        assert distance(g, 0, 8) == 1

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_symmetry_and_triangle(self, g):
        for u in g.vertices():
            for v in g.vertices():
                assert distance(g, u, v) == distance(g, v, u)
        for u in g.vertices():
            for v in g.vertices():
                for w in g.vertices():
                    assert distance(g, u, w) <= distance(g, u, v) + distance(g, v, w)


class TestDegeneracy:
    def test_tree(self):
        assert degeneracy_ordering(families.gen_random_tree(5, 1))[1] == 1

    def test_k4(self):
        assert degeneracy_ordering(complete(4))[1] == 3

    def test_threedeg_family(self):
        # Exhaustive reference: degeneracy = max over subgraphs of min degree.
        g = families.gen_threedeg(2)
        assert degeneracy_ordering(g)[1] == 3

    @given(graphs())
    @settings(max_examples=40, deadline=None)
    def test_back_degree_bound(self, g):
        order, d = degeneracy_ordering(g)
        seen = set()
        realized = 0
        for v in order:
            back = len(g.adj[v] - seen)
            assert back <= d
            realized = max(realized, back)
            seen.add(v)
        assert realized == d

    @given(graphs(max_n=7))
    @settings(max_examples=25, deadline=None)
    def test_some_subgraph_realizes(self, g):
        if g.n == 0:
            return
        _, d = degeneracy_ordering(g)
        best = 0
        for mask in range(1, 1 << g.n):
            verts = [v for v in g.vertices() if (mask >> v) & 1]
            vs = set(verts)
            mind = min(len(g.adj[v] & vs) for v in verts)
            best = max(best, mind)
        assert best == d


class TestConflictGraph:
    def test_c6(self):
        h = power2_conflict_graph(named("c6"))
        expect = set(named("c6").edges()) | {(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5)}
        assert set(h.edges()) == expect

    def test_edgeless(self):
        h = power2_conflict_graph(Graph.from_edges(4))
        assert h.edge_count == 0

    def test_star_becomes_clique(self):
        h = power2_conflict_graph(named("star3"))
        assert h.edge_count == 6

    @given(graphs(max_n=7))
    @settings(max_examples=30, deadline=None)
    def test_monotone_under_edge_addition(self, g):
        if g.n < 2:
            return
        non_edges = [
            (u, v)
            for u in g.vertices()
            for v in range(u + 1, g.n)
            if v not in g.adj[u]
        ]
        if not non_edges:
            return
        before = set(power2_conflict_graph(g).edges())
        bigger = add_edge(g, *non_edges[0])
        after = set(power2_conflict_graph(bigger).edges())
        assert before <= after


class TestBuilders:
    def test_components(self):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert components(g) == [frozenset({0, 1, 2}), frozenset({3, 4, 5})]

    def test_delete_vertex_reindexes(self):
        g = delete_vertex(named("c4"), 0)
        assert g.n == 3 and g.edge_count == 2

    def test_add_vertex_then_edge(self):
        g, vid = add_vertex(Graph.from_edges(1))
        assert vid == 1
        g = add_edge(g, 0, 1)
        assert g.edge_count == 1

    def test_delete_edge(self):
        g = delete_edge(named("c4"), 0, 1)
        assert g.edge_count == 3

    def test_induced(self):
        g = induced(named("c5"), {0, 1, 2})
        assert g.n == 3 and g.edge_count == 2


class TestGraph6:
    def test_roundtrip_named(self):
        for name in ("k1", "k2", "c4", "c5", "petersen", "star3"):
            g = named(name)
            assert from_graph6(to_graph6(g)).adj == g.adj

    @given(graphs())
    @settings(max_examples=80, deadline=None)
    def test_matches_networkx(self, g):
        s = to_graph6(g)
        h = nx.from_graph6_bytes(s.encode())
        assert set(h.nodes()) == set(g.vertices())
        assert {tuple(sorted(e)) for e in h.edges()} == set(g.edges())
        back = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert back == s

    def test_header_accepted(self):
        assert from_graph6(">>graph6<<A_").edge_count == 1

    def test_malformed(self):
        with pytest.raises(Graph6Error):
            from_graph6("B")  # truncated body
        with pytest.raises(Graph6Error):
            from_graph6("A" + chr(200))

    def test_large_order_prefix(self):
        g = Graph.from_edges(63, [(0, 62)])
        assert from_graph6(to_graph6(g)).edges() == [(0, 62)]


class TestEdgeJson:
    def test_roundtrip_with_colors(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2)], red_edges=[(2, 3)])
        h = from_edge_json(to_edge_json(g))
        assert h.adj == g.adj and h.red == g.red

    def test_bad_json(self):
        with pytest.raises(GraphError):
            from_edge_json("{}")
