import pickle

import pytest

import oracle
from mutvis import (
    VertexSet,
    build_graph,
    complete_graph,
    cycle_graph,
    g_n_graph,
    path_graph,
    petersen_graph,
)
from mutvis.errors import DisconnectedGraph, DuplicateEdge, InvalidEdge


def test_build_graph_single_edge():
    g = build_graph(2, [(0, 1)])
    assert g.dist[0][1] == 1
    assert g.spcount[0][1] == 1


def test_build_graph_rejects_bad_edges():
    with pytest.raises(InvalidEdge):
        build_graph(3, [(0, 3)])
    with pytest.raises(InvalidEdge):
        build_graph(3, [(1, 1)])
    with pytest.raises(InvalidEdge):
        build_graph(0, [])
    with pytest.raises(DuplicateEdge):
        build_graph(3, [(0, 1), (1, 0), (1, 2)])
    with pytest.raises(DisconnectedGraph):
        build_graph(4, [(0, 1), (2, 3)])


def test_even_cycle_has_two_shortest_arcs():
    g = cycle_graph(6).graph
    assert g.dist[0][3] == 3
    assert g.spcount[0][3] == 2


def test_petersen_distances_and_uniqueness():
    g = petersen_graph().graph
    assert g.diameter() == 2
    assert all(
        g.spcount[u][v] == 1 for u in range(10) for v in range(10) if u != v
    )
    assert g.is_geodetic()


def test_shortest_path_counts_match_path_enumeration(tiny_corpus):
    for name, g in tiny_corpus:
        dist = oracle.bfs_distances(g)
        for u in range(g.n):
            for v in range(g.n):
                assert dist[u][v] == g.dist[u][v], (name, u, v)
                got = g.spcount[u][v]
                want = len(oracle.all_shortest_paths(g, dist, u, v))
                assert got == want, (name, u, v, got, want)


def test_interval_examples():
    c6 = cycle_graph(6).graph
    assert set(c6.interval(0, 2)) == {0, 1, 2}
    assert set(c6.interval(0, 3)) == {0, 1, 2, 3, 4, 5}
    assert set(c6.interval(0, 0)) == {0}
    c4 = cycle_graph(4).graph
    assert set(c4.interval(0, 2)) == {0, 1, 2, 3}


def test_convexity_examples():
    c6 = cycle_graph(6).graph
    assert c6.is_convex(c6.vertex_set([0, 1, 2]))
    assert not c6.is_convex(c6.vertex_set([0, 3]))
    assert c6.is_convex(c6.vertex_set())
    assert c6.is_convex(c6.vertex_set([2]))
    built = g_n_graph(3)
    for cycle in built.five_cycles:
        assert built.graph.is_convex(cycle)


def test_isometric_examples():
    c6 = cycle_graph(6).graph
    assert c6.is_isometric(c6.vertex_set([2, 3, 4, 5]))
    assert not c6.is_isometric(c6.vertex_set([0, 3]))
    assert c6.is_isometric(c6.all_vertices())
    assert c6.is_isometric(c6.vertex_set())


def test_convex_implies_isometric(small_corpus):
    for name, g in small_corpus:
        if g.n > 8:
            continue
        for bits in range(1 << g.n):
            S = VertexSet(g.n, bits)
            if g.is_convex(S) and len(S) >= 1:
                assert g.is_isometric(S), (name, bits)


def test_geodetic_flags():
    assert not cycle_graph(4).graph.is_geodetic()
    assert cycle_graph(5).graph.is_geodetic()
    assert path_graph(7).graph.is_geodetic()
    assert complete_graph(5).graph.is_geodetic()


def test_geodetic_intervals_induce_paths(small_corpus):
    for name, g in small_corpus:
        if not g.is_geodetic():
            continue
        for u in range(g.n):
            for v in range(u + 1, g.n):
                members = g.interval(u, v).members()
                degrees = []
                for x in members:
                    degrees.append(
                        sum(1 for y in members if y != x and g.has_edge(x, y))
                    )
                assert sorted(degrees) == [1, 1] + [2] * (len(members) - 2), (
                    name,
                    u,
                    v,
                )


def test_simplicial_vertices():
    assert set(path_graph(5).graph.simplicial_vertices()) == {0, 4}
    assert set(cycle_graph(5).graph.simplicial_vertices()) == set()
    assert set(complete_graph(4).graph.simplicial_vertices()) == {0, 1, 2, 3}


def test_bypass_vertices():
    assert set(path_graph(4).graph.bypass_vertices()) == {0, 3}
    assert set(cycle_graph(4).graph.bypass_vertices()) == {0, 1, 2, 3}
    assert set(petersen_graph().graph.bypass_vertices()) == set()


def test_simplicial_subset_of_bypass(small_corpus):
    for name, g in small_corpus:
        assert g.simplicial_vertices() <= g.bypass_vertices(), name


def test_simplicial_never_internal(small_corpus):
    for name, g in small_corpus:
        for v in g.simplicial_vertices():
            for u in range(g.n):
                for w in range(g.n):
                    if v in (u, w):
                        continue
                    assert g.dist[u][v] + g.dist[v][w] > g.dist[u][w], (name, u, v, w)


def test_distance_matrix_laws(small_corpus):
    for name, g in small_corpus:
        for u in range(g.n):
            assert g.dist[u][u] == 0
            assert g.spcount[u][u] == 1
            for v in range(g.n):
                assert g.dist[u][v] == g.dist[v][u]
                assert (g.dist[u][v] == 1) == g.has_edge(u, v)
                assert g.spcount[u][v] >= 1
                for w in range(g.n):
                    assert g.dist[u][w] <= g.dist[u][v] + g.dist[v][w], name


def test_vertex_set_algebra():
    a = VertexSet.of(6, [0, 1])
    b = VertexSet.of(6, [1, 3])
    assert set(a | b) == {0, 1, 3}
    assert set(a & b) == {1}
    assert set(a - b) == {0}
    assert set(a.complement()) == {2, 3, 4, 5}
    assert len(a) == 2 and 0 in a and 2 not in a
    assert a.with_vertex(5) == VertexSet.of(6, [0, 1, 5])
    assert a.without_vertex(0) == VertexSet.of(6, [1])
    assert VertexSet.of(6, [0]) <= a
    with pytest.raises(ValueError):
        a | VertexSet.of(7, [0])
    with pytest.raises(ValueError):
        VertexSet.of(3, [5])


def test_induced_subgraph_and_deletion():
    g = cycle_graph(6).graph
    sub, order = g.induced_subgraph(g.vertex_set([2, 3, 4, 5]))
    assert order == (2, 3, 4, 5)
    assert sub.edges == ((0, 1), (1, 2), (2, 3))
    with pytest.raises(DisconnectedGraph):
        g.induced_subgraph(g.vertex_set([0, 3]))
    h, order = path_graph(4).graph.delete_vertex(3)
    assert h.n == 3 and order == (0, 1, 2)
    with pytest.raises(DisconnectedGraph):
        path_graph(4).graph.delete_vertex(1)


def test_graph_pickles_to_equal_structure():
    g = petersen_graph().graph
    clone = pickle.loads(pickle.dumps(g))
    assert clone.n == g.n
    assert clone.edges == g.edges
    assert clone.dist == g.dist
    assert clone.spcount == g.spcount
