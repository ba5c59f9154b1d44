import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from injchrom.graphcore import Graph, GraphError, complete_bipartite, cycle, path, star
from injchrom.metrics import girth

from oracles import edge_set


def k(n):
    return Graph.complete(n)


def test_neighbors_examples():
    assert k(3).neighbors(0) == {1, 2}
    assert star(4).neighbors(0) == {1, 2, 3, 4}
    assert Graph.empty(3).neighbors(1) == set()


def test_closed_neighborhood_of_set():
    assert k(3).closed_neighborhood_of_set([0]) == {0, 1, 2}
    assert Graph.empty(4).closed_neighborhood_of_set(range(4)) == {0, 1, 2, 3}
    assert path(3).closed_neighborhood_of_set([0]) == {0, 1}


def test_max_degree():
    assert k(4).max_degree() == 3
    assert Graph.empty(5).max_degree() == 0


def test_subdivide():
    g, x = k(3).subdivide_edge(0, 1)
    assert (g.n, g.size, x) == (4, 4, 3)
    assert girth(g) == 4
    p, _ = path(2).subdivide_edge(0, 1)
    assert edge_set(p) == edge_set(Graph.from_edges(3, [(0, 2), (1, 2)]))
    with pytest.raises(GraphError):
        path(3).subdivide_edge(0, 2)


def test_edit_examples():
    assert k(3).delete_vertex(0) == k(2)
    assert path(3).add_edge(0, 2) == k(3)
    with pytest.raises(GraphError):
        k(3).add_edge(0, 1)
    with pytest.raises(GraphError):
        k(3).add_edge(1, 1)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)], [(-1, 0)]])
def test_from_edges_rejects(edges):
    with pytest.raises(GraphError):
        Graph.from_edges(3, edges)


def test_constructor_rejects_asymmetric():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])


def _check_invariants(g: Graph):
    for v in range(g.n):
        assert not g.has_edge(v, v)
        for u in g.neighbors(v):
            assert g.has_edge(u, v)
    assert g.size == len(edge_set(g))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**31), st.integers(2, 14))
def test_random_edit_sequences(seed, n):
    rng = random.Random(seed)
    g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
    for _ in range(12):
        op = rng.randrange(5)
        es = g.edges()
        if op == 0 and g.n >= 2:
            u, v = rng.sample(range(g.n), 2)
            if not g.has_edge(u, v):
                g = g.add_edge(u, v)
        elif op == 1 and es:
            g = g.delete_edge(*rng.choice(es))
        elif op == 2 and es:
            u, v = rng.choice(es)
            h, x = g.subdivide_edge(u, v)
            assert (h.n, h.size) == (g.n + 1, g.size + 1)
            assert h.neighbors(x) == {u, v}
            g = h
        elif op == 3 and g.n > 1:
            v = rng.randrange(g.n)
            h = g.delete_vertex(v)
            assert h.n == g.n - 1
            shift = [x if x < v else x - 1 for x in range(g.n)]
            for a, b in g.edges():
                if v not in (a, b):
                    assert h.has_edge(shift[a], shift[b])
            assert h.size == g.size - g.degree(v)
            g = h
        else:
            g, _ = g.add_vertex(rng.sample(range(g.n), rng.randint(0, g.n)) if g.n else [])
        _check_invariants(g)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**31), st.integers(0, 20))
def test_edge_list_round_trip(seed, n):
    rng = random.Random(seed)
    g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
    assert Graph.from_edges(n, g.to_edge_list()) == g


def test_relabel_and_induced():
    g = cycle(5)
    h = g.relabel([4, 3, 2, 1, 0])
    assert h.size == 5 and all(h.degree(v) == 2 for v in range(5))
    assert g.induced_subgraph([0, 1, 2]) == path(3)
    with pytest.raises(GraphError):
        g.relabel([0, 0, 1, 2, 3])


def test_helpers():
    assert complete_bipartite(3, 3).size == 9
    assert star(5).degree(0) == 5
    assert cycle(4).min_degree() == 2
    assert k(2).disjoint_union(k(2)).size == 2
