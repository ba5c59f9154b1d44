import random

import pytest

from injchrom.families import fixture
from injchrom.graphcore import Graph, cycle, path, star
from injchrom.injsolver import (
    BudgetExhausted,
    Coloring,
    greedy_upper_bound,
    injective_chromatic_number,
    injective_k_colorable,
    lower_bound,
    verify_injective,
)
from injchrom.metrics import conflict_graph

from oracles import all_labelled_graphs, chromatic_brute, conflict_pairs, injective_brute, random_graph


def test_verify_examples():
    assert verify_injective(Graph.complete(4), [0, 1, 2, 3])
    assert not verify_injective(path(3), [0, 1, 0])
    assert verify_injective(path(3), [0, 0, 1])
    with pytest.raises(ValueError):
        verify_injective(path(3), [0, 1])


def test_chi_i_examples():
    assert injective_chromatic_number(fixture("G5_base").graph).chi_i == 10
    assert injective_chromatic_number(fixture("D4_chi9").graph).chi_i == 9
    assert injective_chromatic_number(star(5)).chi_i == 5
    assert injective_chromatic_number(cycle(5)).chi_i == 3
    assert injective_chromatic_number(Graph.empty(3)).chi_i == 1
    assert injective_chromatic_number(Graph.empty(0)).chi_i == 0


def test_c5_by_brute_force():
    assert chromatic_brute(5, conflict_pairs(cycle(5))) == 3


def test_k_colorable_examples():
    assert injective_k_colorable(fixture("Fig12_G").graph, 7) is None
    assert injective_k_colorable(Graph.complete(4), 3) is None
    c = injective_k_colorable(Graph.complete(4), 4)
    assert c is not None and verify_injective(Graph.complete(4), c)
    with pytest.raises(ValueError):
        injective_k_colorable(path(3), -1)


def test_bounds_examples():
    assert lower_bound(star(5)) == 5
    assert lower_bound(fixture("D4_chi9").graph) >= 4
    assert lower_bound(Graph.empty(4)) in (0, 1)
    assert greedy_upper_bound(Graph.complete(3))[0] == 3
    assert greedy_upper_bound(path(3))[0] == 2
    assert greedy_upper_bound(Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)]))[0] == 1


def test_all_graphs_up_to_6_against_brute():
    for n in range(0, 7):
        for g in all_labelled_graphs(n):
            res = injective_chromatic_number(g)
            assert res.chi_i == injective_brute(g)
            assert verify_injective(g, res.witness) and res.witness.used == res.chi_i


def test_random_n8_against_brute():
    rng = random.Random(31)
    for _ in range(150):
        g = random_graph(8, rng.uniform(0.15, 0.6), rng)
        assert injective_chromatic_number(g).chi_i == injective_brute(g)


def test_soundness_and_bounds_random():
    rng = random.Random(37)
    for _ in range(200):
        g = random_graph(rng.randint(1, 14), rng.uniform(0.1, 0.6), rng)
        res = injective_chromatic_number(g)
        assert verify_injective(g, res.witness)
        assert res.witness.used == res.chi_i
        assert lower_bound(g) <= res.chi_i <= greedy_upper_bound(g)[0]
        assert injective_k_colorable(g, res.chi_i) is not None
        if res.chi_i:
            assert injective_k_colorable(g, res.chi_i - 1) is None


def test_edge_deletion_monotone():
    rng = random.Random(41)
    for _ in range(40):
        g = random_graph(rng.randint(4, 12), rng.uniform(0.2, 0.5), rng)
        k = injective_chromatic_number(g).chi_i
        for e in g.edges():
            assert injective_chromatic_number(g.delete_edge(*e)).chi_i <= k


def test_pendant_relation():
    rng = random.Random(43)
    for _ in range(60):
        g = random_graph(rng.randint(3, 11), rng.uniform(0.2, 0.6), rng)
        h, w = g.add_vertex([rng.randrange(g.n)])
        assert h.degree(w) == 1
        assert injective_chromatic_number(g).chi_i >= injective_chromatic_number(h).chi_i - 1


def test_determinism():
    g = fixture("G4_0").graph
    a = injective_chromatic_number(g)
    b = injective_chromatic_number(g)
    assert a.witness == b.witness and a.stats.nodes == b.stats.nodes


def test_budget_exhaustion_brackets():
    g = fixture("Fig12_G").graph
    with pytest.raises(BudgetExhausted) as e:
        injective_chromatic_number(g, budget=5)
    assert e.value.lower <= 8 <= e.value.upper
    assert verify_injective(g, e.value.witness)


def test_coloring_range_check():
    with pytest.raises(ValueError):
        Coloring((0, 3), 2)


def test_conflict_graph_chromatic_identity():
    # chi_i(G) = chi(G^(2)) by definition of the conflict graph
    rng = random.Random(47)
    for _ in range(50):
        g = random_graph(7, rng.uniform(0.2, 0.5), rng)
        c = conflict_graph(g).conflicts
        assert injective_chromatic_number(g).chi_i == chromatic_brute(7, {frozenset(e) for e in c.edges()})
