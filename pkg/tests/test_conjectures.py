import math

import pytest

from injchrom.conjectures import (
    BOUNDS,
    BoundError,
    VerdictKind,
    chen_bound,
    get_bound,
    girth5_bound,
    la_storgel_bound,
    luzar_bound,
    verdict,
)
from injchrom.families import fixture, prism
from injchrom.graphcore import Graph, cycle, path


@pytest.mark.parametrize("fn,d,want", [
    (chen_bound, 5, 8), (chen_bound, 4, 6), (chen_bound, 8, 12),
    (luzar_bound, 3, 5), (luzar_bound, 6, 11), (luzar_bound, 8, 13),
    (la_storgel_bound, 3, 4), (la_storgel_bound, 5, 7), (la_storgel_bound, 6, 9),
    (girth5_bound, 3, 4), (girth5_bound, 7, 8), (girth5_bound, 1, 2),
])
def test_formula_examples(fn, d, want):
    assert fn(d) == want


def test_chen_is_ceiling():
    for d in range(3, 101):
        assert chen_bound(d) == math.ceil(3 * d / 2)


def test_luzar_vs_chen():
    for d in range(4, 8):
        assert luzar_bound(d) >= chen_bound(d) - 1
    for d in range(8, 101):
        assert luzar_bound(d) == chen_bound(d) + (1 if d % 2 == 0 else 0)


def test_la_storgel_vs_floor():
    for d in range(3, 101):
        assert la_storgel_bound(d) <= 3 * d // 2
        if d >= 6:
            assert la_storgel_bound(d) == 3 * d // 2
    assert [la_storgel_bound(d) for d in (3, 4, 5)] == [4, 6, 7]


@pytest.mark.parametrize("fn,d", [(chen_bound, 2), (la_storgel_bound, 2), (luzar_bound, 0), (girth5_bound, 0)])
def test_out_of_domain(fn, d):
    with pytest.raises(BoundError):
        fn(d)


def test_verdict_examples():
    d4 = fixture("D4_chi9").graph
    v = verdict(d4, "luzar", 9)
    assert v.kind is VerdictKind.ATTAINS and v.bound == 9
    v = verdict(d4, "chen", 9)
    assert v.kind is VerdictKind.VIOLATES and v.bound == 6
    assert verdict(Graph.complete(4), "chen", 4).kind is VerdictKind.SATISFIES


def test_verdict_exhaustive_and_exclusive():
    g = prism(4).graph
    b = la_storgel_bound(3)
    kinds = [verdict(g, "la-storgel", k).kind for k in range(1, 8)]
    for k, kind in zip(range(1, 8), kinds):
        want = VerdictKind.SATISFIES if k < b else VerdictKind.ATTAINS if k == b else VerdictKind.VIOLATES
        assert kind is want
    assert {k for k in kinds} == set(VerdictKind)


def test_girth_requirements():
    with pytest.raises(BoundError):
        verdict(Graph.complete(4), "la-storgel", 4)
    with pytest.raises(BoundError):
        verdict(prism(4).graph, "girth5", 4)
    assert verdict(cycle(5), "girth5", 3).kind is VerdictKind.ATTAINS
    assert BOUNDS["la-storgel"].applicable(3, 4) and not BOUNDS["la-storgel"].applicable(3, 3)
    assert BOUNDS["girth5"].girth_ok(math.inf)


def test_vacuous_low_degree():
    v = verdict(path(3), "chen", 2)
    assert v.kind is VerdictKind.SATISFIES and v.vacuous
    with pytest.raises(BoundError):
        verdict(path(3), "chen", 2, strict=True)


def test_unknown_bound():
    with pytest.raises(BoundError):
        get_bound("nope")
