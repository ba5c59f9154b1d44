"""Deliberately naive reference implementations used only by the tests.

Nothing here shares code with the package beyond the Graph container.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations

from injchrom.graphcore import Graph


def edge_set(g: Graph) -> set[frozenset]:
    return {frozenset((u, v)) for u in range(g.n) for v in range(u + 1, g.n) if g.has_edge(u, v)}


def conflict_pairs(g: Graph) -> set[frozenset]:
    """Pairs with a common neighbour, by direct triple enumeration."""
    out = set()
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if any(g.has_edge(a, w) and g.has_edge(b, w) for w in range(g.n)):
                out.add(frozenset((a, b)))
    return out


def _partitions(items: list[int]):
    """All set partitions of ``items`` (restricted growth strings)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def chromatic_brute(n: int, pairs: set[frozenset]) -> int:
    """Fewest blocks over all partitions into independent sets."""
    if n == 0:
        return 0
    best = n
    for part in _partitions(list(range(n))):
        if len(part) >= best:
            continue
        if all(frozenset((a, b)) not in pairs for block in part for a, b in combinations(block, 2)):
            best = len(part)
    return best


def injective_brute(g: Graph) -> int:
    return chromatic_brute(g.n, conflict_pairs(g))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def all_labelled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def is_connected_naive(n: int, edges: set[frozenset], alive: set[int]) -> bool:
    if not alive:
        return True
    start = min(alive)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in alive:
            if y not in seen and frozenset((x, y)) in edges:
                seen.add(y)
                stack.append(y)
    return seen == alive


def connectivity_at_least_brute(g: Graph, k: int) -> bool:
    """Delete every vertex subset of size < k."""
    if g.n < k + 1:
        return False
    e = edge_set(g)
    verts = set(range(g.n))
    for size in range(k):
        for cut in combinations(range(g.n), size):
            if not is_connected_naive(g.n, e, verts - set(cut)):
                return False
    return True


def girth_brute(g: Graph) -> float:
    """Shortest cycle by trying every vertex sequence (tiny graphs only)."""
    best = float("inf")
    for length in range(3, g.n + 1):
        for seq in permutations(range(g.n), length):
            if seq[0] != min(seq) or seq[1] > seq[-1]:
                continue
            if all(g.has_edge(seq[i], seq[(i + 1) % length]) for i in range(length)):
                return length
    return best


# planarity by minor search ----------------------------------------------------------------


def _norm(edges: frozenset) -> frozenset:
    # relabel vertices to 0..k-1 in sorted order (cheap, not canonical)
    verts = sorted({v for e in edges for v in e})
    pos = {v: i for i, v in enumerate(verts)}
    return frozenset(frozenset(pos[v] for v in e) for e in edges)


def _is_k5_or_k33(edges: frozenset) -> bool:
    verts = {v for e in edges for v in e}
    if len(verts) == 5 and len(edges) == 10:
        return True
    if len(verts) == 6 and len(edges) == 9:
        deg = {v: 0 for v in verts}
        for e in edges:
            for v in e:
                deg[v] += 1
        if all(d == 3 for d in deg.values()):
            # bipartite with parts of size 3 and no triangle
            vs = sorted(verts)
            for part in combinations(vs, 3):
                a = set(part)
                if all(len(e & a) == 1 for e in edges):
                    return True
    return False


def _reduce(edges: frozenset) -> frozenset:
    """Drop vertices of degree <= 1 and suppress degree-2 vertices.

    Both steps keep every K5 / K3,3 minor, since those have minimum degree 3.
    """
    edges = set(edges)
    changed = True
    while changed:
        changed = False
        nbrs: dict = {}
        for e in edges:
            a, b = tuple(e)
            nbrs.setdefault(a, set()).add(b)
            nbrs.setdefault(b, set()).add(a)
        for v, nb in nbrs.items():
            if len(nb) <= 1:
                edges -= {frozenset((v, x)) for x in nb}
                changed = True
                break
            if len(nb) == 2:
                x, y = tuple(nb)
                edges -= {frozenset((v, x)), frozenset((v, y))}
                edges.add(frozenset((x, y)))
                changed = True
                break
    return _norm(frozenset(edges))


@lru_cache(maxsize=None)
def _has_kuratowski_minor(edges: frozenset) -> bool:
    verts = {v for e in edges for v in e}
    if len(verts) < 5 or len(edges) < 9:
        return False
    if _is_k5_or_k33(edges):
        return True
    for e in edges:
        rest = edges - {e}
        if _has_kuratowski_minor(_reduce(rest)):
            return True
        a, b = tuple(e)
        merged = frozenset(
            frozenset(a if v == b else v for v in f) for f in rest
        )
        merged = frozenset(f for f in merged if len(f) == 2)
        if _has_kuratowski_minor(_reduce(merged)):
            return True
    return False


def planar_by_minors(g: Graph) -> bool:
    return not _has_kuratowski_minor(_reduce(frozenset(edge_set(g))))
