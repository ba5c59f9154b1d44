"""Exact graph invariants used as filters and verdicts."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .graphcore import Graph, GraphError, iter_bits
from .planarity import is_planar

INF = math.inf

__all__ = [
    "INF",
    "ConflictGraph",
    "conflict_graph",
    "conflict_rows",
    "girth",
    "diameter",
    "eccentricities",
    "is_connected",
    "components",
    "local_vertex_connectivity",
    "vertex_connectivity_at_least",
    "vertex_connectivity",
    "every_edge_on_triangle",
    "is_planar",
    "unique_length2_path_pairs_through",
    "is_facial_triangle",
    "triangles",
]


@dataclass(frozen=True)
class ConflictGraph:
    """``base`` together with its neighbouring graph: ``uv`` is a conflict iff ``u`` and ``v`` share a neighbour."""

    base: Graph
    conflicts: Graph


def conflict_rows(g: Graph) -> list[int]:
    """Conflict-graph adjacency rows: for each ``v``, the vertices sharing a neighbour with it."""
    adj = g.adj
    rows = [0] * g.n
    for w in range(g.n):
        nb = adj[w]
        for v in iter_bits(nb):
            rows[v] |= nb
    for v in range(g.n):
        rows[v] &= ~(1 << v)
    return rows


def conflict_graph(g: Graph) -> ConflictGraph:
    return ConflictGraph(g, Graph(g.n, conflict_rows(g), _trusted=True))


# distances -----------------------------------------------------------------------


def _bfs_layers(adj: tuple[int, ...], source: int) -> list[int]:
    """Distance from ``source`` to every vertex (-1 when unreachable)."""
    n = len(adj)
    dist = [-1] * n
    dist[source] = 0
    seen = 1 << source
    frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        seen |= nxt
        for v in iter_bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def eccentricities(g: Graph) -> list[float]:
    out: list[float] = []
    for v in range(g.n):
        dist = _bfs_layers(g.adj, v)
        out.append(INF if -1 in dist else max(dist))
    return out


def diameter(g: Graph) -> float:
    """Largest eccentricity; ``INF`` for disconnected graphs, 0 for graphs on at most one vertex."""
    if g.n <= 1:
        return 0
    return max(eccentricities(g))


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``INF`` for forests."""
    adj = g.adj
    best = INF
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in iter_bits(adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest vertex."""
    adj = g.adj
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def _connected_without(adj: tuple[int, ...], n: int, removed: int) -> bool:
    alive = ((1 << n) - 1) & ~removed
    if not alive:
        return True
    start = alive & -alive
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= alive & ~comp
        comp |= nxt
        frontier = nxt
    return comp == alive


# connectivity ----------------------------------------------------------------------


def local_vertex_connectivity(g: Graph, s: int, t: int, cap: int | None = None) -> int:
    """Maximum number of internally disjoint ``s``-``t`` paths for non-adjacent ``s != t``.

    Unit vertex capacities via the usual in/out split; augmenting paths are
    found by BFS.  Stops early once ``cap`` paths are found.
    """
    if s == t or g.has_edge(s, t):
        raise GraphError("local connectivity needs distinct non-adjacent vertices")
    n = g.n
    adj = g.adj
    # node 2v = v_in, 2v+1 = v_out; residual capacities in a dict
    res: dict[tuple[int, int], int] = {}
    nbrs: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in res:
            res[(a, b)] = 0
            res[(b, a)] = 0
            nbrs[a].append(b)
            nbrs[b].append(a)
        res[(a, b)] += c

    big = n
    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for w in iter_bits(adj[v]):
            add(2 * v + 1, 2 * w, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    limit = cap if cap is not None else n
    while flow < limit:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in nbrs[a]:
                if b not in prev and res[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            res[(a, b)] -= 1
            res[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff ``g`` has more than ``k`` vertices and no vertex cut of size < ``k``.

    A cut ``S`` with ``|S| < k`` misses one of the first ``k`` vertices, say
    ``v``; some vertex outside ``v``'s component of ``g - S`` is then not
    adjacent to ``v``.  So it suffices to check pairs ``(v_i, w)`` with
    ``i < k`` and ``w`` non-adjacent to ``v_i``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = g.n
    if n < k + 1:
        return False
    if not is_connected(g):
        return False
    if k == 1:
        return True
    adj = g.adj
    for i in range(k):
        for w in range(n):
            if w == i or adj[i] >> w & 1:
                continue
            if local_vertex_connectivity(g, i, w, cap=k) < k:
                return False
    return True


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity (``n - 1`` for complete graphs)."""
    if g.n <= 1 or not is_connected(g):
        return 0
    k = 1
    while k < g.n - 1 and vertex_connectivity_at_least(g, k + 1):
        k += 1
    return k


# triangles and length-2 paths ------------------------------------------------------


def every_edge_on_triangle(g: Graph) -> bool:
    adj = g.adj
    return all(adj[u] & adj[v] for u, v in g.edges())


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    adj = g.adj
    out = []
    for u in range(g.n):
        for v in iter_bits(adj[u] >> (u + 1)):
            v += u + 1
            for w in iter_bits((adj[u] & adj[v]) >> (v + 1)):
                out.append((u, v, w + v + 1))
    return out


def unique_length2_path_pairs_through(g: Graph, u: int, v: int) -> set[frozenset[int]]:
    """Pairs ``{x, y}`` joined by exactly one path of length 2, where that path uses edge ``uv``."""
    if not g.has_edge(u, v):
        raise GraphError(f"edge {u}-{v} absent")
    adj = g.adj
    out: set[frozenset[int]] = set()
    # paths x-u-y with x = v, and x-v-y with x = u
    for end, mid in ((v, u), (u, v)):
        for y in iter_bits(adj[mid] & ~(1 << end)):
            if (adj[end] & adj[y]).bit_count() == 1:
                out.add(frozenset((end, y)))
    return out


def is_facial_triangle(g: Graph, u: int, v: int, w: int) -> bool:
    """Whether triangle ``uvw`` bounds a face.

    Only meaningful for 3-connected planar graphs, where the embedding is
    unique and a triangle is facial iff removing it leaves the rest connected.
    """
    adj = g.adj
    if not (adj[u] >> v & 1 and adj[v] >> w & 1 and adj[u] >> w & 1):
        return False
    return _connected_without(adj, g.n, (1 << u) | (1 << v) | (1 << w))
