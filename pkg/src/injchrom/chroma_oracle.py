"""Independent exact chromatic number, used to cross-check the injective solver.

Brélaz-style DSATUR branch and bound over plain adjacency sets.  It shares no
search code with :mod:`injchrom.injsolver`: a greedy clique is precoloured,
ties on saturation are broken by the degree into the uncoloured subgraph, and
the neighbouring graph is built here from neighbour sets rather than bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphcore import Graph


@dataclass(frozen=True)
class ChromaResult:
    chi: int
    witness: tuple[int, ...]


def _adjacency_sets(g: Graph) -> list[set[int]]:
    return [g.neighbors(v) for v in range(g.n)]


def _clique(adj: list[set[int]]) -> list[int]:
    best: list[int] = []
    for seed in sorted(range(len(adj)), key=lambda v: -len(adj[v])):
        clique = [seed]
        cand = set(adj[seed])
        while cand:
            v = min(cand, key=lambda x: (-len(adj[x] & cand), x))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _dsatur_greedy(adj: list[set[int]]) -> list[int]:
    n = len(adj)
    color = [-1] * n
    for _ in range(n):
        v = max(
            (x for x in range(n) if color[x] < 0),
            key=lambda x: (len({color[u] for u in adj[x] if color[u] >= 0}), len(adj[x]), -x),
        )
        taken = {color[u] for u in adj[v]}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    return color


def chromatic_number(g: Graph) -> ChromaResult:
    """Exact chromatic number of ``g`` with a proper colouring as witness."""
    adj = _adjacency_sets(g)
    return _solve(adj)


def _solve(adj: list[set[int]]) -> ChromaResult:
    n = len(adj)
    if n == 0:
        return ChromaResult(0, ())
    best_colors = _dsatur_greedy(adj)
    best_k = max(best_colors) + 1
    clique = _clique(adj)
    if best_k == len(clique):
        return ChromaResult(best_k, tuple(best_colors))

    color = [-1] * n
    for i, v in enumerate(clique):
        color[v] = i
    state = {"k": best_k, "colors": best_colors}

    def neighbour_colours(x: int) -> set[int]:
        return {color[u] for u in adj[x] if color[u] >= 0}

    def branch(k_used: int, left: int) -> bool:
        if left == 0:
            state["k"] = k_used
            state["colors"] = list(color)
            return k_used == len(clique)
        pick, pick_key, pick_taken = -1, None, None
        for x in range(n):
            if color[x] >= 0:
                continue
            taken = neighbour_colours(x)
            key = (len(taken), sum(1 for u in adj[x] if color[u] < 0))
            if pick_key is None or key > pick_key:
                pick, pick_key, pick_taken = x, key, taken
        for c in range(min(k_used + 1, state["k"] - 1)):
            if c >= state["k"] - 1:
                break
            if c in pick_taken:
                continue
            color[pick] = c
            if branch(max(k_used, c + 1), left - 1):
                return True
            color[pick] = -1
            if k_used >= state["k"]:
                break
        color[pick] = -1
        return False

    branch(len(clique), n - len(clique))
    return ChromaResult(state["k"], tuple(state["colors"]))


def neighbouring_graph(g: Graph) -> Graph:
    """Graph on ``V(g)`` joining two vertices whenever they have a common neighbour."""
    adj = _adjacency_sets(g)
    edges = set()
    for w in range(g.n):
        nb = sorted(adj[w])
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                edges.add((a, b))
    return Graph.from_edges(g.n, sorted(edges))


def injective_via_oracle(g: Graph) -> int:
    """Chromatic number of the neighbouring graph, which equals the injective chromatic number."""
    if g.n == 0:
        return 0
    return chromatic_number(neighbouring_graph(g)).chi
