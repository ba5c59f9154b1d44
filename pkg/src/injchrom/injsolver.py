"""Exact injective chromatic number by backtracking on the conflict graph.

The search starts from a vertex of maximum degree whose neighbours pairwise
conflict and are therefore given distinct colours ``0..d-1``.  It then
repeatedly picks the uncoloured vertex whose conflict neighbours already show
the most distinct colours (an injective saturation degree), tries every
feasible colour already in use plus one fresh colour, and prunes any branch
that would use at least as many colours as the best colouring found so far.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .graphcore import Graph, iter_bits
from .metrics import conflict_rows

__all__ = [
    "Coloring",
    "SearchStats",
    "SolveResult",
    "BudgetExhausted",
    "verify_injective",
    "injective_chromatic_number",
    "injective_k_colorable",
    "lower_bound",
    "greedy_upper_bound",
]


@dataclass(frozen=True)
class Coloring:
    """A total colouring: ``colors[v]`` lies in ``range(k)``."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if any(not 0 <= c < self.k for c in self.colors):
            raise ValueError("colour outside range(k)")

    @property
    def used(self) -> int:
        return len(set(self.colors))


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class SolveResult:
    chi_i: int
    witness: Coloring
    stats: SearchStats = field(compare=False)


class BudgetExhausted(RuntimeError):
    """The node budget ran out; ``lower`` <= chi_i <= ``upper`` is all that is known."""

    def __init__(self, lower: int, upper: int, witness: Coloring, stats: SearchStats):
        super().__init__(f"node budget exhausted with {lower} <= chi_i <= {upper}")
        self.lower = lower
        self.upper = upper
        self.witness = witness
        self.stats = stats


def verify_injective(g: Graph, c: Coloring | list[int] | tuple[int, ...]) -> bool:
    """True iff no two vertices with a common neighbour share a colour."""
    colors = c.colors if isinstance(c, Coloring) else tuple(c)
    if len(colors) != g.n or any(x is None for x in colors):
        raise ValueError("colouring must be total on V(g)")
    adj = g.adj
    for w in range(g.n):
        seen = set()
        for v in iter_bits(adj[w]):
            if colors[v] in seen:
                return False
            seen.add(colors[v])
    return True


def _greedy_clique(rows: list[int]) -> int:
    n = len(rows)
    best = 1 if n else 0
    deg = [r.bit_count() for r in rows]
    for seed in range(n):
        cand = rows[seed]
        size = 1
        while cand:
            v = max(iter_bits(cand), key=lambda x: (deg[x], -x))
            size += 1
            cand &= rows[v]
        best = max(best, size)
    return best


def lower_bound(g: Graph) -> int:
    """``max(Delta, greedy clique of the conflict graph)``; 1 for edgeless graphs with n >= 1."""
    if g.n == 0:
        return 0
    return max(g.max_degree(), _greedy_clique(conflict_rows(g)))


def _greedy(rows: list[int]) -> list[int]:
    n = len(rows)
    order = sorted(range(n), key=lambda v: (-rows[v].bit_count(), v))
    colors = [-1] * n
    for v in order:
        taken = {colors[u] for u in iter_bits(rows[v])}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def greedy_upper_bound(g: Graph) -> tuple[int, Coloring]:
    """Degree-descending greedy colouring of the conflict graph."""
    colors = _greedy(conflict_rows(g))
    k = max(colors, default=-1) + 1
    return k, Coloring(tuple(colors), k)


class _Search:
    """Mutable state for one backtracking run over the conflict graph."""

    def __init__(self, g: Graph, rows: list[int], incumbent: int, best: list[int] | None,
                 target: int, first_only: bool, budget: int | None):
        self.g = g
        self.n = g.n
        self.rows = rows
        self.nbrs = [list(iter_bits(r)) for r in rows]
        self.cdeg = [r.bit_count() for r in rows]
        self.incumbent = incumbent
        self.best = best
        self.target = target
        self.first_only = first_only
        self.budget = budget
        self.stats = SearchStats()
        self.color = [-1] * self.n
        # cnt[v][c]: conflict neighbours of v coloured c; sat[v]: distinct such colours
        self.cnt = [[0] * max(incumbent, 1) for _ in range(self.n)]
        self.sat = [0] * self.n
        self.uncolored = set(range(self.n))
        self.done = False

    def assign(self, v: int, c: int) -> None:
        self.color[v] = c
        self.uncolored.discard(v)
        cnt, sat = self.cnt, self.sat
        for u in self.nbrs[v]:
            row = cnt[u]
            if row[c] == 0:
                sat[u] += 1
            row[c] += 1

    def unassign(self, v: int, c: int) -> None:
        self.color[v] = -1
        self.uncolored.add(v)
        cnt, sat = self.cnt, self.sat
        for u in self.nbrs[v]:
            row = cnt[u]
            row[c] -= 1
            if row[c] == 0:
                sat[u] -= 1

    def pick(self) -> int:
        sat, cdeg = self.sat, self.cdeg
        return max(self.uncolored, key=lambda v: (sat[v], cdeg[v], -v))

    def run(self, used: int) -> None:
        if self.done:
            return
        st = self.stats
        st.nodes += 1
        if self.budget is not None and st.nodes > self.budget:
            raise _OutOfBudget
        if not self.uncolored:
            self.incumbent = used
            self.best = list(self.color)
            if self.first_only or used <= self.target:
                self.done = True
            return
        v = self.pick()
        row = self.cnt[v]
        for c in range(used):
            if row[c] == 0:
                self.assign(v, c)
                self.run(used)
                self.unassign(v, c)
                if self.done:
                    return
                if used >= self.incumbent:
                    # a better colouring was found below; this branch is now dominated
                    st.prunes += 1
                    return
        if used + 1 < self.incumbent:
            self.assign(v, used)
            self.run(used + 1)
            self.unassign(v, used)
        else:
            st.prunes += 1


class _OutOfBudget(Exception):
    pass


def _prepare(g: Graph, s: _Search) -> int | None:
    """Colour the neighbours of the first max-degree vertex ``0..d-1``; returns colours used."""
    if g.n == 0:
        return 0
    d = g.max_degree()
    if d == 0:
        return 0
    if d >= s.incumbent:
        return None
    hub = next(v for v in range(g.n) if g.degree(v) == d)
    for i, u in enumerate(iter_bits(g.adj[hub])):
        s.assign(u, i)
    return d


def injective_chromatic_number(g: Graph, budget: int | None = None) -> SolveResult:
    """Exact injective chromatic number with a witness colouring.

    Raises :class:`BudgetExhausted` if ``budget`` search nodes do not suffice.
    """
    t0 = time.perf_counter()
    if g.n == 0:
        return SolveResult(0, Coloring((), 0), SearchStats())
    rows = conflict_rows(g)
    lb = max(g.max_degree(), _greedy_clique(rows))
    colors = _greedy(rows)
    ub = max(colors) + 1
    if ub <= lb:
        stats = SearchStats(elapsed=time.perf_counter() - t0)
        return SolveResult(ub, Coloring(tuple(colors), ub), stats)
    s = _Search(g, rows, ub, colors, lb, False, budget)
    used = _prepare(g, s)
    try:
        if used is not None:
            s.run(used)
    except _OutOfBudget:
        s.stats.elapsed = time.perf_counter() - t0
        best = s.best
        raise BudgetExhausted(lb, s.incumbent, Coloring(tuple(best), s.incumbent), s.stats) from None
    s.stats.elapsed = time.perf_counter() - t0
    k = s.incumbent
    return SolveResult(k, Coloring(tuple(s.best), k), s.stats)


def injective_k_colorable(g: Graph, k: int, budget: int | None = None) -> Coloring | None:
    """An injective colouring with at most ``k`` colours, or ``None`` if none exists."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if g.n == 0:
        return Coloring((), k)
    if k == 0:
        return None
    rows = conflict_rows(g)
    if g.max_degree() > k:
        return None
    colors = _greedy(rows)
    if max(colors) + 1 <= k:
        return Coloring(tuple(colors), k)
    s = _Search(g, rows, k + 1, None, k, True, budget)
    used = _prepare(g, s)
    try:
        if used is not None:
            s.run(used)
    except _OutOfBudget:
        raise BudgetExhausted(0, k + 1, Coloring(tuple(colors), max(colors) + 1), s.stats) from None
    if s.best is None:
        return None
    return Coloring(tuple(s.best), k)
