"""Immutable simple undirected graphs backed by adjacency bitsets.

Row ``i`` of the adjacency is a Python ``int`` whose bit ``j`` is set iff
``ij`` is an edge.  Python integers are arbitrary precision, so the same
representation serves small graphs (one machine word per row) and larger ones.
Editing operations never mutate; they return fresh graphs.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


class GraphError(ValueError):
    """Raised when a graph operation would break simplicity or reference a missing target."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph on the vertex set ``range(n)``."""

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, adj: Iterable[int] = (), *, _trusted: bool = False):
        adj = tuple(adj) if adj else (0,) * n
        if not _trusted:
            if n < 0:
                raise GraphError("order must be nonnegative")
            if len(adj) != n:
                raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
            full = (1 << n) - 1
            for v, row in enumerate(adj):
                if row & ~full:
                    raise GraphError(f"row {v} references a vertex outside range({n})")
                if row >> v & 1:
                    raise GraphError(f"self-loop at vertex {v}")
                for u in iter_bits(row):
                    if not adj[u] >> v & 1:
                        raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self._n = n
        self._adj = adj
        self._m = sum(row.bit_count() for row in adj) // 2

    # construction -----------------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge list, rejecting loops, duplicates and bad endpoints."""
        if n < 0:
            raise GraphError("order must be nonnegative")
        rows = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {e} has an endpoint outside range({n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if rows[u] >> v & 1:
                raise GraphError(f"duplicate edge {min(u, v)}-{max(u, v)}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, _trusted=True)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n, _trusted=True)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)], _trusted=True)

    # basic queries ----------------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def order(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        """Adjacency bitset rows."""
        return self._adj

    @property
    def size(self) -> int:
        """Number of edges."""
        return self._m

    def __len__(self) -> int:
        return self._n

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} outside range({self._n})")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> set[int]:
        self._check_vertex(v)
        return set(iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self._adj), default=0)

    def min_degree(self) -> int:
        return min((row.bit_count() for row in self._adj), default=0)

    def closed_neighborhood(self, v: int) -> set[int]:
        self._check_vertex(v)
        return set(iter_bits(self._adj[v] | 1 << v))

    def closed_neighborhood_of_set(self, vertices: Iterable[int]) -> set[int]:
        """Union of the closed neighbourhoods of ``vertices``."""
        mask = 0
        for v in vertices:
            self._check_vertex(v)
            mask |= self._adj[v] | 1 << v
        return set(iter_bits(mask))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        out = []
        for u, row in enumerate(self._adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    to_edge_list = edges

    # editing (each returns a new graph) -------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if self._adj[u] >> v & 1:
            raise GraphError(f"edge {u}-{v} already present")
        rows = list(self._adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self._n, rows, _trusted=True)

    def delete_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} absent")
        rows = list(self._adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self._n, rows, _trusted=True)

    def add_vertex(self, neighbors: Iterable[int] = ()) -> tuple[Graph, int]:
        """Append a vertex joined to ``neighbors``; returns the new graph and the new index."""
        x = self._n
        rows = list(self._adj) + [0]
        for u in set(neighbors):
            self._check_vertex(u)
            rows[u] |= 1 << x
            rows[x] |= 1 << u
        return Graph(x + 1, rows, _trusted=True), x

    def delete_vertex(self, v: int) -> Graph:
        """Remove ``v``; vertices above ``v`` shift down by one."""
        self._check_vertex(v)
        low = (1 << v) - 1
        rows = []
        for u, row in enumerate(self._adj):
            if u == v:
                continue
            rows.append((row & low) | ((row >> (v + 1)) << v))
        return Graph(self._n - 1, rows, _trusted=True)

    def delete_vertices(self, vertices: Iterable[int]) -> Graph:
        g = self
        for v in sorted(set(vertices), reverse=True):
            g = g.delete_vertex(v)
        return g

    def subdivide_edge(self, u: int, v: int) -> tuple[Graph, int]:
        """Replace edge ``uv`` by a path ``u-x-v`` through a fresh vertex ``x = n``."""
        g = self.delete_edge(u, v)
        return g.add_vertex((u, v))

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled in increasing order."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in iter_bits(self._adj[v]):
                if u in pos:
                    row |= 1 << pos[u]
            rows.append(row)
        return Graph(len(keep), rows, _trusted=True)

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabelling must be a permutation")
        rows = [0] * self._n
        for v, row in enumerate(self._adj):
            r = 0
            for u in iter_bits(row):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return Graph(self._n, rows, _trusted=True)

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self._n
        rows = list(self._adj) + [row << shift for row in other._adj]
        return Graph(self._n + other._n, rows, _trusted=True)

    # dunder -----------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, edges)


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
