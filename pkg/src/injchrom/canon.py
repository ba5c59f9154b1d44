"""Canonical labelling by partition refinement and individualisation.

A compact version of the classic scheme: refine the ordered partition to the
coarsest equitable one, individualise each vertex of the first non-trivial
cell in turn, recurse, and keep the leaf whose relabelled adjacency is
lexicographically smallest.  Leaves that tie with the best leaf yield
automorphisms; children of a search node that lie in the same orbit of the
automorphisms found so far fixing the node's prefix are skipped.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .graphcore import Graph, iter_bits


@dataclass(frozen=True)
class CanonicalForm:
    """``labeling[i]`` is the vertex placed at canonical position ``i``."""

    certificate: tuple[int, ...]
    labeling: tuple[int, ...]
    orbits: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]

    @property
    def positions(self) -> list[int]:
        pos = [0] * len(self.labeling)
        for i, v in enumerate(self.labeling):
            pos[v] = i
        return pos

    def is_rigid(self) -> bool:
        return not self.generators

    def certificate_bytes(self) -> bytes:
        return b",".join(b"%d" % x for x in self.certificate)


def _refine(cells: list[list[int]], adj: tuple[int, ...] | list[int], splitters: list[list[int]]) -> list[list[int]]:
    queue = list(splitters)
    alive = {id(c) for c in cells}
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        if id(w) not in alive:
            continue
        wmask = 0
        for v in w:
            wmask |= 1 << v
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            counts = [(adj[v] & wmask).bit_count() for v in cell]
            first = counts[0]
            if all(c == first for c in counts):
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            alive.discard(id(cell))
            for c in sorted(groups):
                piece = groups[c]
                out.append(piece)
                alive.add(id(piece))
                queue.append(piece)
            changed = True
        if changed:
            cells = out
    return cells


class _Canon:
    def __init__(self, adj, n: int):
        self.adj = adj
        self.n = n
        self.best: tuple[int, ...] | None = None
        self.best_lab: list[int] | None = None
        self.gens: list[tuple[int, ...]] = []

    def leaf(self, lab: list[int]) -> None:
        adj = self.adj
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        rows = []
        for v in lab:
            r = 0
            for u in iter_bits(adj[v]):
                r |= 1 << pos[u]
            rows.append(r)
        cert = tuple(rows)
        if self.best is None or cert < self.best:
            self.best = cert
            self.best_lab = lab
        elif cert == self.best:
            gamma = [0] * self.n
            for a, b in zip(self.best_lab, lab):
                gamma[a] = b
            gamma_t = tuple(gamma)
            if any(gamma_t[i] != i for i in range(self.n)):
                self.gens.append(gamma_t)

    def _orbit_roots(self, fixed: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if any(g[p] != p for p in fixed):
                continue
            for i, j in enumerate(g):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        return [find(i) for i in range(self.n)]

    def search(self, cells: list[list[int]], splitters: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(cells, self.adj, splitters)
        target = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                target = i
                break
        if target < 0:
            self.leaf([c[0] for c in cells])
            return
        cell = cells[target]
        tried: list[int] = []
        ngens = -1
        roots: list[int] = []
        for v in sorted(cell):
            if tried:
                if len(self.gens) != ngens:
                    roots = self._orbit_roots(prefix)
                    ngens = len(self.gens)
                rv = roots[v]
                if any(roots[t] == rv for t in tried):
                    continue
            tried.append(v)
            single = [v]
            rest = [x for x in cell if x != v]
            new = cells[:target] + [single, rest] + cells[target + 1:]
            self.search(new, [single], prefix + [v])


def canonical_form(g: Graph, colouring: list[int] | None = None) -> CanonicalForm:
    """Canonical labelling, certificate and automorphism orbits of ``g``.

    ``colouring`` optionally assigns a colour to each vertex; isomorphisms are
    then required to preserve colours, and cells start ordered by colour.
    """
    n = g.n
    if n == 0:
        return CanonicalForm((), (), (), ())
    if colouring is None:
        cells = [list(range(n))]
    else:
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(colouring):
            classes.setdefault(c, []).append(v)
        cells = [classes[c] for c in sorted(classes)]
    if sys.getrecursionlimit() < 4 * n + 100:
        sys.setrecursionlimit(4 * n + 100)
    st = _Canon(g.adj, n)
    st.search(cells, list(cells), [])
    roots = st._orbit_roots([])
    head = (n,) if colouring is None else (n, -1, *(len(c) for c in cells), -1)
    return CanonicalForm(
        certificate=head + st.best,
        labeling=tuple(st.best_lab),
        orbits=tuple(roots),
        generators=tuple(st.gens),
    )


def canonical_certificate(g: Graph) -> tuple[int, ...]:
    """Isomorphism-invariant certificate: equal iff the graphs are isomorphic."""
    return canonical_form(g).certificate


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_certificate(g) == canonical_certificate(h)


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabelled copy of ``g``."""
    cf = canonical_form(g)
    return Graph(g.n, cf.certificate[-g.n:] if g.n else (), _trusted=True)
