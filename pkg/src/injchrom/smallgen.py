"""Isomorph-free generation of small graphs by canonical vertex augmentation.

A child ``G`` is produced from a parent ``P`` by adding a vertex ``x`` joined
to a subset ``S`` of ``V(P)``.  It is kept iff ``x`` lies in the automorphism
orbit of the canonical deletion vertex of ``G``: among the vertices whose
removal keeps ``G`` connected (all vertices when connectivity is not
required), those minimising ``(degree, multiset of neighbour degrees)``,
broken by canonical position.  Every isomorphism class then arises from
exactly one parent class; isomorphic children of one parent (subsets in the
same ``Aut(P)`` orbit) are merged by certificate.

Planarity is hereditary, so planar runs discard non-planar intermediates.
The minimum degree applies to the final order only.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations

from .canon import CanonicalForm, canonical_certificate, canonical_form
from .graphcore import Graph, iter_bits
from .planarity import is_planar

MAX_ORDER = 11

__all__ = [
    "MAX_ORDER",
    "GenSpec",
    "GenSpecError",
    "canonical_certificate",
    "canonical_form",
    "CanonicalForm",
    "generate",
    "generate_planar_candidates",
    "count",
]


class GenSpecError(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    """What to enumerate.

    ``planar`` prunes non-planar graphs during generation; the output equals
    post-filtering the unrestricted stream by planarity.
    """

    order: int
    min_degree: int = 0
    max_edges: int | None = None
    connected: bool = True
    planar: bool = False
    allow_large: bool = False

    def validate(self) -> None:
        n = self.order
        if n < 1:
            raise GenSpecError("order must be at least 1")
        if n > MAX_ORDER and not self.allow_large:
            raise GenSpecError(f"order {n} exceeds the desk-scale limit {MAX_ORDER} (set allow_large to override)")
        if not 0 <= self.min_degree <= max(n - 1, 0):
            raise GenSpecError(f"min degree {self.min_degree} outside [0, {n - 1}]")
        if self.max_edges is not None and not 0 <= self.max_edges <= n * (n - 1) // 2:
            raise GenSpecError(f"max edges {self.max_edges} outside [0, {n * (n - 1) // 2}]")


def _connected_without(adj: list[int], full: int, removed: int) -> bool:
    alive = full & ~removed
    if not alive:
        return True
    comp = alive & -alive
    frontier = comp
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= alive & ~comp
        comp |= nxt
        frontier = nxt
    return comp == alive


def _nbr_code(adj: list[int], deg: list[int], v: int) -> int:
    # multiset of neighbour degrees packed into 5-bit counters
    code = 0
    for u in iter_bits(adj[v]):
        code += 1 << (5 * deg[u])
    return code


class _Generator:
    def __init__(self, spec: GenSpec, part: tuple[int, int] | None, split_level: int | None):
        spec.validate()
        self.spec = spec
        self.N = spec.order
        self.part = part
        if split_level is None:
            split_level = min(self.N, max(1, self.N - 3))
        self.split_level = split_level
        self.split_counter = 0

    def run(self) -> Iterator[Graph]:
        start = [0]  # K1
        if self.N == 1:
            if self._level_ok(start, 1, final=True):
                yield Graph(1, start, _trusted=True)
            return
        yield from self._extend(start, 1)

    def _level_ok(self, adj: list[int], k: int, final: bool) -> bool:
        if final:
            spec = self.spec
            if spec.min_degree and min(r.bit_count() for r in adj) < spec.min_degree:
                return False
            if spec.max_edges is not None and sum(r.bit_count() for r in adj) // 2 > spec.max_edges:
                return False
        return True

    def _extend(self, P: list[int], k: int) -> Iterator[Graph]:
        spec = self.spec
        final = k + 1 == self.N
        connected = spec.connected
        deg = [r.bit_count() for r in P]
        m = sum(deg) // 2
        full = (1 << k) - 1
        if connected:
            noncut = [_connected_without(P, full, 1 << v) for v in range(k)] if k > 1 else [True]
        else:
            noncut = [True] * k
        min_deg_final = spec.min_degree if final else 0
        if final and min_deg_final and any(d < min_deg_final - 1 for d in deg):
            return
        must_final = 0
        if final and min_deg_final:
            for v in range(k):
                if deg[v] < min_deg_final:
                    must_final |= 1 << v
        s_lo = 1 if connected else 0
        if final:
            s_lo = max(s_lo, min_deg_final)
        s_hi = k
        for v in range(k):
            if noncut[v]:
                s_hi = min(s_hi, deg[v] + 1)
        if final and spec.max_edges is not None:
            s_hi = min(s_hi, spec.max_edges - m)
        parent_form: CanonicalForm | None = None
        seen_certs: set | None = None
        if k > 1:
            parent_form = canonical_form(Graph(k, P, _trusted=True))
            if not parent_form.is_rigid():
                seen_certs = set()
        x = k
        xbit = 1 << x
        for s in range(s_lo, s_hi + 1):
            forced = must_final
            for v in range(k):
                if noncut[v] and deg[v] == s - 1:
                    forced |= 1 << v
            nforced = forced.bit_count()
            if nforced > s:
                continue
            free = [v for v in range(k) if not forced >> v & 1]
            for extra in combinations(free, s - nforced):
                S = forced
                for v in extra:
                    S |= 1 << v
                child = self._accept(P, k, deg, noncut, S, s)
                if child is None:
                    continue
                cform = child[1]
                if seen_certs is not None:
                    cert = cform.certificate if cform is not None else canonical_certificate(Graph(k + 1, child[0], _trusted=True))
                    if cert in seen_certs:
                        continue
                    seen_certs.add(cert)
                G = child[0]
                if spec.planar and not is_planar(Graph(k + 1, G, _trusted=True)):
                    continue
                if final:
                    if self._level_ok(G, k + 1, True) and self._mine_at_final(k + 1):
                        yield Graph(k + 1, G, _trusted=True)
                else:
                    if k + 1 == self.split_level and self.part is not None:
                        idx = self.split_counter
                        self.split_counter += 1
                        if idx % self.part[1] != self.part[0]:
                            continue
                    yield from self._extend(G, k + 1)

    def _mine_at_final(self, order: int) -> bool:
        if self.part is None:
            return True
        if order == self.split_level:
            idx = self.split_counter
            self.split_counter += 1
            return idx % self.part[1] == self.part[0]
        return True

    def _accept(self, P: list[int], k: int, deg: list[int], noncut: list[bool], S: int, s: int):
        """Return ``(child adjacency, canonical form or None)`` if ``x`` is a canonical deletion."""
        x = k
        xbit = 1 << x
        G = list(P)
        for v in iter_bits(S):
            G[v] |= xbit
        G.append(S)
        gdeg = deg + [s]
        for v in iter_bits(S):
            gdeg[v] += 1
        full = (1 << (k + 1)) - 1
        connected = self.spec.connected
        eligible_cache: dict[int, bool] = {x: True}

        def eligible(v: int) -> bool:
            r = eligible_cache.get(v)
            if r is None:
                r = (not connected) or noncut[v] and S != 1 << v or _connected_without(G, full, 1 << v)
                eligible_cache[v] = r
            return r

        # degree screen
        ties = []
        for v in range(k):
            d = gdeg[v]
            if d < s:
                if eligible(v):
                    return None
            elif d == s:
                ties.append(v)
        if not ties:
            return G, None
        xcode = _nbr_code(G, gdeg, x)
        rest = []
        for v in ties:
            c = _nbr_code(G, gdeg, v)
            if c < xcode:
                if eligible(v):
                    return None
            elif c == xcode and eligible(v):
                rest.append(v)
        if not rest:
            return G, None
        form = canonical_form(Graph(k + 1, G, _trusted=True))
        pos = form.positions
        cands = rest + [x]
        m = min(cands, key=lambda v: pos[v])
        if form.orbits[m] != form.orbits[x]:
            return None
        return G, form


def generate(spec: GenSpec, part: tuple[int, int] | None = None, split_level: int | None = None) -> Iterator[Graph]:
    """Yield one graph per isomorphism class satisfying ``spec``.

    ``part = (i, w)`` restricts the run to the ``i``-th of ``w`` disjoint
    shares of the search tree, cut at ``split_level``; the union of all
    shares is the full output.
    """
    if part is not None and not 0 <= part[0] < part[1]:
        raise GenSpecError("part must be (index, count) with 0 <= index < count")
    return _Generator(spec, part, split_level).run()


def generate_planar_candidates(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """Connected planar graphs of order ``n`` with minimum degree 2 and at most ``3n - 6`` edges."""
    cap = max(3 * n - 6, 0) if n >= 3 else 0
    spec = GenSpec(order=n, min_degree=2 if n >= 3 else 0, max_edges=cap if n >= 3 else None,
                   connected=True, planar=True, allow_large=allow_large)
    if n < 3:
        return iter(())
    return generate(spec)


def count(spec: GenSpec) -> int:
    return sum(1 for _ in generate(spec))
