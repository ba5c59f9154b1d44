"""Left-right planarity test (Brandes' formulation of de Fraysseix-Rosenstiehl).

Testing only: no embedding is produced.  Two DFS passes: the first orients
the graph and computes lowpoints and nesting depths, the second processes
outgoing edges in nesting order while maintaining a stack of conflict pairs
of return-edge intervals.  A conflict that cannot be resolved by swapping
sides means the graph is not planar.
"""

from __future__ import annotations

import sys

from .graphcore import Graph, iter_bits


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> _Interval:
        return _Interval(self.low, self.high)


class _Pair:
    __slots__ = ("left", "right")

    def __init__(self, left: _Interval | None = None, right: _Interval | None = None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


class _LRState:
    def __init__(self, g: Graph):
        self.adj = g.adj
        n = g.n
        self.height: list[int | None] = [None] * n
        self.parent_edge: list[tuple[int, int] | None] = [None] * n
        self.lowpt: dict = {}
        self.lowpt2: dict = {}
        self.nesting: dict = {}
        self.oriented: set = set()
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.ref: dict = {}
        self.lowpt_edge: dict = {}
        self.stack_bottom: dict = {}
        self.S: list[_Pair] = []

    # phase 1 ------------------------------------------------------------------------

    def orient(self, v: int) -> None:
        e = self.parent_edge[v]
        height = self.height
        lowpt, lowpt2 = self.lowpt, self.lowpt2
        for w in iter_bits(self.adj[v]):
            if (v, w) in self.oriented or (w, v) in self.oriented:
                continue
            vw = (v, w)
            self.oriented.add(vw)
            self.out[v].append(w)
            lowpt[vw] = height[v]
            lowpt2[vw] = height[v]
            if height[w] is None:
                self.parent_edge[w] = vw
                height[w] = height[v] + 1
                self.orient(w)
            else:
                lowpt[vw] = height[w]
            self.nesting[vw] = 2 * lowpt[vw] + (1 if lowpt2[vw] < height[v] else 0)
            if e is not None:
                if lowpt[vw] < lowpt[e]:
                    lowpt2[e] = min(lowpt[e], lowpt2[vw])
                    lowpt[e] = lowpt[vw]
                elif lowpt[vw] > lowpt[e]:
                    lowpt2[e] = min(lowpt2[e], lowpt[vw])
                else:
                    lowpt2[e] = min(lowpt2[e], lowpt2[vw])

    # phase 2 ------------------------------------------------------------------------

    def _top(self):
        return self.S[-1] if self.S else None

    def _conflicting(self, interval: _Interval, b) -> bool:
        return not interval.empty() and self.lowpt[interval.high] > self.lowpt[b]

    def _lowest(self, p: _Pair) -> int:
        if p.left.empty():
            return self.lowpt[p.right.low]
        if p.right.empty():
            return self.lowpt[p.left.low]
        return min(self.lowpt[p.left.low], self.lowpt[p.right.low])

    def test(self, v: int) -> bool:
        e = self.parent_edge[v]
        out = sorted(self.out[v], key=lambda w: self.nesting[(v, w)])
        self.out[v] = out
        for idx, w in enumerate(out):
            ei = (v, w)
            self.stack_bottom[ei] = self._top()
            if ei == self.parent_edge[w]:
                if not self.test(w):
                    return False
            else:
                self.lowpt_edge[ei] = ei
                self.S.append(_Pair(right=_Interval(ei, ei)))
            if self.lowpt[ei] < self.height[v]:
                if idx == 0:
                    self.lowpt_edge[e] = self.lowpt_edge[ei]
                elif not self._add_constraints(ei, e):
                    return False
        if e is not None:
            u = e[0]
            self._trim_back_edges(u)
            if self.lowpt[e] < self.height[u]:
                top = self.S[-1]
                hl, hr = top.left.high, top.right.high
                if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                    self.ref[e] = hl
                else:
                    self.ref[e] = hr
        return True

    def _add_constraints(self, ei, e) -> bool:
        P = _Pair()
        ref, lowpt = self.ref, self.lowpt
        while True:
            Q = self.S.pop()
            if not Q.left.empty():
                Q.swap()
            if not Q.left.empty():
                return False
            if lowpt[Q.right.low] > lowpt[e]:
                if P.right.empty():
                    P.right = Q.right.copy()
                else:
                    ref[P.right.low] = Q.right.high
                P.right.low = Q.right.low
            else:
                ref[Q.right.low] = self.lowpt_edge[e]
            if self._top() is self.stack_bottom[ei]:
                break
        while self.S and (
            self._conflicting(self.S[-1].left, ei) or self._conflicting(self.S[-1].right, ei)
        ):
            Q = self.S.pop()
            if self._conflicting(Q.right, ei):
                Q.swap()
            if self._conflicting(Q.right, ei):
                return False
            ref[P.right.low] = Q.right.high
            if Q.right.low is not None:
                P.right.low = Q.right.low
            if P.left.empty():
                P.left = Q.left.copy()
            else:
                ref[P.left.low] = Q.left.high
            P.left.low = Q.left.low
        if not (P.left.empty() and P.right.empty()):
            self.S.append(P)
        return True

    def _trim_back_edges(self, u: int) -> None:
        S, ref, height = self.S, self.ref, self.height
        while S and self._lowest(S[-1]) == height[u]:
            S.pop()
        if S:
            P = S.pop()
            while P.left.high is not None and P.left.high[1] == u:
                P.left.high = ref.get(P.left.high)
            if P.left.high is None and P.left.low is not None:
                ref[P.left.low] = P.right.low
                P.left.low = None
            while P.right.high is not None and P.right.high[1] == u:
                P.right.high = ref.get(P.right.high)
            if P.right.high is None and P.right.low is not None:
                ref[P.right.low] = P.left.low
                P.right.low = None
            S.append(P)


def is_planar(g: Graph) -> bool:
    """Exact planarity verdict."""
    n, m = g.n, g.size
    if n >= 3 and m > 3 * n - 6:
        return False
    if m <= 8 or n <= 4:
        # K5 and K3,3 need 10 and 9 edges; every graph on <= 4 vertices is planar
        return True
    limit = sys.getrecursionlimit()
    if limit < 4 * n + 100:
        sys.setrecursionlimit(4 * n + 100)
    st = _LRState(g)
    roots = []
    for v in range(n):
        if st.height[v] is None:
            st.height[v] = 0
            roots.append(v)
            st.orient(v)
    for r in roots:
        st.S.clear()
        if not st.test(r):
            return False
    return True
