"""Constructions of the graph families and named fixtures.

Every constructor returns a :class:`MarkedGraph`: the graph plus a map from
vertex names used in the constructions (``u``, ``v0``, ``a1`` ...) to vertex
indices.  Fixtures live in ``data/manifest.json`` (metadata, expected
invariants, transcribed edge lists) and ``data/fixtures.g6`` (one graph6 line
per entry); ``INJCHROM_FIXTURE_DIR`` points the loader at another directory.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .codec import parse_graph6
from .graphcore import Graph
from .metrics import (
    diameter,
    every_edge_on_triangle,
    is_facial_triangle,
    is_planar,
    triangles,
    unique_length2_path_pairs_through,
    vertex_connectivity_at_least,
)

FIXTURE_ENV = "INJCHROM_FIXTURE_DIR"
MANIFEST = "manifest.json"
FIXTURE_FILE = "fixtures.g6"

__all__ = [
    "FamilyError",
    "FixtureError",
    "MarkedGraph",
    "FamilySpec",
    "fixture",
    "fixture_names",
    "load_manifest",
    "fixture_dir",
    "family_g4",
    "h_family",
    "ls_base",
    "cubic_family",
    "shannon_subdivided",
    "k_family",
    "prism",
    "gen_dodecahedron",
    "appendix_variant",
    "lemma_report",
    "find_lemma_triangle",
    "build",
    "family_names",
    "graph6_digest",
]


class FamilyError(ValueError):
    """Parameters outside a family's domain, or marks that do not fit."""


class FixtureError(LookupError):
    pass


@dataclass(frozen=True)
class MarkedGraph:
    graph: Graph
    marks: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        for name, v in self.marks.items():
            if not 0 <= v < self.graph.n:
                raise FamilyError(f"mark {name!r} -> {v} is not a vertex")

    def __getitem__(self, name: str) -> int:
        return self.marks[name]

    @property
    def n(self) -> int:
        return self.graph.n


# fixtures ----------------------------------------------------------------------------


def fixture_dir() -> Path:
    override = os.environ.get(FIXTURE_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("injchrom") / "data"))


def load_manifest(directory: Path | None = None) -> dict:
    d = directory or fixture_dir()
    path = d / MANIFEST
    if not path.exists():
        raise FixtureError(f"fixture manifest missing at {path}")
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _fixture_lines(directory: Path) -> list[str]:
    path = directory / FIXTURE_FILE
    if not path.exists():
        raise FixtureError(f"fixture file missing at {path}")
    with open(path, "rb") as fh:
        return [ln.strip().decode("ascii") for ln in fh if ln.strip()]


def graph6_digest(line: str) -> str:
    return hashlib.sha256(line.encode("ascii")).hexdigest()


def _resolve(manifest: dict, name: str) -> str:
    entries = manifest["fixtures"]
    if name in entries:
        return name
    alias = manifest.get("aliases", {}).get(name)
    if alias is not None:
        return alias
    for key, entry in entries.items():
        if str(entry.get("hog_id")) == str(name):
            return key
    raise FixtureError(f"unknown fixture {name!r}; known: {sorted(entries)}")


def fixture_names(directory: Path | None = None) -> list[str]:
    return sorted(load_manifest(directory)["fixtures"])


def fixture(name: str, directory: Path | None = None) -> MarkedGraph:
    """Load a named fixture (names, aliases such as ``fig2`` and HoG ids all work).

    The stored graph6 line must match the manifest checksum, and for
    transcribed fixtures also the manifest edge list.
    """
    d = directory or fixture_dir()
    manifest = load_manifest(d)
    key = _resolve(manifest, name)
    entry = manifest["fixtures"][key]
    lines = _fixture_lines(d)
    idx = entry["index"]
    if idx >= len(lines):
        raise FixtureError(f"fixture {key!r} points past the end of {FIXTURE_FILE}")
    line = lines[idx]
    if graph6_digest(line) != entry["sha256"]:
        raise FixtureError(f"checksum mismatch for fixture {key!r}")
    g = parse_graph6(line.encode("ascii"))
    if "edges" in entry:
        ref = Graph.from_edges(entry["n"], [tuple(e) for e in entry["edges"]])
        if ref != g:
            raise FixtureError(f"fixture {key!r}: edge list and graph6 line disagree")
    return MarkedGraph(g, dict(entry.get("marks", {})))


# section-3 families ------------------------------------------------------------------


def family_g4(i: int) -> MarkedGraph:
    """``G^4_i``: ``i`` outer-triangle replacements on top of the order-15 base."""
    if i < 0:
        raise FamilyError("step must be nonnegative")
    base = fixture("G4_0")
    g = base.graph
    t = (base["v0"], base["v1"], base["v2"])
    marks = dict(base.marks)
    for step in range(1, i + 1):
        p0, p1, p2 = t
        g = g.delete_edge(p0, p1).delete_edge(p1, p2).delete_edge(p0, p2)
        n = g.n
        q0, q1, q2 = n, n + 1, n + 2
        edges = [(q0, q1), (q1, q2), (q0, q2),
                 (q0, p1), (q0, p2), (q1, p0), (q1, p2), (q2, p0), (q2, p1)]
        g = Graph.from_edges(n + 3, list(g.edges()) + edges)
        t = (q0, q1, q2)
        for j, v in enumerate(t):
            marks[f"v{j}^{step}"] = v
    marks["v0"], marks["v1"], marks["v2"] = t
    return MarkedGraph(g, marks)


def _check_triangle(g: Graph, u: int, v: int, w: int) -> None:
    if not (g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w)):
        raise FamilyError(f"marks {u}, {v}, {w} do not span a triangle")


def h_family(base: MarkedGraph, steps: int) -> MarkedGraph:
    """Member of the subdivision family after ``steps`` half-steps.

    With current triangle ``(v0, v1, v2)``, an odd half-step subdivides
    ``v0 v1`` by a new vertex ``s`` and joins ``v2 s``; the following even
    half-step subdivides ``s v1`` by a new vertex ``t``, joins ``v2 t`` and the
    triangle becomes ``(v2, t, s)``.  Marks ``v0, v1, v2`` track the current
    triangle; after an odd half-step ``s`` names the pending vertex.
    """
    if steps < 0:
        raise FamilyError("steps must be nonnegative")
    try:
        v0, v1, v2 = base["u"], base["v"], base["w"]
    except KeyError:
        raise FamilyError("base needs marks u, v, w") from None
    g = base.graph
    _check_triangle(g, v0, v1, v2)
    marks = dict(base.marks)
    s = None
    for h in range(1, steps + 1):
        if h % 2:
            g, s = g.subdivide_edge(v0, v1)
            g = g.add_edge(v2, s)
        else:
            g, t = g.subdivide_edge(s, v1)
            g = g.add_edge(v2, t)
            v0, v1, v2 = v2, t, s
            s = None
    marks.update(v0=v0, v1=v1, v2=v2)
    if s is not None:
        marks["s"] = s
    else:
        marks.pop("s", None)
    return MarkedGraph(g, marks)


def ls_base(delta: int) -> MarkedGraph:
    """Diameter-2 planar graph of order ``floor(3*delta/2) + 1`` and maximum degree ``delta >= 8``.

    Hubs ``x, y, z`` with edges ``xy`` and ``yz``; bundle ``A`` is joined to
    ``y, z``, ``B`` to ``x, z`` and ``C`` to ``x, y``, and each bundle is a
    path.  Sizes are ``(k-1, k, k-1)`` for ``delta = 2k`` and ``(k-1, k+1, k-1)``
    for ``delta = 2k+1``.  Any two vertices then share a neighbour.  The
    triangle ``a1 b1 c_last`` ties the bundles together for 3-connectivity and
    carries the marks ``w = a1``, ``v = b1``, ``u = c_last``.
    """
    if delta < 8:
        raise FamilyError(f"ls_base needs delta >= 8, got {delta}")
    k = delta // 2
    sizes = (k - 1, k, k - 1) if delta % 2 == 0 else (k - 1, k + 1, k - 1)
    x, y, z = 0, 1, 2
    marks = {"x": x, "y": y, "z": z}
    edges = [(x, y), (y, z)]
    nxt = 3
    bundles = {}
    for name, size, hubs in (("a", sizes[0], (y, z)), ("b", sizes[1], (x, z)), ("c", sizes[2], (x, y))):
        vs = list(range(nxt, nxt + size))
        nxt += size
        bundles[name] = vs
        for i, v in enumerate(vs):
            marks[f"{name}{i + 1}"] = v
            edges.extend((h, v) for h in hubs)
            if i:
                edges.append((vs[i - 1], v))
    a, b, c = bundles["a"][0], bundles["b"][0], bundles["c"][-1]
    edges += [(a, b), (a, c), (b, c)]
    marks.update(u=c, v=b, w=a)
    return MarkedGraph(Graph.from_edges(nxt, edges), marks)


def cubic_family(n: int) -> MarkedGraph:
    """Cubic planar member on ``2 + 4n`` vertices, ``n >= 3`` odd."""
    if n < 3 or n % 2 == 0:
        raise FamilyError(f"cubic family needs odd n >= 3, got {n}")
    marks = {"v0^0": 0, "v1^0": 1}
    for i in range(1, n + 1):
        for j in range(4):
            marks[f"v{j}^{i}"] = 2 + 4 * (i - 1) + j

    def vert(j: int, i: int) -> int:
        i %= n + 1
        if i == 0 and j in (2, 3):
            j = 1
        return marks[f"v{j}^{i}"]

    edges = [(vert(0, 0), vert(1, 0))]
    for i in range(1, n + 1):
        edges += [(vert(1, i), vert(0, i)), (vert(1, i), vert(2, i)),
                  (vert(1, i), vert(3, i)), (vert(2, i), vert(3, i))]
    for i in range(n + 1):
        edges += [(vert(0, i), vert(2, i + 1)), (vert(3, i), vert(0, i + 1))]
    return MarkedGraph(Graph.from_edges(2 + 4 * n, edges), marks)


# section-4 families ------------------------------------------------------------------


def shannon_subdivided(delta: int, extensions: int = 0) -> MarkedGraph:
    """Subdivided Shannon triangle with optional 2-connected extensions.

    Corners ``a, b, c`` carry ``ceil(delta/2)`` a-b strands and ``floor(delta/2)``
    strands on each of b-c and c-a, each strand a path through one new vertex.
    The first extension joins the first a-b and b-c strand vertices by a path
    of length 3; each later one joins the two inner vertices of the previous
    path by a new path of length 3.
    """
    if delta < 3:
        raise FamilyError(f"shannon_subdivided needs delta >= 3, got {delta}")
    if extensions < 0:
        raise FamilyError("extensions must be nonnegative")
    a, b, c = 0, 1, 2
    marks = {"a": a, "b": b, "c": c}
    edges = []
    nxt = 3
    for label, (p, q), count in (("ab", (a, b), (delta + 1) // 2),
                                  ("bc", (b, c), delta // 2),
                                  ("ca", (c, a), delta // 2)):
        for i in range(count):
            marks[f"{label}{i + 1}"] = nxt
            edges += [(p, nxt), (nxt, q)]
            nxt += 1
    s, t = marks["ab1"], marks["bc1"]
    for e in range(1, extensions + 1):
        p, q = nxt, nxt + 1
        nxt += 2
        edges += [(s, p), (p, q), (q, t)]
        marks[f"x{e}"], marks[f"y{e}"] = p, q
        s, t = p, q
    return MarkedGraph(Graph.from_edges(nxt, edges), marks)


def k_family(steps: int) -> MarkedGraph:
    """Girth-4 family grown from the order-11 base by repeated degree-3 expansion."""
    if steps < 0:
        raise FamilyError("steps must be nonnegative")
    base = fixture("K_base")
    g = base.graph
    u, u1, u2, u3 = base["u"], base["u1"], base["u2"], base["u3"]
    for _ in range(steps):
        n = g.n
        v1, v2, v3 = n, n + 1, n + 2
        g, _x = g.add_vertex(())
        g, _x = g.add_vertex(())
        g, _x = g.add_vertex(())
        g = g.delete_edge(u, u3)
        for p, q in ((v1, v3), (v2, v3), (v1, u1), (v1, u3), (v2, u2), (v2, u3), (v3, u)):
            g = g.add_edge(p, q)
        u, u1, u2, u3 = v3, v2, v1, u
    return MarkedGraph(g, {"u": u, "u1": u1, "u2": u2, "u3": u3})


def prism(k: int) -> MarkedGraph:
    """Circular ladder: cycles ``u_0..u_{k-1}`` (0..k-1), ``v_0..v_{k-1}`` (k..2k-1) and rungs ``u_i v_i``."""
    if k < 3:
        raise FamilyError(f"prism needs k >= 3, got {k}")
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(i, j), (k + i, k + j), (i, k + i)]
    marks = {f"u{i}": i for i in range(k)} | {f"v{i}": k + i for i in range(k)}
    return MarkedGraph(Graph.from_edges(2 * k, edges), marks)


def gen_dodecahedron(r: int) -> MarkedGraph:
    """``D_r`` on ``4r`` vertices: ``u_i = i``, ``v_i = r+i``, ``u'_i = 2r+i``, ``v'_i = 3r+i``."""
    if r < 3:
        raise FamilyError(f"generalised dodecahedron needs r >= 3, got {r}")
    U, V, Up, Vp = 0, r, 2 * r, 3 * r
    edges = []
    for i in range(r):
        j = (i + 1) % r
        edges += [(U + i, U + j), (V + i, V + j), (U + i, Up + i),
                  (V + i, Vp + i), (Vp + i, Up + i), (Up + i, Vp + j)]
    marks = {}
    for i in range(r):
        marks[f"u{i}"], marks[f"v{i}"] = U + i, V + i
        marks[f"u'{i}"], marks[f"v'{i}"] = Up + i, Vp + i
    return MarkedGraph(Graph.from_edges(4 * r, edges), marks)


def appendix_variant(g: MarkedGraph | None = None) -> MarkedGraph:
    """``G + {v1 d5, d5 v5, v1 v5} - w1 - w2 - w3`` for the order-18 fixture."""
    if g is None:
        g = fixture("Fig12_G")
    h = g.graph
    for p, q in (("v1", "d5"), ("d5", "v5"), ("v1", "v5")):
        h = h.add_edge(g[p], g[q])
    drop = [g["w1"], g["w2"], g["w3"]]
    h = h.delete_vertices(drop)
    # re-index surviving marks
    marks = {}
    for name, v in g.marks.items():
        if v in drop:
            continue
        marks[name] = v - sum(1 for d in drop if d < v)
    return MarkedGraph(h, marks)


# subdivision-family hypotheses --------------------------------------------------------


def lemma_report(g: Graph, u: int, v: int, w: int) -> dict[str, bool]:
    """Each hypothesis of the subdivision-family lemma for triangle ``uvw`` and edge ``uv``."""
    n = g.n
    delta = g.max_degree()
    tri = g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w)
    conn3 = vertex_connectivity_at_least(g, 3)
    planar = is_planar(g)
    report = {
        "order_at_least_8": n >= 8,
        "max_degree_at_least_5": delta >= 5,
        "planar": planar,
        "three_connected": conn3,
        "diameter_2": diameter(g) == 2,
        "edges_on_triangles": every_edge_on_triangle(g),
        "facial_triangle": tri and conn3 and planar and is_facial_triangle(g, u, v, w),
        "deg_w_small": g.degree(w) <= delta - 2 and g.degree(w) <= n - 4,
        "neighbourhood_small": len(g.closed_neighborhood_of_set({u, v, w})) <= n - 2,
        "unique_paths_ok": tri and unique_length2_path_pairs_through(g, u, v) <= {frozenset((u, w))},
    }
    return report


def find_lemma_triangle(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically first ``(u, v, w)`` meeting every lemma hypothesis, if any."""
    best = None
    for a, b, c in triangles(g):
        for u, v, w in ((a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)):
            if best is not None and (u, v, w) >= best:
                continue
            if all(lemma_report(g, u, v, w).values()):
                best = (u, v, w)
    return best


# dispatch ----------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """A family name with its integer parameters, e.g. ``FamilySpec("prism", (6,))``."""

    name: str
    params: tuple = ()


_BUILDERS = {
    "g4": (family_g4, 1),
    "ls": (ls_base, 1),
    "cubic": (cubic_family, 1),
    "shannon": (shannon_subdivided, 2),
    "k": (k_family, 1),
    "prism": (prism, 1),
    "dodecahedron": (gen_dodecahedron, 1),
}


def build(spec: FamilySpec) -> MarkedGraph:
    """Build a family member.  ``h`` takes ``(base, steps)`` with a fixture name or ``ls<delta>`` as base."""
    name, params = spec.name, tuple(spec.params)
    if name == "fixture":
        if len(params) != 1:
            raise FamilyError("fixture takes one name")
        return fixture(str(params[0]))
    if name == "h":
        if len(params) != 2:
            raise FamilyError("h takes (base, steps)")
        base_name, steps = str(params[0]), int(params[1])
        base = ls_base(int(base_name[2:])) if base_name.startswith("ls") else fixture(base_name)
        return h_family(base, steps)
    if name == "appendix":
        return appendix_variant()
    try:
        fn, arity = _BUILDERS[name]
    except KeyError:
        raise FamilyError(f"unknown family {name!r}") from None
    if not 1 <= len(params) <= arity:
        raise FamilyError(f"{name} takes up to {arity} integer parameters")
    try:
        ints = [int(p) for p in params]
    except ValueError:
        raise FamilyError(f"{name} parameters must be integers") from None
    return fn(*ints)


def family_names() -> list[str]:
    return sorted(list(_BUILDERS) + ["h", "fixture", "appendix"])

