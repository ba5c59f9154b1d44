"""Regenerate data/fixtures.g6 and data/manifest.json from the transcribed edge lists.

Expected invariants are recomputed here and written into the manifest; the
test suite then checks the loaded fixtures against them and against the
values quoted for each figure.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from injchrom.codec import parse_graph6, to_graph6_str  # noqa: E402
from injchrom.families import graph6_digest  # noqa: E402
from injchrom.graphcore import Graph  # noqa: E402
from injchrom.injsolver import injective_chromatic_number  # noqa: E402
from injchrom.metrics import diameter, girth, vertex_connectivity  # noqa: E402

# figure of the order-10 diameter-2 graph, tikz node ids 1..10
FIG2 = [(2, 8), (8, 1), (1, 2), (2, 5), (5, 1), (2, 6), (6, 3), (3, 9), (9, 2), (6, 9), (4, 3),
        (3, 10), (10, 4), (4, 7), (7, 6), (6, 5), (5, 7), (5, 4), (8, 10), (8, 3), (8, 4)]
FIG3 = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 5), (1, 6), (2, 5), (2, 7), (3, 4), (3, 6),
        (3, 8), (4, 7), (4, 8), (5, 6), (5, 7), (6, 8), (7, 8)]
# order-15 base of the Delta=4 family, tikz node ids 1..15
FIG6 = [(15, 4), (15, 11), (15, 12), (15, 3), (14, 2), (14, 10), (14, 13), (14, 5), (13, 6), (13, 8),
        (13, 5), (12, 3), (12, 9), (12, 7), (11, 4), (11, 8), (11, 9), (10, 2), (10, 7), (10, 6),
        (9, 8), (9, 7), (8, 6), (7, 6), (5, 1), (5, 4), (4, 1), (3, 1), (3, 2), (2, 1)]
FIG11 = [(0, 6), (0, 8), (0, 9), (1, 6), (1, 8), (1, 10), (2, 6), (2, 9), (2, 10), (3, 7), (3, 8),
         (3, 9), (4, 7), (4, 8), (4, 10), (5, 7), (5, 9), (5, 10)]
FIG12_LABELS = ["p3", "d3", "d2", "p2", "p4", "v4", "v3", "v2", "d1", "p1", "p5", "d4", "v5",
                "v1", "d5", "w1", "w2", "w3"]
FIG12 = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (1, 5), (1, 6), (2, 3), (2, 6), (2, 7), (3, 8),
         (3, 9), (4, 10), (4, 11), (5, 6), (5, 11), (5, 12), (6, 7), (7, 8), (7, 13), (8, 9), (8, 13),
         (9, 10), (9, 14), (10, 11), (10, 14), (11, 12), (12, 15), (12, 16), (13, 16), (13, 17),
         (14, 15), (14, 17)]

ENTRIES = [
    dict(name="G5_base", hog_id=52994, source="figure: planar order-10 graph of diameter 2 (same graph as the left base graph)",
         n=10, edges=[(a - 1, b - 1) for a, b in FIG2], marks={"u": 5, "v": 4, "w": 6}),
    dict(name="D4_chi9", hog_id=33503, source="figure: planar graph with maximum degree 4 and injective chromatic number 9",
         n=9, edges=FIG3),
    dict(name="G4_0", hog_id=50484, source="figure: base graph of the Delta=4 family",
         n=15, edges=[(a - 1, b - 1) for a, b in FIG6], marks={"v0": 13, "v1": 1, "v2": 9}),
    dict(name="K_base", hog_id=1158, source="figure: girth-4 base graph of the degree-3 expansion family",
         n=11, edges=FIG11, marks={"u": 6, "u1": 1, "u2": 2, "u3": 0}),
    dict(name="Fig12_G", hog_id=None, source="figure: order-18 graph used for the lower bound 8",
         n=18, edges=FIG12, marks={lab: i for i, lab in enumerate(FIG12_LABELS)}),
    dict(name="G6_base", hog_id=52998,
         source="constructed substitute (planar annealing search); the house-of-graphs original was not available offline",
         substitute=True, graph6="JO~?tHSL}W?", marks={"u": 0, "v": 7, "w": 2}),
    dict(name="G7_base", hog_id=52997,
         source="constructed substitute (planar annealing search); the house-of-graphs original was not available offline",
         substitute=True, graph6="Kpd\\uR?cIgIF", marks={"u": 8, "v": 11, "w": 9}),
    dict(name="T1_n9_d3", hog_id=52993,
         source="derived: the unique order-9 maximum-degree-3 attaining graph of the internal enumeration",
         graph6="H}GWOKB"),
]

ALIASES = {"fig2": "G5_base", "fig3": "D4_chi9", "fig6": "G4_0", "fig11": "K_base", "fig12": "Fig12_G",
           "G5": "G5_base", "G6": "G6_base", "G7": "G7_base"}


def main() -> None:
    out_dir = ROOT / "src" / "injchrom" / "data"
    lines = []
    fixtures = {}
    for i, e in enumerate(ENTRIES):
        if "edges" in e:
            g = Graph.from_edges(e["n"], e["edges"])
            line = to_graph6_str(g)
        else:
            line = e["graph6"]
            g = parse_graph6(line.encode())
        lines.append(line)
        d = diameter(g)
        gi = girth(g)
        entry = {
            "index": i,
            "hog_id": e["hog_id"],
            "source": e["source"],
            "substitute": e.get("substitute", False),
            "n": g.n,
            "m": g.size,
            "max_degree": g.max_degree(),
            "girth": None if gi == float("inf") else int(gi),
            "diameter": None if d == float("inf") else int(d),
            "connectivity": vertex_connectivity(g),
            "chi_i": injective_chromatic_number(g).chi_i,
            "sha256": graph6_digest(line),
        }
        if "edges" in e:
            entry["edges"] = [list(p) for p in e["edges"]]
        if e.get("marks"):
            entry["marks"] = e["marks"]
        fixtures[e["name"]] = entry
    (out_dir / "fixtures.g6").write_text("\n".join(lines) + "\n", encoding="ascii")
    manifest = {"format": 1, "aliases": ALIASES, "fixtures": fixtures}
    (out_dir / "manifest.json").write_text(json.dumps(manifest, indent=1) + "\n", encoding="utf-8")
    for name, entry in fixtures.items():
        print(name, {k: entry[k] for k in ("n", "m", "max_degree", "girth", "diameter", "connectivity", "chi_i")})


if __name__ == "__main__":
    main()
