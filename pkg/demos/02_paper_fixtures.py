"""
Shipped fixtures
================

The fixture manifest bundles the small named graphs as graph6 lines with
checksums and expected invariants.  Each value below is recomputed from
scratch.
"""

from injchrom import diameter, every_edge_on_triangle, girth, injective_chromatic_number
from injchrom.chroma_oracle import injective_via_oracle
from injchrom.families import fixture, fixture_names, load_manifest

manifest = load_manifest()
for name in fixture_names():
    entry = manifest["fixtures"][name]
    g = fixture(name).graph
    res = injective_chromatic_number(g)
    tag = " (substitute)" if entry.get("substitute") else ""
    print(f"{name:10s} n={g.n:2d} m={g.size:2d} delta={g.max_degree()} girth={girth(g)} "
          f"diam={diameter(g)} chi_i={res.chi_i} oracle={injective_via_oracle(g)}{tag}")

# the order-10 diameter-2 graph with every edge on a triangle
g = fixture("fig2").graph
print("fig2: diameter", diameter(g), "every edge on a triangle:", every_edge_on_triangle(g))

# a maximum-degree-4 graph needing 9 colours, which beats ceil(3*4/2) = 6
print("fig3 chi_i:", injective_chromatic_number(fixture("fig3").graph).chi_i)
