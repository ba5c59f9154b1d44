"""
Infinite families at small parameters
=====================================

Every constructor returns a graph together with named vertex marks.  We
sample a few members of each family and print the invariants that stay fixed
along the family.
"""

from injchrom import girth, injective_chromatic_number, is_planar, vertex_connectivity_at_least
from injchrom.families import (
    cubic_family,
    family_g4,
    fixture,
    gen_dodecahedron,
    h_family,
    k_family,
    ls_base,
    prism,
    shannon_subdivided,
)


def show(label, g):
    k = injective_chromatic_number(g).chi_i
    print(f"{label:22s} n={g.n:3d} delta={g.max_degree()} girth={girth(g)} planar={is_planar(g)} "
          f"3-conn={vertex_connectivity_at_least(g, 3)} chi_i={k}")


# planar, maximum degree 4, always 8 colours
for i in range(4):
    show(f"G4_{i}", family_g4(i).graph)

# subdividing next to a marked facial triangle keeps the colour count
for base_name in ("G5_base", "G6_base"):
    base = fixture(base_name)
    for steps in (0, 3, 6):
        show(f"h({base_name}, {steps})", h_family(base, steps).graph)
show("ls_base(8)", ls_base(8).graph)

# cubic planar graphs needing 5 colours
for n in (3, 5):
    show(f"cubic({n})", cubic_family(n).graph)

# girth 4
show("shannon(6, 0)", shannon_subdivided(6).graph)
show("shannon(6, 2)", shannon_subdivided(6, 2).graph)
show("k_family(2)", k_family(2).graph)

# three colours exactly when 3 divides the parameter
for k in (5, 6, 7):
    show(f"prism({k})", prism(k).graph)
for r in (5, 6):
    show(f"dodecahedron({r})", gen_dodecahedron(r).graph)
