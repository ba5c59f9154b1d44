"""
Cross-checking the solver against an independent oracle
=======================================================

The solver branches on the conflict graph with its own saturation rule.
The oracle builds the conflict graph from neighbour sets and runs a separate
DSATUR branch and bound.  They must agree on every graph.
"""

import time

from injchrom import injective_chromatic_number
from injchrom.chroma_oracle import injective_via_oracle
from injchrom.smallgen import GenSpec, generate

for n in range(3, 8):
    t0 = time.perf_counter()
    agree = total = 0
    for g in generate(GenSpec(n, min_degree=2)):
        total += 1
        agree += injective_via_oracle(g) == injective_chromatic_number(g).chi_i
    print(f"n={n}: {agree}/{total} agree ({time.perf_counter() - t0:.2f}s)")
