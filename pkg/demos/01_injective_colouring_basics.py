"""
Injective colouring basics
==========================

Two vertices conflict when they share a neighbour.  An injective colouring
gives conflicting vertices different colours, so the injective chromatic
number is the chromatic number of the conflict graph.
"""

from injchrom import Graph, conflict_graph, injective_chromatic_number, verify_injective
from injchrom.graphcore import cycle, path, star

# a path a-b-c: only a and c share a neighbour
p3 = path(3)
print("P3 conflicts:", conflict_graph(p3).conflicts.edges())
print("P3 chi_i:", injective_chromatic_number(p3).chi_i)

# adjacent vertices may share a colour when nothing else ties them
print("a=b=0, c=1 injective?", verify_injective(p3, [0, 0, 1]))
print("a=c=0 injective?", verify_injective(p3, [0, 1, 0]))

# the leaves of a star pairwise conflict, the centre conflicts with nobody
res = injective_chromatic_number(star(5))
print("K_{1,5}:", res.chi_i, "colours, witness", res.witness.colors)

# odd cycles: C5's conflict graph is again a 5-cycle
print("C5 chi_i:", injective_chromatic_number(cycle(5)).chi_i)

# the search reports how much work it did
k6 = Graph.complete(6)
res = injective_chromatic_number(k6)
print("K6 chi_i:", res.chi_i, "nodes:", res.stats.nodes)
