"""
Checking a conjectured bound over every small candidate
=======================================================

Candidates are the connected planar graphs with minimum degree 2 (a vertex
of degree 1 never creates a counterexample).  For each order we count the
graphs attaining the bound, by maximum degree, and stop on any violation.
Order 9 takes a few seconds; pass a larger order on the command line to go
further (order 10 takes several minutes on one core).
"""

import sys

from injchrom.harness import RunConfig, report, run_check
from injchrom.smallgen import GenSpec

top = int(sys.argv[1]) if len(sys.argv) > 1 else 9

for n in range(3, top + 1):
    spec = GenSpec(n, min_degree=2, max_edges=3 * n - 6, planar=True)
    res = run_check(RunConfig(gen=spec, bound="luzar"))
    print(f"n={n:2d} candidates={res.summary['graphs']:6d} attaining={res.table.row(n)} "
          f"violations={len(res.violations)} ({res.summary['wall_seconds']}s)")

# the last table in csv form
print(report(res.table, "csv").decode())
