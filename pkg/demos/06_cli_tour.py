"""
Command-line tour
=================

The same operations are available from the shell.  This script just runs a
few commands through the entry point and shows their output.
"""

import subprocess
import sys


def sh(*args, stdin=None):
    print("$ injchrom", " ".join(args))
    p = subprocess.run([sys.executable, "-m", "injchrom", *args], input=stdin, capture_output=True, text=True)
    print(p.stdout, end="")
    if p.stderr:
        print("[stderr]", p.stderr.strip())
    print("[exit]", p.returncode)


sh("chi-i", stdin="Bw\nDQo\n")
sh("family", "prism", "6", "--marks")
sh("gen", "5", "--min-degree", "2")
sh("check", "--family", "prism", "4", "5", "6", "7", "--bound", "la-storgel", "--girth-min", "4")
sh("check", "--family", "fixture", "fig3", "--bound", "chen")
sh("fixtures", "list")
