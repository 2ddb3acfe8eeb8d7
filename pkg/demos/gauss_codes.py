"""
Gauss codes, arcs and Reidemeister moves
========================================

A link diagram is stored as one signed Gauss code per component.
"""

from linkquandle import arc_table, fuzz, parse, r1_insert, r2_insert, serialize
from linkquandle.errors import DiagramError

# the Hopf link: two components, two positive crossings
hopf = parse("O1+ U2+ / U1+ O2+")
print("components:", hopf.mu, " crossings:", hopf.crossings)

# a virtual trefoil only needs two classical crossings
vt = parse("O1- O2- U1- U2-")
print("virtual trefoil:", serialize(vt))

# arcs are cut at under-passages; every crossing knows its three arcs
tab = arc_table(parse("O1+ U2+ O3+ U1+ O2+ U3+"))
for label, rec in tab.crossings.items():
    print(f"crossing {label}: over {tab.arc_name(rec.over_arc)}, "
          f"under {tab.arc_name(rec.under_in)} -> {tab.arc_name(rec.under_out)}")

# malformed input names the crossing and the column
try:
    parse("O1+ U1- O2+")
except DiagramError as exc:
    print("rejected:", exc)

# R1 adds a kink, R2 pushes one strand over another
kinked = r1_insert(hopf, 0, 1, -1)
padded = r2_insert(hopf, (0, 0), (1, 2), 1)
print("R1:", serialize(kinked))
print("R2:", serialize(padded))

# the fuzzer chains random moves, reproducibly from a seed
moves = []
big = fuzz(hopf, seed=7, steps=10, log=moves)
print(f"after {len(moves)} moves: {big.n_passages} passages")
print(moves[:3])
