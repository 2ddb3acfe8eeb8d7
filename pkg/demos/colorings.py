"""
Counting quandle colorings
==========================

Three independent counters: a search over arc colorings, seed propagation
for tc targets, and a formula in the linking matrix alone.
"""

from linkquandle import (corpus, count_homs_bruteforce, count_homs_tc_fixedpoint,
                         count_homs_tc_propagate, fuzz, hn_predicted, linking_matrix, xn)
from linkquandle.coloring import dihedral_quandle

# colorings of two-component links by X_n depend on which linking numbers n divides
print("name            n  brute  prop  fixed  formula")
for name in ["hopf", "unlink2", "virtual-hopf"]:
    d = corpus.get(name)
    M = linking_matrix(d)
    for n in (2, 3, 4):
        T = xn(n)
        print(f"{name:14} {n:2} {count_homs_bruteforce(d, T):6} "
              f"{count_homs_tc_propagate(d, T):5} {count_homs_tc_fixedpoint(M, T):6} "
              f"{hn_predicted(M[1, 0], M[0, 1], n):8}")

# any quandle works for the brute-force counter: Fox 3-colorings of the trefoil
print("trefoil into R_3:", count_homs_bruteforce(corpus.get("trefoil"), dihedral_quandle(3)))

# counts do not change under Reidemeister moves
d = corpus.get("hopf")
e = fuzz(d, seed=1, steps=15)
print(f"{d.n_passages} -> {e.n_passages} passages,",
      count_homs_tc_propagate(d, xn(3)), "==", count_homs_tc_propagate(e, xn(3)))
