"""
Subgroups of Z^m in Hermite normal form
=======================================

Every subgroup gets one canonical basis, so equality is comparison.
"""

from linkquandle import lattice

L = lattice.hnf([(2, 4), (6, 3)])
print("basis:", L.rows, " index:", lattice.index(L))

# membership reduces against the basis
for v in [(2, 4), (0, 9), (1, 1)]:
    print(v, "in L:", lattice.contains(L, v))

# different generating sets, same subgroup
print(lattice.lattice_equal(lattice.hnf([(1, 0), (0, 2)]), lattice.hnf([(1, 2), (1, 4)])))

# coset representatives of Z^2 / L, one per element of the quotient
reps = lattice.coset_representatives(L)
print(len(reps), "cosets:", reps)

# rank-deficient subgroups have infinite index
print("index of <e1>:", lattice.index(lattice.hnf([(1, 0)], 2)))
