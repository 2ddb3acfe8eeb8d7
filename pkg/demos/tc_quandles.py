"""
Translation-commutative quandles from subgroup families
=======================================================

A family S_1, ..., S_m of subgroups of Z^m (with e_b in S_b) defines a
quandle whose orbits are the quotient groups Z^m / S_b.  The tc quandle of
a link comes from its linking matrix.
"""

from linkquandle import (canonical_form, corpus, extract_structure, family_from_linking,
                         linking_matrix, materialize, qs_isomorphic_general,
                         qs_isomorphic_pm, tc_isomorphic_classical, xn)
from linkquandle.tcquandle import SubgroupFamily

# the family of a link: S_i is generated by e_i and row i of the matrix
fam, rows = family_from_linking(linking_matrix(corpus.virtual_two(2, 3)))
print("family:", fam.to_json())
print("orbit sizes:", fam.indices())

# finite families become operation tables
Q = materialize(fam)
print("table size:", Q.size)
print(Q.table)

# and finite tc quandles give their family back
back = extract_structure(Q)
print("recovered:", qs_isomorphic_general(back, fam) is not None)

# the quandle X_3 is the family (Z^2, <e_2, 3 e_1>)
X3 = SubgroupFamily.from_generators([[(0, 1)], [(3, 0)]])
print("materialize == xn(3):", materialize(X3) == xn(3))

# isomorphism up to re-indexing and one sign per component
hp, hm = linking_matrix(corpus.get("hopf")), linking_matrix(corpus.get("hopf-neg"))
print("Hopf+ vs Hopf-:", qs_isomorphic_pm(hp, hm).to_json())

# chains of four components fall into three classes
signs = [(1, 1, 1), (1, 1, -1), (1, -1, 1), (-1, 1, 1)]
mats = [linking_matrix(corpus.chain(s)) for s in signs]
for s, M in zip(signs, mats):
    print(s, canonical_form(M).rows)
print("(+,+,-) vs (+,-,+):", tc_isomorphic_classical(mats[1], mats[2]))
