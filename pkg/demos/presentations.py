"""
Group presentations and the sublink sign condition
==================================================

The Wirtinger presentation has one generator per arc.  The class-3
nilpotent quotient only needs the linking matrix.
"""

from linkquandle import (corpus, linking_matrix, nilpotent3, render, saktra_condition,
                         tc_isomorphic_classical, wirtinger)
from linkquandle.groups import exponent_sums

print(render(wirtinger(corpus.get("trefoil"))))
print(render(nilpotent3(linking_matrix(corpus.get("hopf")))))

# every relator dies in the abelianization
p = nilpotent3(linking_matrix(corpus.chain((1, -1))))
print("exponent sums all zero:", all(exponent_sums(w, 3) == [0, 0, 0] for w in p.relators))

# chains (+,+,+) and (+,+,-): same linking numbers on each inseparable sublink,
# but different tc quandles
a = linking_matrix(corpus.chain((1, 1, 1)))
b = linking_matrix(corpus.chain((1, 1, -1)))
cert = saktra_condition(a, b)
print("sublink condition:", cert.to_json()["sublinks"][:3], "...")
print("tc isomorphic:", tc_isomorphic_classical(a, b) is not None)
