"""
Linking numbers and linking graphs
==================================

Row i of the linking matrix counts, with signs, the crossings where
another component passes over component i.
"""

from linkquandle import (articulation_points, connected_components, corpus,
                         inseparable_sublinks, is_classical_consistent, linking_graph,
                         linking_matrix)

# classical links have symmetric matrices
M = linking_matrix(corpus.get("hopf"))
print("Hopf:", M.rows, "symmetric:", is_classical_consistent(M))

# virtual links need not: the virtual Hopf link has l12 = 1, l21 = 0
V = linking_matrix(corpus.get("virtual-hopf"))
print("virtual Hopf:", V.rows, "symmetric:", is_classical_consistent(V))

# a chain of four components: a path graph with two articulation points
chain = linking_matrix(corpus.chain((1, 1, -1)))
g = linking_graph(chain)
print("chain edges:", sorted(tuple(sorted(e)) for e in g.edges))
print("articulation points:", sorted(articulation_points(g)))

# four components linked in a cycle: no articulation point at all
cycle = linking_matrix(corpus.four_cycle())
print("cycle components:", connected_components(linking_graph(cycle)))
print("inseparable sublinks:", inseparable_sublinks(cycle))
