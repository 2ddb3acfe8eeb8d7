"""Slow, independent reference implementations used only as test oracles."""

import itertools

import networkx as nx
import numpy as np

from linkquandle import lattice


def articulation_by_removal(g):
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(tuple(e) for e in g.edges)
    base = nx.number_connected_components(G)
    out = set()
    for v in G.nodes:
        H = G.copy()
        H.remove_node(v)
        if nx.number_connected_components(H) > base:
            out.add(v)
    return frozenset(out)


def naive_arcs(d):
    """Arc ids and crossing relations, recomputed directly from the passages."""
    arc_of = {}
    under_of = {}
    next_id = 0
    for ci, comp in enumerate(d.components):
        ups = [k for k, p in enumerate(comp) if p.role == "U"]
        n = max(len(ups), 1)
        ids = list(range(next_id, next_id + n))
        next_id += n
        for k, p in enumerate(comp):
            before = sum(1 for u in ups if u < k)  # unders strictly before position k
            if p.role == "O":
                arc_of[p.crossing] = ids[(before - 1) % n]
            else:
                under_of[p.crossing] = (ids[(before - 1) % n], ids[before % n], p.sign)
    rels = [(arc_of[c], a, b, w) for c, (a, b, w) in under_of.items()]
    return next_id, rels


def naive_colorings(d, T):
    """Count colorings by enumerating every assignment of elements to arcs."""
    n, rels = naive_arcs(d)
    t = T.table
    count = 0
    for cols in itertools.product(range(T.size), repeat=n):
        ok = True
        for o, a, b, w in rels:
            if w > 0 and t[cols[a], cols[o]] != cols[b]:
                ok = False
                break
            if w < 0 and t[cols[b], cols[o]] != cols[a]:
                ok = False
                break
        if ok:
            count += 1
    return count


def composite_translation(T, word):
    """Permutation prod beta_{y}^{k} for (y, k) in word, as an index array."""
    perm = np.arange(T.size)
    for y, k in word:
        col = T.table[:, y]
        inv = np.argsort(col)
        step = col if k > 0 else inv
        for _ in range(abs(k)):
            perm = step[perm]
    return perm


def stabilizer_by_enumeration(T, orbit_reps, b):
    """Lattice of y in Z^m whose composite translation fixes orbit_reps[b], by box search."""
    m = len(orbit_reps)
    orbit_size = sum(1 for x in range(T.size) if _same_orbit(T, x, orbit_reps[b]))
    gens = [tuple(orbit_size * int(i == j) for j in range(m)) for i in range(m)]
    for y in itertools.product(range(orbit_size), repeat=m):
        perm = composite_translation(T, [(orbit_reps[c], y[c]) for c in range(m)])
        if perm[orbit_reps[b]] == orbit_reps[b]:
            gens.append(y)
    return lattice.hnf(gens, m)


def _same_orbit(T, x, y):
    seen = {y}
    frontier = [y]
    while frontier:
        z = frontier.pop()
        for w in range(T.size):
            for nxt in (int(T.table[z, w]), int(np.argsort(T.table[:, w])[z])):
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
    return x in seen


def quandles_isomorphic(Q1, Q2):
    if Q1.size != Q2.size:
        return False
    a, b = Q1.table, Q2.table
    for p in itertools.permutations(range(Q1.size)):
        p = np.array(p)
        # p(a[x, y]) == b[p(x), p(y)]
        if np.array_equal(p[a], b[p[:, None], p[None, :]]):
            return True
    return False


def pm_exhaustive(A, B):
    """Least (perm, signs) with B[f(b)][f(j)] = signs[f(b)] * A[b][j] off the diagonal.

    Signs are ordered +1 before -1.
    """
    m = len(A)
    if len(B) != m:
        return None
    for f in itertools.permutations(range(m)):
        for flips in itertools.product((1, -1), repeat=m):
            if all(B[f[b]][f[j]] == flips[f[b]] * A[b][j]
                   for b in range(m) for j in range(m) if b != j):
                return f, flips
    return None


def coset_count(basis, side):
    """Number of classes of the box [0, side)^m modulo the lattice, via pairwise membership."""
    reps = []
    for v in itertools.product(range(side), repeat=basis.m):
        if not any(lattice.contains(basis, [a - b for a, b in zip(v, r)]) for r in reps):
            reps.append(v)
    return len(reps)
