"""Translation-commutative quandles as families of subgroups of Z^m.

A family ``S_0, ..., S_{m-1}`` of subgroups of Z^m with ``e_b`` in ``S_b``
defines the quandle Q(S): the disjoint union of the groups ``Z^m / S_b``,
with ``x ▷ y = x + e_c (mod S_b)`` for x in orbit b and y in orbit c.

The tc quandle of a link is Q(S(L)) where ``S_i`` is generated by ``e_i``
and row i of the linking matrix.  Two such quandles are isomorphic iff the
matrices agree up to re-indexing components and a sign per row.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import lattice
from .coloring import FiniteQuandle, require_tc
from .errors import PreconditionError, check_mu, max_canonical_mu, max_mu
from .lattice import INFINITE, LatticeBasis
from .linking import LinkingMatrix, connected_components, is_classical_consistent, linking_graph


def _unit(m, b):
    return tuple(int(k == b) for k in range(m))


@dataclass(frozen=True)
class SubgroupFamily:
    m: int
    subgroups: tuple  # of LatticeBasis

    def __post_init__(self):
        subs = tuple(self.subgroups)
        object.__setattr__(self, "subgroups", subs)
        if len(subs) != self.m:
            raise ValueError("need one subgroup per base element")
        for b, s in enumerate(subs):
            if s.m != self.m:
                raise ValueError(f"subgroup {b} lives in the wrong ambient rank")
            if not lattice.contains(s, _unit(self.m, b)):
                raise ValueError(f"subgroup {b} does not contain e_{b}")

    @classmethod
    def from_generators(cls, gens_per_b):
        """Build from per-orbit generator lists; ``e_b`` is always added."""
        m = len(gens_per_b)
        return cls(m, tuple(lattice.hnf([_unit(m, b), *g], m)
                            for b, g in enumerate(gens_per_b)))

    def indices(self):
        return tuple(lattice.index(s) for s in self.subgroups)

    def to_json(self):
        return {"m": self.m, "subgroups": [s.to_json() for s in self.subgroups]}

    @classmethod
    def from_json(cls, obj):
        m = obj["m"]
        return cls(m, tuple(lattice.hnf(rows, m) for rows in obj["subgroups"]))


@dataclass(frozen=True)
class LinkFamilyRows:
    """The generating vectors s_i (row i of the linking matrix, zero at i)."""

    m: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(r) != self.m for r in rows) or len(rows) != self.m:
            raise ValueError("rows must form an m x m array")
        if any(rows[i][i] for i in range(self.m)):
            raise ValueError("s_i must vanish at coordinate i")


@dataclass(frozen=True)
class IsoCertificate:
    """A re-indexing ``perm`` (0-based, b -> perm[b]) and optional signs.

    ``signs`` is indexed on the target side: row b of the source equals
    ``signs[perm[b]]`` times row ``perm[b]`` of the target, after re-indexing.
    """

    perm: tuple
    signs: Optional[tuple] = None

    def to_json(self):
        return {"perm": [p + 1 for p in self.perm],
                "signs": list(self.signs) if self.signs is not None else None}

    @classmethod
    def from_json(cls, obj):
        signs = obj.get("signs")
        return cls(tuple(p - 1 for p in obj["perm"]),
                   tuple(signs) if signs is not None else None)


def family_from_linking(M: LinkingMatrix):
    """Return ``(SubgroupFamily, LinkFamilyRows)`` for a linking matrix."""
    mu = M.mu
    rows = LinkFamilyRows(mu, tuple(
        tuple(0 if j == i else M[i, j] for j in range(mu)) for i in range(mu)))
    fam = SubgroupFamily(mu, tuple(lattice.hnf([_unit(mu, i), rows.rows[i]], mu)
                                   for i in range(mu)))
    return fam, rows


def _as_matrix(R):
    return R.rows if isinstance(R, (LinkFamilyRows, LinkingMatrix)) else tuple(map(tuple, R))


def qs_isomorphic_general(F: SubgroupFamily, G: SubgroupFamily) -> Optional[IsoCertificate]:
    """Find the least bijection f with f(S_b) = S'_{f(b)} for every b, or None."""
    if F.m != G.m:
        return None
    m = F.m
    check_mu(m, max_mu(), "qs_isomorphic_general")
    if sorted(map(str, F.indices())) != sorted(map(str, G.indices())):
        return None
    # order of e_j modulo S_b is carried to the order of e_{f(j)} modulo S'_{f(b)}
    of = [[lattice.coordinate_order(s, j) for j in range(m)] for s in F.subgroups]
    og = [[lattice.coordinate_order(s, j) for j in range(m)] for s in G.subgroups]
    idx_f, idx_g = F.indices(), G.indices()
    sig_f = [(idx_f[b], sorted(of[b]), sorted(r[b] for r in of)) for b in range(m)]
    sig_g = [(idx_g[b], sorted(og[b]), sorted(r[b] for r in og)) for b in range(m)]
    f = [None] * m
    used = [False] * m

    def consistent(k):
        for b in range(k + 1):
            if of[b][k] != og[f[b]][f[k]] or of[k][b] != og[f[k]][f[b]]:
                return False
        return True

    def leaf_ok():
        return all(lattice.lattice_equal(lattice.permute_coordinates(F.subgroups[b], f),
                                         G.subgroups[f[b]]) for b in range(m))

    def search(k):
        if k == m:
            return leaf_ok()
        for c in range(m):
            if used[c] or sig_f[k] != sig_g[c]:
                continue
            f[k] = c
            used[c] = True
            if consistent(k) and search(k + 1):
                return True
            used[c] = False
        f[k] = None
        return False

    if search(0):
        return IsoCertificate(tuple(f))
    return None


def _signed_search(A, B, group_of=None):
    """Least f and signs with B[f(b)][f(j)] = eps * A[b][j].

    ``group_of[b]`` ties signs together: rows in the same group share one
    sign.  Without it each row has its own sign.
    """
    m = len(A)
    if len(B) != m:
        return None
    if group_of is None:
        group_of = list(range(m))
    rsig = lambda X, b: (sorted(abs(x) for x in X[b]), sorted(abs(r[b]) for r in X))
    sig_a = [rsig(A, b) for b in range(m)]
    sig_b = [rsig(B, b) for b in range(m)]
    f = [None] * m
    used = [False] * m
    eps = {}

    def fix(b, a, a2, newly):
        g = group_of[b]
        s = 1 if a2 == a else -1
        if g in eps:
            return eps[g] == s
        eps[g] = s
        newly.append(g)
        return True

    def place(k, newly):
        for b in range(k + 1):
            for (p, q) in ((k, b), (b, k)):
                a, a2 = A[p][q], B[f[p]][f[q]]
                if abs(a) != abs(a2):
                    return False
                if a and not fix(p, a, a2, newly):
                    return False
        return True

    def search(k):
        if k == m:
            return True
        for c in range(m):
            if used[c] or sig_a[k] != sig_b[c]:
                continue
            f[k] = c
            used[c] = True
            newly = []
            if place(k, newly) and search(k + 1):
                return True
            for g in newly:
                del eps[g]
            used[c] = False
        f[k] = None
        return False

    if not search(0):
        return None
    signs = [1] * m
    for b in range(m):
        signs[f[b]] = eps.get(group_of[b], 1)
    return IsoCertificate(tuple(f), tuple(signs))


def qs_isomorphic_pm(R, R2) -> Optional[IsoCertificate]:
    """Decide f(s_b) = ±s'_{f(b)} for all b; the tc-isomorphism test for links.

    Accepts ``LinkFamilyRows`` or ``LinkingMatrix`` (diagonals are ignored).
    Returns the lexicographically least permutation; free signs are +1.
    """
    A, B = _as_matrix(R), _as_matrix(R2)
    if len(A) != len(B):
        return None
    check_mu(len(A), max_mu(), "qs_isomorphic_pm")
    A = [[0 if i == j else x for j, x in enumerate(r)] for i, r in enumerate(A)]
    B = [[0 if i == j else x for j, x in enumerate(r)] for i, r in enumerate(B)]
    return _signed_search(A, B)


def tc_isomorphic_classical(M: LinkingMatrix, M2: LinkingMatrix) -> Optional[IsoCertificate]:
    """Classical-link form: one sign per connected component of the linking graph."""
    if not (is_classical_consistent(M) and is_classical_consistent(M2)):
        raise PreconditionError("tc_isomorphic_classical needs symmetric linking matrices")
    if M.mu != M2.mu:
        return None
    check_mu(M.mu, max_mu(), "tc_isomorphic_classical")
    group_of = list(range(M.mu, 2 * M.mu))  # isolated components: free signs
    for g, cls in enumerate(connected_components(linking_graph(M))):
        for v in cls:
            group_of[v] = g
    return _signed_search(M.rows, M2.rows, group_of)


def canonical_form(M: LinkingMatrix) -> LinkingMatrix:
    """Least matrix (row-major) over simultaneous re-indexing and per-row sign flips."""
    mu = M.mu
    check_mu(mu, max_canonical_mu(), "canonical_form")
    A = M.rows
    best = None
    for pi in itertools.permutations(range(mu)):
        # pi lists which old index lands in each new position
        cand = []
        tied = best is not None
        for r in range(mu):
            row = tuple(A[pi[r]][pi[c]] for c in range(mu))
            row = min(row, tuple(-x for x in row))
            if tied:
                if row > best[r]:
                    break
                tied = row == best[r]
            cand.append(row)
        else:
            if best is None or tuple(cand) < best:
                best = tuple(cand)
    return LinkingMatrix(best if best is not None else ())


def materialize(F: SubgroupFamily) -> FiniteQuandle:
    """Operation table of Q(S) for a family with every orbit finite.

    Orbit b occupies a contiguous block of elements, holding the canonical
    coset representatives of Z^m / S_b in mixed-radix order.
    """
    m = F.m
    reps, lookup, offsets = [], [], []
    for b, s in enumerate(F.subgroups):
        if lattice.index(s) == INFINITE:
            raise PreconditionError(f"orbit {b} is infinite; cannot materialize")
        r = lattice.coset_representatives(s)
        offsets.append(sum(len(x) for x in reps))
        reps.append(r)
        lookup.append({v: k for k, v in enumerate(r)})
    size = sum(len(r) for r in reps)
    table = np.empty((size, size), dtype=np.int64)
    labels = []
    for b in range(m):
        s = F.subgroups[b]
        for k, v in enumerate(reps[b]):
            x = offsets[b] + k
            labels.append(b)
            for c in range(m):
                moved = list(v)
                moved[c] += 1
                image = offsets[b] + lookup[b][lattice.reduce(s, moved)]
                table[x, offsets[c]:offsets[c] + len(reps[c])] = image
    return FiniteQuandle(table, orbit_labels=tuple(labels))


def extract_structure(Q: FiniteQuandle) -> SubgroupFamily:
    """Recover a family S with Q ≅ Q(S) from a finite tc quandle.

    Orbits are ordered by least element, which also serves as the orbit's
    representative.  S_b is the lattice of closure relations found by a
    breadth-first walk of orbit b under the representative translations.
    """
    require_tc(Q)
    orbits = Q.orbits()
    m = len(orbits)
    reps = [o[0] for o in orbits]
    t = Q.table
    subgroups = []
    for b in range(m):
        start = reps[b]
        coords = {start: (0,) * m}
        relations = []
        queue = deque([start])
        while queue:
            x = queue.popleft()
            vx = coords[x]
            for c in range(m):
                y = int(t[x, reps[c]])
                step = tuple(v + (k == c) for k, v in enumerate(vx))
                if y not in coords:
                    coords[y] = step
                    queue.append(y)
                else:
                    rel = tuple(a - b2 for a, b2 in zip(step, coords[y]))
                    if any(rel):
                        relations.append(rel)
        subgroups.append(lattice.hnf(relations, m))
    return SubgroupFamily(m, tuple(subgroups))
