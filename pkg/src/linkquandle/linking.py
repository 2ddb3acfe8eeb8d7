"""Virtual linking numbers, linking graphs and inseparability.

Orientation convention, used everywhere in this package: ``M[i][j]`` is the
signed count of crossings at which component j passes *over* component i.
Row i of the matrix is therefore the vector of linking numbers "over K_i",
which is the data that generates the i-th subgroup of the tc quandle.
Indices are 0-based in Python and 1-based in JSON/CLI output.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .diagram import LinkDiagram
from .errors import CapExceeded, _env_int


@dataclass(frozen=True)
class LinkingMatrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        mu = len(rows)
        if any(len(r) != mu for r in rows):
            raise ValueError("linking matrix must be square")
        if any(rows[i][i] != 0 for i in range(mu)):
            raise ValueError("linking matrix diagonal must be zero")

    @property
    def mu(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def transpose(self):
        return LinkingMatrix(tuple(zip(*self.rows)) if self.rows else ())

    def restrict(self, subset):
        s = list(subset)
        return LinkingMatrix(tuple(tuple(self.rows[i][j] for j in s) for i in s))

    def to_json(self):
        return {"mu": self.mu, "l": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        m = cls(tuple(map(tuple, obj["l"])))
        if m.mu != obj["mu"]:
            raise ValueError("mu does not match matrix size")
        return m


def linking_matrix(d: LinkDiagram) -> LinkingMatrix:
    mu = d.mu
    M = [[0] * mu for _ in range(mu)]
    over = {}
    under = {}
    for ci, comp in enumerate(d.components):
        for p in comp:
            (over if p.is_over else under)[p.crossing] = (ci, p.sign)
    for label, (i, sign) in under.items():
        j = over[label][0]
        if i != j:
            M[i][j] += sign
    return LinkingMatrix(tuple(map(tuple, M)))


def is_classical_consistent(M: LinkingMatrix) -> bool:
    """True iff the matrix is symmetric, as every classical link's is."""
    return all(M[i, j] == M[j, i] for i in range(M.mu) for j in range(i))


@dataclass(frozen=True)
class LinkingGraph:
    vertices: frozenset
    edges: frozenset  # of frozenset({i, j})

    def neighbors(self, v):
        return sorted(w for e in self.edges if v in e for w in e if w != v)

    def adjacency(self):
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def remove(self, v):
        """Subgraph with v deleted; vertices left isolated are kept."""
        return LinkingGraph(self.vertices - {v},
                            frozenset(e for e in self.edges if v not in e))


def linking_graph(M: LinkingMatrix) -> LinkingGraph:
    edges = set()
    for i in range(M.mu):
        for j in range(i + 1, M.mu):
            if M[i, j] != 0 or M[j, i] != 0:
                edges.add(frozenset((i, j)))
    vertices = frozenset(v for e in edges for v in e)
    return LinkingGraph(vertices, frozenset(edges))


def connected_components(g: LinkingGraph) -> list:
    """Vertex classes, each sorted, listed by least vertex."""
    adj = g.adjacency()
    seen = set()
    classes = []
    for v in sorted(g.vertices):
        if v in seen:
            continue
        stack = [v]
        seen.add(v)
        cls = []
        while stack:
            u = stack.pop()
            cls.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        classes.append(sorted(cls))
    return classes


def articulation_points(g: LinkingGraph) -> frozenset:
    """Cut vertices by the depth-first low-point method."""
    adj = {v: sorted(ws) for v, ws in g.adjacency().items()}
    disc, low = {}, {}
    points = set()
    counter = 0
    for root in sorted(g.vertices):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        # iterative DFS: (vertex, parent, neighbor iterator)
        stack = [(root, None, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    points.add(parent)
        if root_children > 1:
            points.add(root)
    return frozenset(points)


def is_inseparable(M: LinkingMatrix, subset) -> bool:
    """Inseparable linking numbers for the sublink on ``subset`` (0-based).

    The sublink's own linking graph must be connected (the empty graph
    counts as connected) and free of articulation points.
    """
    subset = sorted(set(subset))
    if not subset:
        raise ValueError("subset must be nonempty")
    g = linking_graph(M.restrict(subset))
    return len(connected_components(g)) <= 1 and not articulation_points(g)


def max_subset_mu():
    return _env_int("LQ_MAX_SUBSET_MU", 12)


def inseparable_sublinks(M: LinkingMatrix) -> list:
    """All subsets of size >= 2 with inseparable linking numbers, lexicographically."""
    cap = max_subset_mu()
    if M.mu > cap:
        raise CapExceeded(f"inseparable_sublinks: mu={M.mu} exceeds cap {cap}")
    found = []
    for r in range(2, M.mu + 1):
        for s in itertools.combinations(range(M.mu), r):
            if is_inseparable(M, s):
                found.append(s)
    return sorted(found)
