"""Finite quandles as operation tables, and counting colorings of links.

``table[x, y] = x ▷ y``.  Colorings assign a quandle element to every arc so
that at each crossing ``under_out = under_in ▷ over`` for a positive
crossing and ``under_in = under_out ▷ over`` for a negative one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .diagram import LinkDiagram, arc_table
from .errors import CapExceeded, NotTranslationCommutative, PreconditionError, max_colorings
from .linking import LinkingMatrix


@dataclass(frozen=True, eq=False)
class FiniteQuandle:
    table: np.ndarray
    orbit_labels: Optional[tuple] = None

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise ValueError("quandle table must be square")
        if t.size and (t.min() < 0 or t.max() >= t.shape[0]):
            raise ValueError("table entries must lie in 0..m-1")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    def __eq__(self, other):
        return isinstance(other, FiniteQuandle) and np.array_equal(self.table, other.table)

    __hash__ = None

    @property
    def size(self):
        return self.table.shape[0]

    def op(self, x, y):
        return int(self.table[x, y])

    def translation(self, y):
        """The permutation x -> x ▷ y as an index array."""
        return self.table[:, y]

    def orbits(self):
        """Orbits as sorted lists, ordered by least element."""
        parent = list(range(self.size))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for x in range(self.size):
            for y in range(self.size):
                a, b = find(x), find(int(self.table[x, y]))
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups = {}
        for x in range(self.size):
            groups.setdefault(find(x), []).append(x)
        return sorted(groups.values())

    def to_text(self):
        lines = [str(self.size)]
        lines += [" ".join(str(int(v)) for v in row) for row in self.table]
        return "\n".join(lines) + "\n"


def trivial_quandle(m):
    return FiniteQuandle(np.tile(np.arange(m)[:, None], (1, m)))


def dihedral_quandle(n):
    """R_n: x ▷ y = 2y - x mod n."""
    x = np.arange(n)
    return FiniteQuandle((2 * x[None, :] - x[:, None]) % n)


def read_table(path) -> FiniteQuandle:
    with open(path, encoding="utf-8") as fh:
        tokens = fh.read().split()
    if not tokens:
        raise ValueError(f"{path}: empty quandle table file")
    m = int(tokens[0])
    vals = list(map(int, tokens[1:]))
    if len(vals) != m * m:
        raise ValueError(f"{path}: expected {m * m} entries, found {len(vals)}")
    return FiniteQuandle(np.array(vals, dtype=np.int64).reshape(m, m))


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    axiom: Optional[str] = None
    witness: tuple = field(default=())

    def __bool__(self):
        return self.ok


def check_axioms(q) -> AxiomReport:
    """Check idempotence, bijective translations and self-distributivity."""
    t = q.table if isinstance(q, FiniteQuandle) else np.asarray(q)
    m = t.shape[0]
    ar = np.arange(m)
    bad = np.nonzero(t[ar, ar] != ar)[0]
    if bad.size:
        return AxiomReport(False, "idempotence", (int(bad[0]),))
    for y in range(m):
        if not np.array_equal(np.sort(t[:, y]), ar):
            return AxiomReport(False, "bijection", (y,))
    lhs = t[t[:, :, None], ar[None, None, :]]
    rhs = t[t[:, None, :], t[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        return AxiomReport(False, "self-distributivity", tuple(int(v) for v in bad[0]))
    return AxiomReport(True)


def _tc_counterexample(t):
    m = t.shape[0]
    ar = np.arange(m)
    lhs = t[t[:, :, None], ar[None, None, :]]  # (x▷y)▷z at [x, y, z]
    rhs = t[t[:, None, :], ar[None, :, None]]  # (x▷z)▷y at [x, y, z]
    bad = np.argwhere(lhs != rhs)
    return tuple(int(v) for v in bad[0]) if bad.size else None


def _translations_commute(t):
    perms = [t[:, y] for y in range(t.shape[0])]
    for a, b in itertools.combinations(perms, 2):
        if not np.array_equal(a[b], b[a]):
            return False
    return True


def is_tc(q: FiniteQuandle) -> bool:
    """Translation-commutativity, checked on all triples and on the generators."""
    by_triples = _tc_counterexample(q.table) is None
    by_group = _translations_commute(q.table)
    if by_triples != by_group:
        raise AssertionError("tc checks disagree")
    return by_triples


def require_tc(q: FiniteQuandle):
    witness = _tc_counterexample(q.table)
    if witness is not None:
        raise NotTranslationCommutative(witness)


def xn(n: int) -> FiniteQuandle:
    """X_n: a fixed point 0 whose translation cycles 1..n; all else acts trivially."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t = np.empty((n + 1, n + 1), dtype=np.int64)
    t[0, :] = 0
    for x in range(1, n + 1):
        t[x, :] = x
        t[x, 0] = 1 + (x % n)
    return FiniteQuandle(t, orbit_labels=(0,) + (1,) * n)


def _inverse_table(t):
    inv = np.empty_like(t)
    m = t.shape[0]
    for y in range(m):
        inv[t[:, y], y] = np.arange(m)
    return inv


def count_homs_bruteforce(d: LinkDiagram, T: FiniteQuandle, budget=None) -> int:
    """Count arc colorings of ``d`` by ``T`` directly from the crossing relations.

    Depth-first search over arc colors with forward propagation: whenever two
    of a crossing's three arcs are known, the third is forced (or checked).
    Works for any quandle target.  ``budget`` bounds the number of search
    nodes (default ``LQ_MAX_COLORINGS``).
    """
    if budget is None:
        budget = max_colorings()
    tab = arc_table(d)
    t = T.table.tolist()
    inv = _inverse_table(T.table).tolist()
    m = T.size
    n = tab.total_arcs
    cons = [(r.over_arc, r.under_in, r.under_out, r.writhe) for r in tab.crossings.values()]
    touching = [[] for _ in range(n)]
    for k, (o, a, b, _) in enumerate(cons):
        for arc in {o, a, b}:
            touching[arc].append(k)
    color = [-1] * n
    nodes = 0

    def fwd(w, a_col, o_col):
        return t[a_col][o_col] if w > 0 else inv[a_col][o_col]

    def bwd(w, b_col, o_col):
        return inv[b_col][o_col] if w > 0 else t[b_col][o_col]

    def assign(arc, value, trail):
        queue = [(arc, value)]
        while queue:
            a0, v0 = queue.pop()
            if color[a0] != -1:
                if color[a0] != v0:
                    return False
                continue
            color[a0] = v0
            trail.append(a0)
            for k in touching[a0]:
                o, a, b, w = cons[k]
                co, ca, cb = color[o], color[a], color[b]
                if co == -1:
                    continue
                if ca != -1:
                    queue.append((b, fwd(w, ca, co)))
                elif cb != -1:
                    queue.append((a, bwd(w, cb, co)))
        return True

    def undo(trail):
        for a0 in trail:
            color[a0] = -1

    def choose():
        # prefer an uncolored over-arc of a crossing whose strand is colored
        for o, a, b, _ in cons:
            if color[o] == -1 and (color[a] != -1 or color[b] != -1):
                return o
        for arc in range(n):
            if color[arc] == -1:
                return arc
        return None

    def search():
        nonlocal nodes
        arc = choose()
        if arc is None:
            return 1
        total = 0
        for v in range(m):
            nodes += 1
            if nodes > budget:
                raise CapExceeded(f"brute-force coloring search exceeded {budget} nodes")
            trail = []
            if assign(arc, v, trail):
                total += search()
            undo(trail)
        return total

    return search()


def _check_seed_cap(m, mu):
    cap = max_colorings()
    if m ** mu > cap:
        raise CapExceeded(f"{m}^{mu} seed tuples exceed cap {cap}")


def count_homs_tc_propagate(d: LinkDiagram, T: FiniteQuandle) -> int:
    """Count colorings into a tc target by propagating from one seed per component.

    In a tc quandle all elements of an orbit translate alike, so every
    over-strand of component j acts as the seed of component j does.
    """
    require_tc(T)
    tab = arc_table(d)
    _check_seed_cap(T.size, d.mu)
    t = T.table.tolist()
    inv = _inverse_table(T.table).tolist()
    walks = [[(r.over_component, r.writhe) for r in tab.under_sequence(i)]
             for i in range(d.mu)]
    count = 0
    for seeds in itertools.product(range(T.size), repeat=d.mu):
        for i, walk in enumerate(walks):
            x = seeds[i]
            for k, w in walk:
                x = t[x][seeds[k]] if w > 0 else inv[x][seeds[k]]
            if x != seeds[i]:
                break
        else:
            count += 1
    return count


class _Powers:
    """Cached integer powers of the translations of a finite quandle."""

    def __init__(self, T):
        self.t = T.table
        self.inv = _inverse_table(T.table)
        self.cache = {}

    def __call__(self, y, k):
        key = (y, k)
        if key not in self.cache:
            m = self.t.shape[0]
            base = self.t[:, y] if k >= 0 else self.inv[:, y]
            e = abs(k)
            result = np.arange(m)
            while e:
                if e & 1:
                    result = base[result]
                base = base[base]
                e >>= 1
            self.cache[key] = result
        return self.cache[key]


def count_homs_tc_fixedpoint(M: LinkingMatrix, T: FiniteQuandle) -> int:
    """Count tuples (t_1..t_mu) with prod_j beta_{t_j}^{M[i][j]} fixing t_i for all i."""
    require_tc(T)
    mu = M.mu
    _check_seed_cap(T.size, mu)
    power = _Powers(T)
    count = 0
    for tup in itertools.product(range(T.size), repeat=mu):
        for i in range(mu):
            x = tup[i]
            for j in range(mu):
                e = M[i, j]
                if j != i and e:
                    x = int(power(tup[j], e)[x])
            if x != tup[i]:
                break
        else:
            count += 1
    return count


def hn_predicted(l12: int, l21: int, n: int) -> int:
    """Quandle maps from a 2-component link quandle to X_n, from linking numbers."""
    if n < 2:
        raise PreconditionError("n must be >= 2")
    divides = (l12 % n == 0) + (l21 % n == 0)
    return n * n + 1 + divides * n
