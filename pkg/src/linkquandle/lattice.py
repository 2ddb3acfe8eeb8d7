"""Subgroups of Z^m in row-style Hermite normal form.

Rows are echelon with positive pivots and entries above each pivot reduced
into ``[0, pivot)``.  This form is unique, so two lattices are equal exactly
when their bases are equal.  Python ints throughout; no overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INFINITE = math.inf


@dataclass(frozen=True)
class LatticeBasis:
    m: int
    rows: tuple

    @property
    def rank(self):
        return len(self.rows)

    @property
    def pivots(self):
        return tuple(_pivot_col(r) for r in self.rows)

    def to_json(self):
        return [list(r) for r in self.rows]

    def __contains__(self, v):
        return contains(self, v)


def _pivot_col(row):
    for k, x in enumerate(row):
        if x:
            return k
    return None


def hnf(generators, m=None) -> LatticeBasis:
    """Canonical basis of the subgroup generated by ``generators``.

    ``m`` is required when ``generators`` is empty.
    """
    gens = [list(map(int, g)) for g in generators]
    if m is None:
        if not gens:
            raise ValueError("ambient rank m is required for an empty generator list")
        m = len(gens[0])
    if any(len(g) != m for g in gens):
        raise ValueError("all generators must have length m")
    rows = [g for g in gens if any(g)]
    basis = []
    col = 0
    while rows and col < m:
        active = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        if not active:
            col += 1
            continue
        # Euclid on column col until a single row carries it
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[col]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            active = nxt
        piv = active[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        basis.append(piv)
        rows = rest
        col += 1
    # reduce entries above each pivot
    for k in range(len(basis)):
        pc = _pivot_col(basis[k])
        p = basis[k][pc]
        for j in range(k):
            q = basis[j][pc] // p
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], basis[k])]
    return LatticeBasis(m, tuple(tuple(r) for r in basis))


def zero_lattice(m):
    return LatticeBasis(m, ())


def full_lattice(m):
    return LatticeBasis(m, tuple(tuple(int(i == j) for j in range(m)) for i in range(m)))


def reduce(basis: LatticeBasis, v):
    """Reduce v modulo the lattice by back-substitution; returns the remainder.

    Pivot coordinates of the remainder lie in ``[0, pivot)``; for a full-rank
    basis this is the canonical mixed-radix coset representative.
    """
    v = list(map(int, v))
    if len(v) != basis.m:
        raise ValueError("length mismatch")
    for row in basis.rows:
        pc = _pivot_col(row)
        q = v[pc] // row[pc]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return tuple(v)


def contains(basis: LatticeBasis, v) -> bool:
    return not any(reduce(basis, v))


def lattice_equal(b1: LatticeBasis, b2: LatticeBasis) -> bool:
    return b1.m == b2.m and b1.rows == b2.rows


def index(basis: LatticeBasis):
    """``[Z^m : L]``, or ``INFINITE`` when L has rank < m."""
    if basis.rank < basis.m:
        return INFINITE
    return math.prod(r[_pivot_col(r)] for r in basis.rows)


def permute_coordinates(basis: LatticeBasis, f) -> LatticeBasis:
    """Image of the lattice under e_k -> e_{f[k]} (``f`` a 0-based permutation)."""
    f = list(f)
    if sorted(f) != list(range(basis.m)):
        raise ValueError("f must be a permutation of range(m)")
    new_rows = []
    for r in basis.rows:
        w = [0] * basis.m
        for k, x in enumerate(r):
            w[f[k]] = x
        new_rows.append(w)
    return hnf(new_rows, basis.m)


def coordinate_order(basis: LatticeBasis, j):
    """Least k > 0 with k*e_j in the lattice, or 0 if there is none."""
    m = basis.m
    # move coordinate j last; the last HNF row then detects multiples of e_j
    f = [k if k < j else k - 1 for k in range(m)]
    f[j] = m - 1
    moved = permute_coordinates(basis, f)
    if moved.rows and _pivot_col(moved.rows[-1]) == m - 1:
        return moved.rows[-1][m - 1]
    return 0


def coset_representatives(basis: LatticeBasis):
    """Canonical representatives of Z^m / L in mixed-radix order (full rank only)."""
    if basis.rank < basis.m:
        raise ValueError("lattice has infinite index")
    radices = [r[k] for k, r in enumerate(basis.rows)]
    reps = [()]
    for d in radices:
        reps = [rep + (x,) for rep in reps for x in range(d)]
    return reps
