"""Group presentations attached to a link.

Words are tuples of ``(generator_index, exponent)`` pairs with 0-based
generator indices.  Conjugation follows ``g_{p▷q} = g_q g_p g_q^-1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .diagram import LinkDiagram, arc_table
from .errors import PreconditionError, check_mu, max_mu
from .linking import LinkingMatrix, inseparable_sublinks, is_classical_consistent


def reduce_word(word):
    """Merge adjacent runs of one generator and cancel zero exponents."""
    out = []
    for g, e in word:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            e += out.pop()[1]
            if e == 0:
                continue
        out.append((g, e))
    return tuple(out)


def inverse(word):
    return tuple((g, -e) for g, e in reversed(word))


def commutator(a, b):
    """[a, b] = a b a^-1 b^-1."""
    return reduce_word(a + b + inverse(a) + inverse(b))


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple

    def to_json(self):
        return {"gens": list(self.generators),
                "relators": [[[g + 1, e] for g, e in w] for w in self.relators]}


def _gen(i):
    return ((i, 1),)


def wirtinger(d: LinkDiagram) -> GroupPresentation:
    """One generator per arc, one conjugation relator per classical crossing.

    The relator for a crossing of writhe w reads
    ``next · over^-w · prev^-1 · over^w``.  A kink whose over-arc is its own
    under-arc yields the trivial relator, which is kept (as an empty word) so
    relators stay in bijection with crossings.
    """
    tab = arc_table(d)
    gens = tuple(f"g{i + 1}_{m}" for i, m in map(tab.arc_name, range(tab.total_arcs)))
    rels = []
    for label in sorted(tab.crossings):
        r = tab.crossings[label]
        w = r.writhe
        rels.append(reduce_word(((r.under_out, 1), (r.over_arc, -w),
                                 (r.under_in, -1), (r.over_arc, w))))
    return GroupPresentation(gens, tuple(rels))


def nilpotent3(M: LinkingMatrix) -> GroupPresentation:
    """Presentation of G(L)/G(L)_3 determined by the linking matrix.

    Type-1 relators ``λ_i g_i λ_i^-1 g_i^-1`` with
    ``λ_i = prod_{j != i, ascending} g_j^{M[i][j]}`` (omitted when trivial),
    then ``[g_i, [g_j, g_k]]`` for every i and every ordered pair j != k.
    """
    mu = M.mu
    gens = tuple(f"g{i + 1}" for i in range(mu))
    rels = []
    for i in range(mu):
        lam = reduce_word(tuple((j, M[i, j]) for j in range(mu) if j != i))
        w = commutator(lam, _gen(i))
        if w:
            rels.append(w)
    for i, j, k in itertools.product(range(mu), repeat=3):
        if j != k:
            rels.append(commutator(_gen(i), commutator(_gen(j), _gen(k))))
    return GroupPresentation(gens, tuple(rels))


def _token(g, e):
    return f"g{g + 1}" if e == 1 else f"g{g + 1}^{e}"


def render(p: GroupPresentation) -> str:
    """``<g1,...,gN | w1, w2, ...>``; the empty word renders as ``1``."""
    head = ",".join(f"g{k + 1}" for k in range(len(p.generators)))
    words = [" ".join(_token(g, e) for g, e in w) if w else "1" for w in p.relators]
    return f"<{head} | {', '.join(words)}>"


def exponent_sums(word, n_gens):
    sums = [0] * n_gens
    for g, e in word:
        sums[g] += e
    return sums


@dataclass(frozen=True)
class SaktraCertificate:
    """Per-sublink signs witnessing the linking-number condition."""

    perm: tuple
    sublinks: tuple  # of (subset, sign), subsets 0-based

    def to_json(self):
        return {"perm": [p + 1 for p in self.perm],
                "sublinks": [{"components": [v + 1 for v in s], "sign": e}
                             for s, e in self.sublinks]}


def _sublink_signs(M, M2, f, sublinks):
    out = []
    for S in sublinks:
        sign = None
        for j in S:
            for k in S:
                a, b = M[j, k], M2[f[j], f[k]]
                if abs(a) != abs(b):
                    return None
                if a:
                    s = 1 if a == b else -1
                    if sign is None:
                        sign = s
                    elif sign != s:
                        return None
        out.append((S, sign if sign is not None else 1))
    return tuple(out)


def saktra_condition(M: LinkingMatrix, M2: LinkingMatrix, mode: str = "fixed"
                     ) -> Optional[SaktraCertificate]:
    """Decide whether every inseparable sublink's linking numbers agree up to one sign.

    ``fixed`` keeps the given indexing of components; ``search`` also tries
    every re-indexing (least permutation first).
    """
    if mode not in ("fixed", "search"):
        raise ValueError("mode must be 'fixed' or 'search'")
    if not (is_classical_consistent(M) and is_classical_consistent(M2)):
        raise PreconditionError("saktra_condition needs symmetric linking matrices")
    if M.mu != M2.mu:
        return None
    mu = M.mu
    check_mu(mu, max_mu(), "saktra_condition")
    sublinks = inseparable_sublinks(M)
    if mode == "fixed":
        f = tuple(range(mu))
        signs = _sublink_signs(M, M2, f, sublinks)
        return SaktraCertificate(f, signs) if signs is not None else None

    # every pair is inseparable, so |M| must match entrywise after re-indexing
    f = [None] * mu
    used = [False] * mu

    def search(k):
        if k == mu:
            signs = _sublink_signs(M, M2, f, sublinks)
            return SaktraCertificate(tuple(f), signs) if signs is not None else None
        for c in range(mu):
            if used[c]:
                continue
            f[k] = c
            if all(abs(M[k, j]) == abs(M2[c, f[j]]) for j in range(k)):
                used[c] = True
                found = search(k + 1)
                used[c] = False
                if found:
                    return found
        f[k] = None
        return None

    return search(0)
