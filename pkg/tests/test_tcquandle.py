import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from linkquandle import (CapExceeded, IsoCertificate, LinkingMatrix, NotTranslationCommutative,
                         PreconditionError, SubgroupFamily, canonical_form, check_axioms, corpus,
                         extract_structure, family_from_linking, is_tc, lattice, linking_matrix,
                         materialize, qs_isomorphic_general, qs_isomorphic_pm,
                         tc_isomorphic_classical, xn)
from linkquandle.coloring import dihedral_quandle, trivial_quandle
from linkquandle.tcquandle import LinkFamilyRows

from conftest import random_family
from oracles import (composite_translation, pm_exhaustive, quandles_isomorphic,
                     stabilizer_by_enumeration)

HOPF = LinkingMatrix(((0, 1), (1, 0)))
HOPF_NEG = LinkingMatrix(((0, -1), (-1, 0)))
ZERO2 = LinkingMatrix(((0, 0), (0, 0)))


def chain_matrix(signs):
    return linking_matrix(corpus.chain(signs))


def matrices(max_mu=4, lo=-2, hi=2):
    return st.integers(1, max_mu).flatmap(lambda mu: st.lists(
        st.integers(lo, hi), min_size=mu * mu, max_size=mu * mu).map(
        lambda xs: LinkingMatrix(tuple(tuple(0 if i == j else xs[i * mu + j] for j in range(mu))
                                       for i in range(mu)))))


def symmetric_matrices(max_mu=5):
    def build(mu, xs):
        rows = [[0] * mu for _ in range(mu)]
        for (i, j), x in zip(itertools.combinations(range(mu), 2), xs):
            rows[i][j] = rows[j][i] = x
        return LinkingMatrix(tuple(map(tuple, rows)))
    return st.integers(1, max_mu).flatmap(lambda mu: st.lists(
        st.integers(-2, 2), min_size=mu * (mu - 1) // 2, max_size=mu * (mu - 1) // 2).map(
        lambda xs: build(mu, xs)))


def transform(M, perm, signs):
    """Re-index by perm (old b goes to perm[b]) and scale new row perm[b] by signs[perm[b]]."""
    mu = M.mu
    rows = [[0] * mu for _ in range(mu)]
    for b in range(mu):
        for j in range(mu):
            rows[perm[b]][perm[j]] = signs[perm[b]] * M[b, j]
    return LinkingMatrix(tuple(map(tuple, rows)))


# family_from_linking

def test_family_hopf_is_full():
    fam, rows = family_from_linking(HOPF)
    assert all(lattice.lattice_equal(s, lattice.full_lattice(2)) for s in fam.subgroups)
    assert rows.rows == ((0, 1), (1, 0))


def test_family_knot_is_trivial():
    fam, _ = family_from_linking(linking_matrix(corpus.get("trefoil")))
    assert fam.m == 1 and fam.indices() == (1,)
    assert materialize(fam).size == 1


def test_family_zero_matrix_has_infinite_orbits():
    fam, _ = family_from_linking(ZERO2)
    assert fam.subgroups[0].rows == ((1, 0),)
    assert fam.subgroups[1].rows == ((0, 1),)
    assert fam.indices() == (lattice.INFINITE, lattice.INFINITE)
    with pytest.raises(PreconditionError, match="orbit 0"):
        materialize(fam)


def test_family_requires_base_vector():
    with pytest.raises(ValueError):
        SubgroupFamily(2, (lattice.hnf([(0, 1)], 2), lattice.full_lattice(2)))
    with pytest.raises(ValueError):
        LinkFamilyRows(2, ((1, 0), (0, 0)))


def test_family_json_round_trip():
    fam, _ = family_from_linking(chain_matrix((1, -1)))
    assert SubgroupFamily.from_json(fam.to_json()) == fam
    cert = IsoCertificate((1, 0, 2), (1, -1, 1))
    assert cert.to_json() == {"perm": [2, 1, 3], "signs": [1, -1, 1]}
    assert IsoCertificate.from_json(cert.to_json()) == cert


# general isomorphism

def test_general_identity_and_index_mismatch():
    fam, _ = family_from_linking(chain_matrix((1, 1)))
    assert qs_isomorphic_general(fam, fam).perm == (0, 1, 2)
    other, _ = family_from_linking(ZERO2)
    hopf, _ = family_from_linking(HOPF)
    assert qs_isomorphic_general(hopf, other) is None
    assert qs_isomorphic_general(hopf, fam) is None


def test_general_hopf_signs():
    a, _ = family_from_linking(HOPF)
    b, _ = family_from_linking(HOPF_NEG)
    assert qs_isomorphic_general(a, b) is not None


def test_general_certificate_is_valid():
    rng = random.Random(5)
    for _ in range(30):
        F = random_family(rng, 3, 6)
        perm = list(range(3))
        rng.shuffle(perm)
        G = SubgroupFamily(3, tuple(
            lattice.permute_coordinates(F.subgroups[perm.index(c)], perm) for c in range(3)))
        cert = qs_isomorphic_general(F, G)
        assert cert is not None
        for b in range(3):
            assert lattice.lattice_equal(lattice.permute_coordinates(F.subgroups[b], cert.perm),
                                         G.subgroups[cert.perm[b]])


# ± form

def test_pm_examples():
    cert = qs_isomorphic_pm(HOPF, HOPF_NEG)
    assert cert.perm == (0, 1) and cert.signs == (-1, -1)
    assert qs_isomorphic_pm(HOPF, ZERO2) is None
    assert qs_isomorphic_pm(chain_matrix((1, 1, -1)), chain_matrix((1, 1, 1))) is None
    assert qs_isomorphic_pm(HOPF, LinkingMatrix(((0,),))) is None


def test_pm_is_asymmetric_in_rows():
    # rows may flip independently: (l12, l21) = (2, 1) vs (-2, 1)
    a = LinkingMatrix(((0, 2), (1, 0)))
    b = LinkingMatrix(((0, -2), (1, 0)))
    c = LinkingMatrix(((0, 1), (2, 0)))
    assert qs_isomorphic_pm(a, b).signs == (-1, 1)
    assert qs_isomorphic_pm(a, c).perm == (1, 0)


@settings(max_examples=150, deadline=None)
@given(M=matrices(4), N=matrices(4))
def test_pm_matches_exhaustive_oracle(M, N):
    got = qs_isomorphic_pm(M, N)
    want = pm_exhaustive(M.rows, N.rows)
    if want is None:
        assert got is None
    else:
        assert got is not None and got.perm == tuple(want[0])


@settings(max_examples=100, deadline=None)
@given(M=matrices(5), seed=st.integers(0, 10**6))
def test_pm_finds_random_transforms(M, seed):
    rng = random.Random(seed)
    perm = list(range(M.mu))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(M.mu)]
    N = transform(M, perm, signs)
    cert = qs_isomorphic_pm(M, N)
    assert cert is not None
    assert N == transform(M, cert.perm, cert.signs)


def test_pm_cap(monkeypatch):
    monkeypatch.setenv("LQ_MAX_MU", "3")
    big = chain_matrix((1, 1, 1))
    with pytest.raises(CapExceeded):
        qs_isomorphic_pm(big, big)


# classical form

def test_classical_examples():
    cert = tc_isomorphic_classical(chain_matrix((1, 1, 1)), chain_matrix((-1, -1, -1)))
    assert cert is not None and set(cert.signs) == {-1}
    cert = tc_isomorphic_classical(chain_matrix((1, 1, -1)), chain_matrix((1, -1, -1)))
    assert cert is not None and cert.perm == (3, 2, 1, 0)
    assert tc_isomorphic_classical(chain_matrix((1, 1, -1)), chain_matrix((1, 1, 1))) is None


def test_classical_rejects_asymmetric():
    with pytest.raises(PreconditionError):
        tc_isomorphic_classical(LinkingMatrix(((0, 1), (0, 0))), HOPF)


def test_classical_free_signs_on_isolated_vertices():
    M = linking_matrix(corpus.clasped(3, {(0, 1): 1}))
    N = linking_matrix(corpus.clasped(3, {(1, 2): -1}))
    cert = tc_isomorphic_classical(M, N)
    assert cert is not None and cert.perm == (1, 2, 0)


@settings(max_examples=150, deadline=None)
@given(M=symmetric_matrices(5), N=symmetric_matrices(5))
def test_classical_agrees_with_pm(M, N):
    assert (tc_isomorphic_classical(M, N) is None) == (qs_isomorphic_pm(M, N) is None)


@settings(max_examples=80, deadline=None)
@given(M=symmetric_matrices(5), seed=st.integers(0, 10**6))
def test_classical_agrees_with_pm_on_transforms(M, seed):
    rng = random.Random(seed)
    perm = list(range(M.mu))
    rng.shuffle(perm)
    sign = rng.choice((1, -1))
    N = transform(M, perm, [sign] * M.mu)
    assert tc_isomorphic_classical(M, N) is not None
    assert qs_isomorphic_pm(M, N) is not None


# canonical form

def test_canonical_examples():
    assert canonical_form(HOPF) == canonical_form(HOPF_NEG)
    assert canonical_form(ZERO2) == ZERO2
    forms = {canonical_form(chain_matrix(s)) for s in itertools.product((1, -1), repeat=3)}
    assert len(forms) == 3


@settings(max_examples=150, deadline=None)
@given(M=matrices(4), N=matrices(4))
def test_canonical_equal_iff_pm(M, N):
    if M.mu != N.mu:
        return
    assert (canonical_form(M) == canonical_form(N)) == (qs_isomorphic_pm(M, N) is not None)


@settings(max_examples=60, deadline=None)
@given(M=matrices(4), seed=st.integers(0, 10**6))
def test_canonical_is_transform_invariant(M, seed):
    rng = random.Random(seed)
    perm = list(range(M.mu))
    rng.shuffle(perm)
    N = transform(M, perm, [rng.choice((1, -1)) for _ in range(M.mu)])
    assert canonical_form(M) == canonical_form(N)
    assert qs_isomorphic_pm(M, canonical_form(M)) is not None


def test_canonical_cap(monkeypatch):
    monkeypatch.setenv("LQ_MAX_MU", "2")
    with pytest.raises(CapExceeded):
        canonical_form(chain_matrix((1, 1)))


# materialize / extract

def test_materialize_examples():
    Q = materialize(family_from_linking(HOPF)[0])
    assert Q == trivial_quandle(2)
    F = SubgroupFamily.from_generators([[(0, 1)], [(2, 0)]])
    assert materialize(F) == xn(2)
    assert materialize(family_from_linking(LinkingMatrix(((0,),)))[0]).size == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_materialize_matches_xn(n):
    F = SubgroupFamily.from_generators([[(0, 1)], [(n, 0)]])
    assert materialize(F) == xn(n)


def test_extract_examples():
    F = extract_structure(trivial_quandle(3))
    assert F.m == 3 and all(lattice.lattice_equal(s, lattice.full_lattice(3)) for s in F.subgroups)
    F = extract_structure(xn(2))
    assert F.subgroups[0].rows == ((1, 0), (0, 1))
    assert lattice.lattice_equal(F.subgroups[1], lattice.hnf([(0, 1), (2, 0)], 2))
    with pytest.raises(NotTranslationCommutative) as info:
        extract_structure(dihedral_quandle(3))
    assert len(info.value.triple) == 3


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_materialized_tables_are_tc_quandles(seed):
    F = random_family(random.Random(seed))
    Q = materialize(F)
    assert check_axioms(Q)
    assert is_tc(Q)
    assert Q.size == sum(F.indices())


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_extract_materialize_round_trip(seed):
    F = random_family(random.Random(seed))
    G = extract_structure(materialize(F))
    assert qs_isomorphic_general(G, F) is not None
    # contiguous blocks keep the orbit order, so the round trip is exact
    assert all(lattice.lattice_equal(a, b) for a, b in zip(F.subgroups, G.subgroups))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_extract_matches_stabilizer_enumeration(seed):
    F = random_family(random.Random(seed), max_index=5)
    Q = materialize(F)
    G = extract_structure(Q)
    reps = [o[0] for o in Q.orbits()]
    for b in range(F.m):
        assert lattice.lattice_equal(G.subgroups[b], stabilizer_by_enumeration(Q, reps, b))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_membership_matches_translation_action(seed):
    rng = random.Random(seed)
    F = random_family(rng, max_index=6)
    Q = materialize(F)
    reps = [o[0] for o in Q.orbits()]
    labels = np.array(Q.orbit_labels)
    for _ in range(10):
        y = [rng.randint(-6, 6) for _ in range(F.m)]
        perm = composite_translation(Q, list(zip(reps, y)))
        for b in range(F.m):
            orbit = np.flatnonzero(labels == b)
            fixes_rep = perm[reps[b]] == reps[b]
            fixes_all = bool(np.all(perm[orbit] == orbit))
            fixes_some = bool(np.any(perm[orbit] == orbit))
            assert lattice.contains(F.subgroups[b], y) == fixes_rep == fixes_all == fixes_some


# coherence of the deciders

def _finite(M):
    return all(i != lattice.INFINITE for i in family_from_linking(M)[0].indices())


@settings(max_examples=120, deadline=None)
@given(M=matrices(3), N=matrices(3))
def test_decision_coherence(M, N):
    if M.mu != N.mu:
        return
    pm = qs_isomorphic_pm(M, N) is not None
    gen = qs_isomorphic_general(family_from_linking(M)[0], family_from_linking(N)[0]) is not None
    assert pm == gen
    assert pm == (canonical_form(M) == canonical_form(N))
    if M.rows == M.transpose().rows and N.rows == N.transpose().rows:
        assert pm == (tc_isomorphic_classical(M, N) is not None)


TWO = [LinkingMatrix(((0, a), (b, 0))) for a in (-3, -2, -1, 1, 2, 3) for b in (-3, -2, -1, 1, 2, 3)
       if abs(a) + abs(b) <= 5]


@pytest.mark.parametrize("M", TWO, ids=lambda M: f"{M[0, 1]}_{M[1, 0]}")
def test_materialized_isomorphism_matches_pm(M):
    QM = materialize(family_from_linking(M)[0])
    for N in TWO:
        QN = materialize(family_from_linking(N)[0])
        assert quandles_isomorphic(QM, QN) == (qs_isomorphic_pm(M, N) is not None)
