"""Nilpotency, Sylow and Hall subgroups, subgroup enumeration, complements."""

import pytest

from nilcoh.errors import NotNilpotent
from nilcoh.groups import Subgroup, are_conjugate_subgroups, full_subgroup, subgroup_generated
from nilcoh.structure import (
    complements,
    enumerate_subgroups_of_order,
    hall_pprime,
    is_nilpotent,
    is_nilpotent_subgroup,
    locally_conjugate,
    lower_central_series,
    nilpotent_decomposition,
    p_part,
    prime_factors,
    subgroup_conjugacy_classes,
    sylow_subgroup,
)
from nilcoh.theorems import intersection_lemma_check
from conftest import (
    abelian,
    cyclic,
    dihedral,
    direct_product,
    heisenberg,
    quaternion8,
    subgroups_by_subset_scan,
)


def test_prime_factors():
    assert prime_factors(1) == []
    assert prime_factors(12) == [2, 3]
    assert prime_factors(81) == [3]
    assert p_part(72, 2) == 8 and p_part(72, 3) == 9


def test_lower_central_series_abelian():
    series = lower_central_series(cyclic(6))
    assert len(series) == 2 and series[-1].is_trivial()


def test_s3_not_nilpotent_series_stabilizes_at_rotations():
    S3 = dihedral(3)
    series = lower_central_series(S3)
    assert not is_nilpotent(S3)
    assert series[-1].elements == (0, 1, 2)


def test_q8_and_heisenberg_nilpotent():
    assert is_nilpotent(quaternion8())
    assert is_nilpotent(heisenberg(3))
    assert is_nilpotent(dihedral(4))


def test_sylow_of_cyclic_and_2group():
    C6 = cyclic(6)
    assert sylow_subgroup(C6, 2).elements == (0, 3)
    assert sylow_subgroup(C6, 3).elements == (0, 2, 4)
    D4 = dihedral(4)
    assert sylow_subgroup(D4, 2).order == 8


def test_sylow_of_s3_is_maximal_2_power():
    S3 = dihedral(3)
    P = sylow_subgroup(S3, 2)
    assert P.order == 2
    # Oracle: no order-4 subset of S3 is a subgroup (4 does not divide 6 anyway),
    # and the 2-subgroups found by subset scan all have order 2.
    assert max(
        len(s) for m in (1, 2) for s in subgroups_by_subset_scan(S3, m)
    ) == 2


def test_sylow_order_matches_p_part_on_nonnilpotent_groups():
    for G in (dihedral(3), direct_product(dihedral(3), cyclic(2)),
              direct_product(dihedral(3), cyclic(3))):
        for p in prime_factors(G.order):
            assert sylow_subgroup(G, p).order == p_part(G.order, p)


def test_sylow_unique_and_normal_in_nilpotent_groups():
    for G in (cyclic(12), quaternion8(), heisenberg(3),
              direct_product(cyclic(4), cyclic(3))):
        for p in prime_factors(G.order):
            P = sylow_subgroup(G, p)
            assert P.is_normal()
            assert P.elements == tuple(
                x for x in range(G.order)
                if p_part(G.element_order(x), p) == G.element_order(x)
            )


def test_sylow_rejects_composite():
    with pytest.raises(ValueError):
        sylow_subgroup(cyclic(12), 4)


def test_hall_pprime():
    C6 = cyclic(6)
    assert hall_pprime(C6, 2).elements == (0, 2, 4)
    assert hall_pprime(C6, 5).order == 6
    with pytest.raises(NotNilpotent):
        hall_pprime(dihedral(3), 2)


def test_nilpotent_decomposition():
    dec = nilpotent_decomposition(cyclic(6))
    assert dec.primes == (2, 3)
    assert [P.order for P in dec.sylow_parts] == [2, 3]
    assert nilpotent_decomposition(quaternion8()).primes == (2,)
    dec12 = nilpotent_decomposition(cyclic(12))
    assert [P.order for P in dec12.sylow_parts] == [4, 3]
    with pytest.raises(NotNilpotent):
        nilpotent_decomposition(dihedral(3))


def test_decomposition_is_internal_direct_product():
    G = direct_product(cyclic(4), cyclic(9))
    dec = nilpotent_decomposition(G)
    products = {0}
    for P in dec.sylow_parts:
        products = {G.mul[x][y] for x in products for y in P.elements}
    assert len(products) == G.order


@pytest.mark.parametrize("m,expected", [(2, 5), (4, 3)])
def test_enumerate_subgroups_of_d4_against_subset_scan(m, expected):
    D4 = dihedral(4)
    found = enumerate_subgroups_of_order(D4, m, max_gens=2)
    oracle = subgroups_by_subset_scan(D4, m)
    assert [S.elements for S in found] == oracle
    assert len(found) == expected


def test_enumerate_subgroups_of_q8():
    Q8 = quaternion8()
    # Q8 has a unique involution, three cyclic subgroups of order 4.
    assert [S.elements for S in enumerate_subgroups_of_order(Q8, 2, 1)] == \
        subgroups_by_subset_scan(Q8, 2)
    assert [S.elements for S in enumerate_subgroups_of_order(Q8, 4, 2)] == \
        subgroups_by_subset_scan(Q8, 4)


def test_enumerate_whole_group_is_trivial_case():
    G = abelian([2, 2, 2, 2])  # needs 4 generators, but m == |G| short-circuits
    assert [S.order for S in enumerate_subgroups_of_order(G, 16, 2)] == [16]


def test_complements_in_d4():
    D4 = dihedral(4)
    rot = subgroup_generated(D4, [1])
    comps = complements(D4, rot)
    assert [K.elements for K in comps] == [(0, 4), (0, 5), (0, 6), (0, 7)]


def test_complements_nonsplit_extension():
    C4 = cyclic(4)
    assert complements(C4, subgroup_generated(C4, [2])) == []


def test_complements_of_trivial_subgroup():
    D4 = dihedral(4)
    comps = complements(D4, subgroup_generated(D4, []))
    assert len(comps) == 1 and comps[0].order == 8


def test_complements_closed_under_n_conjugation():
    D4 = dihedral(4)
    rot = subgroup_generated(D4, [1])
    comps = complements(D4, rot)
    keys = {K.elements for K in comps}
    for K in comps:
        for n in rot.elements:
            assert K.conjugate_by(n).elements in keys


def test_locally_conjugate():
    D4 = dihedral(4)
    r = subgroup_generated(D4, [4])
    ra2 = subgroup_generated(D4, [6])
    ra = subgroup_generated(D4, [5])
    assert locally_conjugate(D4, r, ra2)
    assert not locally_conjugate(D4, r, ra)
    t = subgroup_generated(D4, [])
    assert locally_conjugate(D4, t, t)


def test_conjugate_implies_locally_conjugate():
    # Including a non-nilpotent ambient group.
    for G in (dihedral(4), direct_product(dihedral(3), cyclic(2))):
        subs = [Subgroup(G, s) for m in (2, 3, 4)
                if G.order % m == 0
                for s in subgroups_by_subset_scan(G, m)]
        for A in subs:
            for B in subs:
                if are_conjugate_subgroups(G, A, B) is not None:
                    assert locally_conjugate(G, A, B)


def test_intersection_lemma_over_subgroups():
    # H * N_2 meet H * N_3 = H for many subgroups H of C6 x S3, with N the
    # nilpotent normal C6 factor.
    G = direct_product(cyclic(6), dihedral(3))
    N = Subgroup(G, range(0, G.order, 6))
    assert N.order == 6 and N.is_normal()
    for m in (1, 2, 3, 4, 6, 9, 12):
        for H in enumerate_subgroups_of_order(G, m, max_gens=2):
            assert intersection_lemma_check(G, H, N, 2)
            assert intersection_lemma_check(G, H, N, 3)
    assert intersection_lemma_check(G, full_subgroup(G), N, 2)


def test_is_nilpotent_subgroup():
    G = direct_product(dihedral(3), cyclic(2))
    whole = full_subgroup(G)
    assert not is_nilpotent_subgroup(whole)
    assert is_nilpotent_subgroup(subgroup_generated(G, [2]))


def test_subgroup_conjugacy_classes():
    D4 = dihedral(4)
    subs = [subgroup_generated(D4, [x]) for x in (4, 5, 6, 7)]
    classes = subgroup_conjugacy_classes(D4, subs)
    assert sorted(sorted(c) for c in classes) == [[0, 2], [1, 3]]
    rot = subgroup_generated(D4, [1])
    n_classes = subgroup_conjugacy_classes(D4, subs, under=rot)
    assert sorted(sorted(c) for c in n_classes) == [[0, 2], [1, 3]]
