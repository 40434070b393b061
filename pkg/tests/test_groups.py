"""Group construction, validation errors, quotients, and conjugacy."""

import pytest

from nilcoh.errors import NoIdentity, NoInverse, NotAssociative, NotNormal, OrderCapExceeded
from nilcoh.groups import (
    Group,
    GroupHom,
    Subgroup,
    are_conjugate_subgroups,
    center,
    centralizer,
    full_subgroup,
    group_from_permutations,
    group_from_table,
    normalizer,
    quotient,
    subgroup_generated,
    trivial_subgroup,
)
from conftest import cyclic, dihedral, quaternion8, subgroups_by_subset_scan


def test_c2_from_table():
    G = group_from_table([[0, 1], [1, 0]])
    assert G.order == 2
    assert G.inv == (0, 1)


def test_c6_from_table_is_abelian():
    G = group_from_table([[(a + b) % 6 for b in range(6)] for a in range(6)])
    assert G.order == 6 and G.is_abelian()


def test_identity_canonicalized_to_zero():
    # C3 with the identity sitting at index 2: index i holds Z3-element val[i].
    val = [1, 2, 0]
    table = [[val.index((val[a] + val[b]) % 3) for b in range(3)]
             for a in range(3)]
    assert all(table[2][x] == x for x in range(3))
    G = group_from_table(table)
    assert all(G.mul[0][x] == x and G.mul[x][0] == x for x in range(3))


def test_nonassociative_table_rejected_with_witness():
    table = [
        [0, 1, 2],
        [1, 2, 2],
        [2, 2, 1],
    ]
    with pytest.raises(NotAssociative) as info:
        group_from_table(table)
    a, b, c = info.value.triple
    G = table
    assert G[G[a][b]][c] != G[a][G[b][c]]


def test_no_identity_rejected():
    with pytest.raises(NoIdentity):
        group_from_table([[1, 1], [1, 1]])


def test_no_inverse_rejected():
    # Multiplication on {0,1}: x*y = 0 unless both 1... not associative either,
    # so build a monoid table: min(x+y, 1) has identity 0, no inverse for 1.
    with pytest.raises(NoInverse) as info:
        group_from_table([[0, 1], [1, 1]])
    assert info.value.element == 1


def test_permutation_closure_dihedral():
    four_cycle = [1, 2, 3, 0]
    transposition = [0, 3, 2, 1]  # swaps points 1 and 3
    G = group_from_permutations([four_cycle, transposition])
    assert G.order == 8
    assert not G.is_abelian()
    orders = sorted(G.element_order(x) for x in range(8))
    assert orders == sorted(dihedral(4).element_order(x) for x in range(8))


def test_permutation_closure_trivial_and_c2():
    assert group_from_permutations([]).order == 1
    assert group_from_permutations([[1, 0]]).order == 2


def test_permutation_closure_cap():
    with pytest.raises(OrderCapExceeded):
        group_from_permutations([[1, 2, 3, 0]], order_cap=3)


def test_subgroup_generated_cyclic():
    C4 = cyclic(4)
    assert subgroup_generated(C4, [1]).elements == (0, 1, 2, 3)
    assert subgroup_generated(C4, [2]).elements == (0, 2)


def test_subgroup_generated_klein_in_d4():
    D4 = dihedral(4)
    K = subgroup_generated(D4, [4, 2])  # a reflection and the half-turn
    assert K.elements == (0, 2, 4, 6)
    assert all(D4.element_order(x) <= 2 for x in K.elements)


def test_center_examples():
    C6 = cyclic(6)
    assert center(C6).elements == tuple(range(6))
    assert center(dihedral(4)).elements == (0, 2)
    assert center(quaternion8()).elements == (0, 1)


def test_normalizer_and_centralizer():
    D4 = dihedral(4)
    Z = center(D4)
    assert normalizer(D4, Z).order == 8
    assert centralizer(D4, full_subgroup(D4)).elements == Z.elements
    S3 = dihedral(3)
    refl = subgroup_generated(S3, [3])
    assert normalizer(S3, refl).elements == refl.elements
    assert normalizer(S3, full_subgroup(S3)).order == 6


def test_quotient_of_cyclic():
    C4 = cyclic(4)
    Q, pi = quotient(C4, subgroup_generated(C4, [2]))
    assert Q.order == 2
    assert pi.kernel().elements == (0, 2)


def test_quotient_d4_by_rotations():
    D4 = dihedral(4)
    Q, pi = quotient(D4, subgroup_generated(D4, [1]))
    assert Q.order == 2
    assert pi.is_surjective()


def test_quotient_requires_normal():
    D4 = dihedral(4)
    refl = subgroup_generated(D4, [4])
    # Independent scan: some conjugate of the reflection leaves the subgroup.
    assert any(D4.conj(4, g) not in refl for g in range(8))
    with pytest.raises(NotNormal):
        quotient(D4, refl)


def test_quotient_fibers_are_cosets():
    D4 = dihedral(4)
    N = subgroup_generated(D4, [2])
    Q, pi = quotient(D4, N)
    assert Q.order * N.order == D4.order
    for q in range(Q.order):
        fiber = [g for g in range(8) if pi(g) == q]
        rep = fiber[0]
        assert sorted(D4.mul[rep][n] for n in N.elements) == fiber


def test_conjugate_subgroups_in_d4():
    D4 = dihedral(4)
    r = subgroup_generated(D4, [4])
    ra2 = subgroup_generated(D4, [6])
    ra = subgroup_generated(D4, [5])
    g = are_conjugate_subgroups(D4, r, ra2)
    assert g is not None
    assert {D4.conj(x, g) for x in r.elements} == set(ra2.elements)
    assert are_conjugate_subgroups(D4, r, ra) is None
    assert are_conjugate_subgroups(D4, r, r) == 0


def test_conjugacy_is_symmetric_over_small_subgroups():
    D4 = dihedral(4)
    subs = [Subgroup(D4, s) for s in subgroups_by_subset_scan(D4, 2)]
    for A in subs:
        for B in subs:
            ab = are_conjugate_subgroups(D4, A, B)
            ba = are_conjugate_subgroups(D4, B, A)
            assert (ab is None) == (ba is None)


def test_subgroup_validation():
    C4 = cyclic(4)
    with pytest.raises(ValueError):
        Subgroup(C4, [0, 1])  # not closed
    with pytest.raises(ValueError):
        Subgroup(C4, [1, 2, 3])  # missing identity
    assert trivial_subgroup(C4).order == 1


def test_subgroup_as_group_roundtrip():
    D4 = dihedral(4)
    K = subgroup_generated(D4, [4, 2])
    KG, to_parent = K.as_group()
    assert KG.order == 4
    for i in range(4):
        for j in range(4):
            assert to_parent[KG.mul[i][j]] == D4.mul[to_parent[i]][to_parent[j]]


def test_group_hom_validation():
    C4, C2 = cyclic(4), cyclic(2)
    pi = GroupHom(C4, C2, [0, 1, 0, 1])
    assert pi.kernel().elements == (0, 2)
    with pytest.raises(ValueError):
        GroupHom(C4, C2, [0, 1, 1, 0])


def test_axioms_hold_for_catalog_groups():
    for G in (cyclic(12), dihedral(4), quaternion8()):
        n = G.order
        for a in range(n):
            assert G.mul[G.inv[a]][a] == 0 and G.mul[a][G.inv[a]] == 0
        # Constructor already checked associativity; spot-check a few triples.
        for a in range(0, n, 2):
            for b in range(1, n, 3):
                for c in range(n):
                    assert G.mul[G.mul[a][b]][c] == G.mul[a][G.mul[b][c]]
