"""Groupoids, atoms, local bisections, and the extension theorems."""

import pytest

from isgkit import boolean, corpus, groupoid as gpd, isocheck
from isgkit.core import Homomorphism
from isgkit.errors import (
    BoundExceeded,
    EmptyAtomSet,
    MalformedInput,
    NoZero,
    NotAGroupoid,
    NotAHomomorphism,
    NotAMonoid,
    NotBoolean,
)


@pytest.fixture(scope="module")
def members():
    return corpus.members()


@pytest.fixture(scope="module")
def gmembers():
    return corpus.groupoid_members()


# -- construction and validation ----------------------------------------------------


def test_rejects_malformed_arrow_data():
    with pytest.raises(MalformedInput):
        gpd.FiniteGroupoid([], [], [], [], [])
    with pytest.raises(MalformedInput):
        gpd.FiniteGroupoid(["a", "a"], [0, 1], [0, 1], [[0, -1], [-1, 1]], [0, 1])
    with pytest.raises(MalformedInput):
        gpd.FiniteGroupoid(["a"], [0, 0], [0], [[0]], [0])


def test_rejects_composites_on_wrong_pairs():
    # two disconnected identities must not compose with each other
    with pytest.raises(NotAGroupoid):
        gpd.FiniteGroupoid(
            ["e", "f"], [0, 1], [0, 1], [[0, 0], [-1, 1]], [0, 1]
        )


def test_one_object_group_rejects_non_groups():
    with pytest.raises(NotAGroupoid):
        gpd.one_object_group(["a", "b"], [[0, 1], [1, 1]])


def test_pair_groupoid_shape(gmembers):
    G = gmembers["pair2"]
    assert len(G) == 4
    assert G.names == ["(1,1)", "(1,2)", "(2,1)", "(2,2)"]
    assert G.identities == (0, 3)
    # arrow (1,2) sends point 2 to point 1: dom is (2,2), cod is (1,1)
    assert G.dom[1] == 3 and G.cod[1] == 0
    assert G.compose(1, 3) == 1 and G.compose(1, 0) is None
    assert G.compose(1, 2) == 0  # (1,2)*(2,1) = (1,1)
    assert G.inv[1] == 2


def test_from_equivalence_components(gmembers):
    G = gmembers["eq12|3"]
    assert len(G) == 5
    assert len(G.identities) == 3
    assert gpd.components(G) == [[0, 3], [4]]


def test_discrete_is_all_identities():
    G = gpd.discrete(3)
    assert len(G) == 3
    assert G.identities == (0, 1, 2)
    assert gpd.components(G) == [[0], [1], [2]]


def test_principality_and_union_of_groups(gmembers):
    assert gpd.is_principal(gmembers["pair2"])
    assert not gpd.is_principal(gmembers["Z2-loop"])
    assert gpd.is_union_of_groups(gmembers["Z2-loop"])
    assert not gpd.is_union_of_groups(gmembers["pair2"])
    assert gpd.is_principal(gpd.discrete(2))
    assert gpd.is_union_of_groups(gpd.discrete(2))


# -- groupoids from semigroups ------------------------------------------------------


def test_underlying_groupoid_of_symmetric_monoid(members):
    S = members["I2"]
    G = gpd.underlying_groupoid(S)
    assert len(G) == len(S)
    # zero alone, the two rank-one identities together, the top identity alone
    comps = gpd.components(G)
    assert [len(c) for c in comps] == [1, 2, 1]
    top = S.one
    assert sorted(G.local_group(top)) == sorted(
        [S.index("id:1,2"), S.index("1>2,2>1")]
    )


def test_adjoin_zero_of_pair_groupoid_is_brandt(members, gmembers):
    S = gpd.adjoin_zero(gmembers["pair2"])
    assert len(S) == 5
    assert S.labels[S.zero] == "0"
    assert isocheck.isomorphic(S, members["B2"])


def test_adjoin_zero_avoids_name_clashes():
    G = gpd.from_equivalence([[0]])  # single identity named "(0,0)"
    S = gpd.adjoin_zero(G)
    assert len(set(S.labels)) == 2


# -- atoms --------------------------------------------------------------------------


def test_atoms(members):
    B2 = members["B2"]
    assert gpd.atoms(B2) == tuple(s for s in range(5) if s != B2.zero)
    I2 = members["I2"]
    assert [I2.labels[a] for a in gpd.atoms(I2)] == ["id:1", "1>2", "2>1", "id:2"]
    chain3 = members["chain3"]
    assert [chain3.labels[a] for a in gpd.atoms(chain3)] == ["e1"]
    with pytest.raises(NoZero):
        gpd.atoms(members["Z3"])


def test_atomic_groupoid(members, gmembers):
    A = gpd.atomic_groupoid(members["B2"])
    assert len(A) == 4
    assert isocheck.groupoid_isomorphic(A, gmembers["pair2"])
    with pytest.raises(EmptyAtomSet):
        gpd.atomic_groupoid(members["trivial"])


# -- local bisections ---------------------------------------------------------------


BISECTION_COUNTS = {
    "pair1": 2,
    "pair2": 7,
    "pair3": 34,
    "Z2-loop": 3,
    "Z3-loop": 4,
    "eq12|3": 14,
}


def test_bisection_counts(gmembers):
    for name, expected in BISECTION_COUNTS.items():
        K, sets = gpd.local_bisections(gmembers[name])
        assert len(K) == expected, name
        assert len(sets) == expected, name


def test_bisections_of_pair_groupoid_are_partial_bijections(members, gmembers):
    K, _ = gpd.local_bisections(gmembers["pair2"])
    assert isocheck.isomorphic(K, members["I2"])
    K3, _ = gpd.local_bisections(gmembers["pair3"])
    assert isocheck.isomorphic(K3, members["I3"])


def test_bisection_monoid_constants(gmembers):
    K, sets = gpd.local_bisections(gmembers["Z2-loop"])
    assert K.labels[K.zero] == "{}"
    assert sets[K.zero] == frozenset()
    assert sets[K.one] == frozenset(gmembers["Z2-loop"].identities)


def test_bisection_bound(gmembers):
    with pytest.raises(BoundExceeded):
        gpd.local_bisections(gmembers["pair3"], bound=10)


# -- heights and the down-set embedding ---------------------------------------------


def test_order_heights(members):
    assert gpd.order_heights(members["chain3"]) == [0, 1, 2]
    I2 = members["I2"]
    heights = gpd.order_heights(I2)
    assert heights[I2.zero] == 0
    assert heights[I2.one] == 2
    assert sorted(heights) == [0, 1, 1, 1, 1, 2, 2]


def test_downset_embedding(members):
    S = members["I2"]
    beta = gpd.downset_embedding(S)
    K = beta.target
    assert len(K) == 42
    assert beta.is_injective()
    assert beta.mapping[S.one] == K.one
    # zero goes to the singleton bisection {zero}, not to the empty set
    assert beta.mapping[S.zero] != K.zero
    with pytest.raises(NotAMonoid):
        gpd.downset_embedding(members["B2"])


# -- the extension theorem ----------------------------------------------------------


def test_extension_of_chain_into_square(members):
    chain = members["chain2"]
    square = members["square"]
    alpha = Homomorphism(
        chain, square, [square.zero, square.one]
    )
    beta = gpd.downset_embedding(chain)
    gamma = gpd.extend_to_bisections(alpha, embedding=beta)
    assert gamma.compose(beta).mapping == alpha.mapping
    assert gpd.extension_is_unique(alpha, gamma, beta) == 1


def test_extension_of_group_with_zero_into_partial_bijections(members):
    S = members["Z2^0"]
    I2 = members["I2"]
    # source order is identity, group element, zero
    alpha = Homomorphism(
        S,
        I2,
        [I2.index("id:1,2"), I2.index("1>2,2>1"), I2.zero],
    )
    beta = gpd.downset_embedding(S)
    gamma = gpd.extend_to_bisections(alpha, embedding=beta)
    assert gamma.compose(beta).mapping == alpha.mapping
    # the extension reaches bisections that are not down-sets of S
    assert not gamma.is_injective() or len(beta.target) == len(S)
    assert gpd.extension_is_unique(alpha, gamma, beta) == 1


def test_extension_needs_boolean_codomain(members):
    chain = members["chain2"]
    chain3 = members["chain3"]
    alpha = Homomorphism(chain, chain3, [0, 2])
    with pytest.raises(NotBoolean):
        gpd.extend_to_bisections(alpha)


def test_extension_needs_identity_preservation(members):
    chain = members["chain2"]
    square = members["square"]
    # a semigroup homomorphism that lands below the identity
    alpha = Homomorphism(chain, square, [square.zero, square.index("e1")])
    with pytest.raises(NotAHomomorphism):
        gpd.extend_to_bisections(alpha)


def test_uniqueness_bound(members):
    S = members["I2"]
    alpha = Homomorphism(S, S, list(range(len(S))))
    beta = gpd.downset_embedding(S)
    gamma = gpd.extend_to_bisections(alpha, embedding=beta)
    with pytest.raises(BoundExceeded):
        gpd.extension_is_unique(alpha, gamma, beta, bound=10)


# -- atoms classify Boolean inverse monoids -----------------------------------------


def test_atom_iso_on_partial_bijections(members):
    S = members["I2"]
    theta = gpd.atom_iso(S)
    assert theta.is_injective() and theta.is_surjective()
    assert len(theta.target) == len(S)


def test_atom_iso_requires_boolean(members):
    with pytest.raises(NotBoolean):
        gpd.atom_iso(members["chain3"])
    with pytest.raises(NotAMonoid):
        gpd.atom_iso(members["B2"])


# -- isomorphism checking -----------------------------------------------------------


def test_iso_found_under_relabeling(members):
    import random

    S = members["I2"]
    rng = random.Random(11)
    perm = list(range(len(S)))
    rng.shuffle(perm)
    inverse = [0] * len(S)
    for i, p in enumerate(perm):
        inverse[p] = i
    from isgkit.core import FiniteInverseSemigroup

    labels = [f"x{i}" for i in range(len(S))]
    table = [
        [perm[S.mult[inverse[a]][inverse[b]]] for b in range(len(S))]
        for a in range(len(S))
    ]
    T = FiniteInverseSemigroup(labels, table)
    mapping = isocheck.find_isomorphism(S, T)
    assert mapping == perm


def test_iso_rejects_same_order_non_isomorphic(members):
    assert not isocheck.isomorphic(members["Z2^0"], members["chain3"])
    assert not isocheck.isomorphic(members["Z2"], members["chain2"])
    assert isocheck.find_isomorphism(members["I2"], members["I3"]) is None


def test_groupoid_iso(gmembers):
    assert not isocheck.groupoid_isomorphic(gmembers["Z2-loop"], gpd.discrete(2))
    assert isocheck.groupoid_isomorphic(
        gmembers["eq12|3"], gpd.from_equivalence([["7", "9"], ["8"]])
    )
