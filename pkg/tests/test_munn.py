"""Ideal-isomorphism semigroups of semilattices and the conjugation map."""

import pytest

from isgkit import corpus, isocheck, munn
from isgkit.congruence import Congruence, mu
from isgkit.errors import BoundExceeded, NotABand, NotCommutative


@pytest.fixture(scope="module")
def members():
    return corpus.members()


def latt_of(semigroup):
    return munn.semilattice_of_idempotents(semigroup)[0]


# -- semilattice wrapper ------------------------------------------------------------


def test_semilattice_from_band_validates():
    with pytest.raises(NotABand):
        munn.semilattice_from_band(["a", "b"], [[0, 0], [0, 0]])
    with pytest.raises(NotCommutative):
        # idempotent but left-zero: a*b = a while b*a = b
        munn.semilattice_from_band(["a", "b"], [[0, 0], [1, 1]])


def test_semilattice_order(members):
    latt = latt_of(members["square"])
    zero = latt.zero
    one = latt.one
    assert latt.leq(zero, one) and not latt.leq(one, zero)
    assert latt.down_set(one) == list(range(len(latt)))
    assert latt.down_set(zero) == [zero]
    assert latt.meet(one, zero) == zero


# -- the ideal-isomorphism semigroup ------------------------------------------------


def test_munn_of_two_chain(members):
    latt = latt_of(members["chain2"])
    T, maps = munn.munn_semigroup(latt)
    assert len(T) == 2
    assert all(pb.is_partial_identity() for pb in maps)


def test_munn_of_diamondless_is_brandt(members):
    latt = latt_of(corpus.diamondless_semilattice())
    T, _ = munn.munn_semigroup(latt)
    assert len(T) == 5
    assert isocheck.isomorphic(T, members["B2"])


def test_munn_of_square_is_symmetric_inverse_monoid(members):
    latt = latt_of(members["square"])
    T, maps = munn.munn_semigroup(latt)
    assert len(T) == 7
    assert isocheck.isomorphic(T, members["I2"])
    # every element really is an order iso between principal down-sets
    for pb in maps:
        dom = sorted(a - 1 for a, _ in pb.graph)
        cod = sorted(b - 1 for _, b in pb.graph)
        assert any(dom == latt.down_set(e) for e in range(len(latt)))
        assert any(cod == latt.down_set(f) for f in range(len(latt)))


def test_munn_labels_name_the_ideal_and_the_moves(members):
    latt = latt_of(members["chain2"])
    T, _ = munn.munn_semigroup(latt)
    assert sorted(T.labels) == ["{0>0: 0>0}", "{e1>e1: 0>0,e1>e1}"]


def test_idempotents_of_munn_recover_the_semilattice(members):
    for name in ("chain2", "chain3", "square"):
        latt = latt_of(members[name])
        T, _ = munn.munn_semigroup(latt)
        elatt = munn.semilattice_of_idempotents(T)[0]
        assert isocheck.isomorphic(elatt.semigroup, latt.semigroup), name


def test_munn_bound():
    latt = latt_of(corpus.members()["square"])
    with pytest.raises(BoundExceeded):
        munn.munn_semigroup(latt, bound=2)


# -- the conjugation homomorphism ---------------------------------------------------


def test_representation_kernel_is_mu(members):
    for name in ("B2", "I1", "I2", "chain3", "Z2", "Z2^0"):
        S = members[name]
        delta = munn.munn_representation(S)
        assert Congruence(S, list(delta.mapping)) == mu(S), name


def test_representation_of_semilattice_is_injective_on_chain(members):
    S = members["chain2"]
    delta = munn.munn_representation(S)
    assert delta.is_injective()


def test_fundamental_iff_injective(members):
    expected = {
        "trivial": True,
        "Z2": False,
        "Z3": False,
        "Z2^0": False,
        "chain2": True,
        "chain3": True,
        "square": True,
        "B2": True,
        "I1": True,
        "I2": True,
        "I3": True,
    }
    for name, value in expected.items():
        assert munn.is_fundamental_munn(members[name]) is value, name


def test_representation_bound(members):
    with pytest.raises(BoundExceeded):
        munn.munn_representation(members["I2"], bound=2)
