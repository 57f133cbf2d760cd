"""Partial bijections: the ground-truth arithmetic everything else leans on."""

import pytest

from isgkit import pbij
from isgkit.errors import (
    BoundExceeded,
    DegreeMismatch,
    MalformedInput,
    PointOutOfRange,
)
from isgkit.pbij import PartialBijection


def test_graph_is_sorted_and_immutable():
    f = PartialBijection(3, [(3, 1), (1, 2)])
    assert f.graph == ((1, 2), (3, 1))
    with pytest.raises(AttributeError):
        f.degree = 5


def test_rejects_bad_points_and_collisions():
    with pytest.raises(PointOutOfRange):
        PartialBijection(2, [(1, 3)])
    with pytest.raises(PointOutOfRange):
        PartialBijection(2, [(0, 1)])
    with pytest.raises(MalformedInput):
        PartialBijection(3, [(1, 2), (1, 3)])
    with pytest.raises(MalformedInput):
        PartialBijection(3, [(1, 2), (3, 2)])
    with pytest.raises(PointOutOfRange):
        PartialBijection(-1, [])


def test_compose_applies_right_first():
    f = pbij.parse_element("1>2", 2)
    g = pbij.parse_element("2>1", 2)
    # (f . g)(2) = f(g(2)) = f(1) = 2
    assert pbij.compose(f, g) == pbij.parse_element("2>2", 2)
    assert pbij.compose(g, f) == pbij.parse_element("1>1", 2)


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        pbij.compose(PartialBijection(2, []), PartialBijection(3, []))


def test_inverse_and_idempotents():
    f = pbij.parse_element("1>2,2>3", 3)
    g = pbij.invert(f)
    assert g == pbij.parse_element("2>1,3>2", 3)
    d = pbij.compose(g, f)  # g . f restricts to dom(f)
    assert d == pbij.partial_identity(3, [1, 2])
    r = pbij.compose(f, g)
    assert r == pbij.partial_identity(3, [2, 3])


def test_zero_and_identity():
    z = PartialBijection.zero(3)
    e = PartialBijection.identity(3)
    f = pbij.parse_element("1>3", 3)
    assert pbij.compose(f, z) == z
    assert pbij.compose(z, f) == z
    assert pbij.compose(f, e) == f
    assert pbij.compose(e, f) == f


def test_degree_zero_is_a_single_element():
    z = PartialBijection.zero(0)
    assert z == PartialBijection.identity(0)
    assert pbij.compose(z, z) == z
    assert pbij.enumerate_symmetric_inverse_monoid(0) == [z]


def test_restriction_order():
    small = pbij.parse_element("1>2", 3)
    big = pbij.parse_element("1>2,3>1", 3)
    assert pbij.restriction_leq(small, big)
    assert not pbij.restriction_leq(big, small)
    assert pbij.restriction_leq(big, big)


def test_compatible_union():
    a = pbij.parse_element("1>2", 3)
    b = pbij.parse_element("3>1", 3)
    u = pbij.compatible_union(a, b)
    assert u == pbij.parse_element("1>2,3>1", 3)
    clash = pbij.parse_element("1>3", 3)
    assert pbij.compatible_union(a, clash) is None


@pytest.mark.parametrize(
    "n,count",
    [(0, 1), (1, 2), (2, 7), (3, 34), (4, 209), (5, 1546)],
)
def test_enumeration_counts(n, count):
    elems = pbij.enumerate_symmetric_inverse_monoid(n)
    assert len(elems) == count
    assert len(set(elems)) == count


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        pbij.enumerate_symmetric_inverse_monoid(6)


def test_format_parse_round_trip():
    for n in range(4):
        for f in pbij.enumerate_symmetric_inverse_monoid(n):
            assert pbij.parse_element(pbij.format_element(f), n) == f


def test_parse_rejects_junk():
    for text in ("1>", ">2", "1>2,,", "id:x", "banana", "1-2"):
        with pytest.raises(MalformedInput):
            pbij.parse_element(text, 3)


def test_sort_key_orders_by_degree_then_graph():
    elems = sorted(
        pbij.enumerate_symmetric_inverse_monoid(2), key=PartialBijection.sort_key
    )
    assert elems[0] == PartialBijection.zero(2)
    sizes = [len(f.graph) for f in elems]
    assert sizes == sorted(sizes)
