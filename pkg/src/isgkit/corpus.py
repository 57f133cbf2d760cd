"""Named small instances used by the test-suite and the command-line checks.

Every builder returns a freshly validated structure; ``members()`` caches one
copy of each semigroup under a stable name, and ``groupoid_members()`` does
the same for groupoids.
"""

import functools

from . import boolean as boolean_mod
from .core import (
    FiniteInverseSemigroup,
    closure_from_generators,
    symmetric_inverse_monoid,
)
from .groupoid import (
    from_equivalence,
    local_bisections,
    one_object_group,
    pair_groupoid,
    adjoin_zero,
)
from .pbij import parse_element


def trivial_group():
    return FiniteInverseSemigroup(["1"], [[0]])


def cyclic_group(n):
    labels = ["1"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)]
    mult = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteInverseSemigroup(labels, mult)


def cyclic_group_with_zero(n):
    loop = one_object_group(
        ["1"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)],
        [[(i + j) % n for j in range(n)] for i in range(n)],
    )
    return adjoin_zero(loop)


def chain_semilattice(k):
    """Idempotents 0 < e1 < ... < e(k-1) under minimum."""
    labels = ["0"] + [f"e{i}" for i in range(1, k)]
    mult = [[min(i, j) for j in range(k)] for i in range(k)]
    return FiniteInverseSemigroup(labels, mult)


def square_semilattice():
    """The four subsets of a two-element set under intersection."""
    subsets = [frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})]
    labels = ["0", "e1", "e2", "e12"]
    index = {s: i for i, s in enumerate(subsets)}
    mult = [[index[a & b] for b in subsets] for a in subsets]
    return FiniteInverseSemigroup(labels, mult)


def diamondless_semilattice():
    """Three idempotents 0 < a, 0 < b with a, b incomparable."""
    labels = ["0", "a", "b"]
    mult = [[0, 0, 0], [0, 1, 0], [0, 0, 2]]
    return FiniteInverseSemigroup(labels, mult)


def brandt_b2():
    """Closure of the single partial bijection 1 |-> 2 on two points."""
    semigroup, _ = closure_from_generators([parse_element("1>2", 2)])
    return semigroup


def bisection_monoid(groupoid):
    semigroup, _ = local_bisections(groupoid)
    return semigroup


def one_object_z2():
    return one_object_group(["1", "g"], [[0, 1], [1, 0]])


def one_object_z3():
    return one_object_group(
        ["1", "g", "g2"], [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    )


@functools.cache
def members():
    """Stable name -> semigroup for the whole corpus, in a fixed order."""
    out = {}
    out["trivial"] = trivial_group()
    out["Z2"] = cyclic_group(2)
    out["Z3"] = cyclic_group(3)
    out["Z2^0"] = cyclic_group_with_zero(2)
    out["chain2"] = chain_semilattice(2)
    out["chain3"] = chain_semilattice(3)
    out["square"] = square_semilattice()
    out["B2"] = brandt_b2()
    out["I1"] = symmetric_inverse_monoid(1)[0]
    out["I2"] = symmetric_inverse_monoid(2)[0]
    out["I3"] = symmetric_inverse_monoid(3)[0]
    out["K(Z2-loop)"] = bisection_monoid(one_object_z2())
    out["K(pair2)"] = bisection_monoid(pair_groupoid(2))
    out["I1xI2"] = boolean_mod.direct_product(
        symmetric_inverse_monoid(1)[0], symmetric_inverse_monoid(2)[0]
    )
    out["K(eq12|3)"] = bisection_monoid(from_equivalence([[1, 2], [3]]))
    return out


@functools.cache
def groupoid_members():
    """Stable name -> groupoid for the groupoid side of the corpus."""
    return {
        "pair1": pair_groupoid(1),
        "pair2": pair_groupoid(2),
        "pair3": pair_groupoid(3),
        "Z2-loop": one_object_z2(),
        "Z3-loop": one_object_z3(),
        "eq12|3": from_equivalence([[1, 2], [3]]),
    }


def monoid_members():
    return {k: v for k, v in members().items() if v.one is not None}


def boolean_members():
    out = {}
    for name, semigroup in members().items():
        if semigroup.one is None or semigroup.zero is None:
            continue
        if boolean_mod.is_boolean(semigroup) is not None:
            out[name] = semigroup
    return out
