"""Distributive and Boolean inverse monoids.

A monoid with zero is distributive when every compatible pair has a join and
multiplication distributes over those joins from both sides; it is Boolean
when additionally every idempotent has a (necessarily unique) complement.
All joins are found by exhaustive upper-bound scans and cached in a
certificate; relative complements, additive ideals, the 0-simplifying test
and the decomposition of fundamental members into symmetric-inverse-monoid
factors all work off that certificate.
"""

from . import groupoid as gpd
from . import munn as munn_mod
from .core import FiniteInverseSemigroup, Homomorphism, symmetric_inverse_monoid
from .errors import (
    FrinkViolation,
    InvariantViolation,
    MalformedInput,
    NoJoin,
    NotAMonoid,
    NotBelow,
    NotBoolean,
    NotFundamental,
    NotIdempotent,
    NotOrthogonal,
    NoZero,
)
from .pbij import PartialBijection


class BooleanCertificate:
    """Complement table for the idempotents plus a cache of all compatible joins."""

    def __init__(self, base, complement, join):
        self.base = base
        self.complement = dict(complement)
        self.join = dict(join)

    def comp(self, e):
        if e not in self.complement:
            raise NotIdempotent(self.base.labels[e])
        return self.complement[e]

    def join_of(self, s, t):
        """Cached join of a compatible pair; None when the pair is incompatible."""
        return self.join.get((s, t) if s <= t else (t, s))

    def __repr__(self):
        return f"<BooleanCertificate over order {len(self.base)}>"


def _compatible_joins(semigroup):
    """Join of every compatible pair, or None if some compatible pair has none."""
    m = len(semigroup)
    out = {}
    for s in range(m):
        for t in range(s, m):
            if semigroup.compatible(s, t):
                j = semigroup.join(s, t)
                if j is None:
                    return None
                out[(s, t)] = j
    return out


def is_distributive(semigroup):
    """Compatible pairs all have joins and multiplication distributes over them."""
    if semigroup.one is None:
        raise NotAMonoid("distributivity is assessed on monoids")
    if semigroup.zero is None:
        raise NoZero("distributivity is assessed against a zero")
    joins = _compatible_joins(semigroup)
    if joins is None:
        return False
    mult = semigroup.mult
    for (s, t), j in joins.items():
        for c in range(len(semigroup)):
            left = semigroup.join(mult[c][s], mult[c][t])
            if left is None or mult[c][j] != left:
                return False
            right = semigroup.join(mult[s][c], mult[t][c])
            if right is None or mult[j][c] != right:
                return False
    return True


def is_boolean(semigroup):
    """Certificate when distributive with complemented idempotents, else None."""
    if not is_distributive(semigroup):
        return None
    joins = _compatible_joins(semigroup)
    zero, one = semigroup.zero, semigroup.one
    mult = semigroup.mult
    complement = {}
    for e in semigroup.idempotents:
        candidates = [
            f
            for f in semigroup.idempotents
            if mult[e][f] == zero
            and joins[(e, f) if e <= f else (f, e)] == one
        ]
        if not candidates:
            return None
        if len(candidates) > 1:
            raise InvariantViolation(
                f"idempotent {semigroup.labels[e]} has several complements"
            )
        complement[e] = candidates[0]
    return BooleanCertificate(semigroup, complement, joins)


def relative_complement(cert, x, y):
    """The unique piece z of x with y orthogonal to z and x = y join z."""
    S = cert.base
    if not S.leq(y, x):
        raise NotBelow(f"{S.labels[y]} is not below {S.labels[x]}")
    z = S.mult[x][cert.comp(S.d(y))]
    if not S.orthogonal(y, z):
        raise InvariantViolation("relative complement is not orthogonal to the part")
    if S.join(y, z) != x:
        raise InvariantViolation("part and relative complement do not join back")
    if S.d(z) != S.mult[S.d(x)][cert.comp(S.d(y))]:
        raise InvariantViolation("domain law fails for the relative complement")
    if S.r(z) != S.mult[S.r(x)][cert.comp(S.r(y))]:
        raise InvariantViolation("range law fails for the relative complement")
    witnesses = [
        a
        for a in range(len(S))
        if S.leq(a, x) and S.orthogonal(a, y) and S.join(y, a) == x
    ]
    if witnesses != [z]:
        raise InvariantViolation("relative complement is not unique")
    return z


def frink_verify(latt, comp):
    """Check ab = a iff a*comp(b) = 0, and that comp(comp(a)comp(b)) is the join."""
    m = len(latt)
    comp = [int(x) for x in comp]
    if len(comp) != m or any(not 0 <= x < m for x in comp):
        raise MalformedInput("complement map does not match the semilattice")
    for a in range(m):
        if comp[comp[a]] != a:
            raise MalformedInput("complement map is not an involution")
    if latt.zero is None:
        raise NoZero("a bottom element is required")
    zero = latt.zero
    table = latt.table
    for a in range(m):
        for b in range(m):
            if (table[a][b] == a) != (table[a][comp[b]] == zero):
                raise FrinkViolation((latt.labels[a], latt.labels[b]))
    plus = [[comp[table[comp[a]][comp[b]]] for b in range(m)] for a in range(m)]
    for a in range(m):
        for b in range(m):
            p = plus[a][b]
            if not (latt.leq(a, p) and latt.leq(b, p)):
                raise FrinkViolation((latt.labels[a], latt.labels[b]))
            for c in range(m):
                if latt.leq(a, c) and latt.leq(b, c) and not latt.leq(p, c):
                    raise FrinkViolation((latt.labels[a], latt.labels[b]))
    return plus


def orthogonal_join(semigroup, elems):
    """Least upper bound of a pairwise orthogonal family."""
    elems = list(elems)
    for i, s in enumerate(elems):
        for t in elems[i + 1 :]:
            if not semigroup.orthogonal(s, t):
                raise NotOrthogonal(
                    f"({semigroup.labels[s]}, {semigroup.labels[t]})"
                )
    j = semigroup.join_all(elems)
    if j is None:
        raise NoJoin("orthogonal family has no least upper bound")
    return j


def additive_ideals(semigroup, cert=None):
    """Ideals closed under compatible joins, as frozensets of elements."""
    cert = cert if cert is not None else is_boolean(semigroup)
    if cert is None:
        raise NotBoolean("additive ideals are enumerated against a Boolean certificate")
    m = len(semigroup)
    principals = sorted(
        {semigroup.principal_ideal(a) for a in range(m)},
        key=lambda p: (len(p), sorted(p)),
    )
    unions = set()
    for bits in range(1, 1 << len(principals)):
        u = frozenset()
        for i, p in enumerate(principals):
            if bits >> i & 1:
                u |= p
        unions.add(u)
    out = []
    for u in sorted(unions, key=lambda p: (len(p), sorted(p))):
        members = sorted(u)
        additive = True
        for i, s in enumerate(members):
            for t in members[i:]:
                j = cert.join_of(s, t)
                if j is not None and j not in u:
                    additive = False
                    break
            if not additive:
                break
        if additive:
            out.append(u)
    return out


def is_0_simplifying(semigroup, cert=None):
    """Only the zero ideal and the whole semigroup are additive ideals."""
    ideals = set(additive_ideals(semigroup, cert))
    expected = {
        frozenset({semigroup.zero}),
        frozenset(range(len(semigroup))),
    }
    return ideals == expected


def direct_product(left, right):
    """Componentwise product; element (a,b) sits at index a*|right| + b."""
    nl, nr = len(left), len(right)
    labels = [
        f"({left.labels[a]},{right.labels[b]})" for a in range(nl) for b in range(nr)
    ]
    table = [
        [
            left.mult[a][c] * nr + right.mult[b][d]
            for c in range(nl)
            for d in range(nr)
        ]
        for a in range(nl)
        for b in range(nr)
    ]
    return FiniteInverseSemigroup(labels, table)


def fundamental_decomposition(semigroup):
    """Factor sizes, the rebuilt product of symmetric inverse monoids, and the isomorphism."""
    cert = is_boolean(semigroup)
    if cert is None:
        raise NotBoolean("decomposition applies to Boolean inverse monoids")
    if not semigroup.is_fundamental():
        raise NotFundamental("decomposition applies to fundamental monoids")
    A = gpd.atomic_groupoid(semigroup)
    if not gpd.is_principal(A):
        raise InvariantViolation("atom groupoid of a fundamental monoid is not principal")
    comps = gpd.components(A)
    comps = sorted(comps, key=lambda c: (-len(c), c[0]))
    factors = [len(c) for c in comps]

    built = [symmetric_inverse_monoid(n) for n in factors]
    product = built[0][0]
    for semi, _ in built[1:]:
        product = direct_product(product, semi)
    factor_index = [
        {pb: i for i, pb in enumerate(elems)} for _, elems in built
    ]
    point = {}
    comp_of = {}
    for ci, ids in enumerate(comps):
        for pi, arrow in enumerate(ids):
            point[arrow] = pi + 1
            comp_of[arrow] = ci

    ats = gpd.atoms(semigroup)
    pos = {a: i for i, a in enumerate(ats)}
    sizes = [len(s) for s, _ in built]
    mapping = []
    for a in range(len(semigroup)):
        pairs = [[] for _ in factors]
        for t in ats:
            if semigroup.leq(t, a):
                p = pos[t]
                ci = comp_of[A.dom[p]]
                if ci != comp_of[A.cod[p]]:
                    raise InvariantViolation("atom connects two components")
                pairs[ci].append((point[A.dom[p]], point[A.cod[p]]))
        flat = 0
        for ci, n in enumerate(factors):
            pb = PartialBijection(n, pairs[ci])
            flat = flat * sizes[ci] + factor_index[ci][pb]
        mapping.append(flat)
    iso = Homomorphism(semigroup, product, mapping)
    if not (iso.is_injective() and iso.is_surjective()):
        raise InvariantViolation("decomposition map is not a bijection")
    return factors, product, iso


def decompose_fundamental(semigroup):
    """Identity counts of the atom-groupoid components, largest first."""
    return fundamental_decomposition(semigroup)[0]


def is_fundamental_boolean(semigroup):
    """Fundamental iff the atom groupoid is principal; checked three ways."""
    if is_boolean(semigroup) is None:
        raise NotBoolean("this test applies to Boolean inverse monoids")
    result = gpd.is_principal(gpd.atomic_groupoid(semigroup))
    if result != semigroup.is_fundamental():
        raise InvariantViolation("atom-groupoid test disagrees with the centralizer test")
    if result != munn_mod.is_fundamental_munn(semigroup):
        raise InvariantViolation("atom-groupoid test disagrees with the conjugation test")
    return result
