"""Finite groupoids and their interplay with inverse semigroups.

Arrows are indices; an identity arrow is its own object, and dom/cod point at
identity arrows. Composition is apply-right-first: comp[x][y] is defined
exactly when dom(x) = cod(y). The module covers the restricted-product
groupoid of a semigroup, zero adjunction, atoms and the atom groupoid, the
monoid of local bisections, the down-set embedding into it, and the extension
of monoid homomorphisms to local bisections.
"""

import itertools

from .core import FiniteInverseSemigroup, Homomorphism
from .errors import (
    BoundExceeded,
    EmptyAtomSet,
    InvariantViolation,
    MalformedInput,
    NotAGroupoid,
    NotAHomomorphism,
    NotAMonoid,
    NotBoolean,
    NoZero,
)

DEFAULT_K_BOUND = 4096
UNIQUENESS_BOUND = 64


class FiniteGroupoid:
    """Arrow-indexed partial composition table with involution."""

    def __init__(self, names, dom, cod, comp, inv):
        names = [str(x) for x in names]
        k = len(names)
        if k == 0:
            raise MalformedInput("empty arrow list")
        if len(set(names)) != k:
            raise MalformedInput("duplicate arrow names")
        if not (len(dom) == len(cod) == len(inv) == k and len(comp) == k):
            raise MalformedInput("field lengths disagree with the arrow count")
        if any(len(row) != k for row in comp):
            raise MalformedInput("composition table is not square")
        for seq in (dom, cod, inv):
            for x in seq:
                if not 0 <= x < k:
                    raise MalformedInput(f"arrow index {x} out of range")

        identities = sorted(e for e in range(k) if dom[e] == e)
        idset = set(identities)
        for e in identities:
            if cod[e] != e:
                raise NotAGroupoid(f"identity candidate {names[e]} has mismatched cod")
        for x in range(k):
            if dom[x] not in idset or cod[x] not in idset:
                raise NotAGroupoid(f"dom/cod of {names[x]} is not an identity")

        for x in range(k):
            for y in range(k):
                z = comp[x][y]
                if (z != -1) != (dom[x] == cod[y]):
                    raise NotAGroupoid(
                        f"composite {names[x]}*{names[y]} defined on the wrong pairs"
                    )
                if z != -1:
                    if not 0 <= z < k:
                        raise MalformedInput(f"composite index {z} out of range")
                    if dom[z] != dom[y] or cod[z] != cod[x]:
                        raise NotAGroupoid(
                            f"composite {names[x]}*{names[y]} has wrong endpoints"
                        )
        for x in range(k):
            for y in range(k):
                if dom[x] != cod[y]:
                    continue
                for z in range(k):
                    if dom[y] != cod[z]:
                        continue
                    if comp[comp[x][y]][z] != comp[x][comp[y][z]]:
                        raise NotAGroupoid(
                            f"associativity fails at ({names[x]},{names[y]},{names[z]})"
                        )
        for x in range(k):
            if comp[x][dom[x]] != x or comp[cod[x]][x] != x:
                raise NotAGroupoid(f"identities are not neutral at {names[x]}")
            xi = inv[x]
            if inv[xi] != x:
                raise NotAGroupoid(f"inverse is not an involution at {names[x]}")
            if dom[xi] != cod[x] or cod[xi] != dom[x]:
                raise NotAGroupoid(f"inverse of {names[x]} has wrong endpoints")
            if comp[x][xi] != cod[x] or comp[xi][x] != dom[x]:
                raise NotAGroupoid(f"inverse laws fail at {names[x]}")

        self.names = names
        self.dom = list(dom)
        self.cod = list(cod)
        self.comp = [list(row) for row in comp]
        self.inv = list(inv)
        self.identities = tuple(identities)

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return (
            f"<FiniteGroupoid with {len(self.names)} arrows, "
            f"{len(self.identities)} identities>"
        )

    def compose(self, x, y):
        z = self.comp[x][y]
        return None if z == -1 else z

    def is_identity(self, x):
        return self.dom[x] == x

    def hom_set(self, e, f):
        """Arrows with dom e and cod f."""
        return [x for x in range(len(self.names)) if self.dom[x] == e and self.cod[x] == f]

    def local_group(self, e):
        return self.hom_set(e, e)


# -- constructions -----------------------------------------------------------


def one_object_group(labels, mult):
    """A group as a groupoid with a single identity."""
    semi = FiniteInverseSemigroup(labels, mult)
    if len(semi.idempotents) != 1:
        raise NotAGroupoid("multiplication table is not a group")
    e = semi.idempotents[0]
    k = len(semi)
    return FiniteGroupoid(
        semi.labels,
        [e] * k,
        [e] * k,
        semi.mult,
        semi.inv,
    )


def pair_groupoid(n):
    """All ordered pairs over n points; (x,y) composes with (y,z) to (x,z)."""
    if n < 1:
        raise MalformedInput("need at least one point")
    return from_equivalence([range(1, n + 1)])


def from_equivalence(blocks):
    """The groupoid of related ordered pairs of an equivalence relation."""
    block_of = {}
    for i, block in enumerate(blocks):
        for p in block:
            p = int(p)
            if p in block_of:
                raise MalformedInput(f"point {p} appears in two blocks")
            block_of[p] = i
    if not block_of:
        raise MalformedInput("no points")
    pts = sorted(block_of)
    arrows = [
        (x, y) for x in pts for y in pts if block_of[x] == block_of[y]
    ]
    index = {a: i for i, a in enumerate(arrows)}
    names = [f"({x},{y})" for x, y in arrows]
    dom = [index[(y, y)] for x, y in arrows]
    cod = [index[(x, x)] for x, y in arrows]
    comp = [
        [
            index[(x, v)] if y == u else -1
            for (u, v) in arrows
        ]
        for (x, y) in arrows
    ]
    inv = [index[(y, x)] for x, y in arrows]
    return FiniteGroupoid(names, dom, cod, comp, inv)


def discrete(n):
    """n identities and nothing else."""
    return from_equivalence([{i} for i in range(1, int(n) + 1)])


def underlying_groupoid(semigroup):
    """Same elements, with products kept only where d(left) = r(right)."""
    m = len(semigroup)
    dom = [semigroup.d(s) for s in range(m)]
    cod = [semigroup.r(s) for s in range(m)]
    comp = [
        [semigroup.mult[x][y] if dom[x] == cod[y] else -1 for y in range(m)]
        for x in range(m)
    ]
    return FiniteGroupoid(semigroup.labels, dom, cod, comp, semigroup.inv)


def adjoin_zero(groupoid):
    """Total multiplication by sending undefined composites to a new zero."""
    k = len(groupoid)
    zero_label = "0"
    while zero_label in groupoid.names:
        zero_label += "_"
    table = [
        [groupoid.comp[x][y] if groupoid.comp[x][y] != -1 else k for y in range(k)]
        for x in range(k)
    ]
    for row in table:
        row.append(k)
    table.append([k] * (k + 1))
    semi = FiniteInverseSemigroup(groupoid.names + [zero_label], table)
    for s in range(k):
        for t in range(k):
            if s != t and semi.leq(s, t):
                raise InvariantViolation("natural order is not equality off zero")
    return semi


# -- structure ---------------------------------------------------------------


def components(groupoid):
    """Connected components, as sorted lists of identity arrows."""
    parent = {e: e for e in groupoid.identities}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(len(groupoid)):
        a, b = find(groupoid.dom[x]), find(groupoid.cod[x])
        if a != b:
            parent[max(a, b)] = min(a, b)
    buckets = {}
    for e in groupoid.identities:
        buckets.setdefault(find(e), []).append(e)
    return sorted((sorted(b) for b in buckets.values()), key=lambda c: c[0])


def is_principal(groupoid):
    """At most one arrow per ordered identity pair; equivalently trivial local groups."""
    counts = {}
    for x in range(len(groupoid)):
        key = (groupoid.dom[x], groupoid.cod[x])
        counts[key] = counts.get(key, 0) + 1
    by_pairs = all(c <= 1 for c in counts.values())
    by_groups = all(
        counts.get((e, e), 0) == 1 for e in groupoid.identities
    )
    if by_pairs != by_groups:
        raise InvariantViolation("the two principality tests disagree")
    return by_pairs


def is_union_of_groups(groupoid):
    """Every arrow is a loop."""
    return all(groupoid.dom[x] == groupoid.cod[x] for x in range(len(groupoid)))


# -- atoms -------------------------------------------------------------------


def atoms(semigroup):
    """Nonzero elements with nothing strictly between them and zero."""
    if semigroup.zero is None:
        raise NoZero("atoms are defined against a zero")
    z = semigroup.zero
    return tuple(
        s
        for s in range(len(semigroup))
        if s != z and all(t in (z, s) for t in semigroup.down_set(s))
    )


def atomic_groupoid(semigroup):
    """The atoms under the restricted product."""
    ats = atoms(semigroup)
    if not ats:
        raise EmptyAtomSet("no atoms to build a groupoid from")
    pos = {a: i for i, a in enumerate(ats)}
    z = semigroup.zero
    names = [semigroup.labels[a] for a in ats]
    dom, cod, inv = [], [], []
    for a in ats:
        da, ra, ia = semigroup.d(a), semigroup.r(a), semigroup.inv[a]
        if da not in pos or ra not in pos or ia not in pos:
            raise InvariantViolation("atoms are not closed under d, r, or inverse")
        dom.append(pos[da])
        cod.append(pos[ra])
        inv.append(pos[ia])
    comp = []
    for a in ats:
        row = []
        for b in ats:
            if semigroup.d(a) == semigroup.r(b):
                ab = semigroup.mult[a][b]
                if ab == z or ab not in pos:
                    raise InvariantViolation(
                        "restricted product of atoms is not an atom"
                    )
                row.append(pos[ab])
            else:
                row.append(-1)
        comp.append(row)
    return FiniteGroupoid(names, dom, cod, comp, inv)


# -- local bisections --------------------------------------------------------


def _bisections_filter(groupoid):
    k = len(groupoid)
    out = []
    for mask in range(1 << k):
        members = [x for x in range(k) if mask >> x & 1]
        doms = {groupoid.dom[x] for x in members}
        cods = {groupoid.cod[x] for x in members}
        if len(doms) == len(members) and len(cods) == len(members):
            out.append(frozenset(members))
    return out


def _bisections_structured(groupoid, bound):
    objs = list(groupoid.identities)
    by_pair = {}
    for x in range(len(groupoid)):
        by_pair.setdefault((groupoid.dom[x], groupoid.cod[x]), []).append(x)
    out = []

    def emit(chosen_pairs):
        lists = [by_pair[p] for p in chosen_pairs]
        size = 1
        for lst in lists:
            size *= len(lst)
        if len(out) + size > bound:
            raise BoundExceeded(
                f"local bisection count exceeds bound {bound}"
            )
        for combo in itertools.product(*lists):
            out.append(frozenset(combo))

    def rec(i, taken, chosen_pairs):
        if i == len(objs):
            emit(chosen_pairs)
            return
        e = objs[i]
        rec(i + 1, taken, chosen_pairs)
        for f in objs:
            if f not in taken and (e, f) in by_pair:
                rec(i + 1, taken | {f}, chosen_pairs + [(e, f)])

    rec(0, frozenset(), [])
    return out


def local_bisections(groupoid, bound=DEFAULT_K_BOUND):
    """The inverse monoid of subsets injective on both dom and cod.

    Returns (semigroup, sets); sets[i] is the arrow set of element i. The
    structured generator is cross-checked against plain subset filtering
    whenever the groupoid is small enough to filter.
    """
    generated = _bisections_structured(groupoid, bound)
    if len(groupoid) <= 16:
        filtered = _bisections_filter(groupoid)
        if set(filtered) != set(generated):
            raise InvariantViolation(
                "structured bisection generator disagrees with subset filtering"
            )
    sets = sorted(set(generated), key=lambda A: (len(A), sorted(A)))
    index = {A: i for i, A in enumerate(sets)}
    labels = [
        "{" + ";".join(groupoid.names[x] for x in sorted(A)) + "}" for A in sets
    ]
    comp = groupoid.comp
    table = []
    for A in sets:
        row = []
        for B in sets:
            prod = frozenset(
                comp[a][b] for a in A for b in B if comp[a][b] != -1
            )
            if prod not in index:
                raise InvariantViolation("product of local bisections escaped the family")
            row.append(index[prod])
        table.append(row)
    semi = FiniteInverseSemigroup(labels, table)
    if semi.zero != index[frozenset()]:
        raise InvariantViolation("empty set is not the zero of the bisection monoid")
    if semi.one != index[frozenset(groupoid.identities)]:
        raise InvariantViolation("identity set is not the monoid identity")
    return semi, sets


# -- the embedding and extension theorems -------------------------------------


def order_heights(semigroup):
    """Length of the longest strictly descending chain below each element."""
    m = len(semigroup)
    order = sorted(range(m), key=lambda s: (len(semigroup.down_set(s)), s))
    heights = [0] * m
    for s in order:
        below = [t for t in semigroup.down_set(s) if t != s]
        heights[s] = 1 + max((heights[t] for t in below), default=-1)
    return heights


def downset_embedding(semigroup, bound=DEFAULT_K_BOUND):
    """a -> a-down-set, an injective monoid homomorphism into local bisections."""
    if semigroup.one is None:
        raise NotAMonoid("the down-set embedding needs a monoid")
    G = underlying_groupoid(semigroup)
    K, sets = local_bisections(G, bound=bound)
    index = {A: i for i, A in enumerate(sets)}
    mapping = []
    for a in range(len(semigroup)):
        A = frozenset(semigroup.down_set(a))
        if A not in index:
            raise InvariantViolation("a down-set is not a local bisection")
        mapping.append(index[A])
    beta = Homomorphism(semigroup, K, mapping)
    if not beta.is_injective():
        raise InvariantViolation("down-set map is not injective")
    if mapping[semigroup.one] != K.one:
        raise InvariantViolation("down-set map does not preserve the identity")
    beta.bisection_sets = sets
    return beta


def extend_to_bisections(alpha, embedding=None, bound=DEFAULT_K_BOUND):
    """Extend a monoid homomorphism along the down-set embedding.

    alpha maps a finite inverse monoid S into a Boolean inverse monoid T; the
    result maps the local-bisection monoid of S's groupoid into T, sends a
    singleton {a} to alpha(a) minus the join of alpha over elements strictly
    below a, and a general set to the join of its singleton values.
    """
    from . import boolean

    S = alpha.source
    T = alpha.target
    if S.one is None:
        raise NotAMonoid("the source must be a monoid")
    if alpha.mapping[S.one] != T.one:
        raise NotAHomomorphism("the map does not preserve the monoid identity")
    cert = boolean.is_boolean(T)
    if cert is None:
        raise NotBoolean("the codomain is not a Boolean inverse monoid")

    beta = embedding if embedding is not None else downset_embedding(S, bound=bound)
    K = beta.target
    sets = getattr(beta, "bisection_sets", None)
    if sets is None:
        raise MalformedInput("embedding must come from downset_embedding")

    heights = order_heights(S)
    single = [None] * len(S)
    for s in sorted(range(len(S)), key=lambda s: (heights[s], s)):
        below = [t for t in S.down_set(s) if t != s]
        joined = T.join_all([alpha(t) for t in below])
        if joined is None:
            raise InvariantViolation("join of lower images does not exist")
        single[s] = boolean.relative_complement(cert, alpha(s), joined)

    mapping = []
    for A in sets:
        value = T.join_all([single[a] for a in A])
        if value is None:
            raise InvariantViolation("a bisection image has no join")
        mapping.append(value)
    gamma = Homomorphism(K, T, mapping)

    zero_ix = sets.index(frozenset())
    if mapping[zero_ix] != T.zero:
        raise InvariantViolation("extension does not preserve zero")
    if mapping[K.one] != T.one:
        raise InvariantViolation("extension does not preserve the monoid identity")
    if gamma.compose(beta).mapping != alpha.mapping:
        raise InvariantViolation("extension does not restrict to the original map")
    for i in range(len(K)):
        for j in range(len(K)):
            if K.compatible(i, j):
                joined = K.join(i, j)
                if joined is None:
                    raise InvariantViolation("compatible bisections without a join")
                if T.join(mapping[i], mapping[j]) != mapping[joined]:
                    raise InvariantViolation(
                        "extension does not preserve a compatible join"
                    )
    return gamma


def extension_is_unique(alpha, gamma, embedding, bound=UNIQUENESS_BOUND):
    """Count the morphisms agreeing with alpha through the embedding.

    Enumerates every multiplicative map from the bisection monoid to alpha's
    codomain that sends the empty set to zero, preserves binary compatible
    joins, and composes with the down-set embedding to alpha.  Join
    preservation makes such a map determined by its values on singleton
    bisections, which are searched exhaustively in height order; partial
    assignments are pruned by conditions every map in the class must satisfy
    (matching domain and range idempotents, products of assigned singletons),
    so the count is unchanged.  Returns the number found (the extension
    theorem says exactly one, and the one found is checked to be gamma).
    """
    S = alpha.source
    T = alpha.target
    K = embedding.target
    sets = getattr(embedding, "bisection_sets", None)
    if sets is None:
        raise MalformedInput("embedding must come from downset_embedding")
    if len(K) > bound:
        raise BoundExceeded(f"uniqueness enumeration capped at {bound} bisections")

    # product and compatible-join of every bisection pair, reused across calls
    pair_table = getattr(embedding, "_pair_table", None)
    if pair_table is None:
        pair_table = []
        for x in range(len(K)):
            row = []
            for y in range(len(K)):
                j = K.join(x, y) if K.compatible(x, y) else None
                row.append((K.mult[x][y], -1 if j is None else j))
            pair_table.append(row)
        embedding._pair_table = pair_table

    heights = order_heights(S)
    order = sorted(range(len(S)), key=lambda s: (heights[s], s))
    solutions = []
    assign = [None] * len(S)

    def leaf():
        mapping = []
        for A in sets:
            value = T.join_all([assign[a] for a in A])
            if value is None:
                return
            mapping.append(value)
        mult = T.mult
        for x in range(len(K)):
            row = pair_table[x]
            mx = mapping[x]
            for y in range(len(K)):
                p, j = row[y]
                if mult[mx][mapping[y]] != mapping[p]:
                    return
                if j >= 0 and T.join(mx, mapping[y]) != mapping[j]:
                    return
        solutions.append(tuple(mapping))

    def admissible(s, x, assigned):
        # multiplicativity on singletons forces the image's idempotents and
        # the already-assigned singleton products
        ds = assign[S.d(s)]
        if ds is not None and T.d(x) != ds:
            return False
        rs = assign[S.r(s)]
        if rs is not None and T.r(x) != rs:
            return False
        for t in assigned:
            xt = assign[t]
            for left, right, li, ri in ((s, t, x, xt), (t, s, xt, x)):
                if S.d(left) == S.r(right):
                    image = assign[S.mult[left][right]]
                    if image is not None and T.mult[li][ri] != image:
                        return False
                elif T.mult[li][ri] != T.zero:
                    return False
        return True

    def rec(i):
        if i == len(order):
            leaf()
            return
        s = order[i]
        below = [t for t in S.down_set(s) if t != s]
        joined_below = T.join_all([assign[t] for t in below])
        if joined_below is None:
            return
        assigned = order[:i]
        target = alpha(s)
        for x in range(len(T)):
            if T.join(x, joined_below) == target and admissible(s, x, assigned):
                assign[s] = x
                rec(i + 1)
                assign[s] = None

    rec(0)
    if len(solutions) != 1 or solutions[0] != gamma.mapping:
        raise InvariantViolation(
            f"expected exactly the computed extension, found {len(solutions)} maps"
        )
    return len(solutions)


def atom_iso(semigroup, bound=DEFAULT_K_BOUND):
    """Isomorphism of a finite Boolean inverse monoid onto the bisections of its atoms."""
    from . import boolean

    cert = boolean.is_boolean(semigroup)
    if cert is None:
        raise NotBoolean("atom bisections classify Boolean inverse monoids only")
    A = atomic_groupoid(semigroup)
    K, sets = local_bisections(A, bound=bound)
    ats = atoms(semigroup)
    pos = {a: i for i, a in enumerate(ats)}
    index = {s: i for i, s in enumerate(sets)}
    mapping = []
    for a in range(len(semigroup)):
        members = [t for t in ats if semigroup.leq(t, a)]
        fs = frozenset(pos[t] for t in members)
        if fs not in index:
            raise InvariantViolation("atom set below an element is not a bisection")
        if semigroup.join_all(members) != a:
            raise InvariantViolation("element is not the join of the atoms below it")
        mapping.append(index[fs])
    theta = Homomorphism(semigroup, K, mapping)
    if not (theta.is_injective() and theta.is_surjective()):
        raise InvariantViolation("atom map is not a bijection")
    return theta
