"""Finite inverse semigroups as validated Cayley tables.

An element is an index into the label list. Validation checks associativity,
unique inverses, commuting idempotents and any declared constants; nothing
downstream runs on an unvalidated table. The natural partial order, the
compatibility relation, meets/joins, Green's relations and the standard
predicates are all computed here, together with the left-translation
representation into partial bijections on the element set.
"""

from . import kernels, pbij
from .errors import (
    BadOne,
    BadZero,
    BoundExceeded,
    DegreeMismatch,
    IdempotentsDoNotCommute,
    InvariantViolation,
    MalformedInput,
    NoZero,
    NotAHomomorphism,
    NotAMonoid,
    NotAssociative,
    NotIdempotent,
    NotRegular,
)

CLOSURE_BOUND = 100_000


def canonical_partition(class_of):
    """Normalize a class-id list to (rep-per-element, sorted classes)."""
    buckets = {}
    for x, c in enumerate(class_of):
        buckets.setdefault(c, []).append(x)
    classes = sorted((sorted(b) for b in buckets.values()), key=lambda c: c[0])
    rep = [0] * len(class_of)
    for cls in classes:
        for x in cls:
            rep[x] = cls[0]
    return rep, classes


class FiniteInverseSemigroup:
    """Element labels, an m x m multiplication table and the derived structure."""

    def __init__(self, labels, mult, zero=None, one=None):
        labels = [str(x) for x in labels]
        m = len(labels)
        if m == 0:
            raise MalformedInput("empty element list")
        if len(set(labels)) != m:
            raise MalformedInput("duplicate element labels")
        if len(mult) != m or any(len(row) != m for row in mult):
            raise MalformedInput(f"multiplication table is not {m}x{m}")
        table = [[int(x) for x in row] for row in mult]
        for row in table:
            for x in row:
                if not 0 <= x < m:
                    raise MalformedInput(f"table entry {x} out of range")

        flat = kernels.flatten_table(table)
        bad = kernels.assoc_violation(flat, m)
        if bad >= 0:
            k = bad % m
            j = (bad // m) % m
            i = bad // (m * m)
            raise NotAssociative((labels[i], labels[j], labels[k]))

        bad = kernels.idempotent_commute_violation(flat, m)
        if bad >= 0:
            raise IdempotentsDoNotCommute((labels[bad // m], labels[bad % m]))

        status, inv = kernels.inverse_table(flat, m)
        if 0 <= status < m:
            raise NotRegular(labels[status])
        if status >= m:
            # several generalized inverses despite commuting idempotents
            raise InvariantViolation(f"inverse of {labels[status - m]} not unique")

        self.labels = labels
        self.mult = table
        self.inv = list(inv)
        self._inv_arr = inv
        self._flat = flat
        self._m = m
        self._index = {lab: i for i, lab in enumerate(labels)}

        found_zero = self._scan_zero()
        if zero is not None and found_zero != zero:
            raise BadZero(f"declared zero {labels[zero]} is not absorbing")
        found_one = self._scan_one()
        if one is not None and found_one != one:
            raise BadOne(f"declared identity {labels[one]} is not neutral")
        self.zero = found_zero
        self.one = found_one

        self.idempotents = tuple(i for i in range(m) if table[i][i] == i)
        self._idem_set = frozenset(self.idempotents)
        self._leq = None
        self._down = None
        self._up = None
        self._ideals = None
        self._components = None

    # -- plumbing ---------------------------------------------------------

    def _scan_zero(self):
        for z in range(self._m):
            row = self.mult[z]
            if all(row[t] == z and self.mult[t][z] == z for t in range(self._m)):
                return z
        return None

    def _scan_one(self):
        for e in range(self._m):
            row = self.mult[e]
            if all(row[t] == t and self.mult[t][e] == t for t in range(self._m)):
                return e
        return None

    def __len__(self):
        return self._m

    def __repr__(self):
        return f"<FiniteInverseSemigroup of order {self._m}>"

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise MalformedInput(f"unknown element label {label!r}") from None

    def mul(self, s, t):
        return self.mult[s][t]

    def product(self, seq):
        it = iter(seq)
        acc = next(it)
        for x in it:
            acc = self.mult[acc][x]
        return acc

    def is_idempotent(self, s):
        return s in self._idem_set

    def d(self, s):
        """Domain idempotent: inverse(s) * s."""
        return self.mult[self.inv[s]][s]

    def r(self, s):
        """Range idempotent: s * inverse(s)."""
        return self.mult[s][self.inv[s]]

    # -- natural partial order --------------------------------------------

    def _order(self):
        if self._leq is None:
            m = self._m
            self._leq = kernels.order_matrix(self._flat, self._inv_arr, m)
            down = [0] * m
            up = [0] * m
            leq = self._leq
            for s in range(m):
                base = s * m
                for t in range(m):
                    if leq[base + t]:
                        up[s] |= 1 << t
                        down[t] |= 1 << s
            self._down = down
            self._up = up
        return self._leq

    def leq(self, s, t):
        """Natural partial order: s <= t iff s = t * d(s)."""
        return bool(self._order()[s * self._m + t])

    def natural_leq(self, s, t):
        return self.leq(s, t)

    def leq_witnesses(self, s, t):
        """The four equivalent descriptions of s <= t, evaluated separately."""
        mult = self.mult
        a = mult[t][self.d(s)] == s
        b = any(mult[t][e] == s for e in self.idempotents)
        c = any(mult[e][t] == s for e in self.idempotents)
        d_ = mult[self.r(s)][t] == s
        return (a, b, c, d_)

    def down_set(self, s):
        self._order()
        mask = self._down[s]
        return [t for t in range(self._m) if mask >> t & 1]

    def up_set(self, s):
        self._order()
        mask = self._up[s]
        return [t for t in range(self._m) if mask >> t & 1]

    def compatible(self, s, t):
        """Both s~ * t and s * t~ are idempotent (a join can only exist then)."""
        mult = self.mult
        return (
            mult[self.inv[s]][t] in self._idem_set
            and mult[s][self.inv[t]] in self._idem_set
        )

    def orthogonal(self, s, t):
        """s~ * t = 0 = s * t~."""
        if self.zero is None:
            raise NoZero("orthogonality needs a zero")
        mult = self.mult
        return mult[self.inv[s]][t] == self.zero and mult[s][self.inv[t]] == self.zero

    def meet(self, s, t):
        """Greatest lower bound in the natural order, or None."""
        self._order()
        common = self._down[s] & self._down[t]
        while common:
            u = common.bit_length() - 1
            if common & ~self._down[u] == 0:
                return u
            common &= ~(1 << u)
        return None

    def join(self, s, t):
        """Least upper bound in the natural order, or None."""
        self._order()
        common = self._up[s] & self._up[t]
        found = None
        mask = common
        while mask:
            u = mask.bit_length() - 1
            if common & ~self._up[u] == 0:
                found = u
                break
            mask &= ~(1 << u)
        return found

    def join_all(self, elems):
        """Least upper bound of a list, or None. Empty list: the zero if present."""
        elems = list(elems)
        if not elems:
            return self.zero
        self._order()
        common = self._up[elems[0]]
        for s in elems[1:]:
            common &= self._up[s]
        mask = common
        while mask:
            u = mask.bit_length() - 1
            if common & ~self._up[u] == 0:
                return u
            mask &= ~(1 << u)
        return None

    def fixed_point(self, a):
        """Largest idempotent below a, or None; realizes meets via a ^ b = phi(a b~) b."""
        self._order()
        idem_mask = 0
        for e in self.idempotents:
            idem_mask |= 1 << e
        below = self._down[a] & idem_mask
        mask = below
        while mask:
            e = mask.bit_length() - 1
            if below & ~self._down[e] == 0:
                return e
            mask &= ~(1 << e)
        return None

    # -- Green's relations --------------------------------------------------

    def components(self):
        """Connected components of the restricted-product groupoid, over idempotents."""
        if self._components is None:
            parent = list(range(self._m))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for s in range(self._m):
                a, b = find(self.d(s)), find(self.r(s))
                if a != b:
                    parent[max(a, b)] = min(a, b)
            self._components = tuple(find(e) for e in range(self._m))
        return self._components

    def principal_ideal(self, a):
        """The two-sided ideal S a S (= S^1 a S^1 here), as a frozenset."""
        if self._ideals is None:
            self._ideals = [None] * self._m
        if self._ideals[a] is None:
            mult = self.mult
            out = set()
            for x in range(self._m):
                xa = mult[x][a]
                row = mult[xa]
                out.update(row)
            self._ideals[a] = frozenset(out)
        return self._ideals[a]

    def greens(self):
        """Partitions for L, R, H, D and J; J is computed two ways and compared."""
        m = self._m
        comp = self.components()
        l_of = [self.d(s) for s in range(m)]
        r_of = [self.r(s) for s in range(m)]
        h_keys = {}
        h_of = [h_keys.setdefault((l_of[s], r_of[s]), len(h_keys)) for s in range(m)]
        d_of = [comp[l_of[s]] for s in range(m)]

        ideal_keys = {}
        j_of = [ideal_keys.setdefault(self.principal_ideal(s), len(ideal_keys)) for s in range(m)]

        # ideal containment must match: S a S <= S b S iff a D b' for some b' <= b
        self._order()
        for a in range(m):
            ia = self.principal_ideal(a)
            for b in range(m):
                via_ideals = ia <= self.principal_ideal(b)
                mask = self._down[b]
                via_order = False
                mm = mask
                while mm:
                    bp = mm.bit_length() - 1
                    mm &= ~(1 << bp)
                    if d_of[bp] == d_of[a]:
                        via_order = True
                        break
                if via_ideals != via_order:
                    raise InvariantViolation(
                        f"ideal containment and D-below disagree at ({self.labels[a]}, {self.labels[b]})"
                    )

        out = {}
        for name, assign in (("L", l_of), ("R", r_of), ("H", h_of), ("D", d_of), ("J", j_of)):
            _, classes = canonical_partition(assign)
            out[name] = classes
        return out

    # -- sigma as a raw relation (full congruence machinery lives elsewhere) --

    def sigma_class_of(self):
        """Class ids for the least group-quotient congruence: common lower bound."""
        self._order()
        m = self._m
        parent = list(range(m))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s in range(m):
            for t in range(s + 1, m):
                if self._down[s] & self._down[t]:
                    a, b = find(s), find(t)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        rep = [find(x) for x in range(m)]
        # the relation itself must already be transitive
        for s in range(m):
            for t in range(m):
                if (rep[s] == rep[t]) != bool(self._down[s] & self._down[t]):
                    raise InvariantViolation("common-lower-bound relation is not transitive")
        return rep

    # -- predicates -----------------------------------------------------------

    def units(self):
        if self.one is None:
            raise NotAMonoid("no identity element")
        e = self.one
        return [s for s in range(self._m) if self.d(s) == e and self.r(s) == e]

    def predicates(self):
        """Boolean property report; zero-dependent flags are None without a zero."""
        m = self._m
        mult = self.mult
        E = self.idempotents
        zero = self.zero

        central = all(mult[s][e] == mult[e][s] for s in range(m) for e in E)
        d_eq_r = all(self.d(s) == self.r(s) for s in range(m))
        union_of_groups = all(
            self.d(s) == self.r(s) and self.is_idempotent(self.d(s)) for s in range(m)
        )
        if not (central == d_eq_r == union_of_groups):
            raise InvariantViolation("the three Clifford characterizations disagree")

        e_unitary = all(
            self.is_idempotent(s)
            for e in E
            for s in range(m)
            if self.leq(e, s)
        )
        compat_transitive = True
        for a in range(m):
            for b in range(m):
                if not self.compatible(a, b):
                    continue
                for c in range(m):
                    if self.compatible(b, c) and not self.compatible(a, c):
                        compat_transitive = False
                        break
                if not compat_transitive:
                    break
            if not compat_transitive:
                break
        if e_unitary != compat_transitive:
            raise InvariantViolation("E-unitary and transitive-compatibility disagree")

        report = {
            "is_group": len(E) == 1,
            "is_meet_semilattice": len(E) == m,
            "is_clifford": central,
            "has_infinitesimal": None,
            "is_e_unitary": e_unitary,
            "is_e_star_unitary": None,
            "is_factorizable": False,
            "is_f_inverse": False,
            "is_fundamental": self.is_fundamental(),
            "is_0_simple": None,
            "is_0_disjunctive": None,
            "is_bisimple": len(set(self.components())) == 1,
            "is_0_bisimple": None,
        }

        if zero is not None:
            report["has_infinitesimal"] = any(
                s != zero and mult[s][s] == zero for s in range(m)
            )
            report["is_e_star_unitary"] = all(
                self.is_idempotent(s)
                for e in E
                if e != zero
                for s in range(m)
                if self.leq(e, s)
            )
            report["is_0_simple"] = all(
                self.principal_ideal(a) == frozenset(range(m))
                for a in range(m)
                if a != zero
            )
            report["is_0_disjunctive"] = self._is_0_disjunctive()
            report["is_0_bisimple"] = len(set(self.components())) == 2

        if self.one is not None:
            units = set(self.units())
            report["is_factorizable"] = all(
                any(self.leq(s, g) for g in units) for s in range(m)
            )
            rep = self.sigma_class_of()
            classes = {}
            for s in range(m):
                classes.setdefault(rep[s], []).append(s)
            report["is_f_inverse"] = all(
                any(all(self.leq(t, g) for t in cls) for g in cls)
                for cls in classes.values()
            )
        return report

    def _is_0_disjunctive(self):
        zero = self.zero
        for e in self.idempotents:
            for f in self.idempotents:
                if f == zero or f == e or not self.leq(f, e):
                    continue
                if not any(
                    g != zero and self.leq(g, e) and self.mult[f][g] == zero
                    for g in self.idempotents
                ):
                    return False
        return True

    def is_fundamental(self):
        """Centralizer of the idempotents is exactly the idempotents."""
        return len(self.centralizer_of_idempotents()) == len(self.idempotents)

    # -- distinguished subsets -------------------------------------------------

    def centralizer_of_idempotents(self):
        E = self.idempotents
        mult = self.mult
        return tuple(
            s for s in range(self._m) if all(mult[s][e] == mult[e][s] for e in E)
        )

    def subclosure(self, subset):
        """Close a subset of element indices under product and inverse."""
        out = set(subset)
        stack = list(out)
        while stack:
            x = stack.pop()
            cands = [self.inv[x]]
            cands.extend(self.mult[x][y] for y in out)
            cands.extend(self.mult[y][x] for y in out)
            for c in cands:
                if c not in out:
                    out.add(c)
                    stack.append(c)
        return frozenset(out)

    def is_wide(self, subset):
        """Inverse subsemigroup containing every idempotent."""
        sub = frozenset(subset)
        return self._idem_set <= sub and self.subclosure(sub) == sub

    def restrict(self, subset):
        """Validated semigroup on a product/inverse-closed subset, keeping labels."""
        members = sorted(subset)
        if self.subclosure(members) != frozenset(members):
            raise MalformedInput("subset is not closed under product and inverse")
        pos = {x: i for i, x in enumerate(members)}
        table = [[pos[self.mult[x][y]] for y in members] for x in members]
        return FiniteInverseSemigroup([self.labels[x] for x in members], table)

    def local_monoid(self, e):
        """The inverse monoid e S e."""
        if not self.is_idempotent(e):
            raise NotIdempotent(self.labels[e])
        mult = self.mult
        sub = {mult[mult[e][s]][e] for s in range(self._m)}
        out = self.restrict(sub)
        if out.one is None:
            raise InvariantViolation("local monoid has no identity")
        return out

    def group_of_units(self):
        if self.one is None:
            raise NotAMonoid("no identity element")
        return self.restrict(self.units())

    def local_group(self, e):
        """The group of elements with both domain and range idempotent e."""
        if not self.is_idempotent(e):
            raise NotIdempotent(self.labels[e])
        sub = [s for s in range(self._m) if self.d(s) == e and self.r(s) == e]
        out = self.restrict(sub)
        if len(out.idempotents) != 1:
            raise InvariantViolation("local group is not a group")
        return out

    def essential_part(self):
        """Elements whose domain and range idempotents meet every nonzero idempotent."""
        if self.zero is None:
            raise NoZero("essential elements are defined against a zero")
        zero = self.zero
        essential_idems = {
            e
            for e in self.idempotents
            if e != zero
            and all(self.mult[e][f] != zero for f in self.idempotents if f != zero)
        }
        out = frozenset(
            s
            for s in range(self._m)
            if self.d(s) in essential_idems and self.r(s) in essential_idems
        )
        if out and self.subclosure(out) != out:
            raise InvariantViolation("essential part is not closed")
        return out

    # -- the left-translation representation ------------------------------------

    def wagner_preston(self):
        """Injective homomorphism into partial bijections on the element set."""
        m = self._m
        lam = []
        for a in range(m):
            da = self.d(a)
            pairs = [
                (x + 1, self.mult[a][x] + 1)
                for x in range(m)
                if self.mult[da][x] == x
            ]
            lam.append(pbij.PartialBijection(m, pairs))
        if len(set(lam)) != m:
            raise InvariantViolation("left translations are not distinct")
        target, _ = semigroup_from_pbijs(lam)
        mapping = [target.index(pbij.format_element(f)) for f in lam]
        return Homomorphism(self, target, mapping)


class Homomorphism:
    """Index mapping between two finite inverse semigroups, checked multiplicative."""

    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = tuple(mapping)
        m = len(source)
        if len(self.mapping) != m:
            raise NotAHomomorphism("mapping length differs from source order")
        for s in range(m):
            for t in range(m):
                if (
                    target.mult[self.mapping[s]][self.mapping[t]]
                    != self.mapping[source.mult[s][t]]
                ):
                    raise NotAHomomorphism(
                        f"multiplicativity fails at ({source.labels[s]}, {source.labels[t]})"
                    )
        for s in range(m):
            if target.inv[self.mapping[s]] != self.mapping[source.inv[s]]:
                raise InvariantViolation("homomorphism does not preserve inverses")

    def __call__(self, s):
        return self.mapping[s]

    def is_injective(self):
        return len(set(self.mapping)) == len(self.mapping)

    def is_surjective(self):
        return len(set(self.mapping)) == len(self.target)

    def image(self):
        return self.target.restrict(set(self.mapping))

    def compose(self, other):
        """self after other."""
        if other.target is not self.source:
            raise NotAHomomorphism("composition mismatch")
        return Homomorphism(
            other.source, self.target, [self.mapping[x] for x in other.mapping]
        )


def hom_checks(theta):
    """Flag report for a homomorphism; the image comes back validated."""
    src, tgt = theta.source, theta.target
    idem_sep = True
    for e in src.idempotents:
        for f in src.idempotents:
            if e < f and theta(e) == theta(f):
                idem_sep = False
    idem_pure = all(
        src.is_idempotent(s)
        for s in range(len(src))
        if tgt.is_idempotent(theta(s))
    )
    return {
        "is_homomorphism": True,
        "is_injective": theta.is_injective(),
        "is_surjective": theta.is_surjective(),
        "is_idempotent_separating": idem_sep,
        "is_idempotent_pure": idem_pure,
        "image": theta.image(),
    }


def validate_cayley(labels, mult, zero=None, one=None):
    """Build a FiniteInverseSemigroup from a Cayley table, rejecting bad input."""
    return FiniteInverseSemigroup(labels, mult, zero=zero, one=one)


def semigroup_from_pbijs(elements):
    """Cayley table read off from a product/inverse-closed list of partial bijections."""
    index = {f: i for i, f in enumerate(elements)}
    if len(index) != len(elements):
        raise MalformedInput("duplicate partial bijections")
    table = []
    for f in elements:
        row = []
        for g in elements:
            fg = pbij.compose(f, g)
            if fg not in index:
                raise MalformedInput("element list is not closed under composition")
            row.append(index[fg])
        table.append(row)
    for f in elements:
        if pbij.invert(f) not in index:
            raise MalformedInput("element list is not closed under inversion")
    labels = [pbij.format_element(f) for f in elements]
    return FiniteInverseSemigroup(labels, table), list(elements)


def closure_from_generators(gens, bound=CLOSURE_BOUND):
    """Smallest composition/inverse-closed set containing the generators.

    Elements are ordered by breadth-first discovery from the sorted generator
    list; returns (semigroup, partial bijections in element order).
    """
    gens = list(gens)
    if not gens:
        raise MalformedInput("no generators")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise DegreeMismatch("generators act on different ground sets")

    elems = []
    seen = set()
    for g in sorted(set(gens), key=pbij.PartialBijection.sort_key):
        seen.add(g)
        elems.append(g)
    frontier = list(elems)
    while frontier:
        fresh = []

        def visit(h):
            if h not in seen:
                seen.add(h)
                elems.append(h)
                fresh.append(h)
                if len(elems) > bound:
                    raise BoundExceeded(f"closure exceeds bound {bound}")

        for x in frontier:
            visit(pbij.invert(x))
            for y in list(elems):
                visit(pbij.compose(x, y))
                visit(pbij.compose(y, x))
        frontier = fresh
    return semigroup_from_pbijs(elems)


def symmetric_inverse_monoid(n, bound=pbij.ENUMERATION_BOUND):
    """The monoid of all partial bijections on {1..n}, canonically ordered."""
    return semigroup_from_pbijs(pbij.enumerate_symmetric_inverse_monoid(n, bound))
