"""Congruences on finite inverse semigroups.

A congruence is held as a validated partition that respects multiplication on
both sides. Closure of a pair set runs on the union-find kernel; the three
named congruences (least group quotient, greatest idempotent-separating,
greatest zero-restricted) are computed from their defining conditions and then
re-validated through the same partition check.
"""

from array import array

from . import kernels
from .core import FiniteInverseSemigroup, Homomorphism, canonical_partition
from .errors import (
    BoundExceeded,
    InvariantViolation,
    MalformedInput,
    NotAnIdeal,
    NoZero,
    TargetNotAGroup,
)

ORACLE_BOUND = 12


class Congruence:
    """Multiplication-respecting partition, normalized to sorted classes."""

    def __init__(self, semigroup, class_of):
        m = len(semigroup)
        if len(class_of) != m:
            raise MalformedInput("partition length differs from semigroup order")
        rep, classes = canonical_partition(list(class_of))
        mult = semigroup.mult
        for cls in classes:
            lead = cls[0]
            for s in cls[1:]:
                for u in range(m):
                    if rep[mult[s][u]] != rep[mult[lead][u]] or rep[mult[u][s]] != rep[mult[u][lead]]:
                        raise MalformedInput(
                            "partition does not respect multiplication at "
                            f"({semigroup.labels[s]}, {semigroup.labels[lead]})"
                        )
        self.semigroup = semigroup
        self.rep = tuple(rep)
        self.classes = tuple(tuple(c) for c in classes)

    def contains(self, s, t):
        return self.rep[s] == self.rep[t]

    def __len__(self):
        return len(self.classes)

    def __eq__(self, other):
        if not isinstance(other, Congruence):
            return NotImplemented
        return self.semigroup is other.semigroup and self.rep == other.rep

    def __hash__(self):
        return hash((id(self.semigroup), self.rep))

    def __le__(self, other):
        """Refinement: every class of self sits inside a class of other."""
        return all(
            other.rep[s] == other.rep[cls[0]] for cls in self.classes for s in cls
        )

    def is_equality(self):
        return len(self.classes) == len(self.semigroup)

    def is_universal(self):
        return len(self.classes) == 1

    def is_idempotent_separating(self):
        E = self.semigroup.idempotents
        return len({self.rep[e] for e in E}) == len(E)

    def is_0_restricted(self):
        zero = self.semigroup.zero
        if zero is None:
            raise NoZero("zero-restriction needs a zero")
        return len([s for s in range(len(self.semigroup)) if self.rep[s] == self.rep[zero]]) == 1

    def label_classes(self):
        labs = self.semigroup.labels
        return [[labs[s] for s in cls] for cls in self.classes]

    def __repr__(self):
        return f"<Congruence with {len(self.classes)} classes>"


def congruence_closure(semigroup, pairs):
    """Smallest congruence relating every pair in `pairs` (given as index pairs)."""
    m = len(semigroup)
    parent = array("i", range(m))
    checked = []
    for s, t in pairs:
        if not (0 <= s < m and 0 <= t < m):
            raise MalformedInput(f"pair ({s},{t}) out of range")
        checked.append((s, t))
    kernels.saturate(semigroup._flat, m, parent, checked)

    def root(x):
        while parent[x] != x:
            x = parent[x]
        return x

    return Congruence(semigroup, [root(x) for x in range(m)])


def quotient(semigroup, cong):
    """Quotient semigroup plus the natural surjection; classes named [lead label]."""
    if cong.semigroup is not semigroup:
        raise MalformedInput("congruence belongs to a different semigroup")
    pos = {}
    for i, cls in enumerate(cong.classes):
        pos[cls[0]] = i
    class_ix = [pos[cong.rep[s]] for s in range(len(semigroup))]
    labels = [f"[{semigroup.labels[cls[0]]}]" for cls in cong.classes]
    mult = [
        [class_ix[semigroup.mult[a[0]][b[0]]] for b in cong.classes]
        for a in cong.classes
    ]
    target = FiniteInverseSemigroup(labels, mult)
    nat = Homomorphism(semigroup, target, class_ix)
    return target, nat


def rees_quotient(semigroup, ideal):
    """Collapse a two-sided ideal to a zero; other elements stay distinct."""
    m = len(semigroup)
    members = sorted(set(ideal))
    if not members:
        raise NotAnIdeal("empty subset")
    mset = set(members)
    for a in members:
        for s in range(m):
            if semigroup.mult[a][s] not in mset or semigroup.mult[s][a] not in mset:
                raise NotAnIdeal(
                    f"{semigroup.labels[a]} leaves the subset under translation"
                )
    lead = members[0]
    class_of = [lead if s in mset else s for s in range(m)]
    cong = Congruence(semigroup, class_of)
    target, nat = quotient(semigroup, cong)
    if target.zero != nat(lead):
        raise InvariantViolation("collapsed ideal is not the zero of the quotient")
    return target, nat, cong


def sigma(semigroup):
    """Least congruence with a group quotient: relate elements sharing a lower bound."""
    cong = Congruence(semigroup, semigroup.sigma_class_of())
    target, _ = quotient(semigroup, cong)
    if len(target.idempotents) != 1:
        raise InvariantViolation("common-lower-bound quotient is not a group")
    return cong


def mu(semigroup):
    """Greatest idempotent-separating congruence: equal conjugation on idempotents."""
    m = len(semigroup)
    mult = semigroup.mult
    inv = semigroup.inv
    E = semigroup.idempotents
    keys = {}
    class_of = []
    for s in range(m):
        key = tuple(mult[mult[s][e]][inv[s]] for e in E)
        class_of.append(keys.setdefault(key, s))
    cong = Congruence(semigroup, class_of)
    if not cong.is_idempotent_separating():
        raise InvariantViolation("conjugation congruence merges idempotents")
    for cls in cong.classes:
        lead = cls[0]
        for s in cls:
            if semigroup.d(s) != semigroup.d(lead) or semigroup.r(s) != semigroup.r(lead):
                raise InvariantViolation("conjugation congruence escapes an H-class")
    return cong


def xi(semigroup):
    """Greatest congruence keeping the zero class trivial: equal annihilator patterns."""
    zero = semigroup.zero
    if zero is None:
        raise NoZero("zero-restricted congruences need a zero")
    m = len(semigroup)
    mult = semigroup.mult
    keys = {}
    class_of = []
    for s in range(m):
        pattern = bytearray(m * m)
        for a in range(m):
            as_ = mult[a][s]
            row = mult[as_]
            base = a * m
            for b in range(m):
                if row[b] == zero:
                    pattern[base + b] = 1
        class_of.append(keys.setdefault(bytes(pattern), s))
    cong = Congruence(semigroup, class_of)
    if not cong.is_0_restricted():
        raise InvariantViolation("annihilator congruence inflates the zero class")
    if not mu(semigroup) <= cong:
        raise InvariantViolation(
            "annihilator congruence does not contain the conjugation congruence"
        )
    return cong


def all_congruences(semigroup, bound=ORACLE_BOUND):
    """Every congruence, as the join closure of the principal ones. Small inputs only."""
    m = len(semigroup)
    if m > bound:
        raise BoundExceeded(f"congruence lattice enumeration capped at order {bound}")
    equality = congruence_closure(semigroup, [])
    found = {equality.rep: equality}
    principals = [equality]
    for s in range(m):
        for t in range(s + 1, m):
            c = congruence_closure(semigroup, [(s, t)])
            if c.rep not in found:
                found[c.rep] = c
                principals.append(c)
    frontier = list(found.values())
    while frontier:
        fresh = []
        for a in frontier:
            for b in principals:
                pairs = [(cls[0], x) for cls in a.classes for x in cls[1:]]
                pairs += [(cls[0], x) for cls in b.classes for x in cls[1:]]
                joined = congruence_closure(semigroup, pairs)
                if joined.rep not in found:
                    found[joined.rep] = joined
                    fresh.append(joined)
        frontier = fresh
    return sorted(found.values(), key=lambda c: (len(c.classes), c.rep), reverse=False)


def factor_through_sigma(semigroup, theta):
    """Split a homomorphism into a group through the least group congruence."""
    target = theta.target
    if len(target.idempotents) != 1:
        raise TargetNotAGroup("codomain has more than one idempotent")
    cong = sigma(semigroup)
    quot, nat = quotient(semigroup, cong)
    mapping = [theta(cls[0]) for cls in cong.classes]
    for s in range(len(semigroup)):
        if theta(s) != mapping[nat(s)]:
            raise InvariantViolation(
                "homomorphism into a group does not factor through the least group congruence"
            )
    induced = Homomorphism(quot, target, mapping)
    if induced.compose(nat).mapping != theta.mapping:
        raise InvariantViolation("factorization does not recompose to the original map")
    return quot, nat, induced


def is_congruence_free(semigroup):
    """Only congruences are equality and the universal one (order-1 input: False).

    Decided through the structure conditions — fundamental, only trivial
    ideals, and zero-disjunctive idempotents — and cross-checked against the
    enumerated congruence lattice when that is feasible.
    """
    if semigroup.zero is None:
        raise NoZero("congruence-freeness is assessed against a zero")
    m = len(semigroup)
    if m == 1:
        return False
    preds = semigroup.predicates()
    verdict = bool(
        preds["is_fundamental"] and preds["is_0_simple"] and preds["is_0_disjunctive"]
    )
    if m <= ORACLE_BOUND:
        lattice = all_congruences(semigroup)
        oracle = all(c.is_equality() or c.is_universal() for c in lattice)
        if oracle != verdict:
            raise InvariantViolation(
                "structure conditions disagree with the enumerated congruence lattice"
            )
    return verdict
