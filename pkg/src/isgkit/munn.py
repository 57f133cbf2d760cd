"""Meet semilattices and the semigroup of order isomorphisms between their ideals.

The semigroup of all order isomorphisms between principal down-sets of a finite
meet semilattice E is assembled by explicit backtracking search; composing two
such maps always lands back in the family, which the table construction checks.
The conjugation map delta_s (e -> s e s~ on the down-set of d(s)) embeds any
finite inverse semigroup into that semigroup modulo its greatest
idempotent-separating congruence, giving a second, independent route to the
fundamentality test.
"""

from . import pbij
from .congruence import Congruence, mu
from .core import FiniteInverseSemigroup, Homomorphism
from .errors import (
    BoundExceeded,
    InvariantViolation,
    MalformedInput,
    NotABand,
    NotCommutative,
)

DEFAULT_E_BOUND = 16


class MeetSemilattice:
    """Commutative idempotent table; the product of two elements is their meet."""

    def __init__(self, semigroup):
        self.semigroup = semigroup
        self.labels = semigroup.labels
        self.table = semigroup.mult
        self.zero = semigroup.zero
        self.one = semigroup.one

    def __len__(self):
        return len(self.labels)

    def meet(self, e, f):
        return self.table[e][f]

    def leq(self, e, f):
        return self.table[e][f] == e

    def down_set(self, e):
        return [f for f in range(len(self.labels)) if self.leq(f, e)]

    def __repr__(self):
        return f"<MeetSemilattice of order {len(self.labels)}>"


def semilattice_from_band(labels, table):
    """Validate a commutative idempotent table and wrap it with its meet order."""
    labels = [str(x) for x in labels]
    m = len(labels)
    if len(table) != m or any(len(row) != m for row in table):
        raise MalformedInput(f"table is not {m}x{m}")
    for i in range(m):
        if table[i][i] != i:
            raise NotABand(f"{labels[i]} is not idempotent")
    for i in range(m):
        for j in range(m):
            if table[i][j] != table[j][i]:
                raise NotCommutative(f"({labels[i]}, {labels[j]})")
    latt = MeetSemilattice(FiniteInverseSemigroup(labels, table))
    for e in range(m):
        for f in range(m):
            g = latt.meet(e, f)
            if not (latt.leq(g, e) and latt.leq(g, f)):
                raise InvariantViolation("product is not a lower bound")
            for h in range(m):
                if latt.leq(h, e) and latt.leq(h, f) and not latt.leq(h, g):
                    raise InvariantViolation("product is not the greatest lower bound")
    return latt


def semilattice_of_idempotents(semigroup):
    """The idempotents of an inverse semigroup, plus their positions in it."""
    members = list(semigroup.idempotents)
    pos = {e: i for i, e in enumerate(members)}
    labels = [semigroup.labels[e] for e in members]
    table = [[pos[semigroup.mult[e][f]] for f in members] for e in members]
    return semilattice_from_band(labels, table), members


def _order_isos(latt, ideal_a, ideal_b):
    """All order isomorphisms ideal_a -> ideal_b, as graphs, in lexicographic order."""
    if len(ideal_a) != len(ideal_b):
        return []
    out = []
    n = len(ideal_a)
    image = [None] * n
    used = [False] * len(ideal_b)

    def place(i):
        if i == n:
            out.append(tuple((ideal_a[j], image[j]) for j in range(n)))
            return
        a = ideal_a[i]
        for bi, b in enumerate(ideal_b):
            if used[bi]:
                continue
            ok = True
            for j in range(i):
                if latt.leq(ideal_a[j], a) != latt.leq(image[j], b) or latt.leq(
                    a, ideal_a[j]
                ) != latt.leq(b, image[j]):
                    ok = False
                    break
            if ok:
                used[bi] = True
                image[i] = b
                place(i + 1)
                used[bi] = False
    place(0)
    return out


def munn_semigroup(latt, bound=DEFAULT_E_BOUND):
    """All order isomorphisms between principal down-sets, under composition.

    Returns (semigroup, maps) where maps[i] is the i-th element as a partial
    bijection on the semilattice positions (1-based).
    """
    k = len(latt)
    if k > bound:
        raise BoundExceeded(f"semilattice size {k} exceeds bound {bound}")
    ideals = [latt.down_set(e) for e in range(k)]
    triples = []
    for e in range(k):
        for f in range(k):
            for graph in _order_isos(latt, ideals[e], ideals[f]):
                pb = pbij.PartialBijection(k, [(a + 1, b + 1) for a, b in graph])
                triples.append((e, f, pb))
    triples.sort(key=lambda t: (t[0], t[1], t[2].graph))

    labels = []
    for e, f, pb in triples:
        moves = ",".join(
            f"{latt.labels[a - 1]}>{latt.labels[b - 1]}" for a, b in pb.graph
        )
        labels.append(f"{{{latt.labels[e]}>{latt.labels[f]}: {moves}}}")
    index = {pb: i for i, (_, _, pb) in enumerate(triples)}
    table = []
    for _, _, pa in triples:
        row = []
        for _, _, pb in triples:
            prod = pbij.compose(pa, pb)
            if prod not in index:
                raise InvariantViolation(
                    "composite of ideal isomorphisms left the family"
                )
            row.append(index[prod])
        table.append(row)
    semi = FiniteInverseSemigroup(labels, table)
    for i, (e, f, pb) in enumerate(triples):
        if semi.is_idempotent(i) != (e == f and pb.is_partial_identity()):
            raise InvariantViolation("idempotents are not the identity ideal maps")
    return semi, [pb for _, _, pb in triples]


def munn_representation(semigroup, bound=DEFAULT_E_BOUND):
    """Conjugation homomorphism into the ideal-isomorphism semigroup of E(S).

    Its kernel is checked to be the greatest idempotent-separating congruence.
    """
    latt, members = semilattice_of_idempotents(semigroup)
    target, maps = munn_semigroup(latt, bound=bound)
    index = {pb: i for i, pb in enumerate(maps)}
    mult = semigroup.mult
    inv = semigroup.inv
    mapping = []
    for s in range(len(semigroup)):
        ds = semigroup.d(s)
        pairs = []
        for i, e in enumerate(members):
            if semigroup.leq(e, ds):
                conj = mult[mult[s][e]][inv[s]]
                pairs.append((i + 1, members.index(conj) + 1))
        pb = pbij.PartialBijection(len(latt), pairs)
        if pb not in index:
            raise InvariantViolation("conjugation map is not an ideal isomorphism")
        mapping.append(index[pb])
    delta = Homomorphism(semigroup, target, mapping)

    idem_images = [mapping[e] for e in semigroup.idempotents]
    if len(set(idem_images)) != len(idem_images):
        raise InvariantViolation("conjugation map merges idempotents")
    if not set(target.idempotents) <= set(mapping):
        raise InvariantViolation("image of the conjugation map is not wide")
    if Congruence(semigroup, mapping) != mu(semigroup):
        raise InvariantViolation(
            "kernel of the conjugation map is not the greatest "
            "idempotent-separating congruence"
        )
    return delta


def is_fundamental_munn(semigroup, bound=DEFAULT_E_BOUND):
    """Fundamental iff the conjugation homomorphism is injective."""
    delta = munn_representation(semigroup, bound=bound)
    result = delta.is_injective()
    if result != semigroup.is_fundamental():
        raise InvariantViolation(
            "injectivity of the conjugation map disagrees with the centralizer test"
        )
    return result
