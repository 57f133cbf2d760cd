"""Partial bijections on a finite ground set {1..n}.

The concrete model: injective partial maps under composition, with the empty
map as zero and the identity as one. Everything downstream (Cayley tables,
representations, oracles) is checked against arithmetic done here.
"""

from itertools import combinations, permutations

from .errors import BoundExceeded, DegreeMismatch, MalformedInput, PointOutOfRange

ENUMERATION_BOUND = 5


class PartialBijection:
    """Injective partial map on {1..n}, stored as a graph of (x, y) point pairs.

    Immutable; equality and hashing are on (degree, graph). The graph is kept
    sorted by first coordinate.
    """

    __slots__ = ("degree", "graph", "_send", "_hash")

    def __init__(self, degree, pairs):
        if degree < 0:
            raise PointOutOfRange(f"degree must be nonnegative, got {degree}")
        graph = tuple(sorted((int(x), int(y)) for x, y in pairs))
        send = {}
        seen_targets = set()
        for x, y in graph:
            if not (1 <= x <= degree and 1 <= y <= degree):
                raise PointOutOfRange(f"pair ({x},{y}) outside 1..{degree}")
            if x in send:
                raise MalformedInput(f"point {x} mapped twice")
            if y in seen_targets:
                raise MalformedInput(f"point {y} hit twice")
            send[x] = y
            seen_targets.add(y)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "_send", send)
        object.__setattr__(self, "_hash", hash((degree, graph)))

    def __setattr__(self, name, value):
        raise AttributeError("PartialBijection is immutable")

    @classmethod
    def identity(cls, degree):
        return cls(degree, [(x, x) for x in range(1, degree + 1)])

    @classmethod
    def zero(cls, degree):
        return cls(degree, [])

    def dom(self):
        return frozenset(self._send)

    def ran(self):
        return frozenset(self._send.values())

    def __call__(self, x):
        return self._send[x]

    def __contains__(self, x):
        return x in self._send

    def __len__(self):
        return len(self.graph)

    def __eq__(self, other):
        if not isinstance(other, PartialBijection):
            return NotImplemented
        return self.degree == other.degree and self.graph == other.graph

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.degree, len(self.graph), self.graph)

    def __repr__(self):
        return f"PartialBijection({self.degree}, {format_element(self)!r})"

    def __mul__(self, other):
        return compose(self, other)

    def is_partial_identity(self):
        return all(x == y for x, y in self.graph)


def compose(f, g):
    """f after g: x -> f(g(x)) wherever both steps are defined."""
    if f.degree != g.degree:
        raise DegreeMismatch(f"degrees {f.degree} and {g.degree}")
    fs = f._send
    return PartialBijection(
        f.degree, [(x, fs[y]) for x, y in g.graph if y in fs]
    )


def invert(f):
    return PartialBijection(f.degree, [(y, x) for x, y in f.graph])


def partial_identity(n, points):
    pts = set(points)
    for a in pts:
        if not (1 <= a <= n):
            raise PointOutOfRange(f"point {a} outside 1..{n}")
    return PartialBijection(n, [(a, a) for a in pts])


def restriction_leq(f, g):
    """True iff f is a restriction of g (graph inclusion)."""
    if f.degree != g.degree:
        raise DegreeMismatch(f"degrees {f.degree} and {g.degree}")
    gs = g._send
    return all(gs.get(x) == y for x, y in f.graph)


def compatible_union(f, g):
    """f union g when that is again a partial bijection, else None."""
    if f.degree != g.degree:
        raise DegreeMismatch(f"degrees {f.degree} and {g.degree}")
    merged = dict(f.graph)
    for x, y in g.graph:
        if merged.get(x, y) != y:
            return None
        merged[x] = y
    targets = list(merged.values())
    if len(set(targets)) != len(targets):
        return None
    return PartialBijection(f.degree, merged.items())


def enumerate_symmetric_inverse_monoid(n, bound=ENUMERATION_BOUND):
    """All injective partial maps on {1..n}, canonically sorted."""
    if n > bound:
        raise BoundExceeded(f"degree {n} exceeds enumeration bound {bound}")
    points = range(1, n + 1)
    out = []
    for k in range(n + 1):
        for dom in combinations(points, k):
            for ran in permutations(points, k):
                out.append(PartialBijection(n, zip(dom, ran)))
    out.sort(key=PartialBijection.sort_key)
    return out


def format_element(f):
    """Canonical textual form: "0", "id:1,2" or "1>2,3>1"."""
    if not f.graph:
        return "0"
    if f.is_partial_identity():
        return "id:" + ",".join(str(x) for x, _ in f.graph)
    return ",".join(f"{x}>{y}" for x, y in f.graph)


def parse_element(text, degree):
    """Parse the CLI element syntax: "1>2,3>1", "id:1,2" or "0"."""
    text = text.strip()
    if text == "0":
        return PartialBijection.zero(degree)
    try:
        if text.startswith("id:"):
            body = text[3:].strip()
            pts = [int(p) for p in body.split(",")] if body else []
            return partial_identity(degree, pts)
        pairs = []
        for chunk in text.split(","):
            x, _, y = chunk.partition(">")
            if not _:
                raise MalformedInput(f"bad pair {chunk!r}")
            pairs.append((int(x), int(y)))
        return PartialBijection(degree, pairs)
    except (ValueError, PointOutOfRange, MalformedInput) as exc:
        raise MalformedInput(f"cannot parse element {text!r}: {exc}") from None
