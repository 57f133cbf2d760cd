"""Exception types shared across the package."""


class IsgError(Exception):
    """Base class for all isgkit errors."""


class MalformedInput(IsgError):
    """Input file or element expression could not be parsed."""


class DegreeMismatch(IsgError):
    """Partial bijections live on ground sets of different sizes."""


class PointOutOfRange(IsgError):
    """A point lies outside {1..n}."""


class BoundExceeded(IsgError):
    """A configured enumeration or closure bound was exceeded."""


class NotAssociative(IsgError):
    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"multiplication not associative at triple {triple}")


class NotRegular(IsgError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} has no inverse")


class IdempotentsDoNotCommute(IsgError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"idempotents {pair} do not commute")


class BadZero(IsgError):
    """Declared zero fails 0*s = s*0 = 0."""


class BadOne(IsgError):
    """Declared identity fails 1*s = s*1 = s."""


class NoZero(IsgError):
    """Operation needs a zero element and the semigroup has none."""


class NotAMonoid(IsgError):
    """Operation needs an identity element and the semigroup has none."""


class NotIdempotent(IsgError):
    """Argument must be an idempotent."""


class NotAnIdeal(IsgError):
    """Subset is not a two-sided ideal."""


class NotAHomomorphism(IsgError):
    """Mapping fails multiplicativity (or a required preservation law)."""


class TargetNotAGroup(IsgError):
    """Factorization target must have a single idempotent."""


class NotBoolean(IsgError):
    """Semigroup is not a Boolean inverse monoid."""


class NotFundamental(IsgError):
    """Semigroup is not fundamental."""


class NotBelow(IsgError):
    """Relative complement x \\ y needs y <= x."""


class NotOrthogonal(IsgError):
    """Orthogonal join needs pairwise orthogonal arguments."""


class NoJoin(IsgError):
    """No least upper bound exists for the given elements."""


class FrinkViolation(IsgError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"ab = a iff a*comp(b) = 0 fails at pair {pair}")


class NotABand(IsgError):
    """Table is not associative/idempotent."""


class NotCommutative(IsgError):
    """Table is not commutative."""


class NotAGroupoid(IsgError):
    """Composition data violates the groupoid axioms."""


class EmptyAtomSet(IsgError):
    """No atoms: the atomic groupoid would be empty."""


class InvariantViolation(IsgError):
    """An internal structural law failed; the input table is corrupt."""
