"""Finite inverse semigroups: partial bijections, Cayley tables, congruences,
groupoids, and Boolean inverse monoids, with a pluggable computation backend.

The compiled backend is used automatically when available; set
``ISGKIT_BACKEND=pure`` or ``ISGKIT_BACKEND=c`` to force a choice.
"""

from .boolean import (
    BooleanCertificate,
    additive_ideals,
    decompose_fundamental,
    direct_product,
    frink_verify,
    fundamental_decomposition,
    is_0_simplifying,
    is_boolean,
    is_distributive,
    orthogonal_join,
    relative_complement,
)
from .congruence import (
    Congruence,
    all_congruences,
    congruence_closure,
    factor_through_sigma,
    is_congruence_free,
    mu,
    quotient,
    rees_quotient,
    sigma,
    xi,
)
from .core import (
    FiniteInverseSemigroup,
    Homomorphism,
    closure_from_generators,
    hom_checks,
    semigroup_from_pbijs,
    symmetric_inverse_monoid,
    validate_cayley,
)
from .errors import IsgError
from .fileio import (
    dumps_dot,
    dumps_groupoid,
    dumps_semigroup,
    loads_groupoid,
    loads_semigroup,
)
from .groupoid import (
    FiniteGroupoid,
    adjoin_zero,
    atom_iso,
    atomic_groupoid,
    atoms,
    downset_embedding,
    extend_to_bisections,
    extension_is_unique,
    from_equivalence,
    local_bisections,
    one_object_group,
    pair_groupoid,
    underlying_groupoid,
)
from .isocheck import find_isomorphism, groupoid_isomorphic, isomorphic
from .munn import (
    MeetSemilattice,
    is_fundamental_munn,
    munn_representation,
    munn_semigroup,
    semilattice_from_band,
    semilattice_of_idempotents,
)
from .pbij import PartialBijection, format_element, parse_element

__all__ = [
    "BooleanCertificate",
    "Congruence",
    "FiniteGroupoid",
    "FiniteInverseSemigroup",
    "Homomorphism",
    "IsgError",
    "MeetSemilattice",
    "PartialBijection",
    "additive_ideals",
    "adjoin_zero",
    "all_congruences",
    "atom_iso",
    "atomic_groupoid",
    "atoms",
    "closure_from_generators",
    "congruence_closure",
    "decompose_fundamental",
    "direct_product",
    "downset_embedding",
    "dumps_dot",
    "dumps_groupoid",
    "dumps_semigroup",
    "extend_to_bisections",
    "extension_is_unique",
    "factor_through_sigma",
    "find_isomorphism",
    "format_element",
    "frink_verify",
    "from_equivalence",
    "fundamental_decomposition",
    "groupoid_isomorphic",
    "hom_checks",
    "is_0_simplifying",
    "is_boolean",
    "is_congruence_free",
    "is_distributive",
    "is_fundamental_munn",
    "isomorphic",
    "loads_groupoid",
    "loads_semigroup",
    "local_bisections",
    "mu",
    "munn_representation",
    "munn_semigroup",
    "one_object_group",
    "orthogonal_join",
    "pair_groupoid",
    "parse_element",
    "quotient",
    "rees_quotient",
    "relative_complement",
    "semigroup_from_pbijs",
    "semilattice_from_band",
    "semilattice_of_idempotents",
    "sigma",
    "symmetric_inverse_monoid",
    "underlying_groupoid",
    "validate_cayley",
    "xi",
]

__version__ = "0.1.0"
