"""Re-runnable invariant suites behind the ``check`` command.

Each suite returns ``(label, status, detail)`` rows where status is True
(passed), False (failed, detail says why), or None (skipped, detail says
why).  The checks recompute everything from scratch so they double as an
audit of the constructors' own validation.
"""

from . import congruence as cg
from . import groupoid as gpd
from . import munn as munn_mod
from .errors import BoundExceeded, EmptyAtomSet, IsgError
from .pbij import parse_element


class _Skip(Exception):
    pass


def _run(rows, label, fn):
    try:
        fn()
    except _Skip as exc:
        rows.append((label, None, str(exc)))
    except (IsgError, AssertionError) as exc:
        rows.append((label, False, f"{type(exc).__name__}: {exc}"))
    else:
        rows.append((label, True, ""))


def _check(condition, message):
    if not condition:
        raise AssertionError(message)


# -- order suite ---------------------------------------------------------------


def _associativity(semigroup):
    m = len(semigroup)
    mult = semigroup.mult
    for i in range(m):
        for j in range(m):
            ij = mult[i][j]
            row = mult[j]
            for k in range(m):
                _check(
                    mult[ij][k] == mult[i][row[k]],
                    f"associativity fails at {(i, j, k)}",
                )


def _unique_inverses(semigroup):
    m = len(semigroup)
    mult = semigroup.mult
    for s in range(m):
        partners = [
            t
            for t in range(m)
            if mult[mult[s][t]][s] == s and mult[mult[t][s]][t] == t
        ]
        _check(partners == [semigroup.inv[s]], f"inverse not unique for {s}")


def _idempotents_commute(semigroup):
    E = semigroup.idempotents
    for e in E:
        for f in E:
            _check(
                semigroup.mult[e][f] == semigroup.mult[f][e],
                "idempotents do not commute",
            )


def _inverse_antihomomorphism(semigroup):
    m = len(semigroup)
    for s in range(m):
        for t in range(m):
            _check(
                semigroup.inv[semigroup.mult[s][t]]
                == semigroup.mult[semigroup.inv[t]][semigroup.inv[s]],
                "inverse of a product is not the reversed product of inverses",
            )


def _order_characterizations(semigroup):
    m = len(semigroup)
    for s in range(m):
        for t in range(m):
            ways = semigroup.leq_witnesses(s, t)
            _check(
                len(set(ways)) == 1,
                f"order characterizations disagree on {(s, t)}",
            )
            _check(
                ways[0] == semigroup.leq(s, t),
                "cached order disagrees with recomputation",
            )


def _partial_order(semigroup):
    m = len(semigroup)
    leq = semigroup.leq
    for s in range(m):
        _check(leq(s, s), "order is not reflexive")
        for t in range(m):
            if leq(s, t) and leq(t, s):
                _check(s == t, "order is not antisymmetric")
            if leq(s, t):
                for u in range(m):
                    if leq(t, u):
                        _check(leq(s, u), "order is not transitive")


def _ideal_isomorphism(semigroup):
    """t <= a corresponds bijectively and order-compatibly to d(t) <= d(a)."""
    m = len(semigroup)
    for a in range(m):
        below = sorted(semigroup.down_set(a))
        image = [semigroup.d(t) for t in below]
        _check(len(set(image)) == len(image), "domain map is not injective on a down-set")
        _check(
            sorted(image) == sorted(semigroup.down_set(semigroup.d(a))),
            "domain map does not cover the domain's down-set",
        )
        for t in below:
            _check(
                semigroup.mul(a, semigroup.d(t)) == t,
                "multiplying back the domain does not recover the element",
            )
        for t in below:
            for u in below:
                _check(
                    semigroup.leq(t, u)
                    == semigroup.leq(semigroup.d(t), semigroup.d(u)),
                    "domain map is not an order isomorphism",
                )


def _wagner_preston(semigroup):
    theta = semigroup.wagner_preston()
    _check(theta.is_injective(), "translation representation is not injective")
    m = len(semigroup)
    graphs = [
        frozenset(
            parse_element(theta.target.labels[theta.mapping[a]], m).graph
        )
        for a in range(m)
    ]
    for a in range(m):
        for b in range(m):
            _check(
                semigroup.leq(a, b) == (graphs[a] <= graphs[b]),
                "order does not match translation containment",
            )


def suite_orders(semigroup):
    rows = []
    _run(rows, "associativity", lambda: _associativity(semigroup))
    _run(rows, "unique inverses", lambda: _unique_inverses(semigroup))
    _run(rows, "idempotents commute", lambda: _idempotents_commute(semigroup))
    _run(
        rows,
        "inverse reverses products",
        lambda: _inverse_antihomomorphism(semigroup),
    )
    _run(
        rows,
        "order characterizations agree",
        lambda: _order_characterizations(semigroup),
    )
    _run(rows, "order is a partial order", lambda: _partial_order(semigroup))
    _run(rows, "down-set matches domain down-set", lambda: _ideal_isomorphism(semigroup))
    _run(rows, "translation representation", lambda: _wagner_preston(semigroup))
    return rows


# -- congruence suite ------------------------------------------------------------


def _oracle(semigroup):
    if len(semigroup) > cg.ORACLE_BOUND:
        raise _Skip(f"order {len(semigroup)} exceeds the congruence oracle bound")
    return cg.all_congruences(semigroup)


def _sigma_group_quotient(semigroup):
    sigma = cg.sigma(semigroup)
    quot, _ = cg.quotient(semigroup, sigma)[:2]
    _check(len(quot.idempotents) == 1, "quotient by the group congruence is not a group")


def _sigma_least(semigroup):
    sigma = cg.sigma(semigroup)
    lattice = _oracle(semigroup)
    group_like = [
        c
        for c in lattice
        if len(cg.quotient(semigroup, c)[0].idempotents) == 1
    ]
    _check(sigma in group_like, "group congruence missing from the oracle lattice")
    for c in group_like:
        _check(sigma <= c, "a smaller group congruence exists")


def _mu_join(semigroup):
    mu = cg.mu(semigroup)
    lattice = _oracle(semigroup)
    separating = [c for c in lattice if c.is_idempotent_separating()]
    for c in separating:
        _check(c <= mu, "an idempotent-separating congruence escapes the maximum")
    _check(mu in separating, "the maximum idempotent-separating congruence is missing")


def _mu_quotient_fundamental(semigroup):
    mu = cg.mu(semigroup)
    quot, _ = cg.quotient(semigroup, mu)[:2]
    _check(quot.is_fundamental(), "quotient by the separating congruence is not fundamental")


def _munn_kernel(semigroup):
    if len(semigroup.idempotents) > munn_mod.DEFAULT_E_BOUND:
        raise _Skip("idempotent count exceeds the bound")
    munn_mod.munn_representation(semigroup)


def _xi_join(semigroup):
    if semigroup.zero is None:
        raise _Skip("no zero element")
    xi = cg.xi(semigroup)
    mu = cg.mu(semigroup)
    _check(mu <= xi, "separating congruence is not below the zero-restricted one")
    lattice = _oracle(semigroup)
    restricted = [c for c in lattice if c.is_0_restricted()]
    for c in restricted:
        _check(c <= xi, "a zero-restricted congruence escapes the maximum")
    _check(xi in restricted, "the maximum zero-restricted congruence is missing")


def suite_congruences(semigroup):
    rows = []
    _run(rows, "group quotient", lambda: _sigma_group_quotient(semigroup))
    _run(rows, "least group congruence", lambda: _sigma_least(semigroup))
    _run(
        rows,
        "maximum idempotent-separating congruence",
        lambda: _mu_join(semigroup),
    )
    _run(
        rows,
        "fundamental quotient",
        lambda: _mu_quotient_fundamental(semigroup),
    )
    _run(rows, "idempotent-map kernel", lambda: _munn_kernel(semigroup))
    _run(rows, "maximum zero-restricted congruence", lambda: _xi_join(semigroup))
    return rows


# -- duality suite ---------------------------------------------------------------


def _duality_embedding(semigroup):
    if semigroup.one is None:
        raise _Skip("not a monoid")
    try:
        beta = gpd.downset_embedding(semigroup, bound=gpd.DEFAULT_K_BOUND)
    except BoundExceeded as exc:
        raise _Skip(str(exc))
    _check(beta.is_injective(), "down-set embedding is not injective")


def _duality_atoms(semigroup):
    from . import boolean as boolean_mod

    if semigroup.one is None or semigroup.zero is None:
        raise _Skip("needs a monoid with zero")
    if boolean_mod.is_boolean(semigroup) is None:
        raise _Skip("not Boolean")
    try:
        gpd.atom_iso(semigroup)
    except EmptyAtomSet as exc:
        raise _Skip(str(exc))


def _duality_extension_identity(semigroup):
    if semigroup.one is None:
        raise _Skip("not a monoid")
    try:
        beta = gpd.downset_embedding(semigroup, bound=gpd.UNIQUENESS_BOUND)
    except BoundExceeded as exc:
        raise _Skip(str(exc))
    gamma = gpd.extend_to_bisections(beta, embedding=beta)
    _check(
        list(gamma.mapping) == list(range(len(gamma.source))),
        "extending the embedding along itself is not the identity",
    )
    gpd.extension_is_unique(beta, gamma, beta)


def suite_duality(semigroup):
    rows = []
    _run(rows, "down-set embedding", lambda: _duality_embedding(semigroup))
    _run(rows, "atom correspondence", lambda: _duality_atoms(semigroup))
    _run(
        rows,
        "extension along the embedding",
        lambda: _duality_extension_identity(semigroup),
    )
    return rows


SUITES = {
    "orders": suite_orders,
    "congruences": suite_congruences,
    "duality": suite_duality,
}


def run_suite(semigroup, name):
    """Rows for one named suite, or for all of them in a fixed order."""
    if name == "all":
        rows = []
        for key in ("orders", "congruences", "duality"):
            for label, status, detail in SUITES[key](semigroup):
                rows.append((f"{key}: {label}", status, detail))
        return rows
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](semigroup)
