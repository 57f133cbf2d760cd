"""Exact isomorphism testing for the small structures used in cross-checks.

Elements are first partitioned by order-theoretic invariants, the partition is
refined against the multiplication table until stable, and a backtracking
search then matches classes across the two structures, checking products
incrementally. Groupoids are compared through their zero-adjoined semigroups.
"""

from .groupoid import adjoin_zero


def _colors(semigroup):
    m = len(semigroup)
    color = []
    for s in range(m):
        color.append(
            (
                semigroup.is_idempotent(s),
                s == semigroup.zero,
                s == semigroup.one,
                len(semigroup.down_set(s)),
                len(semigroup.up_set(s)),
                semigroup.d(s) == semigroup.r(s),
                semigroup.inv[s] == s,
            )
        )
    mult = semigroup.mult
    # canonicalize the seed colors so both sides start from comparable integers
    seed_keys = sorted(set(color))
    color = [seed_keys.index(c) for c in color]
    while True:
        buckets = {}
        for s in range(m):
            fingerprint = (
                color[s],
                color[semigroup.inv[s]],
                tuple(sorted((color[mult[s][t]], color[t]) for t in range(m))),
                tuple(sorted((color[mult[t][s]], color[t]) for t in range(m))),
            )
            buckets.setdefault(fingerprint, []).append(s)
        new_color = [None] * m
        for i, key in enumerate(sorted(buckets)):
            for s in buckets[key]:
                new_color[s] = i
        if new_color == color:
            return color
        color = new_color


def find_isomorphism(left, right):
    """A relabeling of left onto right preserving multiplication, or None."""
    if len(left) != len(right):
        return None
    cl = _colors(left)
    cr = _colors(right)
    by_color_l = {}
    by_color_r = {}
    for s, c in enumerate(cl):
        by_color_l.setdefault(c, []).append(s)
    for s, c in enumerate(cr):
        by_color_r.setdefault(c, []).append(s)
    if sorted((c, len(v)) for c, v in by_color_l.items()) != sorted(
        (c, len(v)) for c, v in by_color_r.items()
    ):
        return None

    m = len(left)
    order = sorted(range(m), key=lambda s: (len(by_color_l[cl[s]]), cl[s], s))
    image = [None] * m
    used = [False] * m

    def consistent(s, x):
        for u in order:
            y = image[u]
            if y is None:
                continue
            p = left.mult[s][u]
            if image[p] is not None and right.mult[x][y] != image[p]:
                return False
            q = left.mult[u][s]
            if image[q] is not None and right.mult[y][x] != image[q]:
                return False
        iv = left.inv[s]
        if image[iv] is not None and right.inv[x] != image[iv]:
            return False
        return True

    def search(i):
        if i == m:
            return True
        s = order[i]
        for x in by_color_r[cl[s]]:
            if used[x] or not consistent(s, x):
                continue
            image[s] = x
            used[x] = True
            if search(i + 1):
                return True
            image[s] = None
            used[x] = False
        return False

    if not search(0):
        return None
    for s in range(m):
        for t in range(m):
            if image[left.mult[s][t]] != right.mult[image[s]][image[t]]:
                return None
    return list(image)


def isomorphic(left, right):
    return find_isomorphism(left, right) is not None


def groupoid_isomorphic(left, right):
    """Groupoid isomorphism via the zero-adjoined semigroups."""
    return isomorphic(adjoin_zero(left), adjoin_zero(right))
