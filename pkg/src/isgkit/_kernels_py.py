"""Pure-Python table kernels.

Mirror of the compiled module `_fastcore`: identical names, signatures and
return conventions, so the two are interchangeable behind `kernels`.

All tables are flat row-major buffers of length m*m holding element indices.
"""


def assoc_violation(mult, m):
    """First triple (i,j,k) with (ij)k != i(jk), encoded i*m*m + j*m + k; -1 if none."""
    for i in range(m):
        row_i = i * m
        for j in range(m):
            ij = mult[row_i + j]
            row_ij = ij * m
            row_j = j * m
            for k in range(m):
                if mult[row_ij + k] != mult[row_i + mult[row_j + k]]:
                    return (i * m + j) * m + k
    return -1


def inverse_table(mult, m, inv_out):
    """Fill inv_out[i] with the unique t satisfying i = i t i and t = t i t.

    Returns -1 on success, i if element i has no such t, and m + i if the
    choice is not unique.
    """
    for i in range(m):
        row_i = i * m
        found = -1
        for t in range(m):
            if mult[mult[row_i + t] * m + i] == i and mult[mult[t * m + i] * m + t] == t:
                if found >= 0:
                    return m + i
                found = t
        if found < 0:
            return i
        inv_out[i] = found
    return -1


def idempotent_commute_violation(mult, m):
    """First pair of idempotents (e,f) with ef != fe, encoded e*m + f; -1 if none."""
    idem = [i for i in range(m) if mult[i * m + i] == i]
    for a in range(len(idem)):
        e = idem[a]
        for b in range(a + 1, len(idem)):
            f = idem[b]
            if mult[e * m + f] != mult[f * m + e]:
                return e * m + f
    return -1


def order_matrix(mult, inv, m, out):
    """Fill out[s*m + t] with 1 iff s <= t in the natural order (s = t * d(s))."""
    for s in range(m):
        ds = mult[inv[s] * m + s]
        for t in range(m):
            out[s * m + t] = 1 if mult[t * m + ds] == s else 0


def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def saturate(mult, m, parent, pairs):
    """Close the union-find `parent` (in place) into a congruence containing `pairs`.

    Every merge of concrete elements (a, b) queues the translated pairs
    (ua, ub) and (au, bu) for all u; chains of merges cover whole classes.
    """
    stack = [(a, b) for a, b in pairs]
    while stack:
        a, b = stack.pop()
        ra = _find(parent, a)
        rb = _find(parent, b)
        if ra == rb:
            continue
        if rb < ra:
            ra, rb = rb, ra
        parent[rb] = ra
        row_a = a * m
        row_b = b * m
        for u in range(m):
            row_u = u * m
            stack.append((mult[row_u + a], mult[row_u + b]))
            stack.append((mult[row_a + u], mult[row_b + u]))
