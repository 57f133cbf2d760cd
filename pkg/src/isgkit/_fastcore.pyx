# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled table kernels; see _kernels_py for the reference implementation."""

from libc.stdlib cimport free, malloc, realloc


def assoc_violation(const int[::1] mult, Py_ssize_t m):
    cdef Py_ssize_t i, j, k
    cdef int ij
    for i in range(m):
        for j in range(m):
            ij = mult[i * m + j]
            for k in range(m):
                if mult[ij * m + k] != mult[i * m + mult[j * m + k]]:
                    return (i * m + j) * m + k
    return -1


def inverse_table(const int[::1] mult, Py_ssize_t m, int[::1] inv_out):
    cdef Py_ssize_t i, t
    cdef int found
    for i in range(m):
        found = -1
        for t in range(m):
            if mult[mult[i * m + t] * m + i] == i and mult[mult[t * m + i] * m + t] == t:
                if found >= 0:
                    return m + i
                found = <int> t
        if found < 0:
            return i
        inv_out[i] = found
    return -1


def idempotent_commute_violation(const int[::1] mult, Py_ssize_t m):
    cdef Py_ssize_t e, f
    for e in range(m):
        if mult[e * m + e] != e:
            continue
        for f in range(e + 1, m):
            if mult[f * m + f] != f:
                continue
            if mult[e * m + f] != mult[f * m + e]:
                return e * m + f
    return -1


def order_matrix(const int[::1] mult, const int[::1] inv, Py_ssize_t m,
                 unsigned char[::1] out):
    cdef Py_ssize_t s, t
    cdef int ds
    for s in range(m):
        ds = mult[inv[s] * m + s]
        for t in range(m):
            out[s * m + t] = 1 if mult[t * m + ds] == s else 0


cdef Py_ssize_t _find(int* parent, Py_ssize_t x):
    cdef Py_ssize_t root = x
    cdef Py_ssize_t nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = <int> root
        x = nxt
    return root


def saturate(const int[::1] mult, Py_ssize_t m, int[::1] parent, pairs):
    cdef Py_ssize_t cap = 4 * m + 16
    cdef Py_ssize_t top = 0
    cdef Py_ssize_t a, b, ra, rb, u
    cdef long* news
    cdef long* stack = <long*> malloc(cap * 2 * sizeof(long))
    if stack == NULL:
        raise MemoryError()
    cdef int* par = &parent[0]
    try:
        for a, b in pairs:
            if top == cap:
                cap *= 2
                news = <long*> realloc(stack, cap * 2 * sizeof(long))
                if news == NULL:
                    raise MemoryError()
                stack = news
            stack[2 * top] = a
            stack[2 * top + 1] = b
            top += 1
        while top > 0:
            top -= 1
            a = stack[2 * top]
            b = stack[2 * top + 1]
            ra = _find(par, a)
            rb = _find(par, b)
            if ra == rb:
                continue
            if rb < ra:
                ra, rb = rb, ra
            par[rb] = <int> ra
            if top + 2 * m >= cap:
                while top + 2 * m >= cap:
                    cap *= 2
                news = <long*> realloc(stack, cap * 2 * sizeof(long))
                if news == NULL:
                    raise MemoryError()
                stack = news
            for u in range(m):
                stack[2 * top] = mult[u * m + a]
                stack[2 * top + 1] = mult[u * m + b]
                top += 1
                stack[2 * top] = mult[a * m + u]
                stack[2 * top + 1] = mult[b * m + u]
                top += 1
    finally:
        free(stack)
