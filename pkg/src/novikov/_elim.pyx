# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fraction-free elimination kernel.

Entries are arbitrary-precision Python ints (exactness is non-negotiable),
so the speedup over the pure twin comes from removing interpreter overhead
in the inner loops, not from machine arithmetic.
"""

IMPLEMENTATION = "cython"


def rank_int(rows, Py_ssize_t ncols):
    """Rank of an integer matrix via Bareiss fraction-free elimination."""
    cdef list m = [list(r) for r in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t col, i, j, piv
    cdef list row, pivot_row
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if (<list>m[i])[col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pivot_row = <list>m[rank]
        p = pivot_row[col]
        for i in range(rank + 1, nrows):
            row = <list>m[i]
            f = row[col]
            for j in range(col + 1, ncols):
                row[j] = (p * row[j] - f * pivot_row[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank
