"""Pure-Python fraction-free elimination kernel.

Mirror of the compiled extension ``novikov._elim``; same algorithm, same
semantics.  Selected at import time by ``novikov.kernels`` when the
extension is unavailable or explicitly disabled.
"""

IMPLEMENTATION = "pure-python"


def rank_int(rows, ncols):
    """Rank of an integer matrix via Bareiss fraction-free elimination.

    ``rows`` is a list of length-``ncols`` lists of Python ints; the input
    is not modified.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pivot_row = m[rank]
        p = pivot_row[col]
        for i in range(rank + 1, nrows):
            row = m[i]
            f = row[col]
            for j in range(col + 1, ncols):
                # exact division: Bareiss keeps entries equal to minors
                row[j] = (p * row[j] - f * pivot_row[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank
