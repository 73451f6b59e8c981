"""Smith normal form over the integers.

Matrices come in as anything ``numpy.asarray`` accepts and are reduced
with Python integers, so entries never overflow.

>>> U, D, V = smith_normal_form([[2, 4], [6, 8]])
>>> D.tolist()
[[2, 0], [0, 4]]
>>> bool((U.dot([[2, 4], [6, 8]]).dot(V) == D).all())
True
"""

from math import gcd

import numpy as np


def _to_rows(M):
    A = np.asarray(M, dtype=object)
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    return [[int(x) for x in row] for row in A], A.shape


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _as_array(rows, nrows, ncols):
    out = np.zeros((nrows, ncols), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = x
    return out


def smith_normal_form(M, inverse=False):
    """Return ``(U, D, V)`` with ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular and ``D`` is diagonal with non-negative
    entries ``d1 | d2 | ...``. The pivot is always the smallest nonzero
    entry in absolute value (first in row-major order on ties); rows are
    cleared before columns. With ``inverse=True`` the inverse of ``V`` is
    returned as a fourth matrix.
    """
    A, (m, n) = _to_rows(M)
    U = _identity(m)
    V = _identity(n)
    Vi = _identity(n) if inverse else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        if Vi is not None:
            Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(src, dst, k):
        # row dst += k * row src
        a, b = A[src], A[dst]
        for c in range(n):
            if a[c]:
                b[c] += k * a[c]
        a, b = U[src], U[dst]
        for c in range(m):
            if a[c]:
                b[c] += k * a[c]

    def add_col(src, dst, k):
        for row in A:
            if row[src]:
                row[dst] += k * row[src]
        for row in V:
            if row[src]:
                row[dst] += k * row[src]
        if Vi is not None:
            a, b = Vi[dst], Vi[src]
            for c in range(n):
                if a[c]:
                    b[c] -= k * a[c]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // p))
            # a nonzero remainder is smaller than the pivot: promote it
            rem = [(abs(A[i][t]), i, None) for i in range(t + 1, m) if A[i][t]]
            rem += [(abs(A[t][j]), None, j) for j in range(t + 1, n) if A[t][j]]
            if rem:
                _, i, j = min(rem, key=lambda r: r[0])
                if i is not None:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    out = (_as_array(U, m, m), _as_array(A, m, n), _as_array(V, n, n))
    if inverse:
        out += (_as_array(Vi, n, n),)
    return out


def diagonal(D):
    D = np.asarray(D, dtype=object)
    return [int(D[i, i]) for i in range(min(D.shape))]


def invariant_factors(M):
    """Nonzero invariant factors of ``M`` (length equals the rank).

    Faster than :func:`smith_normal_form`: the matrix is diagonalised
    without tracking transforms and the diagonal is normalised to a
    divisibility chain afterwards.

    >>> invariant_factors([[2, 0], [0, 3]])
    [1, 6]
    """
    rows = [r for r in _to_rows(M)[0] if any(r)]
    diag = []
    while rows:
        # pivot: smallest |entry|, preferring short rows to limit fill-in
        best = None
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if x:
                    key = (abs(x), sum(1 for y in row if y))
                    if best is None or key < best[0]:
                        best = (key, i, j)
        _, pi, pj = best
        while True:
            prow = rows[pi]
            p = prow[pj]
            rest = []
            smaller = None
            for i, row in enumerate(rows):
                if i == pi:
                    continue
                x = row[pj]
                if x:
                    k = x // p
                    if k:
                        row = [a - k * b for a, b in zip(row, prow)]
                    if row[pj] and (smaller is None or abs(row[pj]) < abs(smaller[1][pj])):
                        smaller = (len(rest), row)
                rest.append(row)
            if smaller is not None:
                # a remainder survived in the pivot column; pivot on it instead
                rows = rest + [prow]
                pi = smaller[0]
                continue
            # column pj is clear except for the pivot row; clear the pivot row
            # by column operations, which only touch that row
            col_rem = [(abs(x), j) for j, x in enumerate(prow) if x and j != pj and x % p]
            if col_rem:
                # reduce the row modulo p and pivot on the smallest remainder
                prow = [x - (x // p) * p if j != pj else x for j, x in enumerate(prow)]
                _, pj = min((abs(x), j) for j, x in enumerate(prow) if x and j != pj)
                # the new pivot column still has to be cleared by row operations
                rows = rest + [prow]
                pi = len(rows) - 1
                continue
            diag.append(abs(p))
            rows = [r[:pj] + r[pj + 1:] for r in rest]
            rows = [r for r in rows if any(r)]
            break
    return normalize_diagonal(diag)


def normalize_diagonal(diag):
    """Turn a list of nonzero diagonal entries into invariant factors."""
    d = sorted(abs(x) for x in diag if x)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return d


def rank(M):
    return len(invariant_factors(M))
