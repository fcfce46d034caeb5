"""Small integer lattice toolkit (column Hermite reduction with transforms).

Used for integral kernels, saturations, complements of saturated sublattices
and integer linear systems.  Sizes here are tiny, so plain Python ints.
"""

from __future__ import annotations


def _xgcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def column_reduce(A, n):
    """Return (H, U, V, pivots) with A U = H lower trapezoidal, U unimodular,
    V = U^-1.  A is a list of m rows of length n.  ``pivots`` lists
    (row, col) of the echelon pivots; columns past len(pivots) of H vanish."""
    H = [list(r) for r in A]
    m = len(H)
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    c = 0
    pivots = []
    for i in range(m):
        if c >= n:
            break
        for j in range(c + 1, n):
            b = H[i][j]
            if b == 0:
                continue
            a = H[i][c]
            g, x, y = _xgcd(a, b)
            p, q = a // g, b // g
            # new col c = x*col_c + y*col_j, new col j = -q*col_c + p*col_j
            for M in (H, U):
                for r in M:
                    cc, jj = r[c], r[j]
                    r[c] = x * cc + y * jj
                    r[j] = -q * cc + p * jj
            # inverse acts on rows c and j of V
            rc, rj = V[c], V[j]
            V[c] = [p * u + q * v for u, v in zip(rc, rj)]
            V[j] = [-y * u + x * v for u, v in zip(rc, rj)]
        if H[i][c] != 0:
            if H[i][c] < 0:
                for M in (H, U):
                    for r in M:
                        r[c] = -r[c]
                V[c] = [-u for u in V[c]]
            pivots.append((i, c))
            c += 1
    return H, U, V, pivots


def integer_kernel(A, n):
    """Z-basis (list of vectors) of {x in Z^n : A x = 0}; always saturated."""
    if not A:
        return [[int(i == j) for i in range(n)] for j in range(n)]
    _, U, _, piv = column_reduce(A, n)
    r = len(piv)
    return [[U[i][j] for i in range(n)] for j in range(r, n)]


def saturate(vectors, n):
    """Z-basis of span_Q(vectors) intersected with Z^n."""
    vectors = [list(v) for v in vectors if any(v)]
    if not vectors:
        return []
    ortho = integer_kernel(vectors, n)   # z with <v, z> = 0 for all v
    return integer_kernel(ortho, n) if ortho else [[int(i == j) for i in range(n)]
                                                   for j in range(n)]


def complement(basis, n):
    """Vectors W such that basis + W is a Z-basis of Z^n.

    ``basis`` must be a basis of a saturated sublattice."""
    d = len(basis)
    if d == 0:
        return [[int(i == j) for i in range(n)] for j in range(n)]
    _, _, V, piv = column_reduce([list(b) for b in basis], n)
    if len(piv) != d:
        raise ValueError("vectors are linearly dependent")
    # rows of V are a Z-basis; the first d span the same saturated lattice
    return [list(V[k]) for k in range(d, n)]


def det_int(M):
    n = len(M)
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n):
        p = next((i for i in range(k, n) if A[i][k]), None)
        if p is None:
            return 0
        if p != k:
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


def solve_integer(A, b, n):
    """Integer solution x of A x = b plus a Z-basis of the kernel, or None."""
    m = len(A)
    if m == 0:
        return [0] * n, integer_kernel(A, n)
    H, U, _, piv = column_reduce(A, n)
    z = [0] * n
    # forward substitution row by row
    k = 0
    for i in range(m):
        acc = sum(H[i][j] * z[j] for j in range(k))
        if k < len(piv) and piv[k][0] == i:
            rem = b[i] - acc
            if rem % H[i][k]:
                return None
            z[k] = rem // H[i][k]
            k += 1
        elif acc != b[i]:
            return None
    x = [sum(U[r][j] * z[j] for j in range(n)) for r in range(n)]
    r = len(piv)
    kern = [[U[i][j] for i in range(n)] for j in range(r, n)]
    return x, kern
