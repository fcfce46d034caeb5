"""Exact linear algebra over R = Z[G] and its fraction field Q(R).

Everything is done fraction free on Laurent polynomial matrices (Bareiss
style elimination, pivots preferring units) and only the final canonical
forms are turned into reduced fractions.  Subspaces of Q(R)^m are kept in
reduced column echelon form, which makes equality a plain comparison.
"""

from __future__ import annotations

from itertools import combinations

from .ring import LaurentPoly, RingFrac, gcd, lcm


def _coerce(x, nvars):
    if isinstance(x, (LaurentPoly, RingFrac)):
        if x.nvars != nvars:
            raise ValueError("entry lives in a ring with a different variable count")
        return x
    if isinstance(x, int):
        return LaurentPoly(x, nvars)
    raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")


class Matrix:
    """Immutable matrix with LaurentPoly or RingFrac entries."""

    __slots__ = ("rows", "nrows", "ncols", "nvars")

    def __init__(self, rows, nvars: int, ncols: int | None = None):
        rows = tuple(tuple(_coerce(x, nvars) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self.nvars = nvars

    @classmethod
    def _trusted(cls, rows, nvars, ncols):
        m = cls.__new__(cls)
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m.rows)
        m.ncols = ncols
        m.nvars = nvars
        return m

    @classmethod
    def zeros(cls, m, n, nvars):
        z = LaurentPoly(0, nvars)
        return cls._trusted([[z] * n for _ in range(m)], nvars, n)

    @classmethod
    def identity(cls, n, nvars):
        z, o = LaurentPoly(0, nvars), LaurentPoly(1, nvars)
        return cls._trusted([[o if i == j else z for j in range(n)] for i in range(n)],
                            nvars, n)

    @classmethod
    def from_columns(cls, cols, nrows, nvars):
        cols = [tuple(c) for c in cols]
        return cls([[c[i] for c in cols] for i in range(nrows)], nvars, len(cols))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self):
        return Matrix._trusted([[self.rows[i][j] for i in range(self.nrows)]
                                for j in range(self.ncols)], self.nvars, self.nrows)

    def conj(self):
        return Matrix._trusted([[x.involute() for x in r] for r in self.rows],
                               self.nvars, self.ncols)

    def conj_T(self):
        return self.conj().T

    def map(self, fn):
        return Matrix([[fn(x) for x in r] for r in self.rows], self.nvars, self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        z = LaurentPoly(0, self.nvars)
        ocols = other.columns()
        out = []
        for r in self.rows:
            nz = [(k, x) for k, x in enumerate(r) if x]
            row = []
            for c in ocols:
                acc = z
                for k, x in nz:
                    y = c[k]
                    if y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Matrix._trusted(out, self.nvars, other.ncols)

    def apply(self, v):
        """Matrix times a column vector given as a sequence."""
        return (self @ Matrix.from_columns([v], self.ncols, self.nvars)).col(0)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return Matrix._trusted([[a + b for a, b in zip(r, s)]
                                for r, s in zip(self.rows, other.rows)],
                               self.nvars, self.ncols)

    def __neg__(self):
        return Matrix._trusted([[-a for a in r] for r in self.rows], self.nvars, self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Matrix._trusted([[c * a for a in r] for r in self.rows], self.nvars,
                               self.ncols)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch in hstack")
        return Matrix._trusted([r + s for r, s in zip(self.rows, other.rows)],
                               self.nvars, self.ncols + other.ncols)

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch in vstack")
        return Matrix._trusted(self.rows + other.rows, self.nvars, self.ncols)

    def submatrix(self, rows, cols):
        return Matrix._trusted([[self.rows[i][j] for j in cols] for i in rows],
                               self.nvars, len(cols))

    def is_zero(self):
        return all(not x for r in self.rows for x in r)

    def is_poly(self):
        return all(isinstance(x, LaurentPoly) or x.is_poly() for r in self.rows for x in r)

    def to_poly(self):
        return Matrix._trusted([[x if isinstance(x, LaurentPoly) else x.to_poly()
                                 for x in r] for r in self.rows], self.nvars, self.ncols)

    def to_frac(self):
        return Matrix._trusted([[x if isinstance(x, RingFrac) else RingFrac.from_poly(x)
                                 for x in r] for r in self.rows], self.nvars, self.ncols)

    def __eq__(self, other):
        if not isinstance(other, Matrix) or self.shape != other.shape:
            return False
        return all(a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash(self.rows)

    def to_strings(self):
        return [[str(x) for x in r] for r in self.rows]

    def __str__(self):
        if not self.rows:
            return f"[] ({self.nrows}x{self.ncols})"
        cells = self.to_strings()
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(w) for c in r) + " ]" for r in cells)

    def __repr__(self):
        return f"Matrix({self.to_strings()}, nvars={self.nvars})"


# ------------------------------------------------------------ helpers

def clear_denominators(vec, nvars):
    """Scale a vector of ring/fraction entries to Laurent polynomials.

    Returns the scaled list; the scale factor is the lcm of denominators.
    """
    dens = [x.den for x in vec if isinstance(x, RingFrac) and not x.den.is_one()]
    if not dens:
        return [x if isinstance(x, LaurentPoly) else
                (x.num if isinstance(x, RingFrac) else LaurentPoly(x, nvars))
                for x in vec]
    L = dens[0]
    for d in dens[1:]:
        if L != d:
            L = lcm(L, d)
    out = []
    for x in vec:
        if isinstance(x, RingFrac):
            out.append(x.num * L.exact_div(x.den) if x.num else LaurentPoly(0, nvars))
        elif isinstance(x, LaurentPoly):
            out.append(x * L)
        else:
            out.append(LaurentPoly(x, nvars) * L)
    return out


def primitive_vector(vec, nvars):
    """Clear denominators and remove the common polynomial factor."""
    v = clear_denominators(vec, nvars)
    g = None
    for x in v:
        if x:
            g = x.normal_form() if g is None else gcd(g, x)
            if g.is_one():
                break
    if g is None or g.is_one():
        return v
    return [x.exact_div(g) for x in v]


def _poly_rows(a: Matrix):
    return [clear_denominators(r, a.nvars) for r in a.rows]


def _choose_pivot(M, start, c):
    best, best_key = None, None
    for i in range(start, len(M)):
        x = M[i][c]
        if not x:
            continue
        key = (0 if x.is_unit() else 1, x.nterms(), i)
        if best_key is None or key < best_key:
            best, best_key = i, key
            if key[0] == 0:
                break
    return best


def ff_rref(M, ncols, nvars):
    """Fraction-free Gauss-Jordan elimination, in place on a list of rows.

    Returns (rows, pivots, d): the nonzero rows of a reduced row echelon
    form scaled so that every pivot equals d.
    """
    one = LaurentPoly(1, nvars)
    m = len(M)
    d = one
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        p = _choose_pivot(M, r, c)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        if piv.is_unit() and not piv.is_one():
            inv = piv.unit_inverse()
            M[r] = [x * inv for x in M[r]]
            piv = one
        prow = M[r]
        simple = d.is_one() and piv.is_one()
        for i in range(m):
            if i == r:
                continue
            row = M[i]
            a = row[c]
            if simple:
                if a:
                    M[i] = [x - a * y if y else x for x, y in zip(row, prow)]
            elif not a:
                if d == piv:
                    continue
                M[i] = [(piv * x).exact_div(d) if x else x for x in row]
            else:
                M[i] = [(piv * x - a * y).exact_div(d) for x, y in zip(row, prow)]
        d = piv
        pivots.append(c)
        r += 1
    return M[:r], pivots, d


def bareiss_det(M, nvars) -> LaurentPoly:
    """Determinant of a square Laurent polynomial matrix (list of rows)."""
    n = len(M)
    one = LaurentPoly(1, nvars)
    if n == 0:
        return one
    M = [list(r) for r in M]
    factor = one
    sign = 1
    prev = one
    for k in range(n):
        p = _choose_pivot(M, k, k)
        if p is None:
            return LaurentPoly(0, nvars)
        if p != k:
            M[k], M[p] = M[p], M[k]
            sign = -sign
        piv = M[k][k]
        if piv.is_unit() and not piv.is_one():
            factor = factor * piv
            inv = piv.unit_inverse()
            M[k] = [x * inv for x in M[k]]
            piv = one
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            a = ri[k]
            if prev.is_one():
                if piv.is_one():
                    if a:
                        M[i] = [ri[j] - a * rk[j] if j > k else ri[j] for j in range(n)]
                else:
                    M[i] = [piv * ri[j] - a * rk[j] if j > k else ri[j] for j in range(n)]
            else:
                M[i] = [(piv * ri[j] - a * rk[j]).exact_div(prev) if j > k else ri[j]
                        for j in range(n)]
        prev = piv
    res = M[n - 1][n - 1] * factor
    return -res if sign < 0 else res


def det(a: Matrix):
    """Determinant; a LaurentPoly for polynomial input, else a RingFrac."""
    if a.nrows != a.ncols:
        raise ValueError("determinant of a non-square matrix")
    if a.is_poly():
        return bareiss_det(a.to_poly().rows, a.nvars)
    rows = []
    scale = RingFrac(LaurentPoly(1, a.nvars))
    for r in a.rows:
        pr = clear_denominators(r, a.nvars)
        # scale = product of per-row factors that were multiplied in
        for x, y in zip(r, pr):
            if x:
                scale = scale * (RingFrac.from_poly(y) / x)
                break
        rows.append(pr)
    return RingFrac.from_poly(bareiss_det(rows, a.nvars)) / scale


def rank(a: Matrix) -> int:
    if a.nrows == 0 or a.ncols == 0:
        return 0
    _, piv, _ = ff_rref(_poly_rows(a), a.ncols, a.nvars)
    return len(piv)


def _frac(x: LaurentPoly, d: LaurentPoly) -> RingFrac:
    if d.is_one():
        return RingFrac.from_poly(x)
    return RingFrac(x, d)


class Subspace:
    """A Q(R)-subspace of Q(R)^ambient in canonical reduced column echelon form.

    ``basis`` is an ambient x dim matrix of RingFrac entries; column j has a 1
    in row ``pivots[j]``, zeros above it, and every other column is zero in
    that row.  Two subspaces are equal exactly when their bases are.
    """

    __slots__ = ("ambient", "nvars", "basis", "pivots")

    def __init__(self, ambient, nvars, basis: Matrix, pivots):
        self.ambient = ambient
        self.nvars = nvars
        self.basis = basis
        self.pivots = tuple(pivots)

    @property
    def dim(self):
        return len(self.pivots)

    def columns(self):
        return self.basis.columns()

    def integral_columns(self):
        """Basis vectors scaled to Laurent polynomial vectors."""
        return [primitive_vector(c, self.nvars) for c in self.columns()]

    def integral_matrix(self) -> Matrix:
        return Matrix.from_columns(self.integral_columns(), self.ambient, self.nvars)

    def contains(self, v) -> bool:
        v = [x if isinstance(x, RingFrac) else RingFrac.from_poly(_coerce(x, self.nvars))
             for x in v]
        if len(v) != self.ambient:
            raise ValueError("vector has the wrong length")
        cols = self.columns()
        acc = [RingFrac(LaurentPoly(0, self.nvars))] * self.ambient
        for j, p in enumerate(self.pivots):
            c = v[p]
            if c:
                acc = [a + c * b for a, b in zip(acc, cols[j])]
        return all(a == b for a, b in zip(acc, v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(c) for c in other.columns())

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.pivots == other.pivots and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.pivots))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def span(vectors, ambient: int, nvars: int) -> Subspace:
    """Canonical form of the span of the given vectors."""
    rows = [clear_denominators(v, nvars) for v in vectors]
    rows = [r for r in rows if any(r)]
    for r in rows:
        if len(r) != ambient:
            raise ValueError("vector has the wrong length")
    if not rows:
        return Subspace(ambient, nvars, Matrix._trusted([[]] * ambient, nvars, 0)
                        if ambient else Matrix._trusted([], nvars, 0), [])
    R, piv, d = ff_rref(rows, ambient, nvars)
    cols = [[_frac(x, d) for x in r] for r in R]
    basis = Matrix._trusted([[c[i] for c in cols] for i in range(ambient)], nvars,
                            len(cols))
    return Subspace(ambient, nvars, basis, piv)


def column_span(a: Matrix) -> Subspace:
    return span(a.columns(), a.nrows, a.nvars)


def echelon(a: Matrix) -> Subspace:
    """Canonical reduced column echelon form of the column span of a."""
    return column_span(a)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    if u.ambient != v.ambient:
        raise ValueError("ambient dimensions differ")
    return span(u.columns() + v.columns(), u.ambient, u.nvars)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """u cap v, from the kernel of [U | -V]."""
    if u.ambient != v.ambient:
        raise ValueError("ambient dimensions differ")
    n, nv = u.ambient, u.nvars
    if u.dim == 0 or v.dim == 0:
        return span([], n, nv)
    U = Matrix.from_columns(u.integral_columns(), n, nv)
    V = Matrix.from_columns(v.integral_columns(), n, nv)
    vecs = []
    for x in kernel_vectors(U.hstack(-V)):
        vecs.append(U.apply(x[:u.dim]))
    return span(vecs, n, nv)


def kernel_vectors(a: Matrix):
    """Laurent polynomial vectors spanning the right kernel of a (not canonical)."""
    n = a.ncols
    nv = a.nvars
    if n == 0:
        return []
    if a.nrows == 0:
        return [[LaurentPoly(int(i == j), nv) for i in range(n)] for j in range(n)]
    R, piv, d = ff_rref(_poly_rows(a), n, nv)
    free = [j for j in range(n) if j not in set(piv)]
    out = []
    z = LaurentPoly(0, nv)
    for j in free:
        v = [z] * n
        v[j] = d
        for i, p in enumerate(piv):
            v[p] = -R[i][j]
        out.append(v)
    return out


def kernel(a: Matrix) -> Subspace:
    return span(kernel_vectors(a), a.ncols, a.nvars)


def solve(a: Matrix, b: Matrix):
    """A particular solution X of a @ X = b over Q(R) (free variables 0),
    or None if the system is inconsistent."""
    if a.nrows != b.nrows:
        raise ValueError("row count mismatch")
    n, k, nv = a.ncols, b.ncols, a.nvars
    if a.nrows == 0:
        return Matrix.zeros(n, k, nv).to_frac()
    rows = [clear_denominators(list(r) + list(s), nv) for r, s in zip(a.rows, b.rows)]
    R, piv, d = ff_rref(rows, n + k, nv)
    if any(p >= n for p in piv):
        return None
    zero = RingFrac(LaurentPoly(0, nv))
    X = [[zero] * k for _ in range(n)]
    for i, p in enumerate(piv):
        X[p] = [_frac(R[i][n + j], d) for j in range(k)]
    return Matrix._trusted(X, nv, k)


def inverse(a: Matrix) -> Matrix:
    if a.nrows != a.ncols:
        raise ValueError("inverse of a non-square matrix")
    if rank(a) < a.nrows:
        raise ZeroDivisionError("singular matrix")
    return solve(a, Matrix.identity(a.nrows, a.nvars))


def ord_of_presentation(a: Matrix) -> LaurentPoly:
    """Order of the module with the rows of a as relations (gcd of maximal
    minors), in unit-normal form; zero when the module has positive rank."""
    m, k, nv = a.nrows, a.ncols, a.nvars
    if k == 0:
        return LaurentPoly(1, nv)
    if m < k:
        return LaurentPoly(0, nv)
    rows = _poly_rows(a)
    if m == k:
        return bareiss_det(rows, nv).normal_form()
    if rank(a) < k:
        return LaurentPoly(0, nv)
    g = LaurentPoly(0, nv)
    for sel in combinations(range(m), k):
        dd = bareiss_det([rows[i] for i in sel], nv)
        if dd:
            g = gcd(g, dd)
            if g.is_one():
                break
    return g


def minor(a: Matrix, rows, cols):
    sub = a.submatrix(rows, cols)
    return det(sub)
