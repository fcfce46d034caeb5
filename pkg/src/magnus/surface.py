"""Twisted intersection forms on the surface F_g and their pointed sums.

H = H_1^phi(F_g, *) is free on a_1..a_g, b_1..b_g.  The form is
s(x, y) = x^T S conj(y).  A pointed module remembers the connecting map
del = d_* (as a row of values on the basis) and the boundary class nu.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .freegroup import PhiValuation, boundary_word, fox_vector, surface_sum
from .linalg import Matrix, det
from .ring import LaurentPoly, RingFrac, as_frac


@dataclass(frozen=True, eq=True)
class PointedHermModule:
    genus: int
    phi: PhiValuation
    S: Matrix
    delta: tuple   # d_*(e_i) for the basis vectors
    nu: tuple      # coordinates of the boundary class

    @property
    def nvars(self):
        return self.phi.nvars

    @property
    def rank(self):
        return 2 * self.genus


def _P(x, y):
    return (1 - x) * (1 - y.involute())


def _Q(x, y):
    return (x + 1) * (y.involute() + 1) - 2


def form_matrix(genus: int, phi: PhiValuation) -> Matrix:
    """The matrix of the twisted intersection form in the basis (a, b)."""
    g, n = genus, phi.nvars
    if phi.rank != 2 * g:
        raise ValueError("valuation does not match the genus")
    A = [phi.of_gen(i) for i in range(1, g + 1)]
    B = [phi.of_gen(g + i) for i in range(1, g + 1)]
    z = LaurentPoly(0, n)
    S = [[z] * (2 * g) for _ in range(2 * g)]

    def block(xs, ys, diag):
        out = [[z] * g for _ in range(g)]
        for i in range(g):
            for j in range(g):
                if i == j:
                    out[i][j] = diag(i)
                elif i > j:
                    out[i][j] = _P(xs[i], ys[j])
                else:
                    out[i][j] = -_P(xs[i], ys[j])
        return out

    aa = block(A, A, lambda i: A[i].involute() - A[i])
    ab = block(A, B, lambda i: _Q(A[i], B[i]))
    bb = block(B, B, lambda i: B[i] - B[i].involute())
    for i in range(g):
        for j in range(g):
            S[i][j] = aa[i][j]
            S[i][g + j] = ab[i][j]
            S[g + j][i] = -ab[i][j].involute()
            S[g + i][g + j] = bb[i][j]
    return Matrix(S, n, 2 * g)


def build(genus: int, phi: PhiValuation) -> PointedHermModule:
    S = form_matrix(genus, phi)
    delta = tuple(phi.of_gen(i) - 1 for i in range(1, 2 * genus + 1))
    nu = tuple(fox_vector(boundary_word(genus), phi))
    return PointedHermModule(genus, phi, S, delta, nu)


def form_eval(H: PointedHermModule, x, y):
    """s(x, y) = x^T S conj(y) for coordinate vectors (ring or fraction entries)."""
    n = H.nvars
    x = [as_frac(v, n) if not isinstance(v, LaurentPoly) else v for v in x]
    yb = [v.involute() if not isinstance(v, int) else LaurentPoly(v, n) for v in y]
    acc = LaurentPoly(0, n)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(yb):
            s = H.S[i, j]
            if s and yj:
                acc = xi * s * yj + acc
    return acc


def connecting(H: PointedHermModule, x):
    """d_*(x) = sum x_i d_*(e_i)."""
    acc = LaurentPoly(0, H.nvars)
    for xi, di in zip(x, H.delta):
        if xi and di:
            acc = xi * di + acc
    return acc


def check_module(H: PointedHermModule) -> dict:
    """Structural invariants of a pointed module, each as a boolean."""
    n, m = H.nvars, H.rank
    S = H.S
    out = {}
    out["skew_hermitian"] = S.conj().T == -S
    out["det_4g"] = det(S) == LaurentPoly(4 ** H.genus, n)
    ok = True
    for i in range(m):
        e = [LaurentPoly(int(i == j), n) for j in range(m)]
        if form_eval(H, e, H.nu) != 2 * H.delta[i]:
            ok = False
            break
    out["boundary_identity"] = ok
    out["nu_in_kernel_of_del"] = not connecting(H, H.nu)
    out["nu_isotropic"] = not form_eval(H, H.nu, H.nu)
    return out


def pointed_sum_matrix(S1: Matrix, s1, S2: Matrix, s2) -> Matrix:
    """Matrix of the pointed sum of two forms with base points s1, s2, in the
    block basis (basis of the first, basis of the second).  Entries are
    fractions in general."""
    n = S1.nvars
    m1, m2 = S1.nrows, S2.nrows
    s1 = [as_frac(v, n) for v in s1]
    s2 = [as_frac(v, n) for v in s2]
    s1b = [v.involute() for v in s1]
    s2b = [v.involute() for v in s2]
    # rho(e_i, s1), rho(s1, e_i), rho'(e'_j, s2), rho'(s2, e'_j)
    r1_s = [sum((S1[i, k] * s1b[k] for k in range(m1)), RingFrac(LaurentPoly(0, n)))
            for i in range(m1)]
    s_r1 = [sum((s1[k] * S1[k, i] for k in range(m1)), RingFrac(LaurentPoly(0, n)))
            for i in range(m1)]
    r2_s = [sum((S2[j, k] * s2b[k] for k in range(m2)), RingFrac(LaurentPoly(0, n)))
            for j in range(m2)]
    s_r2 = [sum((s2[k] * S2[k, j] for k in range(m2)), RingFrac(LaurentPoly(0, n)))
            for j in range(m2)]
    zero = RingFrac(LaurentPoly(0, n))
    rows = [[zero] * (m1 + m2) for _ in range(m1 + m2)]
    for i in range(m1):
        for j in range(m1):
            rows[i][j] = as_frac(S1[i, j], n)
        for j in range(m2):
            rows[i][m1 + j] = r1_s[i] * s_r2[j]
    for i in range(m2):
        for j in range(m2):
            rows[m1 + i][m1 + j] = as_frac(S2[i, j], n)
        for j in range(m1):
            rows[m1 + i][j] = -(s_r1[j] * r2_s[i])
    return Matrix(rows, n, m1 + m2)


def surface_order(g: int, h: int):
    """Permutation taking block order (a, b, a', b') to (a, a', b, b')."""
    return (list(range(g)) + [2 * g + j for j in range(h)]
            + [g + i for i in range(g)] + [2 * g + h + j for j in range(h)])


def tensor_pointed(H1: PointedHermModule, H2: PointedHermModule) -> PointedHermModule:
    """Pointed sum of two surface modules, already written in the generator
    order of F_{g+h}: a_1..a_g, a'_1..a'_h, b_1..b_g, b'_1..b'_h."""
    if H1.nvars != H2.nvars:
        raise InvariantViolation("group-rank-mismatch")
    n = H1.nvars
    half = RingFrac(LaurentPoly(1, n), LaurentPoly(2, n))
    s1 = [half * v for v in H1.nu]
    s2 = [half * v for v in H2.nu]
    block = pointed_sum_matrix(H1.S, s1, H2.S, s2)
    perm = surface_order(H1.genus, H2.genus)
    try:
        S = Matrix([[block[i, j].to_poly() for j in perm] for i in perm], n, len(perm))
    except ArithmeticError:
        raise InvariantViolation("pointed-sum-not-integral") from None
    delta = [H1.delta[i] if i < H1.rank else H2.delta[i - H1.rank] for i in perm]
    nu = [H1.nu[i] if i < H1.rank else H2.nu[i - H1.rank] for i in perm]
    phi = surface_sum(H1.phi, H2.phi)
    return PointedHermModule(H1.genus + H2.genus, phi, S, tuple(delta), tuple(nu))
