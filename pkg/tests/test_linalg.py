import pytest
import sympy
from helpers import random_poly, rng, to_sympy

from magnus.linalg import (Matrix, det, inverse, kernel, ord_of_presentation, rank, solve, span,
                           subspace_intersect, subspace_sum)
from magnus.ring import LaurentPoly, RingFrac
from magnus.zlattice import complement, det_int, integer_kernel, saturate, solve_integer

t = LaurentPoly.gen(0, 1)


def _rand_matrix(r, m, n, nvars):
    return Matrix([[random_poly(r, nvars, terms=2, span=1) for _ in range(n)]
                   for _ in range(m)], nvars, n)


def test_singular_example():
    assert det(Matrix([[t, 1], [1, t.involute()]], 1)) == 0


def test_det_against_sympy():
    r = rng(11)
    for _ in range(15):
        n = r.randint(1, 4)
        M = _rand_matrix(r, n, n, 2)
        oracle = sympy.Matrix([[to_sympy(M[i, j]) for j in range(n)] for i in range(n)])
        oracle = oracle.det(method="berkowitz")
        assert sympy.expand(to_sympy(det(M)) - oracle) == 0


def test_kernel_example():
    K = kernel(Matrix([[1, t]], 1))
    assert K.dim == 1 and K.contains([-t, 1])


def test_kernel_annihilates():
    r = rng(12)
    for _ in range(15):
        A = _rand_matrix(r, r.randint(1, 3), r.randint(2, 5), 1)
        K = kernel(A)
        assert K.dim == A.ncols - rank(A)
        for v in K.columns():
            assert all(not x for x in A.apply(v))


def test_solve_example():
    X = solve(Matrix([[2]], 1), Matrix([[t - 1]], 1))
    assert X[0, 0] == RingFrac(t - 1, LaurentPoly(2, 1))
    assert solve(Matrix([[1], [1]], 1), Matrix([[1], [2]], 1)) is None


def test_inverse():
    r = rng(13)
    for _ in range(10):
        A = _rand_matrix(r, 3, 3, 1)
        if not det(A):
            continue
        assert A @ inverse(A) == Matrix.identity(3, 1).to_frac()


def test_ord_examples():
    assert ord_of_presentation(Matrix([[t - 1, 0], [0, t + 1]], 1)) == t * t - 1
    # the presentation with one relation on two generators has rank 1
    assert ord_of_presentation(Matrix([[t - 1, 0]], 1)) == 0
    # redundant relations: gcd of maximal minors
    assert ord_of_presentation(Matrix([[t - 1], [t * t - 1]], 1)) == t - 1


def test_span_is_canonical():
    r = rng(14)
    for _ in range(10):
        vs = [[random_poly(r, 1, terms=2, span=1) for _ in range(4)] for _ in range(2)]
        a = span(vs, 4, 1)
        mixed = [[x + 3 * y for x, y in zip(vs[0], vs[1])], [y * t for y in vs[1]]]
        assert span(mixed, 4, 1) == a


def test_sum_and_intersection():
    e = [[int(i == j) for i in range(4)] for j in range(4)]
    u = span([e[0], e[1]], 4, 1)
    v = span([e[1], e[2]], 4, 1)
    assert subspace_sum(u, v) == span(e[:3], 4, 1)
    assert subspace_intersect(u, v) == span([e[1]], 4, 1)
    w = span([[1, t, 0, 0]], 4, 1)
    assert subspace_intersect(u, w) == w
    assert subspace_intersect(v, w).dim == 0


def test_integer_kernel_and_saturation():
    K = integer_kernel([[2, 4, 6]], 3)
    assert len(K) == 2
    assert all(2 * a + 4 * b + 6 * c == 0 for a, b, c in K)
    S = saturate([[2, 4]], 2)
    assert S in ([[1, 2]], [[-1, -2]])


def test_complement_is_unimodular():
    basis = saturate([[1, 2, 3], [0, 1, 4]], 3)
    W = complement(basis, 3)
    assert abs(det_int([list(r) for r in zip(*(basis + W))])) == 1


def test_solve_integer():
    x, K = solve_integer([[2, 3]], [1], 2)
    assert 2 * x[0] + 3 * x[1] == 1 and len(K) == 1
    assert solve_integer([[2, 4]], [1], 2) is None


def test_rank_mismatch_errors():
    with pytest.raises(ValueError):
        span([[1, 2]], 3, 0)
