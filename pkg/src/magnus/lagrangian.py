"""Lagrangian relations between pointed surface modules.

A relation N from H_1 to H_2 is a subspace of (H_1 + H_2) tensored with
Q(R), source coordinates first.  It is Lagrangian for (-s_1) + s_2 when it
is isotropic of half dimension, and pointed when it contains (nu_1, nu_2).
The R-module itself is recovered as the closure (intersection with the
lattice), so the rational span is all we store.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificationError, InvariantViolation
from .linalg import Matrix, Subspace, kernel_vectors, rank, solve, span
from .ring import LaurentPoly
from .surface import PointedHermModule, surface_order, tensor_pointed


@dataclass(frozen=True)
class LagRelation:
    source: PointedHermModule
    target: PointedHermModule
    space: Subspace

    @property
    def nvars(self):
        return self.source.nvars

    @property
    def n_source(self):
        return self.source.rank

    @property
    def n_target(self):
        return self.target.rank

    def basis(self) -> Matrix:
        return self.space.basis

    def __eq__(self, other):
        return (isinstance(other, LagRelation) and self.source == other.source
                and self.target == other.target and self.space == other.space)

    def __hash__(self):
        return hash((self.source.genus, self.target.genus, self.space))


def ambient_form(source: PointedHermModule, target: PointedHermModule) -> Matrix:
    """Block diagonal matrix of (-s_source) + s_target."""
    n1, n2 = source.rank, target.rank
    nv = source.nvars
    z = LaurentPoly(0, nv)
    rows = []
    for i in range(n1):
        rows.append([-source.S[i, j] for j in range(n1)] + [z] * n2)
    for i in range(n2):
        rows.append([z] * n1 + [target.S[i, j] for j in range(n2)])
    return Matrix(rows, nv, n1 + n2)


def violations(source, target, space: Subspace, pointed=True):
    """Names of the Lagrangian invariants the subspace breaks."""
    out = []
    if source.nvars != target.nvars:
        return ["group-rank-mismatch"]
    m = source.rank + target.rank
    if space.ambient != m:
        return ["wrong-ambient-dimension"]
    if 2 * space.dim != m:
        out.append("not-half-dimensional")
    if space.dim:
        B = space.integral_matrix()
        K = ambient_form(source, target)
        if not (B.T @ K @ B.conj()).is_zero():
            out.append("not-isotropic")
    if pointed:
        nu = list(source.nu) + list(target.nu)
        if not space.contains(nu):
            out.append("point-missing")
    return out


def make(source: PointedHermModule, target: PointedHermModule, vectors,
         pointed: bool = True) -> LagRelation:
    """Lagrangian relation spanned by ``vectors``; raises InvariantViolation
    naming the first broken invariant."""
    m = source.rank + target.rank
    sp = span(vectors, m, source.nvars)
    bad = violations(source, target, sp, pointed)
    if bad:
        raise InvariantViolation(bad[0], ", ".join(bad))
    return LagRelation(source, target, sp)


def _certified(source, target, sp, what):
    bad = violations(source, target, sp, True)
    if bad:
        raise CertificationError(bad[0], f"{what} produced a non-Lagrangian relation")
    return LagRelation(source, target, sp)


def identity(H: PointedHermModule) -> LagRelation:
    m = H.rank
    vecs = [[int(i == j) for i in range(m)] + [int(i == j) for i in range(m)]
            for j in range(m)]
    return LagRelation(H, H, span(vecs, 2 * m, H.nvars))


def graph(psi: Matrix, source: PointedHermModule, target: PointedHermModule) -> LagRelation:
    """Graph of an isomorphism psi: H_source -> H_target (matrix acting on
    column vectors), after checking that psi is invertible, unitary and
    maps the base point to the base point."""
    n = source.rank
    if psi.shape != (target.rank, n):
        raise InvariantViolation("wrong-shape", f"{psi.shape}")
    if target.rank != n:
        raise InvariantViolation("non-invertible", "genera differ")
    if rank(psi) < n:
        raise InvariantViolation("non-invertible")
    if not (psi.T @ target.S @ psi.conj() - source.S).is_zero():
        raise InvariantViolation("non-unitary")
    img = psi.apply(list(source.nu))
    if any(a != b for a, b in zip(img, target.nu)):
        raise InvariantViolation("point-not-preserved")
    vecs = [[int(i == j) for i in range(n)] + list(psi.col(j)) for j in range(n)]
    return LagRelation(source, target, span(vecs, 2 * n, source.nvars))


def _split(rel: LagRelation):
    """Integral basis split into (source part, target part) columns."""
    cols = rel.space.integral_columns()
    n1 = rel.n_source
    return [c[:n1] for c in cols], [c[n1:] for c in cols]


def compose(n2: LagRelation, n1: LagRelation) -> LagRelation:
    """n2 o n1 = {(x, z) : (x, y) in n1, (y, z) in n2 for some y}."""
    if n1.target != n2.source:
        raise InvariantViolation("not-composable", "middle modules differ")
    X1, Y1 = _split(n1)
    Y2, Z2 = _split(n2)
    d1, d2 = len(X1), len(Y2)
    mid = n1.n_target
    nv = n1.nvars
    if mid == 0:
        sol = [[int(i == j) for i in range(d1 + d2)] for j in range(d1 + d2)]
        sol = [[LaurentPoly(x, nv) for x in v] for v in sol]
    else:
        A = Matrix([[Y1[j][i] for j in range(d1)] + [-Y2[j][i] for j in range(d2)]
                    for i in range(mid)], nv, d1 + d2)
        sol = kernel_vectors(A)
    n1s, n3 = n1.n_source, n2.n_target
    z = LaurentPoly(0, nv)
    vecs = []
    for v in sol:
        u, w = v[:d1], v[d1:]
        x = [z] * n1s
        for j, c in enumerate(u):
            if c:
                x = [a + c * b for a, b in zip(x, X1[j])]
        y = [z] * n3
        for j, c in enumerate(w):
            if c:
                y = [a + c * b for a, b in zip(y, Z2[j])]
        vecs.append(x + y)
    sp = span(vecs, n1s + n3, nv)
    return _certified(n1.source, n2.target, sp, "compose")


def _reindex_pair(v1, v2, g1, g2):
    """Place a source-or-target vector pair of two factors into the a,a',b,b'
    order of the sum."""
    perm = surface_order(g1, g2)
    both = list(v1) + list(v2)
    return [both[i] for i in perm]


def tensor(n1: LagRelation, n2: LagRelation) -> LagRelation:
    src = tensor_pointed(n1.source, n2.source)
    tgt = tensor_pointed(n1.target, n2.target)
    nv = n1.nvars
    z = LaurentPoly(0, nv)
    vecs = []
    a1, b1 = n1.n_source, n2.n_source
    for c in n1.space.integral_columns():
        s = _reindex_pair(c[:a1], [z] * b1, n1.source.genus, n2.source.genus)
        t = _reindex_pair(c[a1:], [z] * n2.n_target, n1.target.genus, n2.target.genus)
        vecs.append(s + t)
    for c in n2.space.integral_columns():
        s = _reindex_pair([z] * a1, c[:b1], n1.source.genus, n2.source.genus)
        t = _reindex_pair([z] * n1.n_target, c[b1:], n1.target.genus, n2.target.genus)
        vecs.append(s + t)
    sp = span(vecs, src.rank + tgt.rank, nv)
    return _certified(src, tgt, sp, "tensor")


def equal(n1: LagRelation, n2: LagRelation) -> bool:
    return n1 == n2


def as_graph_matrix(rel: LagRelation):
    """If rel is the graph of a map H_source -> H_target, return its matrix
    over Q(R); otherwise None."""
    n1, n2 = rel.n_source, rel.n_target
    B = rel.space.basis
    top = B.submatrix(range(n1), range(B.ncols))
    if rel.space.dim != n1 or rank(top) < n1:
        return None
    bot = B.submatrix(range(n1, n1 + n2), range(B.ncols))
    # psi @ top = bot  ->  top^T psi^T = bot^T
    X = solve(top.T, bot.T)
    return X.T


def unitary(psi: Matrix, source: PointedHermModule, target: PointedHermModule) -> bool:
    return (psi.T @ target.S @ psi.conj() - source.S).is_zero()


__all__ = ["LagRelation", "make", "compose", "tensor", "graph", "identity", "equal",
           "violations", "ambient_form", "as_graph_matrix", "unitary"]
