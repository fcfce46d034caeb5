"""The Magnus functor: cobordisms to Lagrangian relations.

Two independent routes are provided.  ``mag_kernel`` works from a group
presentation of the cobordism: Mag(M) is the kernel of
(-m_-) + m_+ : H_- + H_+ -> H_1(M, *) over Q(R).  ``mag_heegaard`` instead
composes hard-coded pieces (2-handle relations and the graph of a Fox
Jacobian) with the Lagrangian calculus.
"""

from __future__ import annotations

from .cobordism import (CobPresentation, HeegaardData, boundary_matrices,
                        compile_heegaard, h1_presentation)
from .errors import CertificationError, InvariantViolation
from .freegroup import PhiValuation, jacobian
from .lagrangian import LagRelation, _certified, compose, graph, identity, tensor
from .linalg import Matrix, kernel_vectors, rank, solve, span
from .surface import PointedHermModule, build


def mag_object(genus: int, phi: PhiValuation) -> PointedHermModule:
    return build(genus, phi)


def _boundary_system(c: CobPresentation):
    F = h1_presentation(c)
    mm, mp = boundary_matrices(c)
    return F, mm, mp


def mag_kernel(c: CobPresentation) -> LagRelation:
    F, mm, mp = _boundary_system(c)
    n1, n2 = mm.ncols, mp.ncols
    A = (-mm).hstack(mp)
    if F.nrows:
        A = A.hstack(F.T)
    vecs = [v[:n1 + n2] for v in kernel_vectors(A)] if A.ncols else []
    sp = span(vecs, n1 + n2, c.nvars)
    src = build(c.g_minus, c.phi_minus)
    tgt = build(c.g_plus, c.phi_plus)
    return _certified(src, tgt, sp, "mag_kernel")


def lower_handle_relation(r: int, phi_r: PhiValuation) -> LagRelation:
    """Mag(C_0^r): the span of a_1..a_r inside H_r (source is F_0)."""
    src = build(0, PhiValuation([], phi_r.nvars))
    tgt = build(r, phi_r)
    vecs = [[int(i == j) for i in range(2 * r)] for j in range(r)]
    return _certified(src, tgt, span(vecs, 2 * r, phi_r.nvars), "lower handle")


def upper_handle_relation(r: int, phi_r: PhiValuation) -> LagRelation:
    """Mag(C_r^0): the span of b_1..b_r inside H_r (target is F_0)."""
    src = build(r, phi_r)
    tgt = build(0, PhiValuation([], phi_r.nvars))
    vecs = [[int(i == r + j) for i in range(2 * r)] for j in range(r)]
    return _certified(src, tgt, span(vecs, 2 * r, phi_r.nvars), "upper handle")


def mag_heegaard(h: HeegaardData) -> LagRelation:
    g = h.ghat
    phi_bottom = h.phi.pullback(h.f)       # valuation on the bottom copy of F_ghat
    lower = tensor(lower_handle_relation(h.r_minus,
                                         phi_bottom.surface_handles(range(1, h.r_minus + 1))),
                   identity(build(h.g_minus, h.phi_minus)))
    try:
        middle = graph(jacobian(h.f, h.phi), build(g, phi_bottom), build(g, h.phi))
    except InvariantViolation as exc:
        raise CertificationError(exc.invariant, "Fox Jacobian of a boundary fixing map") \
            from None
    upper = tensor(upper_handle_relation(h.r_plus,
                                         h.phi.surface_handles(range(1, h.r_plus + 1))),
                   identity(build(h.g_plus, h.phi_plus)))
    return compose(upper, compose(middle, lower))


def homology_report(c: CobPresentation) -> dict:
    """Ranks that decide whether c is a homology cobordism over Q(R)."""
    F, mm, mp = _boundary_system(c)
    k = c.ngens
    rF = rank(F) if F.nrows else 0
    ft = F.T if F.nrows else Matrix.zeros(k, 0, c.nvars)
    return {
        "dim_H": k - rF,
        "rank_minus": rank(ft.hstack(mm)) - rF,
        "rank_plus": rank(ft.hstack(mp)) - rF,
        "g_minus": c.g_minus,
        "g_plus": c.g_plus,
    }


def is_homology_cobordism(c: CobPresentation) -> bool:
    rep = homology_report(c)
    m = 2 * c.g_minus
    return (c.g_minus == c.g_plus and rep["dim_H"] == m
            and rep["rank_minus"] == m and rep["rank_plus"] == m)


def magnus_rep(c: CobPresentation) -> Matrix:
    """r(M) = m_+^-1 m_- over Q(R) for a homology cobordism."""
    if not is_homology_cobordism(c):
        raise InvariantViolation("not-a-homology-cobordism",
                                 "m_- and m_+ must be isomorphisms onto H_1(M, *)")
    F, mm, mp = _boundary_system(c)
    m = mp.ncols
    A = mp.hstack(F.T) if F.nrows else mp
    X = solve(A, mm)
    if X is None:
        raise CertificationError("inconsistent-system", "m_+ X = m_- has no solution")
    r = X.submatrix(range(m), range(m))
    src = build(c.g_minus, c.phi_minus)
    tgt = build(c.g_plus, c.phi_plus)
    if not (r.T @ tgt.S @ r.conj() - src.S).is_zero():
        raise CertificationError("non-unitary", "Magnus representation")
    img = r.apply(list(src.nu))
    if any(a != b for a, b in zip(img, tgt.nu)):
        raise CertificationError("point-not-preserved", "Magnus representation")
    return r


def mag(c) -> LagRelation:
    """Mag of a presentation or of Heegaard data (kernel route)."""
    if isinstance(c, HeegaardData):
        c = compile_heegaard(c)
    return mag_kernel(c)
