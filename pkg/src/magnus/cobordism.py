"""Lagrangian cobordisms as group presentations.

A cobordism M from F_{g-} to F_{g+} is described by generators and
relators of pi_1(M), a valuation phi on the generators (the map to G), and
the words m_- and m_+ that the boundary surface generators become in M.

``HeegaardData`` is the combinatorial input: a boundary fixing automorphism
f of F_ghat together with numbers r-, r+ of 2-handles attached below (along
f(a_1..a_{r-})) and above (along b_1..b_{r+}), with ghat = g- + r- = g+ + r+.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .freegroup import FreeEndo, PhiValuation, Word, check_boundary, fox_vector
from .linalg import Matrix


@dataclass(frozen=True)
class HeegaardData:
    g_minus: int
    g_plus: int
    r_minus: int
    r_plus: int
    phi: PhiValuation        # valuation on the generators of F_ghat
    f: FreeEndo

    def __post_init__(self):
        validate_heegaard(self)

    @property
    def ghat(self):
        return self.g_minus + self.r_minus

    @property
    def nvars(self):
        return self.phi.nvars

    @property
    def phi_minus(self) -> PhiValuation:
        g, r = self.ghat, self.r_minus
        gens = [r + i for i in range(1, self.g_minus + 1)]
        gens += [g + r + i for i in range(1, self.g_minus + 1)]
        return PhiValuation([self.phi.exponent(self.f.images[i - 1]) for i in gens],
                            self.nvars)

    @property
    def phi_plus(self) -> PhiValuation:
        g, r = self.ghat, self.r_plus
        return self.phi.restrict([r + i for i in range(1, self.g_plus + 1)]
                                 + [g + r + i for i in range(1, self.g_plus + 1)])


def validate_heegaard(h: HeegaardData):
    for name in ("g_minus", "g_plus", "r_minus", "r_plus"):
        if getattr(h, name) < 0:
            raise InvariantViolation("negative-count", name)
    ghat = h.g_minus + h.r_minus
    if h.g_plus + h.r_plus != ghat:
        raise InvariantViolation(
            "genus-mismatch", f"g_minus + r_minus = {ghat} but g_plus + r_plus = "
                              f"{h.g_plus + h.r_plus}")
    if h.f.rank != 2 * ghat:
        raise InvariantViolation("endomorphism-rank", f"f acts on rank {h.f.rank}, "
                                                      f"expected {2 * ghat}")
    if h.phi.rank != 2 * ghat:
        raise InvariantViolation("phi-rank", "phi must give one value per generator")
    if not check_boundary(h.f):
        raise InvariantViolation("boundary-not-preserved", "f does not fix nu")
    for i in range(1, h.r_minus + 1):
        if not h.phi.kills(h.f.images[i - 1]):
            raise InvariantViolation("phi-on-relator", f"phi(f(a{i})) != 1")
    for j in range(1, h.r_plus + 1):
        if any(h.phi.exps[ghat + j - 1]):
            raise InvariantViolation("phi-on-relator", f"phi(b{j}) != 1")


@dataclass(frozen=True)
class CobPresentation:
    ngens: int
    relators: tuple
    phi: PhiValuation
    m_minus: tuple   # 2 g_minus words
    m_plus: tuple    # 2 g_plus words
    g_minus: int
    g_plus: int

    def __post_init__(self):
        if self.phi.rank != self.ngens:
            raise InvariantViolation("phi-rank")
        if len(self.m_minus) != 2 * self.g_minus or len(self.m_plus) != 2 * self.g_plus:
            raise InvariantViolation("boundary-word-count")
        for w in self.relators + self.m_minus + self.m_plus:
            if w.rank != self.ngens:
                raise InvariantViolation("word-rank")
        for k, w in enumerate(self.relators):
            if not self.phi.kills(w):
                raise InvariantViolation("phi-on-relator", f"relator {k + 1}")

    @property
    def nvars(self):
        return self.phi.nvars

    @property
    def genus(self):
        """g = g_- + g_+, i.e. 1 - chi(M)."""
        return self.g_minus + self.g_plus

    @property
    def deficiency(self):
        return self.ngens - len(self.relators)

    @property
    def phi_minus(self) -> PhiValuation:
        return PhiValuation([self.phi.exponent(w) for w in self.m_minus], self.nvars)

    @property
    def phi_plus(self) -> PhiValuation:
        return PhiValuation([self.phi.exponent(w) for w in self.m_plus], self.nvars)


def compile_heegaard(h: HeegaardData) -> CobPresentation:
    g, f = h.ghat, h.f
    rank = 2 * g
    rel = [f.images[i - 1] for i in range(1, h.r_minus + 1)]
    rel += [Word.gen(g + j, rank) for j in range(1, h.r_plus + 1)]
    mm = [f.images[h.r_minus + i - 1] for i in range(1, h.g_minus + 1)]
    mm += [f.images[g + h.r_minus + i - 1] for i in range(1, h.g_minus + 1)]
    mp = [Word.gen(h.r_plus + i, rank) for i in range(1, h.g_plus + 1)]
    mp += [Word.gen(g + h.r_plus + i, rank) for i in range(1, h.g_plus + 1)]
    return CobPresentation(rank, tuple(rel), h.phi, tuple(mm), tuple(mp),
                           h.g_minus, h.g_plus)


def amalgamate(bottom: CobPresentation, top: CobPresentation) -> CobPresentation:
    """Presentation of top o bottom (glue the top boundary of ``bottom`` to the
    bottom boundary of ``top``)."""
    if bottom.g_plus != top.g_minus:
        raise InvariantViolation("not-composable",
                                 f"genus {bottom.g_plus} vs {top.g_minus}")
    if bottom.nvars != top.nvars:
        raise InvariantViolation("group-rank-mismatch")
    if bottom.phi_plus != top.phi_minus:
        raise InvariantViolation("not-composable", "valuations differ on the glued surface")
    k1, k2 = bottom.ngens, top.ngens
    k = k1 + k2

    def lift1(w):
        return Word._trusted(w.letters, k)

    def lift2(w):
        return w.shifted(k1, k)

    rel = [lift1(w) for w in bottom.relators] + [lift2(w) for w in top.relators]
    rel += [lift1(u) * lift2(v).inverse() for u, v in zip(bottom.m_plus, top.m_minus)]
    phi = PhiValuation(bottom.phi.exps + top.phi.exps, bottom.nvars)
    return CobPresentation(k, tuple(rel), phi,
                           tuple(lift1(w) for w in bottom.m_minus),
                           tuple(lift2(w) for w in top.m_plus),
                           bottom.g_minus, top.g_plus)


def _interleave(xs, gx, ys, gy):
    return tuple(xs[:gx]) + tuple(ys[:gy]) + tuple(xs[gx:]) + tuple(ys[gy:])


def tensor_cob(a: CobPresentation, b: CobPresentation) -> CobPresentation:
    """Boundary connected sum; boundary generators follow the a,a',b,b' order."""
    if a.nvars != b.nvars:
        raise InvariantViolation("group-rank-mismatch")
    k1 = a.ngens
    k = k1 + b.ngens

    def lift1(w):
        return Word._trusted(w.letters, k)

    def lift2(w):
        return w.shifted(k1, k)

    rel = tuple(lift1(w) for w in a.relators) + tuple(lift2(w) for w in b.relators)
    mm = _interleave([lift1(w) for w in a.m_minus], a.g_minus,
                     [lift2(w) for w in b.m_minus], b.g_minus)
    mp = _interleave([lift1(w) for w in a.m_plus], a.g_plus,
                     [lift2(w) for w in b.m_plus], b.g_plus)
    phi = PhiValuation(a.phi.exps + b.phi.exps, a.nvars)
    return CobPresentation(k, rel, phi, mm, mp, a.g_minus + b.g_minus,
                           a.g_plus + b.g_plus)


def h1_presentation(c: CobPresentation) -> Matrix:
    """Fox matrix: one row per relator, one column per generator."""
    rows = [fox_vector(w, c.phi) for w in c.relators]
    return Matrix(rows, c.nvars, c.ngens)


def boundary_matrices(c: CobPresentation):
    """(m_-, m_+) as k x 2g_- and k x 2g_+ matrices of Fox vectors."""
    def mat(words):
        cols = [fox_vector(w, c.phi) for w in words]
        return Matrix.from_columns(cols, c.ngens, c.nvars)
    return mat(c.m_minus), mat(c.m_plus)


# standard pieces

def identity_data(genus: int, phi: PhiValuation) -> HeegaardData:
    return HeegaardData(genus, genus, 0, 0, phi, FreeEndo.identity(2 * genus))


def mapping_cylinder_data(f: FreeEndo, phi_plus: PhiValuation) -> HeegaardData:
    """Mapping cylinder of f, from (g, phi_plus o f) to (g, phi_plus)."""
    g = f.rank // 2
    return HeegaardData(g, g, 0, 0, phi_plus, f)


def lower_handlebody_data(genus: int, phi_b, nvars: int) -> HeegaardData:
    """C_0^g: from F_0 to F_g, 2-handles killing a_1..a_g from below.

    ``phi_b`` gives the exponent vectors of phi on b_1..b_g."""
    exps = [(0,) * nvars] * genus + [tuple(e) for e in phi_b]
    return HeegaardData(0, genus, genus, 0, PhiValuation(exps, nvars),
                        FreeEndo.identity(2 * genus))


def upper_handlebody_data(genus: int, phi_a, nvars: int) -> HeegaardData:
    """C_g^0: from F_g to F_0, 2-handles killing b_1..b_g from above."""
    exps = [tuple(e) for e in phi_a] + [(0,) * nvars] * genus
    return HeegaardData(genus, 0, 0, genus, PhiValuation(exps, nvars),
                        FreeEndo.identity(2 * genus))
