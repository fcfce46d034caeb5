"""Alexander function, Alexander functor and its factorization through Mag.

Graded maps Lambda H_- -> Lambda H_+ are stored block by block: block j is a
matrix whose columns are the j-subsets I of the source basis and whose rows
are the (j + shift)-subsets B of the target basis, both in lexicographic
order.  Entry (B, I) is the coefficient of e_B in the image of e_I.

Sign conventions, fixed once for both sides of the factorization:

* a coefficient is read off the vol pairing as
  c_B = pairing(x, e_{B^c}) * sign(B, B^c), with vol the coefficient of the
  top basis multivector;
* a source vector x in H_- enters the transversal determinant as p(-x, 0),
  because the boundary map of the cobordism sends (-x, 0) to m_-(x).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cobordism import CobPresentation, boundary_matrices, h1_presentation
from .errors import DomainError, InvariantViolation
from .exterior import MultiVector, complement, indices_of, shuffle_sign, subsets, wedge_all
from .lagrangian import LagRelation
from .linalg import (Matrix, bareiss_det, det, kernel_vectors, ord_of_presentation, rank,
                     solve)
from .ring import LaurentPoly, RingFrac
from .zlattice import complement as z_complement
from .zlattice import saturate


@dataclass
class GradedMap:
    source_rank: int
    target_rank: int
    shift: int
    nvars: int
    blocks: dict = field(default_factory=dict)

    def degrees(self):
        return sorted(self.blocks)

    def entries(self):
        """All coefficients in a fixed order: degree, then column, then row."""
        out = []
        for j in self.degrees():
            M = self.blocks[j]
            for c in range(M.ncols):
                for r in range(M.nrows):
                    out.append(M[r, c])
        return out

    def is_zero(self):
        return all(not x for x in self.entries())

    def map(self, fn):
        return GradedMap(self.source_rank, self.target_rank, self.shift, self.nvars,
                         {j: M.map(fn) for j, M in self.blocks.items()})

    def scale(self, c):
        return self.map(lambda x: x * c)

    def apply(self, x: MultiVector) -> MultiVector:
        """Image of a homogeneous multivector on the source basis."""
        j = x.degree
        out = MultiVector(self.target_rank, {}, None if j is None else j + self.shift)
        if j not in self.blocks:
            return out
        M = self.blocks[j]
        rows = subsets(self.target_rank, j + self.shift)
        cols = {s: k for k, s in enumerate(subsets(self.source_rank, j))}
        for mask, coef in x.coeffs.items():
            k = cols[indices_of(mask)]
            for r, B in enumerate(rows):
                v = M[r, k]
                if v:
                    out = out + MultiVector.basis(self.target_rank, B, coef * v)
        return out

    def __eq__(self, other):
        return (isinstance(other, GradedMap) and self.shift == other.shift
                and self.degrees() == other.degrees()
                and all(a == b for a, b in zip(self.entries(), other.entries())))

    def to_strings(self):
        return {str(j): self.blocks[j].to_strings() for j in self.degrees()}


def graded_degrees(m_src, m_tgt, shift):
    return [j for j in range(m_src + 1) if 0 <= j + shift <= m_tgt]


def _assemble(m_src, m_tgt, shift, nvars, entry):
    """GradedMap with entry(j, I, B) in block j."""
    blocks = {}
    for j in graded_degrees(m_src, m_tgt, shift):
        cols = subsets(m_src, j)
        rows = subsets(m_tgt, j + shift)
        data = [[entry(j, I, B) for I in cols] for B in rows]
        blocks[j] = Matrix(data, nvars, len(cols))
    return GradedMap(m_src, m_tgt, shift, nvars, blocks)


# -- Alexander function and functor ------------------------------------------

def _check_deficiency(c: CobPresentation, count):
    if c.deficiency != count:
        raise InvariantViolation("deficiency-mismatch",
                                 f"presentation deficiency {c.deficiency}, {count} vectors")


def alexander_function_raw(c: CobPresentation, u) -> LaurentPoly:
    """det of the Fox relator rows stacked over the vectors u (no normalization)."""
    _check_deficiency(c, len(u))
    F = h1_presentation(c)
    nv = c.nvars
    rows = [list(r) for r in F.rows]
    for v in u:
        if len(v) != c.ngens:
            raise InvariantViolation("wrong-length", "vectors live in the generator basis")
        rows.append([x if isinstance(x, LaurentPoly) else LaurentPoly(x, nv) for x in v])
    return bareiss_det(rows, nv)


def alexander_function(c: CobPresentation, u) -> LaurentPoly:
    """A(u_1 ^ ... ^ u_g) in unit-normal form."""
    return alexander_function_raw(c, u).normal_form()


def alex_morphism(c: CobPresentation, normalize: bool = True):
    """The graded map Alex(M): Lambda H_- -> Lambda H_+ of degree g_+ - g_-.

    Returns (map, unit).  With ``normalize`` the whole map is divided by the
    unit that puts its first nonzero coefficient in normal form, and that unit
    is returned; otherwise unit is 1 and the raw determinants are kept."""
    gm, gp = c.g_minus, c.g_plus
    _check_deficiency(c, gm + gp)
    nv = c.nvars
    F = [list(r) for r in h1_presentation(c).rows]
    mm, mp = boundary_matrices(c)
    mcols, pcols = mm.columns(), mp.columns()
    m_src, m_tgt = 2 * gm, 2 * gp

    def entry(j, I, B):
        C = complement(B, m_tgt)
        rows = F + [mcols[i] for i in I] + [pcols[k] for k in C]
        d = bareiss_det(rows, nv)
        return -d if shuffle_sign(B, m_tgt) < 0 else d

    A = _assemble(m_src, m_tgt, gp - gm, nv, entry)
    one = LaurentPoly(1, nv)
    if not normalize:
        return A, one
    first = next((x for x in A.entries() if x), None)
    if first is None:
        return A, one
    u, _ = first.unit_normalize()
    inv = u.unit_inverse()
    return A.map(lambda x: x * inv), u


# -- exterior powers ---------------------------------------------------------

def exterior_power_map(r: Matrix) -> GradedMap:
    """Lambda(r) for a square matrix r, all degrees, entries det r[B, I]."""
    n = r.ncols

    def entry(j, I, B):
        return det(r.submatrix(B, I)) if j else RingFrac(LaurentPoly(1, r.nvars))

    return _assemble(n, r.nrows, 0, r.nvars, entry)


# -- transversals and Mag_W --------------------------------------------------

def _annihilator(rel: LagRelation) -> Matrix:
    """A (N - d) x N polynomial matrix whose kernel is the relation."""
    N = rel.n_source + rel.n_target
    B = rel.space.integral_matrix()
    if rel.space.dim == 0:
        return Matrix.identity(N, rel.nvars)
    vecs = kernel_vectors(B.T)
    return Matrix(vecs, rel.nvars, N)


def _as_matrix(W, N, nvars) -> Matrix:
    if isinstance(W, Matrix):
        M = W
    else:
        cols = [list(c) for c in W]
        M = Matrix.from_columns(cols, N, nvars)
    if M.nrows != N:
        raise InvariantViolation("not-a-transversal", "columns have the wrong length")
    if not M.is_poly():
        raise InvariantViolation("not-a-transversal", "columns must be lattice vectors")
    return M.to_poly()


def is_transversal(rel: LagRelation, W) -> bool:
    N = rel.n_source + rel.n_target
    g = N - rel.space.dim
    W = _as_matrix(W, N, rel.nvars)
    if W.ncols != g:
        return False
    Z = _annihilator(rel)
    return rank(Z @ W) == g


def default_transversal(rel: LagRelation) -> Matrix:
    """Greedy choice of standard basis vectors whose projections are
    independent modulo the relation, scanning coordinates in order."""
    N = rel.n_source + rel.n_target
    nv = rel.nvars
    g = N - rel.space.dim
    cur = rel.space.integral_matrix() if rel.space.dim else Matrix.zeros(N, 0, nv)
    have = rank(cur) if cur.ncols else 0
    chosen = []
    for k in range(N):
        if len(chosen) == g:
            break
        e = Matrix([[int(i == k)] for i in range(N)], nv, 1)
        trial = cur.hstack(e)
        rk = rank(trial)
        if rk > have:
            cur, have = trial, rk
            chosen.append(k)
    return Matrix([[int(i == k) for k in chosen] for i in range(N)], nv, len(chosen))


def plus_transversal(rel: LagRelation) -> Matrix:
    """W = H_+ (target basis vectors)."""
    n1, n2 = rel.n_source, rel.n_target
    return Matrix([[int(i == n1 + k) for k in range(n2)] for i in range(n1 + n2)],
                  rel.nvars, n2)


def minus_transversal(rel: LagRelation) -> Matrix:
    """W = H_- (source basis vectors)."""
    n1, n2 = rel.n_source, rel.n_target
    return Matrix([[int(i == k) for k in range(n1)] for i in range(n1 + n2)],
                  rel.nvars, n1)


def random_transversal(rel: LagRelation, rng: random.Random, bound: int = 1,
                       attempts: int = 200) -> Matrix:
    N = rel.n_source + rel.n_target
    g = N - rel.space.dim
    Z = _annihilator(rel)
    for _ in range(attempts):
        cols = [[rng.randint(-bound, bound) for _ in range(N)] for _ in range(g)]
        W = Matrix.from_columns(cols, N, rel.nvars)
        if rank(Z @ W) == g:
            return W
    raise RuntimeError("no transversal found")


def section_transversal(rel: LagRelation) -> Matrix:
    """Image of a section of p over R = Z: a lattice complement of the
    saturated relation lattice."""
    _require_integers(rel)
    N = rel.n_source + rel.n_target
    E = _integer_basis(rel)
    W = z_complement(E, N)
    return Matrix.from_columns(W, N, 0)


def mag_w_operator(rel: LagRelation, W) -> GradedMap:
    """Mag_W over Q(R): entry (B, I) is the determinant of the coordinates of
    p(-x_I), p(y_{B^c}) in the basis p(W), times sign(B, B^c)."""
    N = rel.n_source + rel.n_target
    W = _as_matrix(W, N, rel.nvars)
    g = N - rel.space.dim
    if W.ncols != g:
        raise InvariantViolation("not-a-transversal", f"need {g} columns, got {W.ncols}")
    Z = _annihilator(rel)
    dW = det(Z @ W)
    if not dW:
        raise InvariantViolation("not-a-transversal", "projections are dependent")
    dW = RingFrac.from_poly(dW)
    m_src, m_tgt = rel.n_source, rel.n_target
    rows = list(range(Z.nrows))

    def entry(j, I, B):
        C = complement(B, m_tgt)
        cols = list(I) + [m_src + k for k in C]
        d = RingFrac.from_poly(det(Z.submatrix(rows, cols)))
        if (j % 2) != (shuffle_sign(B, m_tgt) < 0):
            d = -d
        return d / dW

    return _assemble(m_src, m_tgt, (m_tgt - m_src) // 2, rel.nvars, entry)


def change_of_basis(rel: LagRelation, W, W2) -> Matrix:
    """Coordinates of p(W2) in the basis p(W), computed from the relation's
    own basis (independent of the annihilator used by mag_w_operator)."""
    N = rel.n_source + rel.n_target
    W = _as_matrix(W, N, rel.nvars)
    W2 = _as_matrix(W2, N, rel.nvars)
    E = rel.space.integral_matrix()
    A = W.hstack(E) if rel.space.dim else W
    X = solve(A, W2)
    if X is None:
        raise InvariantViolation("not-a-transversal", "W does not span the quotient")
    return X.submatrix(range(W.ncols), range(W2.ncols))


def d_factor(rel: LagRelation, W, W2) -> RingFrac:
    """d_{W2,W}: Mag_{W2} = d_{W2,W} Mag_W."""
    return _frac(det(change_of_basis(rel, W, W2)), rel.nvars).inverse()


# -- ord and the factorization ----------------------------------------------

def frak_m(c: CobPresentation) -> Matrix:
    """The k x N matrix of (-m_-) + m_+."""
    mm, mp = boundary_matrices(c)
    return (-mm).hstack(mp)


def ord_quotient(c: CobPresentation, W) -> LaurentPoly:
    """ord(H / frak_m(W)), in normal form."""
    M = frak_m(c)
    W = _as_matrix(W, M.ncols, c.nvars)
    img = M @ W
    F = h1_presentation(c)
    rows = [list(r) for r in F.rows] + [list(x) for x in img.columns()]
    return ord_of_presentation(Matrix(rows, c.nvars, c.ngens))


def equal_up_to_unit(a: GradedMap, b: GradedMap):
    """Compare two graded maps up to one global element of +-G.

    Returns (ok, unit, detail): unit satisfies a = unit * b (None when both
    vanish); detail describes the first discrepancy."""
    if a.shift != b.shift or a.degrees() != b.degrees():
        return False, None, "block structure differs"
    ea, eb = a.entries(), b.entries()
    nv = a.nvars
    unit = None
    for k, (x, y) in enumerate(zip(ea, eb)):
        x, y = _frac(x, nv), _frac(y, nv)
        if unit is None:
            if not x and not y:
                continue
            if not x or not y:
                return False, None, f"entry {k}: {x} vs {y}"
            u = x / y
            if not (u.is_poly() and u.to_poly().is_unit()):
                return False, None, f"entry {k}: ratio {u} is not in +-G"
            unit = u.to_poly()
            continue
        if x != y * unit:
            return False, unit, f"entry {k}: {x} vs {unit} * ({y})"
    return True, unit, None


def _frac(x, nv):
    if isinstance(x, RingFrac):
        return x
    if isinstance(x, LaurentPoly):
        return RingFrac.from_poly(x)
    return RingFrac(LaurentPoly(x, nv))


@dataclass
class FactorizationReport:
    ok: bool
    unit: object
    ord: LaurentPoly
    alex: GradedMap
    mag_w: GradedMap
    transversal: Matrix
    degenerate: bool
    detail: str | None = None

    def summary(self):
        if not self.ok:
            return f"MISMATCH: {self.detail}"
        if self.unit is None:
            return "both sides zero"
        return f"unit matched: {self.unit}"


def factorization_check(c: CobPresentation, W=None, rel=None) -> FactorizationReport:
    """Compare Alex(M) with ord(H/frak_m(W)) Mag_W(M), each side computed
    independently, up to one global unit."""
    from .functor import mag_kernel
    rel = rel if rel is not None else mag_kernel(c)
    W = default_transversal(rel) if W is None else _as_matrix(
        W, rel.n_source + rel.n_target, rel.nvars)
    alex, _ = alex_morphism(c)
    o = ord_quotient(c, W)
    mw = mag_w_operator(rel, W)
    rhs = mw.scale(RingFrac.from_poly(o))
    ok, unit, detail = equal_up_to_unit(alex, rhs)
    return FactorizationReport(ok, unit, o, alex, mw, W, o.is_zero(), detail)


# -- vanishing of the Alexander function ------------------------------------

def homology_rank(c: CobPresentation) -> int:
    F = h1_presentation(c)
    return c.ngens - (rank(F) if F.nrows else 0)


def alexander_vanishes(c: CobPresentation) -> bool:
    """True when A is zero on every basis multivector of the generator module."""
    g = c.deficiency
    F = [list(r) for r in h1_presentation(c).rows]
    nv = c.nvars
    for T in subsets(c.ngens, g):
        rows = F + [[LaurentPoly(int(i == t), nv) for i in range(c.ngens)] for t in T]
        if bareiss_det(rows, nv):
            return False
    return True


def boundary_surjective(c: CobPresentation) -> bool:
    """Is frak_m surjective onto H over Q(R)?"""
    F = h1_presentation(c)
    M = frak_m(c)
    A = F.T.hstack(M) if F.nrows else M
    return rank(A) == c.ngens


def alexander_via_transversal(c: CobPresentation, W, ys) -> RingFrac:
    """Right-hand side of the transversal formula for A(y_1 ^ ... ^ y_g):
    ord(H/frak_m(W)) times the determinant of the coordinates of the y_i in
    the basis frak_m(w_i) of H over Q(R)."""
    M = frak_m(c)
    nv = c.nvars
    W = _as_matrix(W, M.ncols, nv)
    img = M @ W
    g = img.ncols
    F = h1_presentation(c)
    A = img.hstack(F.T) if F.nrows else img
    Y = Matrix.from_columns([list(y) for y in ys], c.ngens, nv)
    X = solve(A, Y)
    if X is None:
        raise InvariantViolation("not-a-transversal", "frak_m(W) does not span H")
    coords = X.submatrix(range(g), range(len(ys)))
    return RingFrac.from_poly(ord_quotient(c, W)) * _frac(det(coords), nv)


# -- the free case over Z ----------------------------------------------------

def _require_integers(rel):
    if rel.nvars:
        raise DomainError("nontrivial-G: the Pluecker operator needs R = Z")


def _integer_basis(rel: LagRelation):
    N = rel.n_source + rel.n_target
    vecs = [[x.constant_value() for x in v] for v in rel.space.integral_columns()]
    return saturate(vecs, N)


def pluecker_vector(rel: LagRelation) -> MultiVector:
    """e_1 ^ ... ^ e_g for a Z-basis of the relation lattice."""
    _require_integers(rel)
    return wedge_all(_integer_basis(rel), rel.n_source + rel.n_target)


def pluecker(rel: LagRelation) -> GradedMap:
    """The Pluecker multivector read as a graded map Lambda H_- -> Lambda H_+.

    e_K ^ e_L (K source, L target) becomes the map x -> vol(e_K ^ x) e_L,
    times a sign depending only on the degrees; the sign makes it agree with
    Mag_W for a section transversal up to one global sign."""
    pl = pluecker_vector(rel)
    m_src, m_tgt = rel.n_source, rel.n_target
    shift = (m_tgt - m_src) // 2

    def entry(j, I, B):
        K = complement(I, m_src)
        S = list(K) + [m_src + b for b in B]
        c = pl.coefficient(S, 0)
        if not c:
            return LaurentPoly(0, 0)
        b, k = len(B), len(K)
        eps = (j + b * (b - 1) // 2 + k * (k - 1) // 2) % 2
        if shuffle_sign(K, m_src) < 0:
            eps ^= 1
        return LaurentPoly(-c if eps else c, 0)

    return _assemble(m_src, m_tgt, shift, 0, entry)


def mag_ratio_check(c: CobPresentation, rel: LagRelation, transversals):
    """For each pair (W, W') check Mag_{W'} = d_{W',W} Mag_W exactly and
    ord(W') d_{W',W} = ord(W) up to +-G.  Returns a list of failures."""
    bad = []
    base = transversals[0]
    mw = mag_w_operator(rel, base)
    o = ord_quotient(c, base)
    for k, W2 in enumerate(transversals[1:], start=1):
        d = d_factor(rel, base, W2)
        mw2 = mag_w_operator(rel, W2)
        if mw2 != mw.scale(d):
            bad.append(f"transversal {k}: Mag_W ratio differs from d")
        o2 = ord_quotient(c, W2)
        lhs = RingFrac.from_poly(o2) * d
        rhs = RingFrac.from_poly(o)
        if o.is_zero() or o2.is_zero():
            if not (o.is_zero() and o2.is_zero()):
                bad.append(f"transversal {k}: ord vanishes on one side only")
            continue
        u = lhs / rhs
        if not (u.is_poly() and u.to_poly().is_unit()):
            bad.append(f"transversal {k}: ord ratio {u} is not d^-1 up to a unit")
    return bad
