"""Free groups, endomorphisms, valuations and Fox calculus.

Generators are numbered 1..k; a word is a tuple of nonzero ints with -i
standing for the inverse of generator i.  For the surface group of genus g
the generators 1..g are a1..ag and g+1..2g are b1..bg.
"""

from __future__ import annotations

import re

from .errors import ParseError, InvariantViolation
from .ring import LaurentPoly


def _reduce(letters):
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class Word:
    __slots__ = ("letters", "rank")

    def __init__(self, letters=(), rank: int = 0):
        letters = tuple(int(x) for x in letters)
        for x in letters:
            if x == 0 or abs(x) > rank:
                raise ValueError(f"letter {x} outside free group of rank {rank}")
        self.letters = _reduce(letters)
        self.rank = rank

    @classmethod
    def _trusted(cls, letters, rank):
        w = cls.__new__(cls)
        w.letters = letters
        w.rank = rank
        return w

    @classmethod
    def identity(cls, rank):
        return cls._trusted((), rank)

    @classmethod
    def gen(cls, i, rank):
        return cls((i,), rank)

    def __mul__(self, other: "Word") -> "Word":
        if self.rank != other.rank:
            raise ValueError("words live in free groups of different rank")
        a, b = list(self.letters), other.letters
        j = 0
        while a and j < len(b) and a[-1] == -b[j]:
            a.pop()
            j += 1
        return Word._trusted(tuple(a) + b[j:], self.rank)

    def inverse(self) -> "Word":
        return Word._trusted(tuple(-x for x in reversed(self.letters)), self.rank)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        out = Word.identity(self.rank)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def is_identity(self):
        return not self.letters

    def __eq__(self, other):
        return (isinstance(other, Word) and self.rank == other.rank
                and self.letters == other.letters)

    def __hash__(self):
        return hash((self.rank, self.letters))

    def shifted(self, offset: int, rank: int) -> "Word":
        """Same letters renumbered by offset inside a larger free group."""
        return Word._trusted(tuple(x + offset if x > 0 else x - offset
                                   for x in self.letters), rank)

    def relabel(self, mapping, rank):
        """Apply a generator renumbering (dict or list, 1-based)."""
        out = []
        for x in self.letters:
            y = mapping[abs(x)]
            out.append(y if x > 0 else -y)
        return Word(out, rank)

    def abelianize(self):
        v = [0] * self.rank
        for x in self.letters:
            v[abs(x) - 1] += 1 if x > 0 else -1
        return tuple(v)

    def __str__(self):
        if self.rank % 2 == 0:
            return format_surface_word(self)
        return format_word(self)

    def __repr__(self):
        return f"Word({str(self)!r}, rank={self.rank})"


def surface_name(i: int, genus: int) -> str:
    return f"a{i}" if i <= genus else f"b{i - genus}"


def format_surface_word(w: Word) -> str:
    g = w.rank // 2
    return _format(w, lambda i: surface_name(i, g))


def format_word(w: Word) -> str:
    return _format(w, lambda i: f"x{i}")


def _format(w, name):
    if not w.letters:
        return "1"
    out = []
    for x in w.letters:
        out.append(name(abs(x)) + ("" if x > 0 else "^-1"))
    return " ".join(out)


_LETTER = re.compile(r"([abx])(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str, rank: int, line=None, col=None) -> Word:
    """Parse ``a1 b1 a1^-1 b1^-1`` (surface names) or ``x1 x2^-1``.

    ``1`` or an empty string is the identity.
    """
    g = rank // 2
    letters = []
    pieces = text.split()
    if pieces == ["1"]:
        pieces = []
    offset = 0
    for piece in pieces:
        where = text.find(piece, offset)
        offset = where + len(piece)
        m = _LETTER.match(piece)
        c = None if col is None else col + where
        if not m:
            raise ParseError(f"bad letter {piece!r}", line, c)
        kind, idx, power = m.group(1), int(m.group(2)), int(m.group(3) or 1)
        if kind == "x":
            gen = idx
        else:
            if rank % 2:
                raise ParseError(f"surface letter {piece!r} in odd rank group", line, c)
            if not 1 <= idx <= g:
                raise ParseError(f"letter {piece!r} outside genus {g}", line, c)
            gen = idx if kind == "a" else g + idx
        if not 1 <= gen <= rank:
            raise ParseError(f"letter {piece!r} outside rank {rank}", line, c)
        letters.extend([gen if power > 0 else -gen] * abs(power))
    return Word(letters, rank)


def commutator(u: Word, v: Word) -> Word:
    return u * v * u.inverse() * v.inverse()


def boundary_word(genus: int) -> Word:
    """The boundary loop nu = [bg, ag] ... [b2, a2][b1, a1].

    This is the inverse of a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1, i.e. the
    boundary traversed with the orientation that makes Fox Jacobians of
    boundary fixing automorphisms unitary for the twisted intersection form.
    """
    rank = 2 * genus
    w = Word.identity(rank)
    for i in range(genus, 0, -1):
        a, b = Word.gen(i, rank), Word.gen(genus + i, rank)
        w = w * commutator(b, a)
    return w


class FreeEndo:
    """Endomorphism of the free group of rank ``rank`` given by generator images."""

    __slots__ = ("images", "rank")

    def __init__(self, images, rank: int | None = None):
        images = tuple(images)
        if rank is None:
            rank = len(images)
        if len(images) != rank:
            raise ValueError("need one image per generator")
        for w in images:
            if w.rank != rank:
                raise ValueError("image in wrong free group")
        self.images = images
        self.rank = rank

    @classmethod
    def identity(cls, rank):
        return cls([Word.gen(i, rank) for i in range(1, rank + 1)], rank)

    def __call__(self, w: Word) -> Word:
        out = []
        for x in w.letters:
            img = self.images[abs(x) - 1]
            out.extend(img.letters if x > 0 else img.inverse().letters)
        return Word(out, self.rank)

    def compose(self, other: "FreeEndo") -> "FreeEndo":
        """self o other (apply other first)."""
        return FreeEndo([self(w) for w in other.images], self.rank)

    def __mul__(self, other):
        return self.compose(other)

    def max_image_length(self):
        return max((len(w) for w in self.images), default=0)

    def __eq__(self, other):
        return isinstance(other, FreeEndo) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "FreeEndo(" + "; ".join(str(w) for w in self.images) + ")"


def check_boundary(f: FreeEndo) -> bool:
    """True iff f fixes the boundary word nu exactly."""
    if f.rank % 2:
        return False
    nu = boundary_word(f.rank // 2)
    return f(nu) == nu


class PhiValuation:
    """A homomorphism from a free group to G = Z^n, stored as exponent vectors
    for the generators.  Values are read as monomials of Z[G]."""

    __slots__ = ("nvars", "exps")

    def __init__(self, exps, nvars: int):
        exps = tuple(tuple(int(x) for x in e) for e in exps)
        for e in exps:
            if len(e) != nvars:
                raise ValueError("exponent vector of wrong length")
        self.exps = exps
        self.nvars = nvars

    @classmethod
    def trivial(cls, rank, nvars):
        return cls([(0,) * nvars] * rank, nvars)

    @classmethod
    def from_monomials(cls, values, nvars):
        exps = []
        for v in values:
            if isinstance(v, int):
                v = LaurentPoly(v, nvars)
            if not (v.is_monomial() and v.leading_coefficient() == 1):
                raise InvariantViolation("phi-not-monomial", str(v))
            exps.append(next(iter(v.terms())))
        return cls(exps, nvars)

    @property
    def rank(self):
        return len(self.exps)

    @property
    def genus(self):
        return len(self.exps) // 2

    def exponent(self, w: Word):
        e = [0] * self.nvars
        for x in w.letters:
            v = self.exps[abs(x) - 1]
            if x > 0:
                for k in range(self.nvars):
                    e[k] += v[k]
            else:
                for k in range(self.nvars):
                    e[k] -= v[k]
        return tuple(e)

    def __call__(self, w: Word) -> LaurentPoly:
        return LaurentPoly.monomial(self.exponent(w), 1, self.nvars)

    def of_gen(self, i: int) -> LaurentPoly:
        return LaurentPoly.monomial(self.exps[i - 1], 1, self.nvars)

    def kills(self, w: Word) -> bool:
        return not any(self.exponent(w))

    def pullback(self, f: FreeEndo) -> "PhiValuation":
        """phi o f."""
        return PhiValuation([self.exponent(w) for w in f.images], self.nvars)

    def restrict(self, gens) -> "PhiValuation":
        """Valuation on a subfamily of generators (1-based indices)."""
        return PhiValuation([self.exps[i - 1] for i in gens], self.nvars)

    def surface_handles(self, handles) -> "PhiValuation":
        """Restriction of a surface valuation to the listed handles (1-based),
        returned as a valuation on the smaller surface group."""
        g = self.genus
        idx = [h for h in handles] + [g + h for h in handles]
        return self.restrict(idx)

    def __eq__(self, other):
        return (isinstance(other, PhiValuation) and self.nvars == other.nvars
                and self.exps == other.exps)

    def __hash__(self):
        return hash((self.nvars, self.exps))

    def __repr__(self):
        return f"PhiValuation({self.exps}, nvars={self.nvars})"


def surface_sum(phi: PhiValuation, psi: PhiValuation) -> PhiValuation:
    """Valuation on F_{g+h} from valuations on F_g and F_h (a's then b's)."""
    g, h = phi.genus, psi.genus
    e = phi.exps[:g] + psi.exps[:h] + phi.exps[g:] + psi.exps[h:]
    return PhiValuation(e, phi.nvars)


def fox_vector(w: Word, phi: PhiValuation):
    """[phi(dw/dx_1), ..., phi(dw/dx_k)] as Laurent polynomials."""
    n = phi.nvars
    acc = [dict() for _ in range(w.rank)]
    e = [0] * n
    for x in w.letters:
        i = abs(x) - 1
        v = phi.exps[i]
        if x > 0:
            key = tuple(e)
            acc[i][key] = acc[i].get(key, 0) + 1
            for k in range(n):
                e[k] += v[k]
        else:
            for k in range(n):
                e[k] -= v[k]
            key = tuple(e)
            acc[i][key] = acc[i].get(key, 0) - 1
    return [LaurentPoly(d, n) for d in acc]


def fox(w: Word, i: int, phi: PhiValuation) -> LaurentPoly:
    """phi(dw/dx_i), i 1-based."""
    return fox_vector(w, phi)[i - 1]


def jacobian(f: FreeEndo, phi: PhiValuation):
    """Matrix with (i, j) entry phi(d f(x_j) / d x_i)."""
    from .linalg import Matrix
    cols = [fox_vector(w, phi) for w in f.images]
    rows = [[cols[j][i] for j in range(f.rank)] for i in range(f.rank)]
    return Matrix(rows, phi.nvars)
