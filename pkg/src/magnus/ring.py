"""Laurent polynomials Z[t1^+-1, ..., tn^+-1] and their fraction field.

A ``LaurentPoly`` is stored as a monomial shift times an honest polynomial
(a flint ``fmpz_mpoly``) that has no monomial factor.  That pair is unique,
so equality is structural.  ``RingFrac`` keeps numerator and denominator
coprime with the denominator in unit-normal form.

Textual form, e.g. ``3*t1^2*t2^-1 - 1``; terms are printed in decreasing
lexicographic order with t1 > t2 > ...
"""

from __future__ import annotations

import re
from functools import lru_cache

import flint
from flint.utils.flint_exceptions import DomainError as _FlintDomainError

from .errors import InexactDivision, ParseError


@lru_cache(maxsize=None)
def _ctx(n: int):
    return flint.fmpz_mpoly_ctx.get(tuple(f"t{i + 1}" for i in range(n)), "lex")


def _mono(n, exps):
    return _ctx(n).term(coeff=1, exp_vec=exps)


class LaurentPoly:
    __slots__ = ("nvars", "_p", "_shift", "_hash")

    def __init__(self, terms=None, nvars: int = 0):
        """Build from a dict {exponent tuple: int coefficient} or an int."""
        self.nvars = nvars
        self._hash = None
        ctx = _ctx(nvars)
        if terms is None or isinstance(terms, int):
            c = int(terms or 0)
            self._p = ctx.from_dict({(0,) * nvars: c}) if c else ctx.from_dict({})
            self._shift = (0,) * nvars
            return
        terms = {tuple(e): int(c) for e, c in terms.items() if c}
        for e in terms:
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
        if not terms:
            self._p = ctx.from_dict({})
            self._shift = (0,) * nvars
            return
        lo = tuple(min(e[i] for e in terms) for i in range(nvars))
        self._p = ctx.from_dict(
            {tuple(x - m for x, m in zip(e, lo)): c for e, c in terms.items()})
        self._shift = lo

    # internal constructors
    @classmethod
    def _raw(cls, nvars, p, shift):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._hash = None
        if p.is_zero():
            obj._p = p
            obj._shift = (0,) * nvars
            return obj
        if nvars:
            m = p.term_content().monoms()[0]
            if any(m):
                p = p / _mono(nvars, m)
                shift = tuple(s + x for s, x in zip(shift, m))
        obj._p = p
        obj._shift = tuple(shift)
        return obj

    @classmethod
    def _norm(cls, nvars, p, shift):
        # p is already monomial free
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._hash = None
        obj._p = p
        obj._shift = (0,) * nvars if p.is_zero() else tuple(shift)
        return obj

    @classmethod
    def zero(cls, nvars=0):
        return cls(0, nvars)

    @classmethod
    def one(cls, nvars=0):
        return cls(1, nvars)

    @classmethod
    def monomial(cls, exps, coeff=1, nvars=None):
        exps = tuple(exps)
        n = len(exps) if nvars is None else nvars
        return cls({exps: coeff}, n)

    @classmethod
    def gen(cls, i, nvars):
        """The variable t_{i+1} (0-based index)."""
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, nvars)

    # basic queries
    def terms(self) -> dict:
        s = self._shift
        return {tuple(a + b for a, b in zip(e, s)): int(c)
                for e, c in self._p.to_dict().items()}

    def sorted_terms(self):
        """Terms in decreasing lex order (leading term first)."""
        s = self._shift
        return [(tuple(a + b for a, b in zip(e, s)), int(c))
                for e, c in self._p.terms()]

    def nterms(self):
        return len(self._p)

    def is_zero(self):
        return self._p.is_zero()

    def __bool__(self):
        return not self._p.is_zero()

    def is_one(self):
        return self._p.is_one() and not any(self._shift)

    def is_unit(self):
        return len(self._p) == 1 and abs(int(self._p.leading_coefficient())) == 1

    def is_monomial(self):
        return len(self._p) == 1

    def is_constant(self):
        return self._p.is_constant() and not any(self._shift)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return int(self._p.leading_coefficient()) if self else 0

    def leading_coefficient(self) -> int:
        return int(self._p.leading_coefficient()) if self else 0

    def min_exponent(self):
        """Componentwise minimal exponent vector."""
        return self._shift

    def max_exponent(self):
        if not self:
            return (0,) * self.nvars
        return tuple(s + d for s, d in zip(self._shift, self._p.degrees()))

    def span(self):
        """Componentwise exponent width (max - min)."""
        if not self:
            return (0,) * self.nvars
        return tuple(self._p.degrees())

    # coercion
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("mixing rings with different variable counts")
            return other
        if isinstance(other, int):
            return LaurentPoly(other, self.nvars)
        return None

    # arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            return self
        if not self:
            return o
        n = self.nvars
        lo = tuple(min(a, b) for a, b in zip(self._shift, o._shift))
        p1, p2 = self._p, o._p
        if self._shift != lo:
            p1 = p1 * _mono(n, tuple(a - b for a, b in zip(self._shift, lo)))
        if o._shift != lo:
            p2 = p2 * _mono(n, tuple(a - b for a, b in zip(o._shift, lo)))
        return LaurentPoly._raw(n, p1 + p2, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._norm(self.nvars, -self._p, self._shift)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly(0, self.nvars)
            return LaurentPoly._norm(self.nvars, self._p * other, self._shift)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LaurentPoly._norm(
            self.nvars, self._p * o._p,
            tuple(a + b for a, b in zip(self._shift, o._shift)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.unit_inverse() ** (-k)
        return LaurentPoly._norm(self.nvars, self._p ** k,
                                 tuple(k * s for s in self._shift))

    def unit_inverse(self):
        if not self.is_unit():
            raise InexactDivision(f"{self} is not a unit")
        c = int(self._p.leading_coefficient())
        e = self._p.monoms()[0]
        return LaurentPoly.monomial(tuple(-a - b for a, b in zip(e, self._shift)), c,
                                    self.nvars)

    def exact_div(self, other):
        o = self._coerce(other)
        if o is None:
            raise TypeError(other)
        if not o:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return self
        try:
            q = self._p / o._p
        except _FlintDomainError:
            raise InexactDivision(f"{o} does not divide {self}") from None
        return LaurentPoly._norm(self.nvars, q,
                                 tuple(a - b for a, b in zip(self._shift, o._shift)))

    __floordiv__ = exact_div

    def divides(self, other) -> bool:
        """True when self divides other in the Laurent ring."""
        if not self:
            return not other
        try:
            other.exact_div(self)
        except InexactDivision:
            return False
        return True

    def __truediv__(self, other):
        return RingFrac(self, other)

    def __rtruediv__(self, other):
        return RingFrac(other, self)

    # ring structure specific to the group ring
    def involute(self):
        """Bar involution t^e -> t^-e."""
        if not self:
            return self
        d = self._p.degrees()
        n = self.nvars
        q = _ctx(n).from_dict({tuple(di - ei for di, ei in zip(d, e)): c
                               for e, c in self._p.to_dict().items()})
        return LaurentPoly._norm(n, q, tuple(-s - di for s, di in zip(self._shift, d)))

    conj = involute

    def augment(self) -> int:
        """Coefficient sum (image under all t_i -> 1)."""
        return sum(int(c) for c in self._p.coeffs())

    def unit_normalize(self):
        """Return (u, nf) with self = u * nf, u a unit (+- monomial) and nf
        the normal form: lex-minimal exponent 0, positive leading coefficient."""
        n = self.nvars
        if not self:
            return LaurentPoly(1, n), self
        lo = self._p.monoms()[-1]
        sign = 1 if self._p.leading_coefficient() > 0 else -1
        u = LaurentPoly.monomial(tuple(a + b for a, b in zip(lo, self._shift)), sign, n)
        nf = LaurentPoly._norm(n, self._p * sign,
                               tuple(-a for a in lo))
        return u, nf

    def normal_form(self):
        return self.unit_normalize()[1]

    def primitive_content(self) -> int:
        return int(self._p.content()) if self else 0

    def subs_monomials(self, images):
        """Substitute t_i -> images[i] where images are Laurent monomials in
        a (possibly different) ring; used for change of coefficients."""
        if not images:
            c = self.constant_value() if self.nvars == 0 else None
            return c
        m = images[0].nvars
        out = LaurentPoly(0, m)
        for e, c in self.terms().items():
            t = LaurentPoly(c, m)
            for x, im in zip(e, images):
                if x:
                    t = t * im ** x
            out = out + t
        return out

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return (self.nvars == other.nvars and self._shift == other._shift
                    and self._p == other._p)
        if isinstance(other, int):
            return self == LaurentPoly(other, self.nvars)
        if isinstance(other, RingFrac):
            return other == self
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.nvars, self._shift,
                                   tuple(self._p.to_dict().items())))
        return self._hash

    # text
    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r}, nvars={self.nvars})"


def gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor, returned in unit-normal form (gcd(0,0) = 0)."""
    n = a.nvars
    if not a and not b:
        return LaurentPoly(0, n)
    if not a:
        return b.normal_form()
    if not b:
        return a.normal_form()
    g = a._p.gcd(b._p)
    return LaurentPoly._raw(n, g, (0,) * n).normal_form()


def lcm(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a or not b:
        return LaurentPoly(0, a.nvars)
    return (a * b).exact_div(gcd(a, b)).normal_form()


class RingFrac:
    """Element of the fraction field Q(R) in lowest terms."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, nvars=None, _reduced=False):
        if nvars is None:
            nvars = num.nvars if isinstance(num, LaurentPoly) else (
                den.nvars if isinstance(den, LaurentPoly) else 0)
        if isinstance(num, RingFrac) or isinstance(den, RingFrac):
            q = _as_frac(num, nvars) / _as_frac(den, nvars)
            self.num, self.den = q.num, q.den
            return
        if isinstance(num, int):
            num = LaurentPoly(num, nvars)
        if isinstance(den, int):
            den = LaurentPoly(den, nvars)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if _reduced:
            self.num, self.den = num, den
            return
        if not num:
            self.num, self.den = num, LaurentPoly(1, nvars)
            return
        if not den.is_one():
            g = gcd(num, den)
            if not g.is_one():
                num = num.exact_div(g)
                den = den.exact_div(g)
            u, den = den.unit_normalize()
            if not u.is_one():
                num = num * u.unit_inverse()
        self.num, self.den = num, den

    @property
    def nvars(self):
        return self.num.nvars

    @classmethod
    def from_poly(cls, p: LaurentPoly):
        return cls(p, LaurentPoly(1, p.nvars), _reduced=True)

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_poly(self):
        return self.den.is_one()

    def to_poly(self) -> LaurentPoly:
        if not self.den.is_one():
            raise InexactDivision(f"{self} is not a Laurent polynomial")
        return self.num

    def _coerce(self, other):
        if isinstance(other, RingFrac):
            return other
        if isinstance(other, LaurentPoly):
            return RingFrac.from_poly(other)
        if isinstance(other, int):
            return RingFrac.from_poly(LaurentPoly(other, self.nvars))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RingFrac(self.num + o.num, self.den)
        return RingFrac(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RingFrac(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RingFrac(LaurentPoly(0, self.nvars))
        if self.den.is_one() and o.den.is_one():
            return RingFrac.from_poly(self.num * o.num)
        return RingFrac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RingFrac(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RingFrac(self.num ** k, self.den ** k, _reduced=True) if k else \
            RingFrac(LaurentPoly(1, self.nvars))

    def involute(self):
        return RingFrac(self.num.involute(), self.den.involute())

    conj = involute

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self.den.is_one():
            return hash(self.num)
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RingFrac({str(self)!r})"


def _as_frac(x, nvars):
    if isinstance(x, RingFrac):
        return x
    if isinstance(x, LaurentPoly):
        return RingFrac.from_poly(x)
    return RingFrac.from_poly(LaurentPoly(int(x), nvars))


def as_frac(x, nvars=0) -> RingFrac:
    return _as_frac(x, nvars)


def as_poly(x, nvars=0) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, RingFrac):
        return x.to_poly()
    return LaurentPoly(int(x), nvars)


# ---------------------------------------------------------------- text

def format_laurent(p: LaurentPoly) -> str:
    if not p:
        return "0"
    out = []
    for k, (e, c) in enumerate(p.sorted_terms()):
        factors = []
        for i, x in enumerate(e):
            if x == 1:
                factors.append(f"t{i + 1}")
            elif x:
                factors.append(f"t{i + 1}^{x}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if k == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|t(\d+)|(\^)|(\*)|(\+)|(-)|(\S))")


def _tokens(text):
    pos = 0
    toks = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        kind = ("int", "var", "^", "*", "+", "-", "bad")[m.lastindex - 1]
        toks.append((kind, m.group(m.lastindex), start))
        pos = m.end()
    return toks


def parse_laurent(text: str, nvars: int) -> LaurentPoly:
    """Parse the textual form, e.g. ``3*t1^2*t2^-1 - 1``."""
    toks = _tokens(text)
    i = 0

    def err(msg, at=None):
        col = (toks[at][2] if at is not None and at < len(toks) else len(text)) + 1
        raise ParseError(f"{msg} in {text!r}", 1, col)

    def peek():
        return toks[i][0] if i < len(toks) else None

    def expect_int():
        nonlocal i
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if toks[i][0] == "-" else 1
            i += 1
        if peek() != "int":
            err("expected integer", i)
        v = int(toks[i][1])
        i += 1
        return sign * v

    if not toks:
        err("empty polynomial")
    total = {}
    first = True
    while i < len(toks):
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if toks[i][0] == "-" else 1
            i += 1
        elif not first:
            err("expected '+' or '-'", i)
        first = False
        coeff = 1
        exps = [0] * nvars
        seen = False
        while True:
            kind = peek()
            if kind == "int":
                coeff *= int(toks[i][1])
                i += 1
            elif kind == "var":
                k = int(toks[i][1])
                if not 1 <= k <= nvars:
                    err(f"variable t{k} outside t1..t{nvars}", i)
                i += 1
                x = 1
                if peek() == "^":
                    i += 1
                    x = expect_int()
                exps[k - 1] += x
            else:
                err("expected coefficient or variable", i)
            seen = True
            if peek() == "*":
                i += 1
                continue
            break
        if not seen:
            err("empty term", i)
        key = tuple(exps)
        total[key] = total.get(key, 0) + sign * coeff
    return LaurentPoly(total, nvars)


def _split_frac(text):
    depth = 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return text[:k], text[k + 1:]
    return text, None


def _strip_parens(s):
    s = s.strip()
    while s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    return s


def parse_element(text: str, nvars: int):
    """Parse a Laurent polynomial or a fraction ``(p)/(q)``.

    Returns a LaurentPoly when there is no denominator, else a RingFrac.
    """
    a, b = _split_frac(text)
    num = parse_laurent(_strip_parens(a), nvars)
    if b is None:
        return num
    return RingFrac(num, parse_laurent(_strip_parens(b), nvars))


def parse_frac(text: str, nvars: int) -> RingFrac:
    return as_frac(parse_element(text, nvars), nvars)


def zero(nvars):
    return LaurentPoly(0, nvars)


def one(nvars):
    return LaurentPoly(1, nvars)
