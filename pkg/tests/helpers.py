"""Shared fixtures data and independent oracles for the test suite."""

import random

import sympy

from magnus.cobordism import HeegaardData
from magnus.freegroup import FreeEndo, PhiValuation, Word
from magnus.ring import LaurentPoly, RingFrac

T = sympy.symbols("t1:4")


def to_sympy(x):
    """LaurentPoly or RingFrac as a sympy expression in t1, t2, t3."""
    if isinstance(x, RingFrac):
        return to_sympy(x.num) / to_sympy(x.den)
    if isinstance(x, int):
        return sympy.Integer(x)
    expr = sympy.Integer(0)
    for exps, c in x.terms().items():
        term = sympy.Integer(c)
        for k, e in enumerate(exps):
            term *= T[k] ** e
        expr += term
    return expr


def from_sympy(expr, nvars):
    """Inverse of to_sympy for Laurent polynomials."""
    expr = sympy.expand(expr)
    num, den = sympy.fraction(sympy.together(expr))
    # den is a monomial for a Laurent polynomial
    shift = [sympy.degree(den, T[k]) if den.has(T[k]) else 0 for k in range(nvars)]
    poly = sympy.Poly(sympy.expand(num), *T[:nvars]) if nvars else None
    if poly is None:
        return LaurentPoly(int(num / den), 0)
    c = int(sympy.Poly(den, *T[:nvars]).coeffs()[0])
    terms = {}
    for mon, coef in poly.terms():
        terms[tuple(int(m - s) for m, s in zip(mon, shift))] = int(coef) // c
    return LaurentPoly(terms, nvars)


def sympy_equal(a, b):
    return sympy.simplify(to_sympy(a) - to_sympy(b)) == 0


def random_poly(rng, nvars, terms=4, coeff=5, span=2):
    d = {}
    for _ in range(rng.randint(1, terms)):
        e = tuple(rng.randint(-span, span) for _ in range(nvars))
        d[e] = d.get(e, 0) + rng.randint(-coeff, coeff)
    return LaurentPoly(d, nvars)


def twist_endo():
    """The genus 1 twist a -> a, b -> b a."""
    return FreeEndo([Word([1], 2), Word([2, 1], 2)], 2)


def degenerate_data(k=1):
    """A genus 1 piece closed off on both sides whose homology over Q(t1)
    has rank 1 while g = 0: both sides of the factorization vanish."""
    phi = PhiValuation([(k,), (0,)], 1)
    f = FreeEndo([Word([1, 2, -1], 2), Word([2, -1], 2)], 2)
    return HeegaardData(0, 0, 1, 1, phi, f)


def rng(seed):
    return random.Random(seed)
