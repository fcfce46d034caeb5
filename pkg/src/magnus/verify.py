"""Randomized property suites exposed through ``magnus verify``.

Each suite takes a seed and a case count and returns a list of
(property, passed, detail) triples.  Cases are generated from one
random.Random(seed), so reports are reproducible.
"""

from __future__ import annotations

import random

from . import alexander as ax
from .cobordism import amalgamate, compile_heegaard, tensor_cob
from .freegroup import surface_sum
from .functor import is_homology_cobordism, mag_heegaard, mag_kernel, magnus_rep
from .lagrangian import compose, tensor, unitary
from .linalg import det
from .ring import LaurentPoly, as_frac, format_laurent, gcd, parse_laurent
from .samples import (random_composable_pair, random_heegaard, random_homology_cobordism,
                      random_valuation)
from .surface import build, check_module, tensor_pointed


def _all(name, results):
    bad = [d for ok, d in results if not ok]
    return (name, not bad, bad[0] if bad else f"{len(results)} cases")


def random_poly(rng, nvars, terms=4, coeff=5, span=2):
    d = {}
    for _ in range(rng.randint(1, terms)):
        e = tuple(rng.randint(-span, span) for _ in range(nvars))
        d[e] = d.get(e, 0) + rng.randint(-coeff, coeff)
    return LaurentPoly(d, nvars)


def suite_rings(seed=0, cases=30):
    rng = random.Random(seed)
    ax_, div, gc, rt, inv = [], [], [], [], []
    for _ in range(cases):
        n = rng.randint(0, 2)
        a, b, c = (random_poly(rng, n) for _ in range(3))
        ax_.append(((a * (b + c) == a * b + a * c) and ((a * b) * c == a * (b * c)),
                    f"{a}, {b}, {c}"))
        if b:
            div.append((((a * b).exact_div(b) == a), f"({a})*({b}) / ({b})"))
        g = gcd(a * c, b * c)
        ok = g.divides(a * c) and g.divides(b * c)
        if c and (a or b):
            ok = ok and c.divides(g)
        gc.append((ok, f"gcd({a * c}, {b * c})"))
        rt.append((parse_laurent(format_laurent(a), n) == a, str(a)))
        inv.append(((a * b).involute() == a.involute() * b.involute()
                    and a.involute().involute() == a, str(a)))
    return [_all("ring axioms", ax_), _all("exact division", div),
            _all("gcd divides and is divisible by common factors", gc),
            _all("text round trip", rt), _all("involution is a ring automorphism", inv)]


def suite_forms(seed=0, cases=10):
    rng = random.Random(seed)
    per = {k: [] for k in ("skew_hermitian", "det_4g", "boundary_identity",
                           "nu_in_kernel_of_del", "nu_isotropic")}
    tens = []
    for g in (1, 2, 3):
        for _ in range(cases):
            n = rng.randint(0, 2)
            phi = random_valuation(2 * g, n, rng, bound=2)
            rep = check_module(build(g, phi))
            for k in per:
                per[k].append((rep[k], f"g={g} phi={phi.exps}"))
    for _ in range(cases):
        n = rng.randint(0, 2)
        g1, g2 = rng.randint(0, 2), rng.randint(0, 2)
        p1 = random_valuation(2 * g1, n, rng)
        p2 = random_valuation(2 * g2, n, rng)
        ok = tensor_pointed(build(g1, p1), build(g2, p2)) == build(g1 + g2, surface_sum(p1, p2))
        tens.append((ok, f"genera {g1}, {g2}"))
    out = [_all(f"form: {k}", v) for k, v in per.items()]
    out.append(_all("tensor of objects", tens))
    return out


def suite_functoriality(seed=0, cases=10):
    rng = random.Random(seed)
    two, comp = [], []
    for _ in range(cases):
        h = random_heegaard(rng)
        two.append((mag_heegaard(h) == mag_kernel(compile_heegaard(h)),
                    f"g-={h.g_minus} g+={h.g_plus} r-={h.r_minus} r+={h.r_plus}"))
    for _ in range(cases):
        M, N = random_composable_pair(rng)
        cM, cN = compile_heegaard(M), compile_heegaard(N)
        comp.append((mag_kernel(amalgamate(cM, cN)) == compose(mag_kernel(cN), mag_kernel(cM)),
                     "composable pair"))
    return [_all("two-path agreement", two), _all("composition", comp)]


def suite_monoidality(seed=0, cases=10):
    rng = random.Random(seed)
    res = []
    for _ in range(cases):
        n = rng.randint(0, 2)
        a = compile_heegaard(random_heegaard(rng, nvars=n, max_ghat=2))
        b = compile_heegaard(random_heegaard(rng, nvars=n, max_ghat=2))
        res.append((mag_kernel(tensor_cob(a, b)) == tensor(mag_kernel(a), mag_kernel(b)),
                    "tensorable pair"))
    return [_all("tensor of morphisms", res)]


def suite_unitarity(seed=0, cases=10):
    rng = random.Random(seed)
    uni, mult = [], []
    for _ in range(cases):
        h = random_homology_cobordism(rng)
        c = compile_heegaard(h)
        r = magnus_rep(c)
        uni.append((unitary(r, build(h.g_minus, h.phi_minus), build(h.g_plus, h.phi_plus)),
                    "homology cobordism"))
        h2 = random_heegaard(rng, phi_minus=h.phi_plus, r_minus=0, r_plus=0)
        c2 = compile_heegaard(h2)
        both = amalgamate(c, c2)
        if is_homology_cobordism(both):
            mult.append((magnus_rep(both) == magnus_rep(c2) @ r, "composed pair"))
    return [_all("Magnus representation is unitary", uni),
            _all("Magnus representation is multiplicative", mult)]


def suite_factorization(seed=0, cases=6):
    rng = random.Random(seed)
    fac, ratio, rem, lem, pl = [], [], [], [], []
    for _ in range(cases):
        h = random_heegaard(rng, max_ghat=2)
        c = compile_heegaard(h)
        rel = mag_kernel(c)
        Ws = [ax.default_transversal(rel)] + [ax.random_transversal(rel, rng) for _ in range(2)]
        for W in Ws:
            rep = ax.factorization_check(c, W, rel)
            fac.append((rep.ok, rep.summary()))
        bad = ax.mag_ratio_check(c, rel, Ws)
        ratio.append((not bad, bad[0] if bad else ""))
        lem.append(((ax.alexander_vanishes(c) == (ax.homology_rank(c) != c.genus))
                    and (ax.alexander_vanishes(c) != ax.boundary_surjective(c)),
                    "Alexander function vanishing test"))
        if c.nvars == 0:
            ok, _, d = ax.equal_up_to_unit(ax.pluecker(rel),
                                           ax.mag_w_operator(rel, ax.section_transversal(rel)))
            pl.append((ok, d or ""))
    for _ in range(max(1, cases // 2)):
        h = random_homology_cobordism(rng, max_ghat=2)
        c = compile_heegaard(h)
        rel = mag_kernel(c)
        r = magnus_rep(c)
        lam = ax.exterior_power_map(r)
        plus = ax.mag_w_operator(rel, ax.plus_transversal(rel))
        minus = ax.mag_w_operator(rel, ax.minus_transversal(rel))
        dr_inv = as_frac(det(r), c.nvars).inverse()
        ok = plus == lam and ax.equal_up_to_unit(minus, lam.scale(dr_inv))[0]
        o_plus = as_frac(ax.ord_quotient(c, ax.plus_transversal(rel)), c.nvars)
        o_minus = as_frac(ax.ord_quotient(c, ax.minus_transversal(rel)), c.nvars)
        ok = ok and ax.equal_up_to_unit(lam.scale(o_plus), lam.scale(o_minus * dr_inv))[0]
        rem.append((ok, "W = H+ and W = H-"))
    out = [_all("Alex = ord * Mag_W", fac), _all("transversal change cancels", ratio),
           _all("Alexander function vanishes iff dim H != g", lem),
           _all("homology cobordism formulas", rem)]
    if pl:
        out.append(_all("Pluecker operator equals Mag over a section", pl))
    return out


SUITES = {
    "rings": suite_rings,
    "forms": suite_forms,
    "functoriality": suite_functoriality,
    "monoidality": suite_monoidality,
    "unitarity": suite_unitarity,
    "factorization": suite_factorization,
}


def run(name: str, seed: int = 0, cases: int | None = None):
    if name == "all":
        out = []
        for k in SUITES:
            out.extend(run(k, seed, cases))
        return out
    if name not in SUITES:
        raise KeyError(name)
    fn = SUITES[name]
    return fn(seed) if cases is None else fn(seed, cases)
