"""The nine acceptance criteria, each at its stated size, tolerance and
time budget.  Each test records one PASS/FAIL line (shown in the terminal
summary) before asserting."""

import random
import time

from helpers import degenerate_data, twist_endo

from magnus import alexander as ax
from magnus.cobordism import (amalgamate, compile_heegaard, identity_data,
                              lower_handlebody_data, mapping_cylinder_data, tensor_cob,
                              upper_handlebody_data)
from magnus.freegroup import FreeEndo, check_boundary, jacobian, surface_sum
from magnus.functor import is_homology_cobordism, mag_heegaard, mag_kernel, magnus_rep
from magnus.lagrangian import compose, graph, tensor, unitary
from magnus.linalg import det, span
from magnus.ring import LaurentPoly, RingFrac, as_frac
from magnus.samples import (automorphism_library, elementary_moves, random_composable_pair,
                            random_heegaard, random_homology_cobordism, random_valuation)
from magnus.surface import build, check_module, form_eval, pointed_sum_matrix, tensor_pointed


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds
        self.start = time.perf_counter()

    @property
    def elapsed(self):
        return time.perf_counter() - self.start

    def ok(self):
        return self.elapsed < self.seconds

    def __str__(self):
        return f"{self.elapsed:.1f}s of {self.seconds}s"


def _finish(acceptance, number, title, failures, count, clock):
    ok = not failures and clock.ok()
    detail = f"{count} cases, {clock}"
    if failures:
        detail += f"; first failure: {failures[0]}"
    acceptance(number, title, ok, detail)
    assert not failures, failures[:5]
    assert clock.ok(), f"over budget: {clock}"


def test_criterion_1_form_correctness(acceptance):
    clock = Budget(10)
    rng = random.Random(101)
    failures, count = [], 0
    for g in (1, 2, 3):
        for _ in range(50):
            n = rng.randint(0, 2)
            phi = random_valuation(2 * g, n, rng, bound=3)
            H = build(g, phi)
            S = H.S
            count += 1
            skew = all(S[i, j] == -S[j, i].involute()
                       for i in range(2 * g) for j in range(2 * g))
            d = det(S)
            det_ok = d == LaurentPoly(4 ** g, n)
            bnd = all(form_eval(H, [int(i == k) for i in range(2 * g)], H.nu)
                      == 2 * (phi.of_gen(k + 1) - 1) for k in range(2 * g))
            rep = check_module(H)
            if not (skew and det_ok and bnd and all(rep.values())):
                failures.append(f"g={g} phi={phi.exps} skew={skew} det={d} boundary={bnd}")
    _finish(acceptance, 1, "form is skew-Hermitian, det = 4^g, <x,nu> = 2 del(x)",
            failures, count, clock)


def _half_nu(H):
    half = RingFrac(LaurentPoly(1, H.nvars), LaurentPoly(2, H.nvars))
    return [half * v for v in H.nu]


def test_criterion_2_monoidal_algebra(acceptance):
    clock = Budget(10)
    rng = random.Random(202)
    failures = []
    for k in range(50):
        n = rng.randint(0, 2)
        gs = [rng.randint(0, 2) for _ in range(3)]
        phis = [random_valuation(2 * g, n, rng) for g in gs]
        Hs = [build(g, p) for g, p in zip(gs, phis)]
        S = [H.S for H in Hs]
        s = [_half_nu(H) for H in Hs]
        right = pointed_sum_matrix(S[0], s[0], pointed_sum_matrix(S[1], s[1], S[2], s[2]),
                                   s[1] + s[2])
        left = pointed_sum_matrix(pointed_sum_matrix(S[0], s[0], S[1], s[1]), s[0] + s[1],
                                  S[2], s[2])
        if left != right:
            failures.append(f"case {k}: associativity, genera {gs}")
        lhs = tensor_pointed(Hs[0], Hs[1])
        rhs = build(gs[0] + gs[1], surface_sum(phis[0], phis[1]))
        if lhs != rhs:
            failures.append(f"case {k}: tensor_pointed, genera {gs[:2]}")
    _finish(acceptance, 2, "pointed sum is associative and tensor_pointed = build",
            failures, 50, clock)


def test_criterion_3_handlebodies_and_mapping_cylinders(acceptance):
    clock = Budget(30)
    rng = random.Random(303)
    failures, count = [], 0
    for g in (1, 2, 3):
        for _ in range(3):
            n = rng.randint(0, 2)
            phi_b = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(g)]
            c = compile_heegaard(lower_handlebody_data(g, phi_b, n))
            a_span = span([[int(i == j) for i in range(2 * g)] for j in range(g)], 2 * g, n)
            count += 1
            if mag_kernel(c).space != a_span:
                failures.append(f"C_0^{g}: kernel is not span(a_i)")
            c = compile_heegaard(upper_handlebody_data(g, phi_b, n))
            b_span = span([[int(i == g + j) for i in range(2 * g)] for j in range(g)],
                          2 * g, n)
            count += 1
            if mag_kernel(c).space != b_span:
                failures.append(f"C_{g}^0: kernel is not span(b_i)")
    twist = twist_endo()
    library = [(1, twist)] + [(1, f) for f in automorphism_library(1)] + \
        [(2, f) for f in automorphism_library(2, size=6)]
    assert len(library) >= 10
    for g, f in library:
        assert check_boundary(f)
        n = rng.randint(0, 2)
        phi = random_valuation(2 * g, n, rng)
        rel = mag_kernel(compile_heegaard(mapping_cylinder_data(f, phi)))
        expected = graph(jacobian(f, phi), build(g, phi.pullback(f)), build(g, phi))
        count += 1
        if rel != expected:
            failures.append(f"mapping cylinder of {f!r}")
    _finish(acceptance, 3, f"handlebodies and {len(library)} mapping cylinders "
            "(twist included)", failures, count, clock)


def test_criterion_4_two_path_oracle(acceptance):
    clock = Budget(300)
    rng = random.Random(404)
    failures, shapes = [], set()
    for k in range(100):
        h = random_heegaard(rng, max_ghat=3, max_len=12)
        assert h.ghat <= 3 and h.nvars <= 2 and h.f.max_image_length() <= 12
        shapes.add((h.ghat, h.r_minus, h.r_plus))
        if mag_heegaard(h) != mag_kernel(compile_heegaard(h)):
            failures.append(f"case {k}: ghat={h.ghat} r=({h.r_minus},{h.r_plus})")
    _finish(acceptance, 4, f"Heegaard route = kernel route ({len(shapes)} shapes)",
            failures, 100, clock)


def test_criterion_5_functoriality_and_monoidality(acceptance):
    clock = Budget(300)
    rng = random.Random(505)
    failures = []
    for k in range(50):
        M, N = random_composable_pair(rng, max_ghat=3)
        cM, cN = compile_heegaard(M), compile_heegaard(N)
        if mag_kernel(amalgamate(cM, cN)) != compose(mag_kernel(cN), mag_kernel(cM)):
            failures.append(f"pair {k}: composition")
    for k in range(50):
        n = rng.randint(0, 2)
        a = compile_heegaard(random_heegaard(rng, nvars=n, max_ghat=2))
        b = compile_heegaard(random_heegaard(rng, nvars=n, max_ghat=2))
        if mag_kernel(tensor_cob(a, b)) != tensor(mag_kernel(a), mag_kernel(b)):
            failures.append(f"pair {k}: tensor")
    _finish(acceptance, 5, "Mag preserves composition and tensor", failures, 100, clock)


def test_criterion_6_unitarity_and_multiplicativity(acceptance):
    clock = Budget(60)
    rng = random.Random(606)
    failures, uni, mult = [], 0, 0
    cases = [compile_heegaard(mapping_cylinder_data(twist_endo(), random_valuation(2, 1, rng)))]
    cases += [compile_heegaard(random_homology_cobordism(rng, max_ghat=3)) for _ in range(30)]
    for c in cases:
        r = magnus_rep(c)
        uni += 1
        S_minus = build(c.g_minus, c.phi_minus).S
        S_plus = build(c.g_plus, c.phi_plus).S
        if not (r.T @ S_plus @ r.conj() == S_minus):
            failures.append("unitarity")
        if not unitary(r, build(c.g_minus, c.phi_minus), build(c.g_plus, c.phi_plus)):
            failures.append("unitary() disagrees")
        h2 = random_heegaard(rng, phi_minus=c.phi_plus, r_minus=0, r_plus=0)
        c2 = compile_heegaard(h2)
        both = amalgamate(c, c2)
        if is_homology_cobordism(both):
            mult += 1
            if magnus_rep(both) != magnus_rep(c2) @ r:
                failures.append("multiplicativity")
    assert mult >= 20
    _finish(acceptance, 6, f"Magnus representation unitary ({uni}) and multiplicative "
            f"({mult})", failures, uni + mult, clock)


def _degenerate_presentations(rng):
    out = [compile_heegaard(degenerate_data(k)) for k in (1, 2, -1)]
    for _ in range(4):
        other = compile_heegaard(random_heegaard(rng, nvars=1, max_ghat=2))
        d = compile_heegaard(degenerate_data(rng.choice((1, 2))))
        out.append(tensor_cob(d, other))
        out.append(tensor_cob(other, d))
    return out


def _random_vectors(rng, c, count, bound=2):
    nv = c.nvars
    out = []
    for _ in range(count):
        v = []
        for _ in range(c.ngens):
            e = tuple(rng.randint(-1, 1) for _ in range(nv))
            v.append(LaurentPoly({e: rng.randint(-bound, bound)}, nv))
        out.append(v)
    return out


def test_criterion_7_alexander_function(acceptance):
    clock = Budget(120)
    rng = random.Random(707)
    failures = []
    generic = [compile_heegaard(random_heegaard(rng, max_ghat=2)) for _ in range(20)]
    degenerate = _degenerate_presentations(rng)
    n_zero = 0
    for k, c in enumerate(generic + degenerate):
        vanishes = ax.alexander_vanishes(c)
        n_zero += vanishes
        if vanishes != (ax.homology_rank(c) != c.deficiency):
            failures.append(f"presentation {k}: A == 0 is {vanishes}, "
                            f"dim H = {ax.homology_rank(c)}, g = {c.deficiency}")
        if vanishes == ax.boundary_surjective(c):
            failures.append(f"presentation {k}: boundary surjectivity")
    for k, c in enumerate(degenerate):
        if not ax.alexander_vanishes(c):
            failures.append(f"engineered presentation {k} is not degenerate")
    # the transversal formula on genus 1 surfaces
    genus1 = [compile_heegaard(mapping_cylinder_data(twist_endo(), random_valuation(2, 1, rng)))]
    for rm in (0, 1):
        for rp in (0, 1):
            for _ in range(3):
                genus1.append(compile_heegaard(random_heegaard(rng, ghat=1, r_minus=rm,
                                                               r_plus=rp)))
    genus1.append(compile_heegaard(degenerate_data(1)))
    checked = 0
    for k, c in enumerate(genus1):
        rel = mag_kernel(c)
        Ws = [ax.default_transversal(rel), ax.random_transversal(rel, rng)]
        for W in Ws:
            for _ in range(2):
                ys = _random_vectors(rng, c, c.deficiency)
                lhs = RingFrac.from_poly(ax.alexander_function_raw(c, ys))
                rhs = ax.alexander_via_transversal(c, W, ys)
                checked += 1
                if not lhs and not rhs:
                    continue
                ratio = lhs / rhs if rhs else None
                if ratio is None or not (ratio.is_poly() and ratio.to_poly().is_unit()):
                    failures.append(f"genus 1 example {k}: {lhs} vs {rhs}")
    total = len(generic) + len(degenerate)
    _finish(acceptance, 7, f"A == 0 iff dim H != g on {total} presentations "
            f"({n_zero} degenerate); transversal formula on {checked} evaluations",
            failures, total + checked, clock)


def test_criterion_8_factorization(acceptance):
    clock = Budget(600)
    rng = random.Random(808)
    cases = [compile_heegaard(random_heegaard(rng, max_ghat=2)) for _ in range(30)]
    cases += [compile_heegaard(random_heegaard(rng, ghat=3)) for _ in range(3)]
    cases += [compile_heegaard(mapping_cylinder_data(twist_endo(), random_valuation(2, 1, rng))),
              compile_heegaard(identity_data(1, random_valuation(2, 2, rng))),
              compile_heegaard(lower_handlebody_data(1, [(1,)], 1)),
              compile_heegaard(upper_handlebody_data(1, [(1,)], 1)),
              compile_heegaard(degenerate_data(1))]
    failures, checks, pairs = [], 0, 0
    for k, c in enumerate(cases):
        rel = mag_kernel(c)
        Ws = [ax.default_transversal(rel)] + [ax.random_transversal(rel, rng) for _ in range(3)]
        for W in Ws:
            rep = ax.factorization_check(c, W, rel)
            checks += 1
            if not rep.ok:
                failures.append(f"cobordism {k}: {rep.summary()}")
        bad = ax.mag_ratio_check(c, rel, Ws)
        pairs += len(Ws) - 1
        failures += [f"cobordism {k}: {b}" for b in bad]
    homology = [compile_heegaard(random_homology_cobordism(rng, max_ghat=2)) for _ in range(10)]
    for k, c in enumerate(homology):
        rel = mag_kernel(c)
        r = magnus_rep(c)
        lam = ax.exterior_power_map(r)
        plus = ax.mag_w_operator(rel, ax.plus_transversal(rel))
        minus = ax.mag_w_operator(rel, ax.minus_transversal(rel))
        dr_inv = as_frac(det(r), c.nvars).inverse()
        if plus != lam:
            failures.append(f"homology cobordism {k}: Mag_(H+) != Lambda r")
        if not ax.equal_up_to_unit(minus, lam.scale(dr_inv))[0]:
            failures.append(f"homology cobordism {k}: Mag_(H-) != det(r)^-1 Lambda r")
        o_plus = as_frac(ax.ord_quotient(c, ax.plus_transversal(rel)), c.nvars)
        o_minus = as_frac(ax.ord_quotient(c, ax.minus_transversal(rel)), c.nvars)
        if not ax.equal_up_to_unit(lam.scale(o_plus), lam.scale(o_minus * dr_inv))[0]:
            failures.append(f"homology cobordism {k}: W = H+ and W = H- formulas differ")
        alex, _ = ax.alex_morphism(c)
        if not ax.equal_up_to_unit(alex, lam.scale(o_plus))[0]:
            failures.append(f"homology cobordism {k}: Alex != ord_+ Lambda r")
    _finish(acceptance, 8, f"Alex = ord * Mag_W on {len(cases)} cobordisms x 4 "
            f"transversals, {pairs} d-factor pairs, {len(homology)} homology cobordisms",
            failures, checks + pairs + len(homology), clock)


def test_criterion_9_pluecker_over_Z(acceptance):
    clock = Budget(60)
    rng = random.Random(909)
    cases = []
    while len(cases) < 25:
        h = random_heegaard(rng, nvars=0, max_ghat=3)
        if h.g_minus + h.g_plus <= 4:
            cases.append(compile_heegaard(h))
    chain = FreeEndo.identity(4)
    for name, f in elementary_moves(2):
        if name.startswith("chain"):
            chain = f.compose(chain)
    cases.append(compile_heegaard(mapping_cylinder_data(chain, random_valuation(4, 0, rng))))
    failures = []
    for k, c in enumerate(cases):
        rel = mag_kernel(c)
        pl = ax.pluecker(rel)
        Ws = ax.section_transversal(rel)
        alex, _ = ax.alex_morphism(c)
        o = ax.ord_quotient(c, Ws)
        ok, unit, detail = ax.equal_up_to_unit(alex, pl.map(lambda x: x * o))
        if not ok or (unit is not None and abs(unit.constant_value()) != 1):
            failures.append(f"cobordism {k}: Alex vs ord * Pl: {detail}")
        ok, _, detail = ax.equal_up_to_unit(pl, ax.mag_w_operator(rel, Ws))
        if not ok:
            failures.append(f"cobordism {k}: Pl vs Mag over a section: {detail}")
    _finish(acceptance, 9, "Pluecker factorization matches Alex over Z (g- + g+ <= 4)",
            failures, len(cases), clock)
