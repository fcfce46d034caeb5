"""Generators of test data: boundary fixing automorphisms, valuations that
kill prescribed words, and random Heegaard data."""

from __future__ import annotations

import random

from .cobordism import HeegaardData
from .freegroup import FreeEndo, PhiValuation, Word, boundary_word, check_boundary
from .zlattice import integer_kernel, solve_integer


def _embed(images2, g, i):
    """Embed a genus-2 endomorphism acting on handles (i, i+1) of F_g."""
    rank = 2 * g
    relabel = {1: i, 2: i + 1, 3: g + i, 4: g + i + 1}
    out = [Word.gen(k, rank) for k in range(1, rank + 1)]
    for src, w in enumerate(images2, start=1):
        out[relabel[src] - 1] = Word([relabel[abs(x)] * (1 if x > 0 else -1)
                                      for x in w], rank)
    return FreeEndo(out, rank)


# Twist along a curve running once over the a-bands of two adjacent handles.
# Derived in a band model of the genus 2 surface and transported to the
# boundary word [b2, a2][b1, a1]; images of a1, a2, b1, b2.
_CHAIN_TWIST = {
    1: ((1,), (4, 3, 1, -3, -4, 3, -1, -3, 2, 3, -1, -3, -4), (4, 3, 1),
        (4, 3, 1, -3, 4, 3, -1, -3, -4)),
    -1: ((1,), (3, -1, -3, -4, 3, 1, -3, 4, 2, 4, 3, 1, -3), (3, -1, -3, -4, 3),
         (3, -1, -3, 4, 3, 1, -3)),
}


def elementary_moves(g: int):
    """Named boundary fixing automorphisms of F_g that generate a rich
    subgroup: twists inside each handle, handle swaps, chain twists mixing
    adjacent handles, and conjugation by the boundary word."""
    rank = 2 * g
    gens = [Word.gen(k, rank) for k in range(1, rank + 1)]
    moves = []
    for i in range(1, g + 1):
        a, b = gens[i - 1], gens[g + i - 1]
        for e in (1, -1):
            im = list(gens)
            im[i - 1] = a * b ** e
            moves.append((f"twist_a{i}^{e}", FreeEndo(im, rank)))
            im = list(gens)
            im[g + i - 1] = b * a ** e
            moves.append((f"twist_b{i}^{e}", FreeEndo(im, rank)))
    for i in range(1, g):
        # handle i gens -> handle i+1 gens, handle i+1 gens -> c (handle i) c^-1
        a1, a2, b1, b2 = gens[i - 1], gens[i], gens[g + i - 1], gens[g + i]
        c2 = b2 * a2 * b2.inverse() * a2.inverse()
        im = list(gens)
        im[i - 1], im[g + i - 1] = a2, b2
        im[i], im[g + i] = c2 * a1 * c2.inverse(), c2 * b1 * c2.inverse()
        moves.append((f"swap{i}", FreeEndo(im, rank)))
        for e in (1, -1):
            moves.append((f"chain{i}^{e}", _embed([Word(w, 4) for w in _CHAIN_TWIST[e]],
                                                  g, i)))
    if g:
        nu = boundary_word(g)
        for e in (1, -1):
            c = nu ** e
            moves.append((f"boundary^{e}",
                          FreeEndo([c * x * c.inverse() for x in gens], rank)))
    for name, f in moves:
        assert check_boundary(f), name
    return moves


def automorphism_library(g: int, rng=None, size=12, max_len=12):
    """A deterministic list of boundary fixing automorphisms of F_g: the
    elementary moves plus short products of them."""
    rng = rng or random.Random(2024 + g)
    lib = [f for _, f in elementary_moves(g)]
    while len(lib) < size + len(elementary_moves(g)):
        f = random_automorphism(g, rng, max_len=max_len, steps=rng.randint(2, 4))
        lib.append(f)
    return lib


def random_automorphism(g: int, rng, max_len: int = 12, steps: int | None = None):
    rank = 2 * g
    f = FreeEndo.identity(rank)
    if g == 0:
        return f
    moves = [m for _, m in elementary_moves(g)]
    steps = rng.randint(1, 5) if steps is None else steps
    for _ in range(steps):
        for _attempt in range(20):
            h = rng.choice(moves).compose(f)
            if h.max_image_length() <= max_len:
                f = h
                break
    return f


def random_valuation(rank, nvars, rng, kill=(), prescribe=None, bound=2):
    """Random valuation on a free group of the given rank that kills every word
    in ``kill``; ``prescribe`` is an optional list of (word, exponent vector)
    constraints.  Returns None when the integer system has no solution."""
    kill = list(kill)
    prescribe = list(prescribe or [])
    C = [list(w.abelianize()) for w in kill] + [list(w.abelianize()) for w, _ in prescribe]
    rows = []
    for k in range(nvars):
        rhs = [0] * len(kill) + [e[k] for _, e in prescribe]
        if C:
            sol = solve_integer(C, rhs, rank)
            if sol is None:
                return None
            x, kern = sol
        else:
            x, kern = [0] * rank, integer_kernel([], rank)
        x = list(x)
        for v in kern:
            c = rng.randint(-bound, bound)
            if c:
                x = [a + c * b for a, b in zip(x, v)]
        rows.append(x)
    exps = [tuple(rows[k][i] for k in range(nvars)) for i in range(rank)]
    return PhiValuation(exps, nvars)


def random_heegaard(rng, ghat=None, nvars=None, r_minus=None, r_plus=None,
                    max_len=12, bound=2, phi_minus=None, max_ghat=3) -> HeegaardData:
    """Random Heegaard data.  ``phi_minus`` optionally prescribes the
    valuation on the bottom surface (used to build composable pairs).
    Retries until the integer constraints on the valuation are solvable."""
    for _ in range(200):
        if phi_minus is not None:
            n = phi_minus.nvars
            gm = phi_minus.genus
            rm = rng.randint(0, max(0, max_ghat - gm)) if r_minus is None else r_minus
            gh = gm + rm
        else:
            gh = rng.randint(1, max_ghat) if ghat is None else ghat
            n = rng.randint(0, 2) if nvars is None else nvars
            rm = rng.randint(0, gh) if r_minus is None else r_minus
        rp = rng.randint(0, gh) if r_plus is None else r_plus
        f = random_automorphism(gh, rng, max_len=max_len)
        rank = 2 * gh
        kill = [f.images[i] for i in range(rm)] + [Word.gen(gh + j, rank)
                                                   for j in range(1, rp + 1)]
        prescribe = []
        if phi_minus is not None:
            gm = gh - rm
            words = [f.images[rm + i] for i in range(gm)] + \
                [f.images[gh + rm + i] for i in range(gm)]
            prescribe = list(zip(words, phi_minus.exps))
        phi = random_valuation(rank, n, rng, kill, prescribe, bound)
        if phi is None:
            continue
        return HeegaardData(gh - rm, gh - rp, rm, rp, phi, f)
    raise RuntimeError("could not sample Heegaard data")


def random_composable_pair(rng, max_ghat=3, **kw):
    """(M, N) with N.phi_minus == M.phi_plus, so N o M is defined."""
    M = random_heegaard(rng, max_ghat=max_ghat, **kw)
    N = random_heegaard(rng, phi_minus=M.phi_plus, max_ghat=max(max_ghat, M.g_plus))
    return M, N


def random_homology_cobordism(rng, genus=None, nvars=None, max_ghat=3, attempts=200):
    """Random Heegaard data that compiles to a homology cobordism over Q(R):
    either a mapping cylinder or a sample with r_- = r_+ that passes the
    rank test."""
    from .cobordism import compile_heegaard
    from .functor import is_homology_cobordism
    for _ in range(attempts):
        g = rng.randint(1, 2) if genus is None else genus
        r = rng.randint(0, max(0, max_ghat - g))
        h = random_heegaard(rng, ghat=g + r, nvars=nvars, r_minus=r, r_plus=r)
        if is_homology_cobordism(compile_heegaard(h)):
            return h
    raise RuntimeError("could not sample a homology cobordism")
