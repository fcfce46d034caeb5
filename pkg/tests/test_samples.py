from helpers import rng

from magnus.cobordism import compile_heegaard
from magnus.freegroup import check_boundary
from magnus.functor import is_homology_cobordism
from magnus.samples import (automorphism_library, elementary_moves, random_composable_pair,
                            random_heegaard, random_homology_cobordism, random_valuation)


def test_elementary_moves_fix_boundary():
    for g, count in ((1, 6), (2, 13), (3, 20)):
        moves = elementary_moves(g)
        assert len(moves) == count
        assert all(check_boundary(f) for _, f in moves)


def test_library_is_deterministic():
    assert automorphism_library(2) == automorphism_library(2)
    assert len(automorphism_library(1)) >= 10


def test_valuation_kills_prescribed_words():
    r = rng(61)
    for _ in range(10):
        h = random_heegaard(r)
        for i in range(h.r_minus):
            assert h.phi.kills(h.f.images[i])
        assert h.f.max_image_length() <= 12


def test_composable_pairs_compose():
    r = rng(62)
    for _ in range(10):
        M, N = random_composable_pair(r)
        assert M.phi_plus == N.phi_minus


def test_homology_cobordisms():
    r = rng(63)
    for _ in range(5):
        assert is_homology_cobordism(compile_heegaard(random_homology_cobordism(r)))


def test_valuation_shape():
    phi = random_valuation(4, 2, rng(64))
    assert phi.rank == 4 and phi.nvars == 2
